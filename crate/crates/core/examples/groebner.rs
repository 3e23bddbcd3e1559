//! Groebner bases, colon ideals, intersections and Hilbert functions.

use perfect_ideals::groebner::{colon, hilbert, intersect, Ideal};
use perfect_ideals::poly::{Field, MonomialOrder, Ring};

fn main() -> perfect_ideals::Result<()> {
    let ring = Ring::xyz(Field::Rationals);
    let i = Ideal::from_strs(&ring, &["X^2 - Y*Z", "X*Y - Z^2", "Y^2 - X*Z"])?;
    println!("I = ({})", join(i.gens()));
    println!("reduced GB (degrevlex): {}", join(i.groebner_basis()));
    println!(
        "reduced GB (deglex):    {}",
        join(&i.groebner_basis_in(MonomialOrder::DegLex))
    );

    let m = Ideal::maximal(&ring);
    let c = colon(&i, &m)?;
    println!("I : (X,Y,Z) = ({})", join(c.minimalized().gens()));

    let a = Ideal::from_strs(&ring, &["X", "Y"])?;
    let b = Ideal::from_strs(&ring, &["Y", "Z"])?;
    println!("(X,Y) ∩ (Y,Z) = ({})", join(intersect(&a, &b)?.gens()));

    let cubes = Ideal::from_strs(&ring, &["X^3", "Y^3", "Z^3"])?;
    let h = hilbert(&cubes)?;
    println!(
        "h(Q/(X^3,Y^3,Z^3)) = {:?}, length {:?}",
        h.values,
        h.total()
    );
    Ok(())
}

fn join(ps: &[perfect_ideals::poly::Polynomial]) -> String {
    ps.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
