//! Minimal graded free resolutions and Betti tables.
//!
//! The Taylor resolution of a monomial ideal is usually far from minimal;
//! cancelling units in it lands on the same Betti numbers as the direct
//! computation.

use perfect_ideals::groebner::Ideal;
use perfect_ideals::poly::{Field, Ring};
use perfect_ideals::resolution::{minimalize, resolve, socle, taylor_resolution};

fn main() -> perfect_ideals::Result<()> {
    let ring = Ring::xyz(Field::Rationals);
    let n2 = Ideal::from_strs(&ring, &["X^2", "X*Y", "X*Z", "Y^2", "Y*Z", "Z^2"])?;

    let res = resolve(&n2)?;
    let table = res.betti_table();
    println!("{table}");
    println!("twists {}", table.compact());
    println!(
        "complex: {}, minimal: {}",
        res.is_complex(),
        res.is_minimal()
    );

    let taylor = taylor_resolution(&ring, &n2.leading_monomials())?;
    println!("Taylor ranks {:?}", taylor.betti_table().ranks());
    println!(
        "after cancelling units {:?}",
        minimalize(&taylor)?.betti_table().ranks()
    );

    let s = socle(&n2)?;
    println!(
        "socle degrees {:?}, level: {}",
        s.degree_multiset,
        s.is_level()
    );
    Ok(())
}
