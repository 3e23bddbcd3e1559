//! Direct links: a prescribed sequence, a random one in given degrees, and
//! one chosen to realize a format move.

use perfect_ideals::generators::example;
use perfect_ideals::linkage::{
    direct_link, find_generic_link, link_by_move, FormatMove, RegularSequence,
};
use perfect_ideals::poly::Field;

fn main() -> perfect_ideals::Result<()> {
    let n2 = example("N2", Field::Rationals)?;
    let seq = RegularSequence::parse("X^2; Y^2; Z^3", n2.ring())?;
    let step = direct_link(&n2, &seq)?;
    println!(
        "(X^2,Y^2,Z^3) : N2 = ({}), format {:?}, links back: {}",
        step.target
            .minimalized()
            .gens()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", "),
        step.target_format().map(|f| f.to_string()),
        step.double_link_verified
    );

    let n2p = example("N2", Field::Prime(32003))?;
    for degrees in [[2, 2, 2], [2, 2, 3], [3, 3, 3]] {
        let step = find_generic_link(&n2p, degrees, 7)?;
        println!(
            "generic link in degrees {degrees:?}: {:?} (predicted {:?})",
            step.target_format().map(|f| f.to_string()),
            step.predicted.map(|f| f.to_string())
        );
    }

    let i37 = example("I_3_7", Field::Prime(32003))?;
    let step = link_by_move(&i37, FormatMove::P22a, 1)?;
    println!(
        "P22a from {:?}: {:?}",
        step.source_format().map(|f| f.to_string()),
        step.target_format().map(|f| f.to_string())
    );
    Ok(())
}
