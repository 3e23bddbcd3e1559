//! Gorenstein ideals from Pfaffians and determinantal ideals from 2x2
//! minors.

use perfect_ideals::formats::format_of;
use perfect_ideals::generators::{gorenstein_ideal, minors_2x2, random_linear_2x4};
use perfect_ideals::poly::{Field, Ring};
use perfect_ideals::resolution::resolve;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> perfect_ideals::Result<()> {
    let ring = Ring::xyz(Field::Prime(32003));
    for m in [3, 5, 7] {
        let g = gorenstein_ideal(m, &ring, 1)?;
        let table = resolve(&g)?.betti_table();
        println!(
            "m = {m}: format {}, twists {}",
            format_of(&table)?,
            table.compact()
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let phi = random_linear_2x4(&ring, &mut rng);
    let minors = minors_2x2(&phi)?;
    let table = resolve(&minors)?.betti_table();
    println!(
        "2x2 minors of a random 2x4: format {}, twists {}",
        format_of(&table)?,
        table.compact()
    );
    Ok(())
}
