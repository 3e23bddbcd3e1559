//! Runs the two worked linkage chains against the shipped expected values.

use perfect_ideals::poly::Field;
use perfect_ideals::worked::{reproduce, Expected};

fn main() -> perfect_ideals::Result<()> {
    for report in reproduce(&Expected::builtin(), Field::Rationals)? {
        println!("{report}");
    }
    Ok(())
}
