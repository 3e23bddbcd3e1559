//! The numerical obstruction to being licci, compressed algebras, and the
//! exhaustive checks of the Hilbert-function estimates.

use perfect_ideals::generators::example;
use perfect_ideals::licci::{compressed_check, hu_obstruction, verify_prop_m, verify_prop_n};
use perfect_ideals::poly::Field;
use perfect_ideals::resolution::resolve;

fn main() -> perfect_ideals::Result<()> {
    for name in ["N2", "I_3_7", "J_3_7"] {
        let ideal = example(name, Field::Rationals)?;
        let table = resolve(&ideal)?.betti_table();
        let r = hu_obstruction(&table)?;
        let p = compressed_check(&ideal)?;
        println!(
            "{name}: {:?} (margin {}), h = {:?}, bound = {:?}, compressed = {}",
            r.verdict, r.margin, p.hilbert, p.bound, p.is_compressed
        );
    }
    for report in [verify_prop_m(200)?, verify_prop_n(200)?] {
        println!(
            "{}: {} checks, {} failures",
            report.statement,
            report.checks,
            report.failures.len()
        );
        for f in report.failures.iter().take(3) {
            println!(
                "  s = {}, d = {}, {}: {} ({})",
                f.s, f.d, f.case, f.check, f.detail
            );
        }
    }
    Ok(())
}
