//! Builds ideals of prescribed formats by chains of links, starting from a
//! Gorenstein ideal.
//!
//! `cargo run --release --example realize -- 1,5,8,4`

use perfect_ideals::formats::{classify, ResolutionFormat};
use perfect_ideals::linkage::realize_format;
use perfect_ideals::poly::{Field, Ring};

fn main() -> perfect_ideals::Result<()> {
    let targets: Vec<ResolutionFormat> = match std::env::args().nth(1) {
        Some(arg) => vec![arg.parse()?],
        None => ["1,4,6,3", "1,5,6,2", "1,6,7,2", "1,5,7,3"]
            .iter()
            .map(|s| s.parse())
            .collect::<perfect_ideals::Result<_>>()?,
    };
    let ring = Ring::xyz(Field::Prime(32003));
    for f in targets {
        let r = realize_format(f, &ring, 1)?;
        let chain: Vec<String> = std::iter::once(r.start.to_string())
            .chain(
                r.steps
                    .iter()
                    .filter_map(|s| s.target_format())
                    .map(|f| f.to_string()),
            )
            .collect();
        println!("{f} ({}): {}", classify(f), chain.join(" -> "));
        println!("  generator degrees {:?}", r.ideal.generator_degrees());
    }
    Ok(())
}
