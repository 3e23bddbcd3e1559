//! Dynkin classification of resolution formats.

use perfect_ideals::formats::{
    classify, enumerate_dynkin, listed_dynkin_formats, ResolutionFormat,
};

fn main() -> perfect_ideals::Result<()> {
    for s in ["1,5,6,2", "1,6,8,3", "1,4,9,6"] {
        let f: ResolutionFormat = s.parse()?;
        let g = f.graph();
        println!("{f}: {} arms {:?}\n{}\n", classify(f), g.arms, g.render());
    }
    let found = enumerate_dynkin(12, 12, true);
    println!("realizable Dynkin formats with m, n <= 12:");
    for (f, c) in &found {
        println!("  {f} {c}");
    }
    println!(
        "agrees with the closed-form list: {}",
        found == listed_dynkin_formats(12, 12)
    );
    Ok(())
}
