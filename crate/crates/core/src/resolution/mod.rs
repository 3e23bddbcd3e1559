//! Minimal graded free resolutions, Betti tables, socles and perfection.

mod betti;
mod complex;
mod socle;

pub use betti::GradedBettiTable;
pub use complex::{
    euler_checks, minimal_free_resolution, minimalize, resolve, syzygies, taylor_resolution,
    FreeResolution, GradedMap,
};
pub use socle::{grade_and_perfection, is_level, socle, Perfection, SocleData};
