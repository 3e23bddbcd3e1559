//! Graded free resolutions, linkage and Dynkin formats of grade-3 perfect
//! ideals in small polynomial rings.

pub mod cli;
pub mod error;
pub mod formats;
pub mod generators;
pub mod groebner;
pub mod io;
pub mod licci;
pub mod linalg;
pub mod linkage;
pub mod poly;
pub mod resolution;
pub mod worked;

pub use error::{Error, Result};
