//! Text formats, parallel homomorphism counting and the `mg` command line
//! on top of `mgauss-core`.

pub mod cli;
pub mod formats;
pub mod parallel;

pub use mgauss_core as core;
