//! Gauss diagrams, virtual braid representations and group presentations.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod braid_reps;
pub mod diagrams;
pub mod error;
pub mod laurent;
pub mod presentations;
pub mod realization;
pub mod words;

pub use error::{Error, Result};
