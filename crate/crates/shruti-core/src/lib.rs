//! Exact closed-form generators for the 22-shruti interval systems of
//! Hindustani music.
//!
//! Three historical shruti distributions (Western Compilation, Deval,
//! Nagoji Row) and a generalized blend of them are each produced by a
//! single closed-form function over the degree index `z = 1..=23`.
//! All four functions evaluate in exact rational arithmetic; floating
//! point enters only for cents measurement and display.
//!
//! The crate is `no_std` (with `alloc`) so the generators can run on
//! embedded tone-generator hardware.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod generator;
pub mod indicator;
pub mod ratio;

pub use generator::{
    deval, generalized, nagoji_row, western_compilation, DistributionKind, ShrutiIndex,
};
pub use ratio::{diff_cents, ratio_to_cents, PrimeExponents, Ratio};

/// Number of scale degrees, unison (1/1) through octave (2/1) inclusive.
/// The 22 shrutis of the tradition are the intervals between them.
pub const DEGREE_COUNT: usize = 23;
