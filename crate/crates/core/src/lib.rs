//! Exact Clifford/spin algebra, structure-group weight calculus, descent
//! conditions for twisted spinor bundles, and fixed-point index localization.
//!
//! Everything is computed in exact arithmetic; there are no floats anywhere
//! in the crate.

pub mod clifford;
pub mod error;
pub mod index;
pub mod scalar;
pub mod spin;
pub mod twist;
pub mod weights;

pub use error::{Error, Result};

/// Default upper bound on the Clifford dimension `n`.
pub const DEFAULT_MAX_DIM: usize = 12;

/// Hard ceiling: blades are stored as `u32` bit sets.
pub const ABSOLUTE_MAX_DIM: usize = 32;

/// The active dimension cap, read from `SPINDEX_MAX_DIM` when set.
///
/// Values that fail to parse or exceed [`ABSOLUTE_MAX_DIM`] fall back to the
/// default and the ceiling respectively.
pub fn max_dim() -> usize {
    std::env::var("SPINDEX_MAX_DIM")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_DIM, |v| v.clamp(1, ABSOLUTE_MAX_DIM))
}
