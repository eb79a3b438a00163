//! Fixed-point contributions to the equivariant index of a circle action,
//! exponent generation from torus weights, and truncated `Â`/`ch` series.

mod exponents;
mod laurent;
mod localization;
mod rational_function;
mod series;

pub use exponents::{generate_tangent_exponents, generate_twist_exponents, ExponentValues};
pub use laurent::HalfIntLaurent;
pub use localization::{
    contribution, equivariant_index, limits, satisfies_inequality, Classification, FixedPointDatum,
    IndexResult, InequalityVerdict,
};
pub use rational_function::{Limit, RationalFunction};
pub use series::{
    ahat_factor_series, formal_genus_truncation, TruncatedSeries, MAX_GENUS_DEGREE,
    MAX_GENUS_VARIABLES, MAX_SERIES_DEGREE,
};
