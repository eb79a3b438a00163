//! Exact coefficient rings.
//!
//! [`Rational`] is an arbitrary-precision reduced fraction. Two rings are
//! built on top of it and plugged into the Clifford and matrix engines through
//! the [`Scalar`] trait: [`GaussianRational`] for numeric work and
//! [`TrigScalar`] for formal identities in `cos(φ/2)`, `sin(φ/2)`.

mod gaussian;
mod trig;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use gaussian::GaussianRational;
pub use trig::{TrigMonomial, TrigScalar};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p`, or `p/q` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Reduces `q` into the half-open interval `[0, modulus)`.
pub fn rem_euclid(q: &Rational, modulus: &Rational) -> Rational {
    let k = (q / modulus).floor();
    let r = q - &k * modulus;
    debug_assert!(!r.is_negative() && &r < modulus);
    r
}

/// A commutative coefficient ring with conjugation.
///
/// Equality must be decidable: implementors keep a canonical form.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn from_gaussian(g: GaussianRational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_rational(q: Rational) -> Self {
        Self::from_gaussian(GaussianRational::real(q))
    }

    /// The imaginary unit.
    fn i() -> Self {
        Self::from_gaussian(GaussianRational::i())
    }
}

impl Scalar for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
    fn from_gaussian(g: GaussianRational) -> Self {
        g
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl Scalar for TrigScalar {
    fn zero() -> Self {
        TrigScalar::zero()
    }
    fn one() -> Self {
        TrigScalar::one()
    }
    fn is_zero(&self) -> bool {
        TrigScalar::is_zero(self)
    }
    fn conj(&self) -> Self {
        TrigScalar::conj(self)
    }
    fn from_gaussian(g: GaussianRational) -> Self {
        TrigScalar::constant(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/2", "-1", "0", "-7/4", "12"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(fmt_rational(&q), s);
        }
        assert_eq!(parse_rational("6/4"), Some(rat(3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn rem_euclid_wraps_negatives() {
        let two = int(2);
        assert_eq!(rem_euclid(&rat(-1, 2), &two), rat(3, 2));
        assert_eq!(rem_euclid(&int(2), &two), int(0));
        assert_eq!(rem_euclid(&rat(9, 2), &two), rat(1, 2));
    }
}
