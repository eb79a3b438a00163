use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{fmt_rational, int, rem_euclid, Rational};

/// A coordinate on the maximal torus: `θ_j` and `θ'_j` on the classical
/// factors, `φ_j` on `Spin(r)`. Indices start at 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Coord {
    Theta(u16),
    ThetaPrime(u16),
    Phi(u16),
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Theta(j) => write!(f, "θ{j}"),
            Coord::ThetaPrime(j) => write!(f, "θ'{j}"),
            Coord::Phi(j) => write!(f, "φ{j}"),
        }
    }
}

/// A linear functional on the torus with rational coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Weight {
    coeffs: BTreeMap<Coord, Rational>,
}

impl Weight {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coord(c: Coord) -> Self {
        Self::from_terms([(c, Rational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Coord, Rational)>) -> Self {
        let mut w = Self::zero();
        for (c, q) in terms {
            w.add_coeff(c, q);
        }
        w
    }

    /// `(1/2) Σ_j σ_j φ_j` for a sign vector `σ`.
    pub fn half_spin(signs: &[i8]) -> Self {
        Self::from_terms(
            signs
                .iter()
                .enumerate()
                .map(|(j, s)| (Coord::Phi(j as u16 + 1), Rational::new(i64::from(*s).into(), 2.into()))),
        )
    }

    fn add_coeff(&mut self, c: Coord, q: Rational) {
        if q.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(c).or_insert_with(Rational::zero);
        *entry += q;
        if entry.is_zero() {
            self.coeffs.remove(&c);
        }
    }

    pub fn coeff(&self, c: Coord) -> Rational {
        self.coeffs.get(&c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Coord, &Rational)> {
        self.coeffs.iter().map(|(c, q)| (*c, q))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(c, q)| (*c, q * k)))
    }

    /// `Σ coeff_c · values[c]`; every coordinate must be assigned.
    pub fn pair(&self, values: &BTreeMap<Coord, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (c, q) in &self.coeffs {
            let v = values
                .get(c)
                .ok_or_else(|| Error::UnassignedCoordinate(c.to_string()))?;
            total += q * v;
        }
        Ok(total)
    }

    /// Only the coordinates of this kind, other coordinates dropped.
    pub fn restrict(&self, keep: impl Fn(Coord) -> bool) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .filter(|(c, _)| keep(**c))
                .map(|(c, q)| (*c, q.clone())),
        )
    }
}

impl Add for Weight {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (c, q) in o.coeffs {
            self.add_coeff(c, q);
        }
        self
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        self.clone() + o.clone()
    }
}

impl Neg for Weight {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(|(c, q)| (c, -q)).collect(),
        }
    }
}

impl Sub for Weight {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (c, q)) in self.coeffs.iter().enumerate() {
            let neg = q.is_negative();
            let a = q.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if a.is_one() {
                out.push_str(&c.to_string());
            } else if a.numer().is_one() {
                out.push_str(&format!("{c}/{}", a.denom()));
            } else {
                out.push_str(&format!("{}{c}", fmt_rational(&a)));
            }
        }
        write!(f, "{out}")
    }
}

/// Angles on the torus as rational multiples of `π`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GroupElementParams {
    angles: BTreeMap<Coord, Rational>,
}

impl GroupElementParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, c: Coord, multiple_of_pi: Rational) -> Self {
        self.angles.insert(c, multiple_of_pi);
        self
    }

    pub fn set(&mut self, c: Coord, multiple_of_pi: Rational) {
        self.angles.insert(c, multiple_of_pi);
    }

    pub fn get(&self, c: Coord) -> Option<&Rational> {
        self.angles.get(&c)
    }

    pub fn angles(&self) -> &BTreeMap<Coord, Rational> {
        &self.angles
    }

    /// Coordinatewise sum; coordinates missing on one side count as 0.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (c, q) in &other.angles {
            let e = out.angles.entry(*c).or_insert_with(Rational::zero);
            *e += q;
        }
        out
    }
}

impl fmt::Display for GroupElementParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .angles
            .iter()
            .map(|(c, q)| {
                if q.is_zero() {
                    format!("{c}=0")
                } else if q.is_one() {
                    format!("{c}=π")
                } else {
                    format!("{c}={}π", fmt_rational(q))
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `e^{iπq}` with `q ∈ [0, 2)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootOfUnity {
    q: Rational,
}

impl RootOfUnity {
    pub fn from_turns_of_pi(q: Rational) -> Self {
        Self {
            q: rem_euclid(&q, &int(2)),
        }
    }

    pub fn one() -> Self {
        Self::from_turns_of_pi(Rational::zero())
    }

    pub fn minus_one() -> Self {
        Self::from_turns_of_pi(Rational::one())
    }

    pub fn exponent(&self) -> &Rational {
        &self.q
    }

    pub fn is_one(&self) -> bool {
        self.q.is_zero()
    }

    /// `Some(±1)` when the value is real.
    pub fn as_sign(&self) -> Option<i8> {
        if self.q.is_zero() {
            Some(1)
        } else if self.q.is_one() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_turns_of_pi(&self.q + &o.q)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = Rational::new(1.into(), 2.into());
        let three_halves = Rational::new(3.into(), 2.into());
        if self.q.is_zero() {
            write!(f, "1")
        } else if self.q.is_one() {
            write!(f, "-1")
        } else if self.q == half {
            write!(f, "i")
        } else if self.q == three_halves {
            write!(f, "-i")
        } else {
            write!(f, "exp({}·iπ)", fmt_rational(&self.q))
        }
    }
}

/// `e^{i w(p)}`.
pub fn evaluate_weight(w: &Weight, p: &GroupElementParams) -> Result<RootOfUnity> {
    Ok(RootOfUnity::from_turns_of_pi(w.pair(p.angles())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn evaluation_examples() {
        let w = Weight::coord(Coord::Theta(1)) + Weight::half_spin(&[1]);
        let p = GroupElementParams::new()
            .with(Coord::Theta(1), int(1))
            .with(Coord::Phi(1), int(2));
        assert!(evaluate_weight(&w, &p).unwrap().is_one());
        assert!(evaluate_weight(&Weight::zero(), &p).unwrap().is_one());

        let w = Weight::half_spin(&[-1, -1, -1]);
        let p = GroupElementParams::new()
            .with(Coord::Phi(1), int(-1))
            .with(Coord::Phi(2), int(1))
            .with(Coord::Phi(3), int(1));
        let v = evaluate_weight(&w, &p).unwrap();
        assert_eq!(v.exponent(), &rat(3, 2));
        assert_eq!(v.to_string(), "-i");
    }

    #[test]
    fn unassigned_coordinate_is_an_error() {
        let w = Weight::coord(Coord::ThetaPrime(2));
        let err = evaluate_weight(&w, &GroupElementParams::new()).unwrap_err();
        assert_eq!(err, Error::UnassignedCoordinate("θ'2".into()));
    }

    #[test]
    fn display_and_arithmetic() {
        let w = Weight::coord(Coord::Theta(1)) - Weight::half_spin(&[1, -1]);
        assert_eq!(w.to_string(), "θ1 - φ1/2 + φ2/2");
        assert!((w.clone() - w).is_zero());
        assert_eq!(RootOfUnity::from_turns_of_pi(int(-3)).as_sign(), Some(-1));
    }

    #[test]
    fn composition_adds_angles() {
        let a = GroupElementParams::new().with(Coord::Phi(1), int(1));
        let b = GroupElementParams::new().with(Coord::Phi(1), int(1)).with(Coord::Theta(1), rat(1, 2));
        let c = a.compose(&b);
        assert_eq!(c.get(Coord::Phi(1)), Some(&int(2)));
        assert_eq!(c.get(Coord::Theta(1)), Some(&rat(1, 2)));
    }
}
