//! The Clifford algebra `Cl_n` with `e_i² = -1`, over any [`Scalar`] ring.
//!
//! A basis monomial `e_{i_1} ⋯ e_{i_k}` with `i_1 < ⋯ < i_k` is stored as the
//! bit set with bits `i_1 - 1, …, i_k - 1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Blade = u32;

/// Sign of `e_A · e_B` relative to `e_{A △ B}`.
///
/// Counts the transpositions needed to merge the two sorted index lists and
/// applies `e_i² = -1` for every shared index.
pub fn blade_sign(a: Blade, b: Blade) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        swaps += (a >> j >> 1).count_ones();
    }
    (swaps + (a & b).count_ones()) % 2 == 1
}

/// `true` when reversing a degree-`k` monomial flips its sign.
pub fn reversal_sign(k: u32) -> bool {
    (k * k.saturating_sub(1) / 2) % 2 == 1
}

fn check_dim(n: usize) -> Result<()> {
    let cap = crate::max_dim();
    if n == 0 || n > cap {
        return Err(Error::DimensionOutOfRange { n, cap });
    }
    Ok(())
}

#[derive(Clone, PartialEq, Debug)]
pub struct CliffordElement<S: Scalar> {
    n: usize,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> CliffordElement<S> {
    pub fn zero(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            n,
            terms: BTreeMap::new(),
        })
    }

    pub fn scalar(n: usize, s: S) -> Result<Self> {
        Self::monomial(n, 0, s)
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::scalar(n, S::one())
    }

    pub fn monomial(n: usize, blade: Blade, s: S) -> Result<Self> {
        let mut x = Self::zero(n)?;
        if n < 32 && blade >> n != 0 {
            return Err(Error::BladeOutOfRange { n, blade });
        }
        if !s.is_zero() {
            x.terms.insert(blade, s);
        }
        Ok(x)
    }

    /// The generator `e_i`, `1 ≤ i ≤ n`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        check_dim(n)?;
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { n, index: i });
        }
        Self::monomial(n, 1 << (i - 1), S::one())
    }

    /// Builds `e_{i_1} e_{i_2} ⋯` from a list of (not necessarily sorted,
    /// possibly repeated) generator indices.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut x = Self::one(n)?;
        for &i in indices {
            x = x.mul(&Self::generator(n, i)?)?;
        }
        Ok(x)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(b, s)| (*b, s))
    }

    pub fn coefficient(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.count_ones() % 2 == 0)
    }

    pub fn is_vector(&self) -> bool {
        self.terms.keys().all(|b| b.count_ones() == 1)
    }

    /// Returns the scalar when the element has only a degree-0 part.
    pub fn as_scalar(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, blade: Blade, s: S) {
        if s.is_zero() {
            return;
        }
        match self.terms.remove(&blade) {
            None => {
                self.terms.insert(blade, s);
            }
            Some(old) => {
                let sum = old + s;
                if !sum.is_zero() {
                    self.terms.insert(blade, sum);
                }
            }
        }
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut out = self.clone();
        for (b, s) in &other.terms {
            out.add_term(*b, s.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (b, c) in &self.terms {
            out.add_term(*b, c.clone() * s.clone());
        }
        out
    }

    /// The Clifford product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let c = x.clone() * y.clone();
                let c = if blade_sign(*a, *b) { -c } else { c };
                out.add_term(a ^ b, c);
            }
        }
        Ok(out)
    }

    /// The anti-automorphism `e_{i_1}⋯e_{i_k} ↦ e_{i_k}⋯e_{i_1}`.
    pub fn reversal(&self) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(b, s)| {
                    let s = if reversal_sign(b.count_ones()) {
                        -s.clone()
                    } else {
                        s.clone()
                    };
                    (*b, s)
                })
                .collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coefficients<T: Scalar>(&self, f: impl Fn(&S) -> T) -> CliffordElement<T> {
        let mut terms = BTreeMap::new();
        for (b, s) in &self.terms {
            let t = f(s);
            if !t.is_zero() {
                terms.insert(*b, t);
            }
        }
        CliffordElement { n: self.n, terms }
    }
}

/// `x · y`.
pub fn clifford_product<S: Scalar>(
    x: &CliffordElement<S>,
    y: &CliffordElement<S>,
) -> Result<CliffordElement<S>> {
    x.mul(y)
}

pub fn reversal<S: Scalar>(x: &CliffordElement<S>) -> CliffordElement<S> {
    x.reversal()
}

/// `vol_n = e_1 ⋯ e_n`.
pub fn volume_element<S: Scalar>(n: usize) -> Result<CliffordElement<S>> {
    check_dim(n)?;
    let blade = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    CliffordElement::monomial(n, blade, S::one())
}

/// `g · y · reversal(g)` for an even `g` with `g · reversal(g) = 1` and a
/// vector `y`.
pub fn vector_conjugation<S: Scalar>(
    g: &CliffordElement<S>,
    y: &CliffordElement<S>,
) -> Result<CliffordElement<S>> {
    g.same_dim(y)?;
    if !g.is_even() {
        return Err(Error::NotEven);
    }
    if !y.is_vector() {
        return Err(Error::NotVector);
    }
    let rev = g.reversal();
    if g.mul(&rev)?.as_scalar().is_none_or(|s| !s.is_one()) {
        return Err(Error::NotUnit);
    }
    let out = g.mul(y)?.mul(&rev)?;
    if !out.is_vector() {
        return Err(Error::Consistency(
            "conjugated vector left the degree-1 subspace".into(),
        ));
    }
    Ok(out)
}

impl<S: Scalar + fmt::Display> fmt::Display for CliffordElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, s)| {
                if *b == 0 {
                    return format!("{s}");
                }
                let idx: Vec<String> = (0..32)
                    .filter(|k| b & (1 << k) != 0)
                    .map(|k| format!("e{}", k + 1))
                    .collect();
                let mono = idx.join("");
                if s.is_one() {
                    mono
                } else {
                    format!("({s}){mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussianRational as G, TrigScalar};

    type E = CliffordElement<G>;

    fn e(n: usize, i: usize) -> E {
        E::generator(n, i).unwrap()
    }

    #[test]
    fn generator_squares_to_minus_one() {
        let x = e(3, 1).mul(&e(3, 1)).unwrap();
        assert_eq!(x, E::one(3).unwrap().neg());
    }

    #[test]
    fn generators_anticommute() {
        let s = e(2, 1).mul(&e(2, 2)).unwrap().add(&e(2, 2).mul(&e(2, 1)).unwrap()).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn bivector_squares_to_minus_one() {
        let b = E::from_indices(2, &[1, 2]).unwrap();
        assert_eq!(b.mul(&b).unwrap(), E::one(2).unwrap().neg());
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(E::from_indices(2, &[1, 2]).unwrap().reversal(), E::from_indices(2, &[1, 2]).unwrap().neg());
        assert_eq!(E::one(2).unwrap().reversal(), E::one(2).unwrap());
        let t = E::from_indices(3, &[1, 2, 3]).unwrap();
        assert_eq!(t.reversal(), E::from_indices(3, &[3, 2, 1]).unwrap());
        assert_eq!(t.reversal(), t.neg());
    }

    #[test]
    fn from_indices_sorts_with_sign() {
        assert_eq!(E::from_indices(3, &[2, 1]).unwrap(), E::from_indices(3, &[1, 2]).unwrap().neg());
        assert_eq!(E::from_indices(3, &[2, 2]).unwrap(), E::one(3).unwrap().neg());
    }

    #[test]
    fn volume_squares() {
        let v: E = volume_element(4).unwrap();
        assert_eq!(v.mul(&v).unwrap(), E::one(4).unwrap());
        let v3: E = volume_element(3).unwrap();
        let comm = v3.mul(&e(3, 1)).unwrap().sub(&e(3, 1).mul(&v3).unwrap()).unwrap();
        assert!(comm.is_zero());
        assert_eq!(volume_element::<G>(2).unwrap(), E::from_indices(2, &[1, 2]).unwrap());
    }

    #[test]
    fn rotation_by_half_angle_element() {
        type T = CliffordElement<TrigScalar>;
        let c = TrigScalar::cos(1);
        let s = TrigScalar::sin(1);
        let g = T::scalar(2, c.clone()).unwrap().add(&T::monomial(2, 0b11, s.clone()).unwrap()).unwrap();
        let y = T::generator(2, 1).unwrap();
        let out = vector_conjugation(&g, &y).unwrap();
        let two = TrigScalar::from_rational(crate::scalar::int(2));
        let expected = T::monomial(2, 0b01, c.clone() * c.clone() - s.clone() * s.clone())
            .unwrap()
            .add(&T::monomial(2, 0b10, two * c * s).unwrap())
            .unwrap();
        assert_eq!(out, expected);
    }

    #[test]
    fn conjugation_by_bivector_and_identity() {
        let g = E::from_indices(2, &[1, 2]).unwrap();
        assert_eq!(vector_conjugation(&g, &e(2, 1)).unwrap(), e(2, 1).neg());
        assert_eq!(vector_conjugation(&E::one(3).unwrap(), &e(3, 3)).unwrap(), e(3, 3));
    }

    #[test]
    fn conjugation_rejects_bad_input() {
        assert_eq!(vector_conjugation(&e(2, 1), &e(2, 1)), Err(Error::NotEven));
        let two = E::scalar(2, G::from_ints(2, 0)).unwrap();
        assert_eq!(vector_conjugation(&two, &e(2, 1)), Err(Error::NotUnit));
        let b = E::from_indices(2, &[1, 2]).unwrap();
        assert_eq!(vector_conjugation(&b, &b), Err(Error::NotVector));
    }

    #[test]
    fn dimension_errors() {
        assert!(matches!(e(2, 1).mul(&e(3, 1)), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(E::generator(3, 4), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(E::zero(0), Err(Error::DimensionOutOfRange { .. })));
        assert!(matches!(E::monomial(2, 0b100, G::one()), Err(Error::BladeOutOfRange { .. })));
    }
}
