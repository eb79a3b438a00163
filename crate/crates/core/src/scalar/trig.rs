use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GaussianRational, Scalar};

/// A monomial `Π c_j^{a_j} · Π_{j ∈ S} s_j` with every `s_j` degree at most 1.
///
/// Variables are indexed from 1. The cosine part is a sorted list of
/// `(index, exponent)` pairs with positive exponents; the sine part is a bit
/// set where bit `j - 1` marks `s_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TrigMonomial {
    cos: Vec<(u16, u32)>,
    sin: u64,
}

impl TrigMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn cos_pow(j: u16, e: u32) -> Self {
        assert!((1..=64).contains(&j), "trig variable index must be in 1..=64");
        if e == 0 {
            return Self::one();
        }
        Self {
            cos: vec![(j, e)],
            sin: 0,
        }
    }

    pub fn sin(j: u16) -> Self {
        assert!((1..=64).contains(&j), "trig variable index must be in 1..=64");
        Self {
            cos: Vec::new(),
            sin: 1 << (j - 1),
        }
    }

    pub fn cos_exponent(&self, j: u16) -> u32 {
        self.cos
            .iter()
            .find(|(v, _)| *v == j)
            .map_or(0, |(_, e)| *e)
    }

    pub fn has_sin(&self, j: u16) -> bool {
        self.sin & (1 << (j - 1)) != 0
    }

    fn mul_cos(a: &[(u16, u32)], b: &[(u16, u32)]) -> Vec<(u16, u32)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut k) = (0, 0);
        while i < a.len() && k < b.len() {
            match a[i].0.cmp(&b[k].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[k]);
                    k += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[k].1));
                    i += 1;
                    k += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[k..]);
        out
    }

    /// Product of two canonical monomials, re-expanded through
    /// `s_j² = 1 - c_j²` into a signed list of canonical monomials.
    fn mul(&self, other: &Self) -> Vec<(bool, TrigMonomial)> {
        let base = TrigMonomial {
            cos: Self::mul_cos(&self.cos, &other.cos),
            sin: self.sin ^ other.sin,
        };
        let overlap = self.sin & other.sin;
        if overlap == 0 {
            return vec![(false, base)];
        }
        let vars: Vec<u16> = (0..64)
            .filter(|b| overlap & (1 << b) != 0)
            .map(|b| b as u16 + 1)
            .collect();
        let mut out = Vec::with_capacity(1 << vars.len());
        for subset in 0u32..(1 << vars.len()) {
            let mut m = base.clone();
            for (bit, &j) in vars.iter().enumerate() {
                if subset & (1 << bit) != 0 {
                    m.cos = Self::mul_cos(&m.cos, &[(j, 2)]);
                }
            }
            out.push((subset.count_ones() % 2 == 1, m));
        }
        out
    }
}

impl fmt::Display for TrigMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut vars: Vec<u16> = self.cos.iter().map(|(j, _)| *j).collect();
        vars.extend((0..64u16).filter(|b| self.sin & (1 << b) != 0).map(|b| b + 1));
        vars.sort_unstable();
        vars.dedup();
        for j in vars {
            match self.cos_exponent(j) {
                0 => {}
                1 => parts.push(format!("c{j}")),
                e => parts.push(format!("c{j}^{e}")),
            }
            if self.has_sin(j) {
                parts.push(format!("s{j}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Polynomial in commuting `c_1, s_1, …, c_K, s_K` over `Q(i)`, reduced
/// modulo `s_j² + c_j² - 1`.
///
/// The reduction is applied eagerly so two values are equal iff their
/// canonical term maps are equal.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TrigScalar {
    terms: BTreeMap<TrigMonomial, GaussianRational>,
}

impl TrigScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(g: GaussianRational) -> Self {
        Self::from_monomial(TrigMonomial::one(), g)
    }

    pub fn from_monomial(m: TrigMonomial, g: GaussianRational) -> Self {
        let mut out = Self::zero();
        out.add_term(m, g);
        out
    }

    /// `c_j`, standing for `cos(φ_j / 2)`.
    pub fn cos(j: u16) -> Self {
        Self::from_monomial(TrigMonomial::cos_pow(j, 1), GaussianRational::one())
    }

    /// `s_j`, standing for `sin(φ_j / 2)`.
    pub fn sin(j: u16) -> Self {
        Self::from_monomial(TrigMonomial::sin(j), GaussianRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TrigMonomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: TrigMonomial, g: GaussianRational) {
        if Scalar::is_zero(&g) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(g);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + g;
                if Scalar::is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, g)| (m.clone(), g.conj()))
                .collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ga) in &self.terms {
            for (mb, gb) in &other.terms {
                let g = ga.mul_ref(gb);
                for (negate, m) in ma.mul(mb) {
                    let coeff = if negate { -g.clone() } else { g.clone() };
                    out.add_term(m, coeff);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Substitutes `c_j ↦ cos_value`, `s_j ↦ sin_value`.
    ///
    /// The values are not required to satisfy `cos² + sin² = 1`; when they do,
    /// the substitution is a ring homomorphism.
    pub fn specialize(&self, j: u16, cos_value: &GaussianRational, sin_value: &GaussianRational) -> Self {
        let mut out = Self::zero();
        for (m, g) in &self.terms {
            let e = m.cos_exponent(j);
            let mut factor = GaussianRational::one();
            for _ in 0..e {
                factor = factor.mul_ref(cos_value);
            }
            if m.has_sin(j) {
                factor = factor.mul_ref(sin_value);
            }
            let rest = TrigMonomial {
                cos: m.cos.iter().copied().filter(|(v, _)| *v != j).collect(),
                sin: m.sin & !(1 << (j - 1)),
            };
            out.add_term(rest, factor.mul_ref(g));
        }
        out
    }

    /// Returns the value when no indeterminate remains.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (m, g) = self.terms.iter().next()?;
                (*m == TrigMonomial::one()).then(|| g.clone())
            }
            _ => None,
        }
    }
}

impl Add for TrigScalar {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (m, g) in o.terms {
            self.add_term(m, g);
        }
        self
    }
}

impl Sub for TrigScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for TrigScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl Neg for TrigScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(m, g)| (m, -g)).collect(),
        }
    }
}

impl fmt::Display for TrigScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, g)| {
                if *m == TrigMonomial::one() {
                    g.to_string()
                } else if g.is_one() {
                    m.to_string()
                } else {
                    format!("{g}*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(j: u16) -> TrigScalar {
        TrigScalar::cos(j)
    }
    fn s(j: u16) -> TrigScalar {
        TrigScalar::sin(j)
    }

    #[test]
    fn pythagorean_identity_reduces_to_one() {
        let x = c(1) * c(1) + s(1) * s(1);
        assert_eq!(x, TrigScalar::one());
    }

    #[test]
    fn double_angle_identity() {
        // cos²φ + sin²φ = 1 with cosφ = c² - s², sinφ = 2cs
        let cos_phi = c(2) * c(2) - s(2) * s(2);
        let sin_phi = TrigScalar::from_rational(crate::scalar::int(2)) * c(2) * s(2);
        assert_eq!(cos_phi.clone() * cos_phi + sin_phi.clone() * sin_phi, TrigScalar::one());
    }

    #[test]
    fn sine_degree_stays_at_most_one() {
        let x = (s(1) + c(2)).pow(5);
        for (m, _) in x.terms() {
            assert!(m.sin.count_ones() <= 2);
        }
        // s^3 = s (1 - c^2)
        assert_eq!(s(3).pow(3), s(3) - s(3) * c(3) * c(3));
    }

    #[test]
    fn specialization_evaluates() {
        let x = c(1) + s(1) * TrigScalar::i();
        let v = x.specialize(1, &GaussianRational::from_ints(-1, 0), &GaussianRational::zero());
        assert_eq!(v.as_constant(), Some(GaussianRational::from_ints(-1, 0)));
        let y = c(1) * c(2);
        assert_eq!(y.specialize(1, &GaussianRational::zero(), &GaussianRational::one()).as_constant(), Some(GaussianRational::zero()));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!((c(1) * s(2)).to_string(), "c1*s2");
        assert_eq!(TrigScalar::zero().to_string(), "0");
    }
}
