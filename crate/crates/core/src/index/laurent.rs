use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{fmt_rational, Rational};

/// Laurent polynomial in `w = z^{1/2}` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct HalfIntLaurent {
    terms: BTreeMap<i64, Rational>,
}

impl HalfIntLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// `c · w^k`.
    pub fn monomial(k: i64, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    /// `w^{-q} - w^{q}`, i.e. `z^{-q/2} - z^{q/2}`.
    pub fn rotation_factor(q: i64) -> Self {
        Self::monomial(-q, Rational::one()) - Self::monomial(q, Rational::one())
    }

    fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coefficient(&self, k: i64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn high_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `w^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    /// `true` when only even powers of `w` occur, i.e. a Laurent polynomial in `z`.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|k| k % 2 == 0)
    }

    /// Returns the constant when there are no other terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Exact quotient `self / d` in the Laurent ring, if it exists.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let dl = d.low_degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dn = d.shift(-dl);
        let dh = dn.high_degree()?;
        let lead = dn.coefficient(dh);
        let nl = self.low_degree()?;
        let mut rem = self.shift(-nl);
        let mut q = Self::zero();
        while let Some(rh) = rem.high_degree() {
            if rh < dh {
                return None;
            }
            let c = rem.coefficient(rh) / &lead;
            let k = rh - dh;
            rem = rem - dn.shift(k).scale(&c);
            q.add_term(k, c);
        }
        Some(q.shift(nl - dl))
    }

    fn fmt_in(&self, var: &str, halve: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = if halve {
                if k % 2 == 0 {
                    (k / 2).to_string()
                } else {
                    format!("{k}/2")
                }
            } else {
                k.to_string()
            };
            let mono = match (*k, power.as_str()) {
                (0, _) => String::new(),
                (_, "1") => var.to_string(),
                _ => format!("{var}^{power}"),
            };
            if mono.is_empty() {
                out.push_str(&fmt_rational(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{mono}", fmt_rational(&a)));
            }
        }
        out
    }

    /// Renders in powers of `z`, using `z^{k/2}` for odd `w` powers.
    pub fn display_in_z(&self) -> String {
        self.fmt_in("z", true)
    }
}

impl fmt::Display for HalfIntLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_in("w", false))
    }
}

impl Add for HalfIntLaurent {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (k, c) in o.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Sub for HalfIntLaurent {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for HalfIntLaurent {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &HalfIntLaurent {
    type Output = HalfIntLaurent;
    fn mul(self, o: &HalfIntLaurent) -> HalfIntLaurent {
        let mut out = HalfIntLaurent::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for HalfIntLaurent {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn w(k: i64, c: i64) -> HalfIntLaurent {
        HalfIntLaurent::monomial(k, int(c))
    }

    #[test]
    fn arithmetic_and_display() {
        let f = HalfIntLaurent::rotation_factor(1);
        assert_eq!(f.to_string(), "-w + w^-1");
        assert_eq!((f.clone() * f.clone()).to_string(), "w^2 - 2 + w^-2");
        assert_eq!(w(2, 3).display_in_z(), "3*z");
        assert_eq!(w(1, 1).display_in_z(), "z^1/2");
        assert!((f.clone() - f).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = w(-1, 1) - w(1, 1);
        let b = w(0, 1) - w(2, 1);
        assert_eq!(b.exact_div(&a), Some(w(1, 1)));
        let sq = &a * &a;
        assert_eq!(sq.exact_div(&a), Some(a.clone()));
        assert_eq!(a.exact_div(&sq), None);
        assert_eq!(HalfIntLaurent::zero().exact_div(&a), Some(HalfIntLaurent::zero()));
        assert_eq!(a.exact_div(&HalfIntLaurent::zero()), None);
    }
}
