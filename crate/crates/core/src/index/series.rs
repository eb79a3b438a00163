use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{fmt_rational, int, Rational};
use crate::twist::PowerProfile;
use crate::weights::{factor_weights, tangent_weight_assignment, Structure, Weight};

/// Largest degree accepted by [`ahat_factor_series`].
pub const MAX_SERIES_DEGREE: u32 = 16;
/// Largest degree accepted by [`formal_genus_truncation`].
pub const MAX_GENUS_DEGREE: u32 = 6;
/// Largest number of formal variables accepted by [`formal_genus_truncation`].
pub const MAX_GENUS_VARIABLES: usize = 6;

/// Polynomial in named formal variables, truncated above total degree `D`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    names: Vec<String>,
    max_degree: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl TruncatedSeries {
    pub fn zero(names: Vec<String>, max_degree: u32) -> Self {
        Self {
            names,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(names: Vec<String>, max_degree: u32) -> Self {
        let mut s = Self::zero(names, max_degree);
        let n = s.names.len();
        s.add_term(vec![0; n], Rational::one());
        s
    }

    /// A linear form `Σ c_i x_i`.
    pub fn linear(names: Vec<String>, max_degree: u32, coeffs: &[Rational]) -> Self {
        let mut s = Self::zero(names, max_degree);
        let n = s.names.len();
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            s.add_term(e, c.clone());
        }
        s
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() || e.iter().sum::<u32>() > self.max_degree {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.names.clone(), self.max_degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.names.clone(), self.max_degree.min(o.max_degree));
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// `Σ a_k L^k` for a one-variable series `Σ a_k x^k` and this series `L`.
    pub fn substitute_into(&self, univariate: &TruncatedSeries) -> Self {
        let mut out = Self::zero(self.names.clone(), self.max_degree);
        let mut power = Self::one(self.names.clone(), self.max_degree);
        for k in 0..=univariate.max_degree.min(self.max_degree) {
            let a = univariate.coefficient(&[k]);
            if !a.is_zero() {
                out = out.add(&power.scale(&a));
            }
            power = power.mul(self);
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut sorted: Vec<_> = self.terms.iter().collect();
        sorted.sort_by_key(|(e, _)| e.iter().sum::<u32>());
        for (i, (e, c)) in sorted.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> = e
                .iter()
                .zip(&self.names)
                .filter(|(p, _)| **p > 0)
                .map(|(p, n)| if *p == 1 { n.clone() } else { format!("{n}^{p}") })
                .collect();
            let a = c.abs();
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `x / (e^{x/2} - e^{-x/2})` through degree `D`.
pub fn ahat_factor_series(d: u32) -> Result<TruncatedSeries> {
    if d > MAX_SERIES_DEGREE {
        return Err(Error::SeriesGuard(format!(
            "degree {d} exceeds {MAX_SERIES_DEGREE}"
        )));
    }
    // (e^{x/2} - e^{-x/2}) / x = Σ_j (x/2)^{2j} / (2j+1)!
    let n = d as usize;
    let mut den = vec![Rational::zero(); n + 1];
    let mut fact = Rational::one();
    for k in 0..=n {
        if k > 0 {
            fact *= int(k as i64 + 1);
        }
        if k % 2 == 0 {
            den[k] = Rational::one() / (fact.clone() * int(2).pow(k as i32));
        }
    }
    let mut inv = vec![Rational::zero(); n + 1];
    inv[0] = Rational::one();
    for k in 1..=n {
        let s = (1..=k).fold(Rational::zero(), |acc, j| acc + &den[j] * &inv[k - j]);
        inv[k] = -s;
    }
    let mut out = TruncatedSeries::zero(vec!["x".into()], d);
    for (k, c) in inv.into_iter().enumerate() {
        out.add_term(vec![k as u32], c);
    }
    Ok(out)
}

fn exp_series(d: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(vec!["x".into()], d);
    let mut fact = Rational::one();
    for k in 0..=d {
        if k > 0 {
            fact *= int(i64::from(k));
        }
        out.add_term(vec![k], Rational::one() / &fact);
    }
    out
}

/// `Π_η Â(η)`, optionally times `ch(F) = Σ_ν e^ν`, in the structure's
/// `θ`, `θ'`, `φ` variables, through degree `D`.
pub fn formal_genus_truncation(
    structure: &Structure,
    prof: Option<&PowerProfile>,
    d: u32,
) -> Result<TruncatedSeries> {
    let coords = structure.all_coords();
    if coords.len() > MAX_GENUS_VARIABLES {
        return Err(Error::SeriesGuard(format!(
            "{} formal variables exceed {MAX_GENUS_VARIABLES}",
            coords.len()
        )));
    }
    if d > MAX_GENUS_DEGREE {
        return Err(Error::SeriesGuard(format!("degree {d} exceeds {MAX_GENUS_DEGREE}")));
    }
    let names: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    let as_linear = |w: &Weight| {
        let coeffs: Vec<Rational> = coords.iter().map(|c| w.coeff(*c)).collect();
        TruncatedSeries::linear(names.clone(), d, &coeffs)
    };
    let ahat = ahat_factor_series(d)?;
    let mut out = TruncatedSeries::one(names.clone(), d);
    for eta in tangent_weight_assignment(structure)? {
        out = out.mul(&as_linear(&eta).substitute_into(&ahat));
    }
    if let Some(prof) = prof {
        let exp = exp_series(d);
        for factor in prof.factors(structure) {
            let mut ch = TruncatedSeries::zero(names.clone(), d);
            for nu in factor_weights(&factor, structure)? {
                ch = ch.add(&as_linear(&nu).substitute_into(&exp));
            }
            out = out.mul(&ch);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::twist::TwistKind;

    #[test]
    fn ahat_low_degrees() {
        assert_eq!(ahat_factor_series(0).unwrap().to_string(), "1");
        let s = ahat_factor_series(4).unwrap();
        assert_eq!(s.coefficient(&[2]), rat(-1, 24));
        assert_eq!(s.coefficient(&[4]), rat(7, 5760));
        assert_eq!(s.to_string(), "1 - 1/24*x^2 + 7/5760*x^4");
        assert!(ahat_factor_series(17).is_err());
    }

    #[test]
    fn ahat_is_even() {
        let s = ahat_factor_series(16).unwrap();
        for k in (1..16).step_by(2) {
            assert!(s.coefficient(&[k]).is_zero());
        }
    }

    #[test]
    fn genus_r3_degree_two() {
        let s = Structure::single(3, 1).unwrap();
        let g = formal_genus_truncation(&s, None, 2).unwrap();
        assert_eq!(g.coefficient(&[0, 0]), int(1));
        assert_eq!(g.coefficient(&[2, 0]), rat(-1, 12));
        assert_eq!(g.coefficient(&[0, 2]), rat(-1, 48));
        assert_eq!(g.terms().count(), 3);
        assert_eq!(g.to_string(), "1 - 1/48*φ1^2 - 1/12*θ1^2");
    }

    #[test]
    fn degree_zero_is_one() {
        for (r, m) in [(3, 1), (5, 2), (7, 1)] {
            let s = Structure::single(r, m).unwrap();
            let g = formal_genus_truncation(&s, None, 0).unwrap();
            assert_eq!(g, TruncatedSeries::one(g.names().to_vec(), 0));
        }
    }

    #[test]
    fn twisted_genus_constant_term_is_rank() {
        let s = Structure::single(3, 1).unwrap();
        let prof = PowerProfile::simple(&s, TwistKind::Exterior, 1, 0, 1, 0).unwrap();
        let g = formal_genus_truncation(&s, Some(&prof), 2).unwrap();
        assert_eq!(g.coefficient(&[0, 0]), int(4));
    }

    #[test]
    fn guards() {
        let s = Structure::single(3, 1).unwrap();
        assert!(matches!(formal_genus_truncation(&s, None, 7), Err(Error::SeriesGuard(_))));
        let big = Structure::single(3, 7).unwrap();
        assert!(matches!(formal_genus_truncation(&big, None, 2), Err(Error::SeriesGuard(_))));
    }
}
