use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{fmt_rational, int, Rational};

use super::laurent::HalfIntLaurent;
use super::rational_function::{Limit, RationalFunction};

/// Rotation and twist exponents at an isolated fixed point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedPointDatum {
    pub name: String,
    pub tangent_exponents: Vec<Rational>,
    pub twist_exponents: Vec<Rational>,
}

impl FixedPointDatum {
    pub fn new(name: impl Into<String>, tangent: Vec<Rational>, twist: Vec<Rational>) -> Self {
        Self {
            name: name.into(),
            tangent_exponents: tangent,
            twist_exponents: twist,
        }
    }

    /// Twist exponents, with an empty list read as the trivial twist `[0]`.
    pub fn effective_twist(&self) -> Vec<Rational> {
        if self.twist_exponents.is_empty() {
            vec![Rational::zero()]
        } else {
            self.twist_exponents.clone()
        }
    }

    /// `(1/2) Σ |q_i|`.
    pub fn half_weight_sum(&self) -> Rational {
        self.tangent_exponents
            .iter()
            .fold(Rational::zero(), |acc, q| acc + q.abs())
            / int(2)
    }

    fn integer_tangent(&self) -> Result<Vec<i64>> {
        self.tangent_exponents
            .iter()
            .enumerate()
            .map(|(index, q)| {
                if q.is_zero() {
                    return Err(Error::ZeroTangentExponent { index });
                }
                as_small_integer(q).ok_or_else(|| Error::NonIntegralExponent {
                    index,
                    value: fmt_rational(q),
                })
            })
            .collect()
    }

    /// `2 n_k` for each effective twist exponent.
    fn doubled_twist(&self) -> Result<Vec<i64>> {
        self.effective_twist()
            .iter()
            .enumerate()
            .map(|(index, n)| {
                as_small_integer(&(n * int(2))).ok_or_else(|| Error::NonIntegralExponent {
                    index,
                    value: fmt_rational(n),
                })
            })
            .collect()
    }

    /// Whether every term `w^{-2n_k} / Π(w^{-q}-w^{q})` has the same
    /// `w`-parity, namely that of `Σ q_i`.
    pub fn parity_consistent(&self) -> Result<bool> {
        let q = self.integer_tangent()?;
        let parity = q.iter().map(|v| v.rem_euclid(2)).sum::<i64>() % 2;
        Ok(self
            .doubled_twist()?
            .iter()
            .all(|n2| n2.rem_euclid(2) == parity))
    }
}

fn as_small_integer(q: &Rational) -> Option<i64> {
    q.is_integer().then(|| q.to_integer().to_i64()).flatten()
}

/// `Σ_k z^{-n_k} · Π_j 1/(z^{-q_j/2} - z^{q_j/2})`, assembled in `w`.
///
/// Reversing the sign of one `q_j` negates the result.
pub fn contribution(fp: &FixedPointDatum) -> Result<RationalFunction> {
    let q = fp.integer_tangent()?;
    let den = q
        .iter()
        .fold(HalfIntLaurent::one(), |acc, &qi| acc * HalfIntLaurent::rotation_factor(qi));
    let num = fp
        .doubled_twist()?
        .into_iter()
        .fold(HalfIntLaurent::zero(), |acc, n2| {
            acc + HalfIntLaurent::monomial(-n2, Rational::one())
        });
    RationalFunction::new(num, den)
}

/// Limits at `z → 0` and `z → ∞`.
pub fn limits(f: &RationalFunction) -> (Limit, Limit) {
    f.limits()
}

/// Per-exponent verdicts for `|n_k| < (1/2) Σ |q_i|` and its non-strict form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InequalityVerdict {
    pub bound: Rational,
    pub strict: Vec<bool>,
    pub non_strict: Vec<bool>,
}

impl InequalityVerdict {
    pub fn all_strict(&self) -> bool {
        self.strict.iter().all(|b| *b)
    }

    pub fn all_non_strict(&self) -> bool {
        self.non_strict.iter().all(|b| *b)
    }
}

pub fn satisfies_inequality(fp: &FixedPointDatum) -> InequalityVerdict {
    let bound = fp.half_weight_sum();
    let twist = fp.effective_twist();
    InequalityVerdict {
        strict: twist.iter().map(|n| n.abs() < bound).collect(),
        non_strict: twist.iter().map(|n| n.abs() <= bound).collect(),
        bound,
    }
}

/// What kind of object the summed index is.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Classification {
    Vanishes,
    /// A nonzero constant character.
    Rigid(Rational),
    /// A Laurent polynomial in `z` with some nonzero power.
    NonRigid(HalfIntLaurent),
    /// The sum has poles away from `0` and `∞`.
    NotLaurent,
    /// A Laurent polynomial in `w` with odd powers, so not a character of the circle.
    OddPowers(HalfIntLaurent),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Vanishes => write!(f, "vanishes: ind(z) = 0"),
            Classification::Rigid(c) => write!(f, "rigid constant {}", fmt_rational(c)),
            Classification::NonRigid(p) => write!(f, "not rigid: ind(z) = {}", p.display_in_z()),
            Classification::NotLaurent => write!(f, "inconsistent: sum is not a Laurent polynomial"),
            Classification::OddPowers(p) => {
                write!(f, "inconsistent: sum has half-integral powers of z: {}", p.display_in_z())
            }
        }
    }
}

/// Summed index together with its classification.
#[derive(Clone, Debug)]
pub struct IndexResult {
    pub sum: RationalFunction,
    pub classification: Classification,
    /// Every fixed point satisfies the strict inequality.
    pub all_strict: bool,
    /// Every fixed point passes the parity gate.
    pub parity_consistent: bool,
}

impl IndexResult {
    /// The vanishing argument applies: all contributions vanish at `0` and `∞`
    /// and the sum is a Laurent polynomial, hence zero.
    pub fn vanishing_certified(&self) -> bool {
        self.all_strict && self.classification == Classification::Vanishes
    }

    /// All strict inequalities hold and the sum is a Laurent polynomial, yet it
    /// is nonzero. Only possible for inconsistent input.
    pub fn certificate_violated(&self) -> bool {
        self.all_strict
            && matches!(
                self.classification,
                Classification::Rigid(_) | Classification::NonRigid(_) | Classification::OddPowers(_)
            )
    }
}

pub fn equivariant_index(fps: &[FixedPointDatum]) -> Result<IndexResult> {
    let mut sum = RationalFunction::zero();
    let mut all_strict = true;
    let mut parity_consistent = true;
    for fp in fps {
        sum = sum.add(&contribution(fp)?);
        all_strict &= satisfies_inequality(fp).all_strict();
        parity_consistent &= fp.parity_consistent()?;
    }
    let classification = classify(&sum);
    Ok(IndexResult {
        sum,
        classification,
        all_strict,
        parity_consistent,
    })
}

fn classify(sum: &RationalFunction) -> Classification {
    if sum.is_zero() {
        return Classification::Vanishes;
    }
    match sum.as_laurent() {
        None => Classification::NotLaurent,
        Some(p) if !p.is_even() => Classification::OddPowers(p),
        Some(p) => match p.as_constant() {
            Some(c) => Classification::Rigid(c),
            None => Classification::NonRigid(p),
        },
    }
}
