use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Rational;

use super::laurent::HalfIntLaurent;

/// `numerator / denominator` in `w = z^{1/2}`.
///
/// Stored with the denominator's lowest power shifted to `w^0`; equality is
/// decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: HalfIntLaurent,
    den: HalfIntLaurent,
}

/// A one-sided limit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Limit {
    Value(Rational),
    Divergent,
}

impl Limit {
    pub fn is_zero(&self) -> bool {
        matches!(self, Limit::Value(v) if v.is_zero())
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limit::Value(v) => write!(f, "{}", crate::scalar::fmt_rational(v)),
            Limit::Divergent => write!(f, "divergent"),
        }
    }
}

impl RationalFunction {
    pub fn new(num: HalfIntLaurent, den: HalfIntLaurent) -> Result<Self> {
        let Some(low) = den.low_degree() else {
            return Err(Error::ZeroDenominator);
        };
        Ok(Self {
            num: num.shift(-low),
            den: den.shift(-low),
        })
    }

    pub fn zero() -> Self {
        Self::from_laurent(HalfIntLaurent::zero())
    }

    pub fn from_laurent(p: HalfIntLaurent) -> Self {
        Self {
            num: p,
            den: HalfIntLaurent::one(),
        }
    }

    pub fn numerator(&self) -> &HalfIntLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &HalfIntLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self {
                num: self.num.clone() + o.num.clone(),
                den: self.den.clone(),
            };
        }
        Self::new(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
            .expect("product of nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den).expect("product of nonzero denominators")
    }

    /// The Laurent polynomial equal to this function, if there is one.
    pub fn as_laurent(&self) -> Option<HalfIntLaurent> {
        self.num.exact_div(&self.den)
    }

    /// Limits as `z → 0` and `z → ∞`, read off the extreme degrees.
    pub fn limits(&self) -> (Limit, Limit) {
        if self.num.is_zero() {
            return (Limit::Value(Rational::zero()), Limit::Value(Rational::zero()));
        }
        let side = |n: i64, d: i64, toward_zero: bool| {
            let vanishes = if toward_zero { n > d } else { n < d };
            if n == d {
                Limit::Value(self.num.coefficient(n) / self.den.coefficient(d))
            } else if vanishes {
                Limit::Value(Rational::zero())
            } else {
                Limit::Divergent
            }
        };
        let at_zero = side(
            self.num.low_degree().unwrap(),
            self.den.low_degree().unwrap(),
            true,
        );
        let at_inf = side(
            self.num.high_degree().unwrap(),
            self.den.high_degree().unwrap(),
            false,
        );
        (at_zero, at_inf)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == HalfIntLaurent::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
