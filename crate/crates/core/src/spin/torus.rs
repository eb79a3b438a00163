use crate::clifford::CliffordElement;
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Scalar, TrigScalar};

use super::kappa::kappa;

/// The basis spinor `u_ε = u_{ε_1} ⊗ ⋯ ⊗ u_{ε_k}` with the unnormalized
/// factors `u_{+1} = (1, -i)` and `u_{-1} = (1, i)`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct WeightSpinor {
    signs: Vec<i8>,
}

impl WeightSpinor {
    /// Panics unless every sign is `±1`.
    pub fn new(signs: Vec<i8>) -> Self {
        assert!(signs.iter().all(|s| *s == 1 || *s == -1), "signs must be ±1");
        Self { signs }
    }

    /// All `2^k` sign patterns, `ε_1` varying slowest.
    pub fn all(k: usize) -> Vec<Self> {
        (0..1u64 << k)
            .map(|bits| {
                Self::new(
                    (0..k)
                        .map(|j| if bits >> (k - 1 - j) & 1 == 1 { -1 } else { 1 })
                        .collect(),
                )
            })
            .collect()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|s| **s < 0).count()
    }

    pub fn column<S: Scalar>(&self) -> Vec<S> {
        let mut col = vec![S::one()];
        for &e in &self.signs {
            let second = S::from_gaussian(GaussianRational::from_ints(0, -i64::from(e)));
            col = col
                .iter()
                .flat_map(|x| [x.clone(), x.clone() * second.clone()])
                .collect();
        }
        col
    }

    /// Coefficients of the weight in `φ_1, …, φ_k`: `ε_{k+1-j} / 2` at `φ_j`.
    pub fn weight_signs(&self) -> Vec<i8> {
        self.signs.iter().rev().copied().collect()
    }
}

/// `t(φ) = Π_{j=1}^{k} (c_j + s_j e_{2j-1} e_{2j})` inside `Cl_n`, `k = [n/2]`.
pub fn torus_spin_element_in(n: usize) -> Result<CliffordElement<TrigScalar>> {
    let mut t = CliffordElement::one(n)?;
    for j in 1..=n / 2 {
        let c = TrigScalar::cos(j as u16);
        let s = TrigScalar::sin(j as u16);
        let factor = CliffordElement::scalar(n, c)?
            .add(&CliffordElement::monomial(n, 0b11 << (2 * (j - 1)), s)?)?;
        t = t.mul(&factor)?;
    }
    Ok(t)
}

/// [`torus_spin_element_in`] with `n = 2k`.
pub fn torus_spin_element(k: usize) -> Result<CliffordElement<TrigScalar>> {
    torus_spin_element_in(2 * k)
}

/// `Π_j (c_j + i ε_{k+1-j} s_j)`, the formal value of `e^{(i/2) Σ ε_{k+1-j} φ_j}`.
pub fn expected_eigenfactor(spinor: &WeightSpinor) -> TrigScalar {
    spinor
        .weight_signs()
        .iter()
        .enumerate()
        .fold(TrigScalar::one(), |acc, (j, e)| {
            let j = (j + 1) as u16;
            let coeff = TrigScalar::constant(GaussianRational::from_ints(0, i64::from(*e)));
            acc * (TrigScalar::cos(j) + coeff * TrigScalar::sin(j))
        })
}

#[derive(Clone, Debug)]
pub struct EigenFailure {
    pub signs: Vec<i8>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct EigenReport {
    pub n: usize,
    pub checked: usize,
    pub failures: Vec<EigenFailure>,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies `κ(t(φ)) u_ε = Π_j (c_j + i ε_{k+1-j} s_j) u_ε` for every `ε` as
/// an identity of trigonometric polynomials.
pub fn weight_eigencheck(n: usize) -> Result<EigenReport> {
    if n == 0 || n > 8 {
        return Err(Error::DimensionOutOfRange { n, cap: 8 });
    }
    let k = n / 2;
    let m = kappa(&torus_spin_element_in(n)?)?;
    let mut failures = Vec::new();
    let all = WeightSpinor::all(k);
    for spinor in &all {
        let u = spinor.column::<TrigScalar>();
        let lhs = m.mul_vec(&u)?;
        let f = expected_eigenfactor(spinor);
        let rhs: Vec<TrigScalar> = u.iter().map(|x| f.clone() * x.clone()).collect();
        if lhs != rhs {
            let show = |v: &[TrigScalar]| {
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
            };
            failures.push(EigenFailure {
                signs: spinor.signs().to_vec(),
                lhs: show(&lhs),
                rhs: show(&rhs),
            });
        }
    }
    Ok(EigenReport {
        n,
        checked: all.len(),
        failures,
    })
}
