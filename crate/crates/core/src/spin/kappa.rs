use crate::clifford::{volume_element, Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Scalar};

use super::matrix::SpinMatrix;
use super::torus::WeightSpinor;

fn gauss<S: Scalar>(re: i64, im: i64) -> S {
    S::from_gaussian(GaussianRational::from_ints(re, im))
}

/// `g_1 = diag(i, -i)`.
pub fn g1<S: Scalar>() -> SpinMatrix<S> {
    SpinMatrix::from_rows(vec![vec![gauss(0, 1), gauss(0, 0)], vec![gauss(0, 0), gauss(0, -1)]])
}

/// `g_2 = [[0, i], [i, 0]]`.
pub fn g2<S: Scalar>() -> SpinMatrix<S> {
    SpinMatrix::from_rows(vec![vec![gauss(0, 0), gauss(0, 1)], vec![gauss(0, 1), gauss(0, 0)]])
}

/// `T = [[0, -i], [i, 0]]`.
pub fn t_matrix<S: Scalar>() -> SpinMatrix<S> {
    SpinMatrix::from_rows(vec![vec![gauss(0, 0), gauss(0, -1)], vec![gauss(0, 1), gauss(0, 0)]])
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Factor {
    Id,
    G1,
    G2,
    T,
}

/// The tensor factors of `κ(e_i)` from left to right, plus whether the
/// whole product carries an extra factor `i` (only for `e_{2k+1}`, n odd).
fn generator_factors(n: usize, i: usize) -> Result<(Vec<Factor>, bool)> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { n, index: i });
    }
    let k = n / 2;
    if i == 2 * k + 1 {
        return Ok((vec![Factor::T; k], true));
    }
    let j = i.div_ceil(2);
    let pos = k - j;
    let mut out = vec![Factor::Id; k];
    out[pos] = if i % 2 == 1 { Factor::G1 } else { Factor::G2 };
    for f in out.iter_mut().skip(pos + 1) {
        *f = Factor::T;
    }
    Ok((out, false))
}

fn factor_matrix<S: Scalar>(f: Factor) -> SpinMatrix<S> {
    match f {
        Factor::Id => SpinMatrix::identity(2),
        Factor::G1 => g1(),
        Factor::G2 => g2(),
        Factor::T => t_matrix(),
    }
}

fn kron_all<S: Scalar>(mats: &[SpinMatrix<S>]) -> SpinMatrix<S> {
    mats.iter()
        .fold(SpinMatrix::identity(1), |acc, m| acc.kron(m))
}

/// `κ(e_i)` on `Δ_n = C^{2^{[n/2]}}`.
pub fn kappa_generator<S: Scalar>(n: usize, i: usize) -> Result<SpinMatrix<S>> {
    let (factors, times_i) = generator_factors(n, i)?;
    let mats: Vec<SpinMatrix<S>> = factors.into_iter().map(factor_matrix).collect();
    let m = kron_all(&mats);
    Ok(if times_i { m.scale(&S::i()) } else { m })
}

/// `κ` of a basis monomial, multiplied slot by slot through the
/// mixed-product property of the Kronecker product.
pub fn kappa_monomial<S: Scalar>(n: usize, blade: Blade) -> Result<SpinMatrix<S>> {
    let k = n / 2;
    let mut slots: Vec<SpinMatrix<S>> = vec![SpinMatrix::identity(2); k];
    let mut scalar = S::one();
    for bit in 0..n {
        if blade & (1 << bit) == 0 {
            continue;
        }
        let (factors, times_i) = generator_factors(n, bit + 1)?;
        for (slot, f) in slots.iter_mut().zip(factors) {
            if f != Factor::Id {
                *slot = slot.mul(&factor_matrix(f))?;
            }
        }
        if times_i {
            scalar = scalar * S::i();
        }
    }
    Ok(kron_all(&slots).scale(&scalar))
}

/// The linear extension of `e_i ↦ κ(e_i)` to all of `Cl_n ⊗ C`.
pub fn kappa<S: Scalar>(x: &CliffordElement<S>) -> Result<SpinMatrix<S>> {
    let n = x.dim();
    let mut out = SpinMatrix::zero(1 << (n / 2));
    for (blade, c) in x.terms() {
        out = out.add(&kappa_monomial::<S>(n, blade)?.scale(c))?;
    }
    Ok(out)
}

/// Eigenprojectors of the chirality involution `(-i)^{n/2} κ(vol_n)`.
#[derive(Clone, Debug)]
pub struct ChiralitySplit {
    pub n: usize,
    pub plus: SpinMatrix<GaussianRational>,
    pub minus: SpinMatrix<GaussianRational>,
    pub rank_plus: usize,
    pub rank_minus: usize,
    /// Eigenvalue of `κ(vol_n)` on `Δ_n^+`.
    pub vol_on_plus: GaussianRational,
    /// Eigenvalue of `κ(vol_n)` on `Δ_n^-`.
    pub vol_on_minus: GaussianRational,
}

fn i_pow(e: usize) -> GaussianRational {
    match e % 4 {
        0 => GaussianRational::from_ints(1, 0),
        1 => GaussianRational::from_ints(0, 1),
        2 => GaussianRational::from_ints(-1, 0),
        _ => GaussianRational::from_ints(0, -1),
    }
}

pub fn chirality_split(n: usize) -> Result<ChiralitySplit> {
    if n % 2 != 0 {
        return Err(Error::OddDimension(n));
    }
    let vol = kappa(&volume_element::<GaussianRational>(n)?)?;
    let dim = vol.dim();
    let minus_i_pow = i_pow(3 * (n / 2));
    let inv = vol.scale(&minus_i_pow);
    let id = SpinMatrix::identity(dim);
    if inv.mul(&inv)? != id {
        return Err(Error::Consistency(
            "chirality involution does not square to the identity".into(),
        ));
    }
    let half = GaussianRational::real(crate::scalar::rat(1, 2));
    let plus = id.add(&inv)?.scale(&half);
    let minus = id.sub(&inv)?.scale(&half);

    let vol_on_plus = minus_i_pow.inv().expect("unit");
    let vol_on_minus = -vol_on_plus.clone();
    if vol.mul(&plus)? != plus.scale(&vol_on_plus) || vol.mul(&minus)? != minus.scale(&vol_on_minus) {
        return Err(Error::Consistency("volume element eigenvalue mismatch".into()));
    }
    let rank_plus = plus.rank();
    let rank_minus = minus.rank();
    if rank_plus != rank_minus || rank_plus + rank_minus != dim {
        return Err(Error::Consistency(format!(
            "unbalanced chirality ranks {rank_plus} + {rank_minus}"
        )));
    }
    let top = WeightSpinor::new(vec![1; n / 2]).column::<GaussianRational>();
    if plus.mul_vec(&top)? != top {
        return Err(Error::Consistency(
            "u_(1,...,1) is not in the positive half".into(),
        ));
    }
    Ok(ChiralitySplit {
        n,
        plus,
        minus,
        rank_plus,
        rank_minus,
        vol_on_plus,
        vol_on_minus,
    })
}

/// The four central elements probed by [`kernel_check`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CentralElement {
    One,
    MinusOne,
    Vol,
    MinusVol,
}

impl CentralElement {
    pub const ALL: [CentralElement; 4] = [Self::One, Self::MinusOne, Self::Vol, Self::MinusVol];

    pub fn label(self) -> &'static str {
        match self {
            Self::One => "1",
            Self::MinusOne => "-1",
            Self::Vol => "vol",
            Self::MinusVol => "-vol",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HalfAction {
    Identity,
    MinusIdentity,
    Other,
}

#[derive(Clone, Debug)]
pub struct KernelReport {
    pub r: usize,
    /// Action of each central element on `Δ_r^+` and on `Δ_r^-`.
    pub actions: Vec<(CentralElement, HalfAction, HalfAction)>,
    pub kernel_plus: Vec<CentralElement>,
    pub kernel_minus: Vec<CentralElement>,
    pub expected_plus: Vec<CentralElement>,
    pub expected_minus: Vec<CentralElement>,
    pub passed: bool,
}

fn classify(m: &SpinMatrix<GaussianRational>, proj: &SpinMatrix<GaussianRational>) -> Result<HalfAction> {
    let restricted = m.mul(proj)?;
    Ok(if restricted == *proj {
        HalfAction::Identity
    } else if restricted == proj.neg() {
        HalfAction::MinusIdentity
    } else {
        HalfAction::Other
    })
}

/// Evaluates the half-spin representations of `Spin(r)` on `{±1, ±vol_r}`
/// and compares their kernels with `{1, vol_r}` / `{1, -vol_r}` (r ≡ 0 mod 8)
/// or the swapped pair (r ≡ 4 mod 8). `r = 4` is exempt.
pub fn kernel_check(r: usize) -> Result<KernelReport> {
    if r % 4 != 0 || r == 0 {
        return Err(Error::KernelRank(r as u32));
    }
    if r == 4 {
        return Err(Error::KernelExempt);
    }
    let split = chirality_split(r)?;
    let vol = kappa(&volume_element::<GaussianRational>(r)?)?;
    let id = SpinMatrix::identity(vol.dim());
    let mut actions = Vec::new();
    let mut kernel_plus = Vec::new();
    let mut kernel_minus = Vec::new();
    for el in CentralElement::ALL {
        let m = match el {
            CentralElement::One => id.clone(),
            CentralElement::MinusOne => id.neg(),
            CentralElement::Vol => vol.clone(),
            CentralElement::MinusVol => vol.neg(),
        };
        let p = classify(&m, &split.plus)?;
        let q = classify(&m, &split.minus)?;
        if p == HalfAction::Identity {
            kernel_plus.push(el);
        }
        if q == HalfAction::Identity {
            kernel_minus.push(el);
        }
        actions.push((el, p, q));
    }
    let (expected_plus, expected_minus) = if r % 8 == 0 {
        (
            vec![CentralElement::One, CentralElement::Vol],
            vec![CentralElement::One, CentralElement::MinusVol],
        )
    } else {
        (
            vec![CentralElement::One, CentralElement::MinusVol],
            vec![CentralElement::One, CentralElement::Vol],
        )
    };
    let passed = kernel_plus == expected_plus && kernel_minus == expected_minus;
    Ok(KernelReport {
        r,
        actions,
        kernel_plus,
        kernel_minus,
        expected_plus,
        expected_minus,
        passed,
    })
}
