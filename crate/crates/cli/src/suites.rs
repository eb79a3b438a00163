use clap::ValueEnum;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use spindex_core::clifford::{volume_element, CliffordElement};
use spindex_core::index::{
    ahat_factor_series, contribution, equivariant_index, formal_genus_truncation, generate_tangent_exponents,
    generate_twist_exponents, limits, satisfies_inequality, Classification, ExponentValues, FixedPointDatum,
    HalfIntLaurent, RationalFunction,
};
use spindex_core::scalar::{fmt_rational, int, rat, GaussianRational, Rational};
use spindex_core::spin::{chirality_split, kappa, kappa_generator, kernel_check, weight_eigencheck, SpinMatrix};
use spindex_core::twist::{cross_validate, profiles_for, structures_of_rank, PowerProfile, TwistKind};
use spindex_core::weights::{
    element_action_on_rep, is_tangent_trivial, structure_group_elements, tangent_weight_assignment,
    ClassicalPart, RepDescriptor, SpinPart, Structure,
};
use spindex_core::{max_dim, Error};

use crate::report::{Check, Report, Status};

type G = GaussianRational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Suite {
    Clifford,
    Spin,
    VolumeTable,
    Kernels,
    TorusWeights,
    StructureActions,
    TwistTables,
    Lemma,
    All,
}

impl Suite {
    /// Every concrete suite, in report order.
    pub const CONCRETE: [Suite; 8] = [
        Suite::Clifford,
        Suite::Spin,
        Suite::VolumeTable,
        Suite::Kernels,
        Suite::TorusWeights,
        Suite::StructureActions,
        Suite::TwistTables,
        Suite::Lemma,
    ];
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
    pub r: Option<u32>,
    pub m: Option<u32>,
    pub m2: Option<u32>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 7,
            samples: 200,
            r: None,
            m: None,
            m2: None,
        }
    }
}

/// Runs a suite; `All` runs every suite in parallel and merges in suite order.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Report {
    let checks = match suite {
        Suite::All => Suite::CONCRETE
            .par_iter()
            .map(|s| suite_checks(*s, opts))
            .collect::<Vec<_>>()
            .concat(),
        s => suite_checks(s, opts),
    };
    Report::from_checks(checks)
}

fn suite_checks(suite: Suite, opts: &VerifyOptions) -> Vec<Check> {
    match suite {
        Suite::Clifford => clifford_checks(opts.seed, opts.samples),
        Suite::Spin => spin_checks(opts.seed, opts.samples),
        Suite::VolumeTable => volume_table_checks(),
        Suite::Kernels => kernel_checks(),
        Suite::TorusWeights => torus_weight_checks(),
        Suite::StructureActions => match opts.r {
            Some(r) => structure_action_checks_for(r, opts.m, opts.m2),
            None => {
                let mut v = sign_table_checks();
                v.extend(tangent_triviality_checks(9, 3));
                v
            }
        },
        Suite::TwistTables => twist_table_checks(3..=9, 3, 3),
        Suite::Lemma => {
            let mut v = lemma_checks(opts.seed, opts.samples, (opts.samples / 10).max(1));
            v.extend(localization_checks(opts.seed, opts.samples));
            v.extend(exponent_bound_checks(opts.seed, (opts.samples / 2).max(1)));
            v.extend(series_checks());
            v
        }
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn error_check(name: String, anchor: &str, e: Error) -> Check {
    match e {
        Error::DimensionOutOfRange { .. } | Error::GuardExceeded { .. } | Error::SeriesGuard(_) => {
            Check::skip(name, anchor, e.to_string())
        }
        e => Check::new(name, anchor, Status::Fail, json!({ "error": e.to_string() })),
    }
}

fn collect(name: String, anchor: &str, f: impl FnOnce() -> Result<Check, Error>) -> Check {
    f().unwrap_or_else(|e| error_check(name, anchor, e))
}

fn dimension_fits(n: usize) -> bool {
    n <= max_dim()
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> Result<CliffordElement<G>, Error> {
    let mut x = CliffordElement::zero(n)?;
    for _ in 0..rng.random_range(1..=4) {
        let blade = rng.random_range(0..1u32 << n);
        let c = G::from_ints(rng.random_range(-3..=3), rng.random_range(-3..=3));
        x = x.add(&CliffordElement::monomial(n, blade, c)?)?;
    }
    Ok(x)
}

const CLIFFORD_ANCHOR: &str = "Clifford relations e_i e_j + e_j e_i = -2δ_ij";
const ASSOC_ANCHOR: &str = "associativity of the Clifford product";

/// Generator relations for `n ≤ 10` and associativity on `samples` random
/// triples for each `n ∈ 3..=8`.
pub fn clifford_checks(seed: u64, samples: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=10usize {
        let name = format!("generator relations n={n}");
        if !dimension_fits(n) {
            out.push(Check::skip(name, CLIFFORD_ANCHOR, format!("n exceeds dimension cap {}", max_dim())));
            continue;
        }
        out.push(collect(name.clone(), CLIFFORD_ANCHOR, || {
            for i in 1..=n {
                for j in 1..=n {
                    let ei = CliffordElement::<G>::generator(n, i)?;
                    let ej = CliffordElement::<G>::generator(n, j)?;
                    let anti = ei.mul(&ej)?.add(&ej.mul(&ei)?)?;
                    let expect = if i == j { G::from_ints(-2, 0) } else { G::zero() };
                    if anti.as_scalar() != Some(expect) {
                        return Ok(Check::verdict(name, CLIFFORD_ANCHOR, false, json!({"i": i, "j": j, "anticommutator": anti.to_string()})));
                    }
                }
            }
            Ok(Check::verdict(name, CLIFFORD_ANCHOR, true, json!({"pairs": n * n})))
        }));
    }
    for n in 3..=8usize {
        let name = format!("associativity n={n}");
        if !dimension_fits(n) {
            out.push(Check::skip(name, ASSOC_ANCHOR, format!("n exceeds dimension cap {}", max_dim())));
            continue;
        }
        let mut rng = rng_for(seed, n as u64);
        out.push(collect(name.clone(), ASSOC_ANCHOR, || {
            for _ in 0..samples {
                let (a, b, c) = (random_element(&mut rng, n)?, random_element(&mut rng, n)?, random_element(&mut rng, n)?);
                let left = a.mul(&b)?.mul(&c)?;
                let right = a.mul(&b.mul(&c)?)?;
                if left != right {
                    return Ok(Check::verdict(name, ASSOC_ANCHOR, false, json!({
                        "a": a.to_string(), "b": b.to_string(), "c": c.to_string(),
                    })));
                }
            }
            Ok(Check::verdict(name, ASSOC_ANCHOR, true, json!({"triples": samples})))
        }));
    }
    out
}

const KAPPA_ANCHOR: &str = "spinor representation is an algebra homomorphism";

/// `κ` multiplicative on `samples` random monomial pairs and the generator
/// images anticommuting, for `n ≤ 8`.
pub fn spin_checks(seed: u64, samples: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=8usize {
        let name = format!("kappa multiplicative n={n}");
        if !dimension_fits(n) {
            out.push(Check::skip(name, KAPPA_ANCHOR, format!("n exceeds dimension cap {}", max_dim())));
            continue;
        }
        let mut rng = rng_for(seed, 100 + n as u64);
        out.push(collect(name.clone(), KAPPA_ANCHOR, || {
            for _ in 0..samples {
                let a = rng.random_range(0..1u32 << n);
                let b = rng.random_range(0..1u32 << n);
                let x = CliffordElement::monomial(n, a, G::one())?;
                let y = CliffordElement::monomial(n, b, G::one())?;
                if kappa(&x.mul(&y)?)? != kappa(&x)?.mul(&kappa(&y)?)? {
                    return Ok(Check::verdict(name, KAPPA_ANCHOR, false, json!({"x": x.to_string(), "y": y.to_string()})));
                }
            }
            Ok(Check::verdict(name, KAPPA_ANCHOR, true, json!({"pairs": samples})))
        }));
        let name = format!("kappa anticommutation n={n}");
        out.push(collect(name.clone(), KAPPA_ANCHOR, || {
            let dim = 1usize << (n / 2);
            for i in 1..=n {
                for j in 1..=n {
                    let a: SpinMatrix<G> = kappa_generator(n, i)?;
                    let b: SpinMatrix<G> = kappa_generator(n, j)?;
                    let anti = a.mul(&b)?.add(&b.mul(&a)?)?;
                    let expect = if i == j { SpinMatrix::scalar(dim, G::from_ints(-2, 0)) } else { SpinMatrix::zero(dim) };
                    if anti != expect {
                        return Ok(Check::verdict(name, KAPPA_ANCHOR, false, json!({"i": i, "j": j})));
                    }
                }
            }
            Ok(Check::verdict(name, KAPPA_ANCHOR, true, json!({"dim": dim})))
        }));
    }
    out
}

const VOLUME_ANCHOR: &str = "volume element eigenvalues on half-spinors";

/// Eigenvalues of `vol_n` on `Δ_n^±` against `(1,-1), (i,-i), (-1,1), (-i,i)`
/// for `n ≡ 0, 2, 4, 6 mod 8`, with `u_(1,…,1) ∈ Δ^+`.
pub fn volume_table_checks() -> Vec<Check> {
    [2usize, 4, 6, 8]
        .into_iter()
        .map(|n| {
            let name = format!("volume table n={n}");
            collect(name.clone(), VOLUME_ANCHOR, || {
                let expected = match n % 8 {
                    0 => G::one(),
                    2 => G::i(),
                    4 => -G::one(),
                    _ => -G::i(),
                };
                let split = chirality_split(n)?;
                let vol = kappa(&volume_element::<G>(n)?)?;
                let on_plus = vol.mul(&split.plus)? == split.plus.scale(&expected);
                let on_minus = vol.mul(&split.minus)? == split.minus.scale(&(-expected.clone()));
                Ok(Check::verdict(
                    name,
                    VOLUME_ANCHOR,
                    on_plus && on_minus && split.vol_on_plus == expected,
                    json!({
                        "on_plus": split.vol_on_plus.to_string(),
                        "on_minus": split.vol_on_minus.to_string(),
                        "rank_plus": split.rank_plus,
                    }),
                ))
            })
        })
        .collect()
}

const KERNEL_ANCHOR: &str = "kernels of the half-spin representations on the centre";

pub fn kernel_checks() -> Vec<Check> {
    let mut out = vec![Check::skip(
        "kernels r=4",
        KERNEL_ANCHOR,
        "exempt: the r=4 half-spin kernels are larger than the centre",
    )];
    for r in [8usize, 12] {
        let name = format!("kernels r={r}");
        if !dimension_fits(r) {
            out.push(Check::skip(name, KERNEL_ANCHOR, format!("r exceeds dimension cap {}", max_dim())));
            continue;
        }
        out.push(collect(name.clone(), KERNEL_ANCHOR, || {
            let rep = kernel_check(r)?;
            let labels = |v: &[spindex_core::spin::CentralElement]| v.iter().map(|e| e.label()).collect::<Vec<_>>();
            Ok(Check::verdict(
                name,
                KERNEL_ANCHOR,
                rep.passed,
                json!({"kernel_plus": labels(&rep.kernel_plus), "kernel_minus": labels(&rep.kernel_minus)}),
            ))
        }));
    }
    out
}

const TORUS_ANCHOR: &str = "torus weights of the spinor basis";

pub fn torus_weight_checks() -> Vec<Check> {
    (2..=8usize)
        .map(|n| {
            let name = format!("weight eigencheck n={n}");
            collect(name.clone(), TORUS_ANCHOR, || {
                let rep = weight_eigencheck(n)?;
                let witness = match rep.failures.first() {
                    None => json!({"spinors": rep.checked}),
                    Some(f) => json!({"signs": f.signs, "lhs": f.lhs, "rhs": f.rhs}),
                };
                Ok(Check::verdict(name, TORUS_ANCHOR, rep.passed(), witness))
            })
        })
        .collect()
}

const SIGN_ANCHOR: &str = "central elements acting on the spinor module";

fn sign_check(structure: Structure, classical: &[ClassicalPart], spin: SpinPart, expected: i8) -> Check {
    let name = format!("sign {structure}");
    collect(name.clone(), SIGN_ANCHOR, || {
        let Some(g) = structure_group_elements(&structure)?
            .into_iter()
            .find(|g| g.classical == classical && g.spin == spin)
        else {
            return Ok(Check::verdict(name, SIGN_ANCHOR, false, json!({"error": "element not in the group"})));
        };
        let rep = RepDescriptor::twisted_spinor(structure, vec![])?;
        let outcome = element_action_on_rep(&g.params(&structure), &rep)?;
        let got = outcome.scalar().and_then(|v| v.as_sign());
        Ok(Check::verdict(
            format!("sign {structure} {g}"),
            SIGN_ANCHOR,
            got == Some(expected),
            json!({"element": g.to_string(), "action": outcome.to_string(), "expected": expected}),
        ))
    })
}

fn parity(k: u32) -> i8 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The signs by which central elements act on `Δ_N`: `(-1)^m` for r=3;
/// `(-1)^{m1+m2}`, `(-1)^{m2}`, `(-1)^{m1}` for r=4; `1` and `(-1)^m` for r=6;
/// `-1` for the r=8 mixed-parity elements.
pub fn sign_table_checks() -> Vec<Check> {
    use ClassicalPart::{IId, Id, MinusId};
    use SpinPart::{MinusOne, MinusVol, Vol};
    let mut out = Vec::new();
    for m in 1..=3 {
        out.push(sign_check(Structure::single(3, m).unwrap(), &[MinusId], MinusOne, parity(m)));
    }
    for m1 in 1..=2 {
        for m2 in 1..=2 {
            let s = Structure::pair(4, m1, m2).unwrap();
            out.push(sign_check(s, &[MinusId, MinusId], MinusOne, parity(m1 + m2)));
            out.push(sign_check(s, &[Id, MinusId], Vol, parity(m2)));
            out.push(sign_check(s, &[MinusId, Id], MinusVol, parity(m1)));
        }
    }
    for m in 1..=2 {
        let s = Structure::single(6, m).unwrap();
        out.push(sign_check(s, &[MinusId], MinusOne, 1));
        out.push(sign_check(s, &[IId], MinusVol, parity(m)));
    }
    out.push(sign_check(Structure::pair(8, 1, 2).unwrap(), &[Id, MinusId], Vol, -1));
    out.push(sign_check(Structure::pair(8, 2, 1).unwrap(), &[MinusId, Id], MinusVol, -1));
    out
}

pub(crate) fn structure_from(r: u32, m: Option<u32>, m2: Option<u32>) -> Result<Structure, Error> {
    if r % 4 == 0 {
        Structure::pair(r, m.unwrap_or(0), m2.unwrap_or(0))
    } else {
        if m2.is_some() {
            return Err(Error::InvalidStructure(format!("r={r} has a single multiplicity")));
        }
        Structure::single(r, m.unwrap_or(1))
    }
}

/// Every element of `Γ` for one structure, each required to act on `Δ_N`
/// as a scalar; the witness records the scalar.
pub fn structure_action_checks_for(r: u32, m: Option<u32>, m2: Option<u32>) -> Vec<Check> {
    let name = format!("structure actions r={r}");
    let result = (|| {
        let s = structure_from(r, m, m2)?;
        let rep = RepDescriptor::twisted_spinor(s, vec![])?;
        let mut out = Vec::new();
        for g in structure_group_elements(&s)? {
            let outcome = element_action_on_rep(&g.params(&s), &rep)?;
            let value = outcome.scalar().map(|v| v.to_string());
            out.push(Check::verdict(
                format!("action {s} {g}"),
                SIGN_ANCHOR,
                value.is_some(),
                json!({"element": g.to_string(), "value": value, "action": outcome.to_string()}),
            ));
        }
        if out.is_empty() {
            out.push(Check::skip(format!("action {s}"), SIGN_ANCHOR, "the central subgroup is trivial"));
        }
        Ok(out)
    })();
    result.unwrap_or_else(|e| vec![error_check(name, SIGN_ANCHOR, e)])
}

const TANGENT_ANCHOR: &str = "central subgroup acts trivially on tangent weights";

/// Tangent triviality for every structure with `2 ≤ r ≤ max_r` and
/// multiplicities up to `max_mult`.
pub fn tangent_triviality_checks(max_r: u32, max_mult: u32) -> Vec<Check> {
    (2..=max_r)
        .flat_map(|r| structures_of_rank(r, max_mult))
        .map(|s| {
            let name = format!("tangent triviality {s}");
            collect(name.clone(), TANGENT_ANCHOR, || {
                let eta = tangent_weight_assignment(&s)?;
                let ok = eta.len() * 2 == s.dimension() && is_tangent_trivial(&s, &eta)?;
                Ok(Check::verdict(name, TANGENT_ANCHOR, ok, json!({"weights": eta.len()})))
            })
        })
        .collect()
}

const TWIST_ANCHOR: &str = "descent conditions on twisting powers";

/// Closed-form descent conditions against the weight oracle for each rank
/// and twist kind.
pub fn twist_table_checks(ranks: std::ops::RangeInclusive<u32>, max_mult: u32, max_power: u32) -> Vec<Check> {
    let jobs: Vec<(u32, TwistKind)> = ranks
        .flat_map(|r| [TwistKind::Exterior, TwistKind::Symmetric].map(|k| (r, k)))
        .collect();
    jobs.par_iter()
        .map(|&(r, kind)| {
            let points: Vec<(Structure, PowerProfile)> = structures_of_rank(r, max_mult)
                .into_iter()
                .flat_map(|s| profiles_for(&s, kind, max_power).into_iter().map(move |p| (s, p)))
                .collect();
            let rep = cross_validate(&points);
            let kind_name = match kind {
                TwistKind::Exterior => "exterior",
                TwistKind::Symmetric => "symmetric",
            };
            let name = format!("closed form vs oracle r={r} {kind_name}");
            if rep.checked() == 0 {
                return Check::skip(name, TWIST_ANCHOR, format!("no checkable points ({} skipped)", rep.skipped));
            }
            let disagreements: Vec<String> = rep
                .disagreements
                .iter()
                .take(5)
                .map(|d| format!("{} {:?}: closed={} oracle={}", d.structure, d.profile, d.closed_form, d.oracle))
                .collect();
            Check::verdict(
                name,
                TWIST_ANCHOR,
                rep.all_agree(),
                json!({"agreed": rep.agreed, "skipped": rep.skipped, "disagreements": disagreements}),
            )
        })
        .collect()
}

const LEMMA_ANCHOR: &str = "limits of z^k/(c z^-m - c^-1 z^m) at 0 and infinity";

fn lemma_function(two_k: i64, two_m: i64, c: &Rational) -> RationalFunction {
    let num = HalfIntLaurent::monomial(two_k, Rational::one());
    let den = HalfIntLaurent::monomial(-two_m, c.clone()) - HalfIntLaurent::monomial(two_m, c.recip());
    RationalFunction::new(num, den).expect("nonzero denominator")
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = rng.random_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

/// `strict` random instances with `|k| < |m|` must have both limits 0;
/// `boundary` instances with `|k| = |m|` must not.
pub fn lemma_checks(seed: u64, strict: usize, boundary: usize) -> Vec<Check> {
    let mut rng = rng_for(seed, 200);
    let mut bad = None;
    for _ in 0..strict {
        let two_m = loop {
            let v = nonzero(&mut rng, 12);
            if v.abs() >= 2 {
                break v;
            }
        };
        let two_k = loop {
            let v = rng.random_range(-two_m.abs() + 1..two_m.abs());
            if (v + two_m) % 2 == 0 {
                break v;
            }
        };
        let c = rat(nonzero(&mut rng, 9), rng.random_range(1..=9));
        let (a, b) = limits(&lemma_function(two_k, two_m, &c));
        if bad.is_none() && !(a.is_zero() && b.is_zero()) {
            bad = Some(json!({"k": fmt_rational(&rat(two_k, 2)), "m": fmt_rational(&rat(two_m, 2)), "c": fmt_rational(&c)}));
        }
    }
    let first = Check::verdict(
        "lemma strict instances",
        LEMMA_ANCHOR,
        bad.is_none(),
        bad.unwrap_or_else(|| json!({"instances": strict})),
    );
    let mut rng = rng_for(seed, 201);
    let mut bad = None;
    for _ in 0..boundary {
        let two_m = nonzero(&mut rng, 12);
        let two_k = if rng.random_bool(0.5) { two_m } else { -two_m };
        let c = rat(nonzero(&mut rng, 9), rng.random_range(1..=9));
        let (a, b) = limits(&lemma_function(two_k, two_m, &c));
        if bad.is_none() && a.is_zero() && b.is_zero() {
            bad = Some(json!({"k": fmt_rational(&rat(two_k, 2)), "m": fmt_rational(&rat(two_m, 2))}));
        }
    }
    let second = Check::verdict(
        "lemma boundary instances",
        LEMMA_ANCHOR,
        bad.is_none(),
        bad.unwrap_or_else(|| json!({"instances": boundary})),
    );
    vec![first, second]
}

const LOCALIZATION_ANCHOR: &str = "fixed-point localization of the equivariant index";

fn random_strict_fixed_point(rng: &mut ChaCha8Rng) -> FixedPointDatum {
    let q: Vec<i64> = (0..rng.random_range(1..=6)).map(|_| nonzero(rng, 5)).collect();
    let total: i64 = q.iter().map(|v| v.abs()).sum();
    let twist = (0..rng.random_range(1..=4))
        .map(|_| rat(rng.random_range(-total + 1..total), 2))
        .collect();
    FixedPointDatum::new("P", q.into_iter().map(int).collect(), twist)
}

/// The two-point rotation of `S^4` sums to 0, one point alone is not a
/// Laurent polynomial, and `count` random fixed points satisfying the strict
/// inequality have limits `(0, 0)`.
pub fn localization_checks(seed: u64, count: usize) -> Vec<Check> {
    let p1 = FixedPointDatum::new("P1", vec![int(1), int(1)], vec![]);
    let p2 = FixedPointDatum::new("P2", vec![int(1), int(-1)], vec![]);
    let mut out = Vec::new();
    out.push(collect("four-sphere rotation".into(), LOCALIZATION_ANCHOR, || {
        let res = equivariant_index(&[p1.clone(), p2])?;
        Ok(Check::verdict(
            "four-sphere rotation",
            LOCALIZATION_ANCHOR,
            res.sum.is_zero() && res.classification == Classification::Vanishes,
            json!({"sum": res.sum.to_string(), "verdict": res.classification.to_string()}),
        ))
    }));
    out.push(collect("single fixed point".into(), LOCALIZATION_ANCHOR, || {
        let res = equivariant_index(&[p1])?;
        Ok(Check::verdict(
            "single fixed point",
            LOCALIZATION_ANCHOR,
            res.classification == Classification::NotLaurent,
            json!({"verdict": res.classification.to_string()}),
        ))
    }));
    let mut rng = rng_for(seed, 300);
    out.push(collect("strict fixed points vanish at 0 and infinity".into(), LOCALIZATION_ANCHOR, || {
        for _ in 0..count {
            let fp = random_strict_fixed_point(&mut rng);
            let (a, b) = limits(&contribution(&fp)?);
            if !satisfies_inequality(&fp).all_strict() || !a.is_zero() || !b.is_zero() {
                let show = |v: &[Rational]| v.iter().map(fmt_rational).collect::<Vec<_>>();
                return Ok(Check::verdict(
                    "strict fixed points vanish at 0 and infinity",
                    LOCALIZATION_ANCHOR,
                    false,
                    json!({"q": show(&fp.tangent_exponents), "n": show(&fp.twist_exponents), "limits": [a.to_string(), b.to_string()]}),
                ));
            }
        }
        Ok(Check::verdict(
            "strict fixed points vanish at 0 and infinity",
            LOCALIZATION_ANCHOR,
            true,
            json!({"fixed_points": count}),
        ))
    }));
    out
}

const BOUND_ANCHOR: &str = "twist exponents against half the rotation weight sum";

/// For `r ∈ {3,5,7}`, `m ≤ 3` and `count` random integer points, every twist
/// exponent of a profile with `u + s < m` (exterior) or additionally
/// `u ≤ 2^{[r/2]-1}` (symmetric) is strictly below `(1/2) Σ |q_i|`.
pub fn exponent_bound_checks(seed: u64, count: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for (kind, label) in [(TwistKind::Exterior, "exterior"), (TwistKind::Symmetric, "symmetric")] {
        for r in [3u32, 5, 7] {
            let name = format!("twist bound r={r} {label}");
            let mut rng = rng_for(seed, 400 + u64::from(r) + if kind == TwistKind::Symmetric { 10 } else { 0 });
            out.push(collect(name.clone(), BOUND_ANCHOR, || {
                let cap = match kind {
                    TwistKind::Exterior => u32::MAX,
                    TwistKind::Symmetric => 1 << (r / 2 - 1),
                };
                let mut checked = 0usize;
                for m in 1..=3u32 {
                    let s = Structure::single(r, m)?;
                    let profiles = (0..m)
                        .flat_map(|u| (0..m - u).map(move |sp| (u, sp)))
                        .filter(|(u, _)| *u <= cap)
                        .map(|(u, sp)| PowerProfile::simple(&s, kind, u, 0, sp, 0))
                        .collect::<Result<Vec<_>, _>>()?;
                    let mut tried = 0;
                    while tried < count {
                        let (a, b) = s.theta_counts();
                        let mut draw = |k: usize| (0..k).map(|_| rng.random_range(-5i64..=5)).collect::<Vec<_>>();
                        let values = ExponentValues::new(draw(a), draw(b), draw(s.spin_rank()));
                        let q = generate_tangent_exponents(&s, &values)?;
                        if q.iter().any(Zero::is_zero) {
                            continue;
                        }
                        tried += 1;
                        let bound = q.iter().fold(Rational::zero(), |acc, x| acc + x.abs()) / int(2);
                        for prof in &profiles {
                            for n in generate_twist_exponents(&s, prof, &values)? {
                                checked += 1;
                                if n.abs() >= bound {
                                    return Ok(Check::verdict(name, BOUND_ANCHOR, false, json!({
                                        "structure": s.to_string(), "profile": format!("{prof:?}"),
                                        "t": values.t, "f": values.f,
                                        "n": fmt_rational(&n), "bound": fmt_rational(&bound),
                                    })));
                                }
                            }
                        }
                    }
                }
                Ok(Check::verdict(name, BOUND_ANCHOR, true, json!({"exponents": checked})))
            }));
        }
    }
    out
}

const SERIES_ANCHOR: &str = "Â genus factor x/(e^{x/2} - e^{-x/2})";

fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=n {
        let mut s = Rational::zero();
        let mut binom = Rational::one();
        for (k, bk) in b.iter().enumerate().take(m) {
            s += &binom * bk;
            binom = binom * int((m + 1 - k) as i64) / int(k as i64 + 1);
        }
        b.push(-s / int(m as i64 + 1));
    }
    b
}

/// Series coefficients through degree 8 against Bernoulli numbers, and the
/// degree-2 truncation for `r = 3, m = 1`.
pub fn series_checks() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(collect("ahat coefficients".into(), SERIES_ANCHOR, || {
        let s = ahat_factor_series(8)?;
        let b = bernoulli(8);
        let mut fact = Rational::one();
        for k in 0..=8usize {
            if k > 0 {
                fact *= int(k as i64);
            }
            let expected = if k % 2 == 1 {
                Rational::zero()
            } else {
                let p = int(2).pow(k as i32);
                (int(2) - &p) * &b[k] / (p * &fact)
            };
            let got = s.coefficient(&[k as u32]);
            if got != expected {
                return Ok(Check::verdict("ahat coefficients", SERIES_ANCHOR, false, json!({
                    "degree": k, "got": fmt_rational(&got), "expected": fmt_rational(&expected),
                })));
            }
        }
        Ok(Check::verdict("ahat coefficients", SERIES_ANCHOR, true, json!({"series": s.to_string()})))
    }));
    out.push(collect("genus truncation r=3 m=1".into(), SERIES_ANCHOR, || {
        let g = formal_genus_truncation(&Structure::single(3, 1)?, None, 2)?;
        let ok = g.terms().count() == 3
            && g.coefficient(&[0, 0]) == int(1)
            && g.coefficient(&[2, 0]) == rat(-1, 12)
            && g.coefficient(&[0, 2]) == rat(-1, 48);
        Ok(Check::verdict("genus truncation r=3 m=1", SERIES_ANCHOR, ok, json!({"series": g.to_string()})))
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn volume_table_passes() {
        let r = Report::from_checks(volume_table_checks());
        assert_eq!(r.summary.pass, 4);
        assert!(r.passed());
    }

    #[test]
    fn rank_three_witness_is_minus_one() {
        let checks = structure_action_checks_for(3, Some(1), None);
        assert_eq!(checks.len(), 1);
        assert_eq!(checks[0].status, Status::Pass);
        assert_eq!(checks[0].witness["value"], "-1");
    }

    #[test]
    fn lemma_suite_is_deterministic() {
        let opts = VerifyOptions {
            samples: 40,
            ..VerifyOptions::default()
        };
        let a = run_suite(Suite::Lemma, &opts);
        let b = run_suite(Suite::Lemma, &opts);
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.passed(), "{}", a.render_text());
    }

    #[test]
    fn structure_parsing() {
        assert_eq!(structure_from(4, Some(1), Some(2)).unwrap(), Structure::pair(4, 1, 2).unwrap());
        assert!(structure_from(3, Some(1), Some(2)).is_err());
    }
}
