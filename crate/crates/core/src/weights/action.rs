use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::scalar::Rational;

use super::delta::{delta_weights, DeltaWeights};
use super::descriptor::{validate_factor, Chirality, Factor, RepDescriptor, Structure};
use super::gamma::{structure_group_elements, GammaElement};
use super::tangent::tangent_weight_assignment;
use super::weight::{GroupElementParams, RootOfUnity, Weight};

/// Upper bound on the number of weights enumerated for a single factor.
pub const ENUMERATION_GUARD: u128 = 1 << 22;

/// Largest `N/2` for which `Δ_N` is enumerated weight by weight.
pub const SPINOR_MODULE_ENUMERATION_LIMIT: usize = 22;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NonScalarWitness {
    pub first: Weight,
    pub first_value: RootOfUnity,
    pub second: Weight,
    pub second_value: RootOfUnity,
}

/// Result of letting a torus element act on a representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ActionOutcome {
    Scalar(RootOfUnity),
    NonScalar(NonScalarWitness),
}

impl ActionOutcome {
    pub fn scalar(&self) -> Option<&RootOfUnity> {
        match self {
            ActionOutcome::Scalar(v) => Some(v),
            ActionOutcome::NonScalar(_) => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.scalar().is_some_and(RootOfUnity::is_one)
    }
}

impl fmt::Display for ActionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionOutcome::Scalar(v) => write!(f, "scalar {v}"),
            ActionOutcome::NonScalar(w) => write!(
                f,
                "non-scalar: {} ↦ {}, {} ↦ {}",
                w.first, w.first_value, w.second, w.second_value
            ),
        }
    }
}

/// How index tuples over a base list are formed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum TupleKind {
    /// Strictly increasing (exterior powers).
    Strict,
    /// Weakly increasing (symmetric powers).
    Weak,
    /// All ordered tuples (tensor powers).
    Any,
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

fn tuple_count(d: usize, k: u32, kind: TupleKind) -> u128 {
    let (d, k) = (d as u128, u128::from(k));
    match kind {
        TupleKind::Strict => binomial(d, k),
        TupleKind::Weak => {
            if d == 0 {
                u128::from(k == 0)
            } else {
                binomial(d + k - 1, k)
            }
        }
        TupleKind::Any => {
            let mut acc: u128 = 1;
            for _ in 0..k {
                acc = acc.saturating_mul(d);
            }
            acc
        }
    }
}

/// Calls `f` on every index tuple until it returns `false`.
fn for_each_tuple(d: usize, k: usize, kind: TupleKind, mut f: impl FnMut(&[usize]) -> bool) {
    if k == 0 {
        f(&[]);
        return;
    }
    if d == 0 {
        return;
    }
    let start = |pos: usize, prev: Option<usize>| -> usize {
        match (kind, prev) {
            (_, None) | (TupleKind::Any, _) => 0,
            (TupleKind::Strict, Some(p)) => p + 1,
            (TupleKind::Weak, Some(p)) => p,
        }
        .max(if kind == TupleKind::Strict { pos } else { 0 })
    };
    let mut idx = Vec::with_capacity(k);
    for pos in 0..k {
        let s = start(pos, idx.last().copied());
        if s >= d {
            return;
        }
        idx.push(s);
    }
    loop {
        if !f(&idx) {
            return;
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            let limit = if kind == TupleKind::Strict { d - (k - pos) } else { d - 1 };
            if idx[pos] < limit {
                idx[pos] += 1;
                let mut ok = true;
                for q in pos + 1..k {
                    let s = start(q, Some(idx[q - 1]));
                    if s >= d {
                        ok = false;
                        break;
                    }
                    idx[q] = s;
                }
                if ok {
                    break;
                }
            }
        }
    }
}

fn to_i64(q: &num_bigint::BigInt) -> Result<i64> {
    q.to_i64().ok_or(Error::Overflow("weight evaluation"))
}

/// Values `w_i(p)/π` as integers over a common denominator `L`.
struct IntValues {
    numers: Vec<i64>,
    denom: i64,
}

impl IntValues {
    fn new(weights: &[Weight], p: &GroupElementParams) -> Result<Self> {
        let vals: Vec<Rational> = weights
            .iter()
            .map(|w| w.pair(p.angles()))
            .collect::<Result<_>>()?;
        let mut denom: i64 = 1;
        for v in &vals {
            denom = denom.lcm(&to_i64(v.denom())?);
        }
        let numers = vals
            .iter()
            .map(|v| Ok(to_i64(v.numer())? * (denom / to_i64(v.denom())?)))
            .collect::<Result<_>>()?;
        Ok(Self { numers, denom })
    }

    /// The root of unity `e^{iπ · value / denom}`.
    fn root(&self, value: i64) -> RootOfUnity {
        RootOfUnity::from_turns_of_pi(Rational::new(value.into(), self.denom.into()))
    }
}

fn base_weights(factor: &Factor, structure: &Structure) -> Result<(Vec<Weight>, u32, TupleKind)> {
    Ok(match factor {
        Factor::Exterior(space, u) => (structure.standard_weights(*space)?, *u, TupleKind::Strict),
        Factor::Symmetric(space, v) => (structure.standard_weights(*space)?, *v, TupleKind::Weak),
        Factor::Spinor(ch, s) => {
            let list = match (delta_weights(structure.r()), ch) {
                (d, Chirality::Full) => d.all(),
                (DeltaWeights::Even { plus, .. }, Chirality::Plus) => plus,
                (DeltaWeights::Even { minus, .. }, Chirality::Minus) => minus,
                (DeltaWeights::Odd(_), _) => {
                    return Err(Error::InvalidFactor {
                        factor: factor.to_string(),
                        reason: "chirality halves need even r".into(),
                    })
                }
            };
            (list, *s, TupleKind::Any)
        }
        Factor::Trivial => (vec![Weight::zero()], 1, TupleKind::Any),
        Factor::SpinorModule => unreachable!("handled separately"),
    })
}

fn sum_of(base: &[Weight], idx: &[usize]) -> Weight {
    idx.iter().fold(Weight::zero(), |acc, &i| acc + base[i].clone())
}

/// All weights of a factor, with multiplicity.
///
/// `Δ_N` is materialized only up to `2^16` weights; other factors up to
/// [`ENUMERATION_GUARD`].
pub fn factor_weights(factor: &Factor, structure: &Structure) -> Result<Vec<Weight>> {
    validate_factor(structure, factor)?;
    if *factor == Factor::SpinorModule {
        let eta = tangent_weight_assignment(structure)?;
        let count = 1u128 << eta.len().min(127);
        if eta.len() > 16 {
            return Err(Error::GuardExceeded { count, limit: 1 << 16 });
        }
        return Ok(SpinorModuleWeights::new(eta).collect());
    }
    let (base, k, kind) = base_weights(factor, structure)?;
    let count = tuple_count(base.len(), k, kind);
    if count > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            count,
            limit: ENUMERATION_GUARD,
        });
    }
    let mut out = Vec::new();
    for_each_tuple(base.len(), k as usize, kind, |idx| {
        out.push(sum_of(&base, idx));
        true
    });
    Ok(out)
}

/// Lazily enumerates the weights `(1/2) Σ ±η_i` of `Δ_N` in Gray-code order,
/// starting from all signs positive.
pub struct SpinorModuleWeights {
    eta: Vec<Weight>,
    signs: Vec<bool>,
    step: u128,
    total: u128,
}

impl SpinorModuleWeights {
    pub fn new(eta: Vec<Weight>) -> Self {
        let n = eta.len();
        Self {
            signs: vec![true; n],
            eta,
            step: 0,
            total: if n >= 128 { u128::MAX } else { 1u128 << n },
        }
    }

    fn current(&self) -> Weight {
        spinor_weight(&self.eta, &self.signs)
    }
}

fn spinor_weight(eta: &[Weight], signs: &[bool]) -> Weight {
    let half = Rational::new(1.into(), 2.into());
    let mut w = Weight::zero();
    for (e, s) in eta.iter().zip(signs) {
        let e = e.scale(&half);
        w = if *s { w + e } else { w - e };
    }
    w
}

impl Iterator for SpinorModuleWeights {
    type Item = Weight;
    fn next(&mut self) -> Option<Weight> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            let bit = self.step.trailing_zeros() as usize;
            self.signs[bit] = !self.signs[bit];
        }
        self.step += 1;
        Some(self.current())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpinorModuleMode {
    /// Enumerate when `N/2` is at most [`SPINOR_MODULE_ENUMERATION_LIMIT`].
    Auto,
    Enumerate,
    /// Scalar iff every `η_i(p)` lies in `2πZ`, since two weights that differ
    /// only in the sign of `η_i` differ by `η_i`.
    Structural,
}

/// Action of `p` on `Δ_N`.
pub fn spinor_module_action(
    p: &GroupElementParams,
    structure: &Structure,
    mode: SpinorModuleMode,
) -> Result<ActionOutcome> {
    let eta = tangent_weight_assignment(structure)?;
    let vals = IntValues::new(&eta, p)?;
    let n = eta.len();
    let modulus = 4 * vals.denom;
    let total: i64 = vals.numers.iter().sum();
    let first_value = RootOfUnity::from_turns_of_pi(Rational::new(total.into(), (2 * vals.denom).into()));
    let enumerate = match mode {
        SpinorModuleMode::Enumerate => true,
        SpinorModuleMode::Structural => false,
        SpinorModuleMode::Auto => n <= SPINOR_MODULE_ENUMERATION_LIMIT,
    };
    let witness = |signs: &[bool], value: i64| {
        let first = spinor_weight(&eta, &vec![true; n]);
        let second = spinor_weight(&eta, signs);
        let second_value = RootOfUnity::from_turns_of_pi(Rational::new(value.into(), (2 * vals.denom).into()));
        ActionOutcome::NonScalar(NonScalarWitness {
            first,
            first_value: first_value.clone(),
            second,
            second_value,
        })
    };
    if enumerate {
        if n >= 63 {
            return Err(Error::GuardExceeded {
                count: u128::MAX,
                limit: 1 << SPINOR_MODULE_ENUMERATION_LIMIT,
            });
        }
        let start = total.rem_euclid(modulus);
        let mut signs = vec![true; n];
        let mut v = total;
        for step in 1u64..(1u64 << n) {
            let bit = step.trailing_zeros() as usize;
            let c = vals.numers[bit];
            v += if signs[bit] { -2 * c } else { 2 * c };
            signs[bit] = !signs[bit];
            if v.rem_euclid(modulus) != start {
                return Ok(witness(&signs, v));
            }
        }
        return Ok(ActionOutcome::Scalar(first_value));
    }
    for (i, c) in vals.numers.iter().enumerate() {
        if c.rem_euclid(2 * vals.denom) != 0 {
            let mut signs = vec![true; n];
            signs[i] = false;
            return Ok(witness(&signs, total - 2 * c));
        }
    }
    Ok(ActionOutcome::Scalar(first_value))
}

type ModuleCache = Mutex<HashMap<(Structure, GroupElementParams), ActionOutcome>>;

fn cached_spinor_module_action(p: &GroupElementParams, structure: &Structure) -> Result<ActionOutcome> {
    static CACHE: OnceLock<ModuleCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (*structure, p.clone());
    if let Some(o) = cache.lock().expect("cache poisoned").get(&key) {
        return Ok(o.clone());
    }
    let o = spinor_module_action(p, structure, SpinorModuleMode::Auto)?;
    cache.lock().expect("cache poisoned").insert(key, o.clone());
    Ok(o)
}

/// Action of `p` on a single tensor factor.
pub fn element_action_on_factor(
    p: &GroupElementParams,
    factor: &Factor,
    structure: &Structure,
) -> Result<ActionOutcome> {
    validate_factor(structure, factor)?;
    if *factor == Factor::SpinorModule {
        return cached_spinor_module_action(p, structure);
    }
    let (base, k, kind) = base_weights(factor, structure)?;
    let count = tuple_count(base.len(), k, kind);
    if count == 0 {
        return Err(Error::PowerExceedsDimension {
            power: k,
            dim: base.len(),
        });
    }
    if count > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            count,
            limit: ENUMERATION_GUARD,
        });
    }
    let vals = IntValues::new(&base, p)?;
    let modulus = 2 * vals.denom;
    let mut first: Option<(Vec<usize>, i64)> = None;
    let mut differing: Option<(Vec<usize>, i64)> = None;
    for_each_tuple(base.len(), k as usize, kind, |idx| {
        let v = idx.iter().map(|&i| vals.numers[i]).sum::<i64>().rem_euclid(modulus);
        match &first {
            None => {
                first = Some((idx.to_vec(), v));
                true
            }
            Some((_, f)) if *f == v => true,
            Some(_) => {
                differing = Some((idx.to_vec(), v));
                false
            }
        }
    });
    let (fi, fv) = first.expect("at least one tuple");
    Ok(match differing {
        None => ActionOutcome::Scalar(vals.root(fv)),
        Some((si, sv)) => ActionOutcome::NonScalar(NonScalarWitness {
            first: sum_of(&base, &fi),
            first_value: vals.root(fv),
            second: sum_of(&base, &si),
            second_value: vals.root(sv),
        }),
    })
}

/// Action of `p` on the tensor product of the descriptor's factors.
///
/// The product acts as a scalar iff each factor does; a non-scalar factor's
/// witness is shifted by a fixed weight of every other factor.
pub fn element_action_on_rep(p: &GroupElementParams, rep: &RepDescriptor) -> Result<ActionOutcome> {
    let mut outcomes = Vec::with_capacity(rep.factors.len());
    for f in &rep.factors {
        outcomes.push(element_action_on_factor(p, f, &rep.structure)?);
    }
    let mut value = RootOfUnity::one();
    let mut bad = None;
    for (i, o) in outcomes.iter().enumerate() {
        match o {
            ActionOutcome::Scalar(v) => value = value.mul(v),
            ActionOutcome::NonScalar(_) => {
                bad = Some(i);
                break;
            }
        }
    }
    let Some(bad) = bad else {
        return Ok(ActionOutcome::Scalar(value));
    };
    let ActionOutcome::NonScalar(w) = &outcomes[bad] else {
        unreachable!()
    };
    let mut shift = Weight::zero();
    let mut shift_value = RootOfUnity::one();
    for (i, f) in rep.factors.iter().enumerate() {
        if i == bad {
            continue;
        }
        let (fw, fv) = match &outcomes[i] {
            ActionOutcome::Scalar(v) => (representative_weight(f, &rep.structure)?, v.clone()),
            ActionOutcome::NonScalar(o) => (o.first.clone(), o.first_value.clone()),
        };
        shift = shift + fw;
        shift_value = shift_value.mul(&fv);
    }
    Ok(ActionOutcome::NonScalar(NonScalarWitness {
        first: w.first.clone() + shift.clone(),
        first_value: w.first_value.mul(&shift_value),
        second: w.second.clone() + shift,
        second_value: w.second_value.mul(&shift_value),
    }))
}

fn representative_weight(f: &Factor, structure: &Structure) -> Result<Weight> {
    if *f == Factor::SpinorModule {
        let eta = tangent_weight_assignment(structure)?;
        return Ok(spinor_weight(&eta, &vec![true; eta.len()]));
    }
    let (base, k, kind) = base_weights(f, structure)?;
    let mut out = Weight::zero();
    for_each_tuple(base.len(), k as usize, kind, |idx| {
        out = sum_of(&base, idx);
        false
    });
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct DescentVerdict {
    pub holds: bool,
    /// The first element of `Γ` that fails to act as 1, with its action.
    pub witness: Option<(GammaElement, ActionOutcome)>,
}

/// Whether every element of `Γ` acts as the identity on the representation.
pub fn descends(rep: &RepDescriptor) -> Result<DescentVerdict> {
    for g in structure_group_elements(&rep.structure)? {
        let p = g.params(&rep.structure);
        let outcome = element_action_on_rep(&p, rep)?;
        if !outcome.is_trivial() {
            return Ok(DescentVerdict {
                holds: false,
                witness: Some((g, outcome)),
            });
        }
    }
    Ok(DescentVerdict {
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::weights::{structure_group_generators, Coord, Space};

    fn collect(d: usize, k: usize, kind: TupleKind) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for_each_tuple(d, k, kind, |i| {
            out.push(i.to_vec());
            true
        });
        out
    }

    #[test]
    fn tuple_enumeration() {
        assert_eq!(collect(3, 2, TupleKind::Strict), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(collect(2, 2, TupleKind::Weak), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(collect(2, 2, TupleKind::Any).len(), 4);
        assert_eq!(collect(2, 3, TupleKind::Strict).len(), 0);
        assert_eq!(collect(0, 0, TupleKind::Strict), vec![Vec::<usize>::new()]);
        for d in 0..6 {
            for k in 0..5 {
                for kind in [TupleKind::Strict, TupleKind::Weak, TupleKind::Any] {
                    assert_eq!(collect(d, k, kind).len() as u128, tuple_count(d, k as u32, kind), "{d} {k} {kind:?}");
                }
            }
        }
    }

    #[test]
    fn factor_weight_examples() {
        let sp1 = Structure::single(3, 1).unwrap();
        let th = Weight::coord(Coord::Theta(1));
        assert_eq!(factor_weights(&Factor::Exterior(Space::E, 2), &sp1).unwrap(), vec![Weight::zero()]);
        let mut s2 = factor_weights(&Factor::Symmetric(Space::E, 2), &sp1).unwrap();
        s2.sort();
        let mut expected = vec![th.scale(&int(2)), Weight::zero(), th.scale(&int(-2))];
        expected.sort();
        assert_eq!(s2, expected);
        let mut d2 = factor_weights(&Factor::Spinor(Chirality::Full, 2), &sp1).unwrap();
        d2.sort();
        let phi = Weight::coord(Coord::Phi(1));
        let mut e = vec![phi.clone(), Weight::zero(), Weight::zero(), -phi];
        e.sort();
        assert_eq!(d2, e);
    }

    #[test]
    fn rank_three_on_spinor_module() {
        for m in 1..=3u32 {
            let s = Structure::single(3, m).unwrap();
            let p = &structure_group_generators(&s).unwrap()[0];
            let o = spinor_module_action(p, &s, SpinorModuleMode::Enumerate).unwrap();
            let sign = if m % 2 == 0 { 1 } else { -1 };
            assert_eq!(o.scalar().unwrap().as_sign(), Some(sign));
        }
    }

    #[test]
    fn trivial_factor_is_one() {
        let s = Structure::single(5, 2).unwrap();
        let p = &structure_group_generators(&s).unwrap()[0];
        assert!(element_action_on_factor(p, &Factor::Trivial, &s).unwrap().is_trivial());
    }

    #[test]
    fn non_scalar_witness() {
        let s = Structure::single(3, 1).unwrap();
        let p = GroupElementParams::new().with(Coord::Theta(1), int(1)).with(Coord::Phi(1), int(0));
        let o = element_action_on_factor(&p, &Factor::Exterior(Space::E, 1), &s).unwrap();
        assert!(o.scalar().is_some());
        let p = GroupElementParams::new().with(Coord::Theta(1), crate::scalar::rat(1, 2)).with(Coord::Phi(1), int(0));
        let o = element_action_on_factor(&p, &Factor::Exterior(Space::E, 1), &s).unwrap();
        let ActionOutcome::NonScalar(w) = o else { panic!() };
        assert_ne!(w.first_value, w.second_value);
    }

    #[test]
    fn descent_examples() {
        let s = Structure::single(3, 1).unwrap();
        let ok = RepDescriptor::twisted_spinor(s, vec![Factor::Exterior(Space::E, 1)]).unwrap();
        assert!(descends(&ok).unwrap().holds);
        let bare = RepDescriptor::twisted_spinor(s, vec![]).unwrap();
        let v = descends(&bare).unwrap();
        assert!(!v.holds);
        assert!(v.witness.is_some());
        let r6 = RepDescriptor::twisted_spinor(Structure::single(6, 2).unwrap(), vec![]).unwrap();
        assert!(descends(&r6).unwrap().holds);
    }

    #[test]
    fn lazy_iterator_counts() {
        let s = Structure::single(3, 2).unwrap();
        let eta = tangent_weight_assignment(&s).unwrap();
        let all: Vec<Weight> = SpinorModuleWeights::new(eta).collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0], Weight::coord(Coord::Theta(1)) + Weight::coord(Coord::Theta(2)));
        assert!(all.contains(&Weight::zero()));
    }
}
