//! Congruence conditions on tensor powers under which `Δ_N ⊗ F` is a
//! representation of the structure group, in closed form and by direct
//! weight evaluation.

use crate::error::{Error, Result};
use crate::weights::{descends, Chirality, Factor, Family, RepDescriptor, Space, Structure};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum TwistKind {
    Exterior,
    Symmetric,
}

/// Powers of the twisting factors: exterior and symmetric powers of the
/// standard spaces, `s` copies of `Δ_r` (or `Δ_r^+`) and `t` copies of
/// `Δ_r^-`.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Default)]
pub struct PowerProfile {
    pub exterior: Vec<(Space, u32)>,
    pub symmetric: Vec<(Space, u32)>,
    pub s: u32,
    pub t: u32,
}

impl PowerProfile {
    /// The one-kind profile `Λ^{u_1} ⊗ Λ^{u_2} ⊗ (Δ^+)^s ⊗ (Δ^-)^t` (or with
    /// symmetric powers) on the structure's standard spaces. `u_2` and `t`
    /// must be 0 where the structure has no second space or no chirality.
    pub fn simple(structure: &Structure, kind: TwistKind, u1: u32, u2: u32, s: u32, t: u32) -> Result<Self> {
        let spaces = structure.spaces();
        if spaces.len() == 1 && u2 != 0 {
            return Err(Error::InvalidFactor {
                factor: format!("second power {u2}"),
                reason: format!("r = {} has a single standard space", structure.r()),
            });
        }
        if structure.r() % 2 == 1 && t != 0 {
            return Err(Error::InvalidFactor {
                factor: format!("Δ- power {t}"),
                reason: "odd r has no chirality halves".into(),
            });
        }
        let mut powers = vec![(spaces[0], u1)];
        if spaces.len() == 2 {
            powers.push((spaces[1], u2));
        }
        let (exterior, symmetric) = match kind {
            TwistKind::Exterior => (powers, Vec::new()),
            TwistKind::Symmetric => (Vec::new(), powers),
        };
        Ok(Self { exterior, symmetric, s, t })
    }

    /// `(u_1, u_2)` summed per space when the profile uses a single kind with
    /// at most one power per space.
    fn simple_powers(&self, structure: &Structure) -> Option<(u32, u32)> {
        if !self.exterior.is_empty() && !self.symmetric.is_empty() {
            return None;
        }
        let list = if self.exterior.is_empty() { &self.symmetric } else { &self.exterior };
        let spaces = structure.spaces();
        let mut u = [0u32; 2];
        let mut seen = [false; 2];
        for (space, p) in list {
            let i = spaces.iter().position(|s| s == space)?;
            if seen[i] {
                return None;
            }
            seen[i] = true;
            u[i] = *p;
        }
        Some((u[0], u[1]))
    }

    /// The twisting factors, in order: exterior, symmetric, spinor powers.
    pub fn factors(&self, structure: &Structure) -> Vec<Factor> {
        let mut out: Vec<Factor> = self
            .exterior
            .iter()
            .map(|(sp, u)| Factor::Exterior(*sp, *u))
            .chain(self.symmetric.iter().map(|(sp, v)| Factor::Symmetric(*sp, *v)))
            .collect();
        let plus = if structure.r() % 2 == 1 { Chirality::Full } else { Chirality::Plus };
        if self.s > 0 {
            out.push(Factor::Spinor(plus, self.s));
        }
        if self.t > 0 {
            out.push(Factor::Spinor(Chirality::Minus, self.t));
        }
        out
    }
}

fn even(x: u64) -> bool {
    x % 2 == 0
}

fn div4(x: u64) -> bool {
    x % 4 == 0
}

/// The congruence conditions for one-kind profiles, by case of `r mod 8`
/// and the parities of the multiplicities.
pub fn closed_form_condition(structure: &Structure, prof: &PowerProfile) -> Result<bool> {
    let (u1, u2) = prof.simple_powers(structure).ok_or_else(|| {
        Error::UncoveredCase("mixed exterior/symmetric products have no closed form".into())
    })?;
    let (u1, u2, s, t) = (u64::from(u1), u64::from(u2), u64::from(prof.s), u64::from(prof.t));
    let r = structure.r();
    let (m1, m2) = structure.m_pair();
    let (m1, m2) = (u64::from(m1), u64::from(m2));
    Ok(match structure.family() {
        Family::Orthogonal => !even(m1) || even(u1 + s),
        Family::Quaternionic if r == 3 => even(m1 + u1 + s),
        Family::Quaternionic => even(u1 + s),
        Family::Unitary if r == 2 => {
            return Err(Error::UncoveredCase("r = 2 has no closed-form twist table".into()))
        }
        Family::Unitary if r == 6 => {
            even(u1 + u2 + s + t)
                && div4(2 * m1 + u1 + 3 * u2 + s + 3 * t)
                && div4(2 * m1 + 3 * u1 + u2 + 3 * s + t)
        }
        Family::Unitary if r % 8 == 2 => {
            even(u1 + u2 + s + t) && div4(u1 + 3 * u2 + 3 * s + t) && div4(3 * u1 + u2 + s + 3 * t)
        }
        Family::Unitary => {
            even(u1 + u2 + s + t) && div4(u1 + 3 * u2 + s + 3 * t) && div4(3 * u1 + u2 + 3 * s + t)
        }
        Family::QuaternionicPair if r == 4 => even(m1 + u1 + t) && even(m2 + u2 + s),
        Family::QuaternionicPair => even(u2 + s) && even(u1 + t),
        Family::OrthogonalPair => match (even(m1), even(m2)) {
            (true, true) => even(u2 + t) && even(u1 + s),
            (false, true) => even(u2 + t) == (r != 8),
            (true, false) => even(u1 + s) == (r != 8),
            (false, false) => true,
        },
    })
}

/// Whether `Δ_N ⊗ F` descends, decided weight by weight.
pub fn oracle_condition(structure: &Structure, prof: &PowerProfile) -> Result<bool> {
    let rep = RepDescriptor::twisted_spinor(*structure, prof.factors(structure))?;
    Ok(descends(&rep)?.holds)
}

#[derive(Clone, Debug)]
pub struct Disagreement {
    pub structure: Structure,
    pub profile: PowerProfile,
    pub closed_form: bool,
    pub oracle: bool,
}

#[derive(Clone, Debug, Default)]
pub struct AgreementReport {
    pub agreed: usize,
    /// Points skipped because a factor is zero, a case is uncovered, or an
    /// enumeration guard was hit.
    pub skipped: usize,
    pub disagreements: Vec<Disagreement>,
}

impl AgreementReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn checked(&self) -> usize {
        self.agreed + self.disagreements.len()
    }
}

/// Evaluates both conditions on every point.
pub fn cross_validate<'a>(points: impl IntoIterator<Item = &'a (Structure, PowerProfile)>) -> AgreementReport {
    let mut report = AgreementReport::default();
    for (structure, prof) in points {
        let closed = closed_form_condition(structure, prof);
        let oracle = oracle_condition(structure, prof);
        match (closed, oracle) {
            (Ok(c), Ok(o)) if c == o => report.agreed += 1,
            (Ok(c), Ok(o)) => report.disagreements.push(Disagreement {
                structure: *structure,
                profile: prof.clone(),
                closed_form: c,
                oracle: o,
            }),
            _ => report.skipped += 1,
        }
    }
    report
}

/// All structures of rank `r` with multiplicities in `0..=max_mult`.
pub fn structures_of_rank(r: u32, max_mult: u32) -> Vec<Structure> {
    let mut out = Vec::new();
    if Family::of_rank(r).is_pair() {
        for a in 0..=max_mult {
            for b in 0..=max_mult {
                if let Ok(s) = Structure::pair(r, a, b) {
                    out.push(s);
                }
            }
        }
    } else {
        for m in 1..=max_mult {
            if let Ok(s) = Structure::single(r, m) {
                out.push(s);
            }
        }
    }
    out
}

/// All one-kind profiles with every power in `0..=max_power` that make
/// sense for the structure (no power of a missing space or chirality, no
/// exterior power beyond the dimension).
pub fn profiles_for(structure: &Structure, kind: TwistKind, max_power: u32) -> Vec<PowerProfile> {
    let two_spaces = structure.spaces().len() == 2;
    let even_r = structure.r() % 2 == 0;
    let dims: Vec<usize> = structure
        .spaces()
        .iter()
        .map(|sp| structure.standard_weights(*sp).map_or(0, |w| w.len()))
        .collect();
    let mut out = Vec::new();
    for u1 in 0..=max_power {
        for u2 in 0..=if two_spaces { max_power } else { 0 } {
            for s in 0..=max_power {
                for t in 0..=if even_r { max_power } else { 0 } {
                    let fits = |u: u32, d: usize| match kind {
                        TwistKind::Exterior => u as usize <= d,
                        TwistKind::Symmetric => u == 0 || d > 0,
                    };
                    if !fits(u1, dims[0]) || (two_spaces && !fits(u2, dims[1])) {
                        continue;
                    }
                    if let Ok(p) = PowerProfile::simple(structure, kind, u1, u2, s, t) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple(s: &Structure, u1: u32, u2: u32, sp: u32, t: u32) -> PowerProfile {
        PowerProfile::simple(s, TwistKind::Exterior, u1, u2, sp, t).unwrap()
    }

    #[test]
    fn rank_three_examples() {
        let s1 = Structure::single(3, 1).unwrap();
        let s2 = Structure::single(3, 2).unwrap();
        assert!(!closed_form_condition(&s1, &simple(&s1, 1, 0, 1, 0)).unwrap());
        assert!(closed_form_condition(&s2, &simple(&s2, 1, 0, 1, 0)).unwrap());
        assert!(!oracle_condition(&s1, &simple(&s1, 1, 0, 1, 0)).unwrap());
        assert!(oracle_condition(&s2, &simple(&s2, 1, 0, 1, 0)).unwrap());
    }

    #[test]
    fn odd_orthogonal_multiplicity_is_unconstrained() {
        let s = Structure::single(9, 3).unwrap();
        for u in 0..3 {
            for sp in 0..3 {
                assert!(closed_form_condition(&s, &simple(&s, u, 0, sp, 0)).unwrap());
            }
        }
    }

    #[test]
    fn rank_four_instances() {
        let s = Structure::pair(4, 1, 1).unwrap();
        assert!(!oracle_condition(&s, &simple(&s, 1, 0, 0, 1)).unwrap());
        assert!(!oracle_condition(&s, &simple(&s, 1, 0, 0, 0)).unwrap());
        assert!(oracle_condition(&s, &simple(&s, 1, 1, 0, 0)).unwrap());
        assert!(closed_form_condition(&s, &simple(&s, 1, 1, 0, 0)).unwrap());
    }

    #[test]
    fn trivial_profile_rank_five() {
        let s = Structure::single(5, 2).unwrap();
        assert!(oracle_condition(&s, &PowerProfile::default()).unwrap());
    }

    #[test]
    fn rank_two_and_mixed_are_uncovered() {
        let s = Structure::single(2, 1).unwrap();
        assert!(matches!(closed_form_condition(&s, &PowerProfile::default()), Err(Error::UncoveredCase(_))));
        let s3 = Structure::single(3, 2).unwrap();
        let mixed = PowerProfile {
            exterior: vec![(Space::E, 1)],
            symmetric: vec![(Space::E, 1)],
            s: 0,
            t: 0,
        };
        assert!(matches!(closed_form_condition(&s3, &mixed), Err(Error::UncoveredCase(_))));
        assert!(oracle_condition(&s3, &mixed).unwrap());
    }

    #[test]
    fn small_sweeps_agree() {
        let mut points = Vec::new();
        for m in 1..=4 {
            let s = Structure::single(3, m).unwrap();
            for u in 0..=3 {
                for sp in 0..=3 {
                    points.push((s, simple(&s, u, 0, sp, 0)));
                }
            }
        }
        let rep = cross_validate(&points);
        assert_eq!(rep.checked() + rep.skipped, 64);
        assert_eq!(rep.skipped, 4);
        assert!(rep.all_agree(), "{:?}", rep.disagreements);
        assert!(cross_validate(&[]).all_agree());
    }
}
