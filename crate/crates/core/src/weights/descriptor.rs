use std::fmt;

use crate::error::{Error, Result};

use super::weight::{Coord, Weight};

/// The classical factor(s) of the structure group, determined by `r mod 8`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    /// `r ≡ 1, 7`: `SO(m)`, `E = C^m`.
    Orthogonal,
    /// `r ≡ 3, 5`: `Sp(m)`, `E = C^{2m}`.
    Quaternionic,
    /// `r ≡ 2, 6`: `U(m)`, `E = C^m` and its conjugate.
    Unitary,
    /// `r ≡ 4`: `Sp(m_1) × Sp(m_2)`.
    QuaternionicPair,
    /// `r ≡ 0`: `SO(m_1) × SO(m_2)`.
    OrthogonalPair,
}

impl Family {
    pub fn of_rank(r: u32) -> Self {
        match r % 8 {
            1 | 7 => Family::Orthogonal,
            3 | 5 => Family::Quaternionic,
            2 | 6 => Family::Unitary,
            4 => Family::QuaternionicPair,
            _ => Family::OrthogonalPair,
        }
    }

    pub fn is_pair(self) -> bool {
        matches!(self, Family::QuaternionicPair | Family::OrthogonalPair)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Multiplicities {
    Single(u32),
    Pair(u32, u32),
}

/// The rank `r` and multiplicities of an even Clifford structure.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Structure {
    r: u32,
    mult: Multiplicities,
}

impl Structure {
    pub fn new(r: u32, mult: Multiplicities) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidStructure(format!("rank must be at least 2, got {r}")));
        }
        let family = Family::of_rank(r);
        match (family.is_pair(), mult) {
            (false, Multiplicities::Single(m)) if m >= 1 => {}
            (true, Multiplicities::Pair(a, b)) if a + b >= 1 => {}
            (false, _) => {
                return Err(Error::InvalidStructure(format!(
                    "r = {r} needs a single positive multiplicity"
                )))
            }
            (true, _) => {
                return Err(Error::InvalidStructure(format!(
                    "r = {r} needs two multiplicities, not both zero"
                )))
            }
        }
        Ok(Self { r, mult })
    }

    pub fn single(r: u32, m: u32) -> Result<Self> {
        Self::new(r, Multiplicities::Single(m))
    }

    pub fn pair(r: u32, m1: u32, m2: u32) -> Result<Self> {
        Self::new(r, Multiplicities::Pair(m1, m2))
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn family(&self) -> Family {
        Family::of_rank(self.r)
    }

    pub fn multiplicities(&self) -> Multiplicities {
        self.mult
    }

    /// `(m, 0)` for a single multiplicity, `(m_1, m_2)` otherwise.
    pub fn m_pair(&self) -> (u32, u32) {
        match self.mult {
            Multiplicities::Single(m) => (m, 0),
            Multiplicities::Pair(a, b) => (a, b),
        }
    }

    /// `[r/2]`, the rank of the maximal torus of `Spin(r)`.
    pub fn spin_rank(&self) -> usize {
        (self.r / 2) as usize
    }

    /// Number of `θ_j` and of `θ'_j` coordinates.
    pub fn theta_counts(&self) -> (usize, usize) {
        let (a, b) = self.m_pair();
        let (a, b) = (a as usize, b as usize);
        match self.family() {
            Family::Orthogonal => (a / 2, 0),
            Family::Quaternionic | Family::Unitary => (a, 0),
            Family::QuaternionicPair => (a, b),
            Family::OrthogonalPair => (a / 2, b / 2),
        }
    }

    pub fn theta_coords(&self) -> Vec<Coord> {
        let (a, _) = self.theta_counts();
        (1..=a as u16).map(Coord::Theta).collect()
    }

    pub fn theta_prime_coords(&self) -> Vec<Coord> {
        let (_, b) = self.theta_counts();
        (1..=b as u16).map(Coord::ThetaPrime).collect()
    }

    pub fn phi_coords(&self) -> Vec<Coord> {
        (1..=self.spin_rank() as u16).map(Coord::Phi).collect()
    }

    pub fn all_coords(&self) -> Vec<Coord> {
        let mut v = self.theta_coords();
        v.extend(self.theta_prime_coords());
        v.extend(self.phi_coords());
        v
    }

    /// The real dimension `N` of the manifold.
    pub fn dimension(&self) -> usize {
        let (a, b) = self.m_pair();
        let (a, b) = (a as usize, b as usize);
        let spin = 1usize << self.spin_rank();
        match self.family() {
            Family::Orthogonal => a * spin,
            Family::Quaternionic => 2 * a * spin,
            Family::Unitary => a * spin,
            Family::QuaternionicPair => (a + b) * spin,
            Family::OrthogonalPair => (a + b) * spin / 2,
        }
    }

    pub fn spaces(&self) -> &'static [Space] {
        match self.family() {
            Family::Orthogonal | Family::Quaternionic => &[Space::E],
            Family::Unitary => &[Space::E, Space::EBar],
            Family::QuaternionicPair | Family::OrthogonalPair => &[Space::E1, Space::E2],
        }
    }

    /// Weights of the standard representation on `space`.
    ///
    /// Orthogonal factors of odd size carry an extra zero weight.
    pub fn standard_weights(&self, space: Space) -> Result<Vec<Weight>> {
        if !self.spaces().contains(&space) {
            return Err(Error::InvalidFactor {
                factor: space.to_string(),
                reason: format!("no such space for r = {}", self.r),
            });
        }
        let (m1, m2) = self.m_pair();
        let pm = |coords: Vec<Coord>, odd_zero: bool| {
            let mut out: Vec<Weight> = coords.iter().map(|c| Weight::coord(*c)).collect();
            out.extend(coords.iter().map(|c| -Weight::coord(*c)));
            if odd_zero {
                out.push(Weight::zero());
            }
            out
        };
        Ok(match (self.family(), space) {
            (Family::Orthogonal, _) => pm(self.theta_coords(), m1 % 2 == 1),
            (Family::Quaternionic, _) => pm(self.theta_coords(), false),
            (Family::Unitary, Space::E) => self.theta_coords().into_iter().map(Weight::coord).collect(),
            (Family::Unitary, _) => self.theta_coords().into_iter().map(|c| -Weight::coord(c)).collect(),
            (Family::QuaternionicPair, Space::E1) => pm(self.theta_coords(), false),
            (Family::QuaternionicPair, _) => pm(self.theta_prime_coords(), false),
            (Family::OrthogonalPair, Space::E1) => pm(self.theta_coords(), m1 % 2 == 1),
            (Family::OrthogonalPair, _) => pm(self.theta_prime_coords(), m2 % 2 == 1),
        })
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mult {
            Multiplicities::Single(m) => write!(f, "r={}, m={m}", self.r),
            Multiplicities::Pair(a, b) => write!(f, "r={}, m1={a}, m2={b}", self.r),
        }
    }
}

/// A standard representation space of the classical factor(s).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Space {
    E,
    EBar,
    E1,
    E2,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::E => "E",
            Space::EBar => "Ē",
            Space::E1 => "E1",
            Space::E2 => "E2",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Chirality {
    /// `Δ_r` (for even `r`, the sum `Δ_r^+ ⊕ Δ_r^-`).
    Full,
    Plus,
    Minus,
}

/// One tensor factor of a twisted representation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Factor {
    Exterior(Space, u32),
    Symmetric(Space, u32),
    /// `s`-fold tensor power of a spin module of `Spin(r)`.
    Spinor(Chirality, u32),
    /// The spinor module `Δ_N` of the manifold.
    SpinorModule,
    Trivial,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Exterior(s, u) => write!(f, "Λ^{u}{s}"),
            Factor::Symmetric(s, v) => write!(f, "S^{v}{s}"),
            Factor::Spinor(Chirality::Full, s) => write!(f, "Δr^⊗{s}"),
            Factor::Spinor(Chirality::Plus, s) => write!(f, "Δr+^⊗{s}"),
            Factor::Spinor(Chirality::Minus, s) => write!(f, "Δr-^⊗{s}"),
            Factor::SpinorModule => write!(f, "ΔN"),
            Factor::Trivial => write!(f, "C"),
        }
    }
}

/// A structure together with a tensor product of factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepDescriptor {
    pub structure: Structure,
    pub factors: Vec<Factor>,
}

impl RepDescriptor {
    pub fn new(structure: Structure, factors: Vec<Factor>) -> Result<Self> {
        for f in &factors {
            validate_factor(&structure, f)?;
        }
        Ok(Self { structure, factors })
    }

    /// `Δ_N ⊗ twist`.
    pub fn twisted_spinor(structure: Structure, twist: Vec<Factor>) -> Result<Self> {
        let mut factors = vec![Factor::SpinorModule];
        factors.extend(twist);
        Self::new(structure, factors)
    }
}

impl fmt::Display for RepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}] {}", self.structure, parts.join(" ⊗ "))
    }
}

pub(crate) fn validate_factor(structure: &Structure, f: &Factor) -> Result<()> {
    let bad = |reason: String| Error::InvalidFactor {
        factor: f.to_string(),
        reason,
    };
    match f {
        Factor::Exterior(space, u) => {
            if !structure.spaces().contains(space) {
                return Err(bad(format!("no space {space} for r = {}", structure.r())));
            }
            let dim = structure.standard_weights(*space)?.len();
            if *u as usize > dim {
                return Err(Error::PowerExceedsDimension { power: *u, dim });
            }
        }
        Factor::Symmetric(space, _) => {
            if !structure.spaces().contains(space) {
                return Err(bad(format!("no space {space} for r = {}", structure.r())));
            }
        }
        Factor::Spinor(Chirality::Plus | Chirality::Minus, _) if structure.r() % 2 == 1 => {
            return Err(bad("chirality halves need even r".into()));
        }
        _ => {}
    }
    Ok(())
}
