use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{int, rat, Rational};

use super::descriptor::{Family, Structure};
use super::weight::{Coord, GroupElementParams};

/// A central scalar on one classical factor.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ClassicalPart {
    Id,
    MinusId,
    IId,
    MinusIId,
}

impl ClassicalPart {
    /// The common torus angle, as a multiple of `π`.
    fn angle(self) -> Rational {
        match self {
            ClassicalPart::Id => Rational::zero(),
            ClassicalPart::MinusId => int(1),
            ClassicalPart::IId => rat(1, 2),
            ClassicalPart::MinusIId => rat(-1, 2),
        }
    }

    fn label(self) -> &'static str {
        match self {
            ClassicalPart::Id => "Id",
            ClassicalPart::MinusId => "-Id",
            ClassicalPart::IId => "i·Id",
            ClassicalPart::MinusIId => "-i·Id",
        }
    }
}

/// A central element of `Spin(r)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum SpinPart {
    One,
    MinusOne,
    Vol,
    MinusVol,
}

impl SpinPart {
    fn label(self) -> &'static str {
        match self {
            SpinPart::One => "1",
            SpinPart::MinusOne => "-1",
            SpinPart::Vol => "vol",
            SpinPart::MinusVol => "-vol",
        }
    }
}

/// A non-identity element of the finite central subgroup `Γ` by which the
/// product group is divided.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GammaElement {
    /// One part per nonzero classical factor, in order.
    pub classical: Vec<ClassicalPart>,
    pub spin: SpinPart,
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<&str> = self.classical.iter().map(|c| c.label()).collect();
        parts.push(self.spin.label());
        write!(f, "({})", parts.join(", "))
    }
}

impl GammaElement {
    fn new(classical: &[ClassicalPart], spin: SpinPart) -> Self {
        Self {
            classical: classical.to_vec(),
            spin,
        }
    }

    /// Torus angles realizing this element; every coordinate is assigned.
    pub fn params(&self, structure: &Structure) -> GroupElementParams {
        let mut p = GroupElementParams::new();
        let mut groups: Vec<Vec<Coord>> = Vec::new();
        let (a, b) = structure.m_pair();
        if structure.family().is_pair() {
            if a > 0 {
                groups.push(structure.theta_coords());
            }
            if b > 0 {
                groups.push(structure.theta_prime_coords());
            }
        } else {
            groups.push(structure.theta_coords());
        }
        for c in structure.theta_coords().into_iter().chain(structure.theta_prime_coords()) {
            p.set(c, Rational::zero());
        }
        for (coords, part) in groups.iter().zip(&self.classical) {
            for c in coords {
                p.set(*c, part.angle());
            }
        }
        let phis = structure.phi_coords();
        for (i, c) in phis.iter().enumerate() {
            let angle = match self.spin {
                SpinPart::One => Rational::zero(),
                SpinPart::MinusOne => {
                    if i == 0 {
                        int(2)
                    } else {
                        Rational::zero()
                    }
                }
                SpinPart::Vol => int(1),
                SpinPart::MinusVol => {
                    if i == 0 {
                        int(-1)
                    } else {
                        int(1)
                    }
                }
            };
            p.set(*c, angle);
        }
        p
    }
}

/// The non-identity elements of `Γ` for the structure.
pub fn structure_group_elements(structure: &Structure) -> Result<Vec<GammaElement>> {
    use ClassicalPart::*;
    use SpinPart::*;
    let (m1, m2) = structure.m_pair();
    let el = GammaElement::new;
    Ok(match structure.family() {
        Family::Orthogonal => {
            if m1 % 2 == 0 {
                vec![el(&[MinusId], MinusOne)]
            } else {
                vec![]
            }
        }
        Family::Quaternionic => vec![el(&[MinusId], MinusOne)],
        Family::Unitary => vec![
            el(&[MinusId], MinusOne),
            el(&[IId], MinusVol),
            el(&[MinusIId], Vol),
        ],
        Family::QuaternionicPair => match (m1 > 0, m2 > 0) {
            (true, true) => vec![
                el(&[MinusId, MinusId], MinusOne),
                el(&[Id, MinusId], Vol),
                el(&[MinusId, Id], MinusVol),
            ],
            (true, false) => vec![el(&[MinusId], MinusOne), el(&[Id], Vol), el(&[MinusId], MinusVol)],
            (false, true) => vec![el(&[MinusId], MinusOne), el(&[Id], MinusVol), el(&[MinusId], Vol)],
            (false, false) => return Err(Error::InvalidStructure("both multiplicities zero".into())),
        },
        Family::OrthogonalPair => {
            let (e1, e2) = (m1 % 2 == 0, m2 % 2 == 0);
            match (m1, m2) {
                (0, _) if e2 => vec![el(&[MinusId], MinusOne), el(&[Id], MinusVol), el(&[MinusId], Vol)],
                (0, _) => vec![el(&[Id], MinusVol)],
                (_, 0) if e1 => vec![el(&[MinusId], MinusOne), el(&[Id], Vol), el(&[MinusId], MinusVol)],
                (_, 0) => vec![el(&[Id], Vol)],
                _ => match (e1, e2) {
                    (true, true) => vec![
                        el(&[MinusId, MinusId], MinusOne),
                        el(&[Id, MinusId], Vol),
                        el(&[MinusId, Id], MinusVol),
                    ],
                    (true, false) => vec![el(&[MinusId, Id], MinusVol)],
                    (false, true) => vec![el(&[Id, MinusId], Vol)],
                    (false, false) => vec![],
                },
            }
        }
    })
}

/// Torus parameters of every non-identity element of `Γ`.
pub fn structure_group_generators(structure: &Structure) -> Result<Vec<GroupElementParams>> {
    Ok(structure_group_elements(structure)?
        .iter()
        .map(|g| g.params(structure))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternionic_rank_three() {
        let s = Structure::single(3, 1).unwrap();
        let g = structure_group_generators(&s).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].get(Coord::Theta(1)), Some(&int(1)));
        assert_eq!(g[0].get(Coord::Phi(1)), Some(&int(2)));
    }

    #[test]
    fn rank_four_contains_id_minus_id_vol() {
        let s = Structure::pair(4, 1, 1).unwrap();
        let g = structure_group_generators(&s).unwrap();
        let target = GroupElementParams::new()
            .with(Coord::Theta(1), int(0))
            .with(Coord::ThetaPrime(1), int(1))
            .with(Coord::Phi(1), int(1))
            .with(Coord::Phi(2), int(1));
        assert!(g.contains(&target));
    }

    #[test]
    fn rank_six_i_minus_vol() {
        let s = Structure::single(6, 1).unwrap();
        let g = structure_group_generators(&s).unwrap();
        let target = GroupElementParams::new()
            .with(Coord::Theta(1), rat(1, 2))
            .with(Coord::Phi(1), int(-1))
            .with(Coord::Phi(2), int(1))
            .with(Coord::Phi(3), int(1));
        assert!(g.contains(&target));
        assert_eq!(structure_group_elements(&s).unwrap()[1].to_string(), "(i·Id, -vol)");
    }

    #[test]
    fn rank_eight_parity_table() {
        let count = |a, b| structure_group_elements(&Structure::pair(8, a, b).unwrap()).unwrap().len();
        assert_eq!(count(2, 2), 3);
        assert_eq!(count(1, 2), 1);
        assert_eq!(count(2, 1), 1);
        assert_eq!(count(1, 1), 0);
        assert_eq!(count(0, 3), 1);
        assert_eq!(count(3, 0), 1);
        assert_eq!(count(0, 2), 3);
    }
}
