use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{int, rat, Rational};
use crate::twist::PowerProfile;
use crate::weights::{factor_weights, tangent_weight_assignment, Coord, Structure, Weight, ENUMERATION_GUARD};

/// Integer values at a torus point: `θ_j ↦ t_j/2`, `θ'_j ↦ t'_j/2`, `φ_j ↦ f_j`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExponentValues {
    pub t: Vec<i64>,
    pub t_prime: Vec<i64>,
    pub f: Vec<i64>,
}

impl ExponentValues {
    pub fn new(t: Vec<i64>, t_prime: Vec<i64>, f: Vec<i64>) -> Self {
        Self { t, t_prime, f }
    }

    fn assignment(&self, structure: &Structure) -> Result<BTreeMap<Coord, Rational>> {
        let check = |what: &'static str, expected: usize, got: usize| {
            if expected == got {
                Ok(())
            } else {
                Err(Error::LengthMismatch { what, expected, got })
            }
        };
        let theta = structure.theta_coords();
        let theta_prime = structure.theta_prime_coords();
        let phi = structure.phi_coords();
        check("t-values", theta.len(), self.t.len())?;
        check("t'-values", theta_prime.len(), self.t_prime.len())?;
        check("f-values", phi.len(), self.f.len())?;
        let mut map = BTreeMap::new();
        for (c, v) in theta.iter().zip(&self.t).chain(theta_prime.iter().zip(&self.t_prime)) {
            map.insert(*c, rat(*v, 2));
        }
        for (c, v) in phi.iter().zip(&self.f) {
            map.insert(*c, int(*v));
        }
        Ok(map)
    }
}

fn evaluate_all(weights: &[Weight], at: &BTreeMap<Coord, Rational>) -> Result<Vec<Rational>> {
    weights.iter().map(|w| w.pair(at)).collect()
}

/// Rotation exponents `q_i`: the tangent weights evaluated at the point.
pub fn generate_tangent_exponents(structure: &Structure, values: &ExponentValues) -> Result<Vec<Rational>> {
    let at = values.assignment(structure)?;
    evaluate_all(&tangent_weight_assignment(structure)?, &at)
}

/// Twist exponents `n_k`: all weights of the profile's tensor product
/// evaluated at the point. The trivial profile gives `[0]`.
pub fn generate_twist_exponents(
    structure: &Structure,
    prof: &PowerProfile,
    values: &ExponentValues,
) -> Result<Vec<Rational>> {
    let at = values.assignment(structure)?;
    let mut acc = vec![Rational::from_integer(0.into())];
    for factor in prof.factors(structure) {
        let vals = evaluate_all(&factor_weights(&factor, structure)?, &at)?;
        let count = (acc.len() as u128) * (vals.len() as u128);
        if count > ENUMERATION_GUARD {
            return Err(Error::GuardExceeded {
                count,
                limit: ENUMERATION_GUARD,
            });
        }
        acc = acc
            .iter()
            .flat_map(|a| vals.iter().map(move |v| a + v))
            .collect();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twist::TwistKind;

    fn sorted(mut v: Vec<Rational>) -> Vec<Rational> {
        v.sort();
        v
    }

    fn rats(v: &[(i64, i64)]) -> Vec<Rational> {
        sorted(v.iter().map(|(a, b)| rat(*a, *b)).collect())
    }

    #[test]
    fn tangent_r3() {
        let s = Structure::single(3, 1).unwrap();
        let q = generate_tangent_exponents(&s, &ExponentValues::new(vec![3], vec![], vec![1])).unwrap();
        assert_eq!(sorted(q), rats(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn tangent_r7_odd_multiplicity() {
        let s = Structure::single(7, 1).unwrap();
        let q = generate_tangent_exponents(&s, &ExponentValues::new(vec![], vec![], vec![1, 1, 1])).unwrap();
        assert_eq!(sorted(q), rats(&[(3, 2), (-1, 2), (-1, 2), (-1, 2)]));
    }

    #[test]
    fn tangent_r4_second_space() {
        let s = Structure::pair(4, 0, 1).unwrap();
        let q = generate_tangent_exponents(&s, &ExponentValues::new(vec![], vec![2], vec![1, 1])).unwrap();
        assert_eq!(q.len(), 2);
        // swapped pairing: θ'_1 meets the even half-spin weights, h+ = ±(f1 + f2)
        assert_eq!(sorted(q), rats(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn length_mismatch() {
        let s = Structure::single(3, 1).unwrap();
        let err = generate_tangent_exponents(&s, &ExponentValues::new(vec![], vec![], vec![1])).unwrap_err();
        assert_eq!(
            err,
            Error::LengthMismatch {
                what: "t-values",
                expected: 1,
                got: 0
            }
        );
    }

    #[test]
    fn twist_examples() {
        let s = Structure::single(3, 1).unwrap();
        let v = ExponentValues::new(vec![3], vec![], vec![1]);
        let spin = PowerProfile::simple(&s, TwistKind::Exterior, 0, 0, 1, 0).unwrap();
        assert_eq!(sorted(generate_twist_exponents(&s, &spin, &v).unwrap()), rats(&[(-1, 2), (1, 2)]));
        let ext = PowerProfile::simple(&s, TwistKind::Exterior, 1, 0, 0, 0).unwrap();
        assert_eq!(sorted(generate_twist_exponents(&s, &ext, &v).unwrap()), rats(&[(-3, 2), (3, 2)]));
        let triv = PowerProfile::default();
        assert_eq!(generate_twist_exponents(&s, &triv, &v).unwrap(), rats(&[(0, 1)]));
        let both = PowerProfile::simple(&s, TwistKind::Exterior, 1, 0, 1, 0).unwrap();
        assert_eq!(
            sorted(generate_twist_exponents(&s, &both, &v).unwrap()),
            rats(&[(-2, 1), (-1, 1), (1, 1), (2, 1)])
        );
    }

    #[test]
    fn exterior_power_exceeding_dimension() {
        let s = Structure::single(3, 1).unwrap();
        let v = ExponentValues::new(vec![3], vec![], vec![1]);
        let ext = PowerProfile::simple(&s, TwistKind::Exterior, 3, 0, 0, 0).unwrap();
        assert!(matches!(
            generate_twist_exponents(&s, &ext, &v),
            Err(Error::PowerExceedsDimension { .. })
        ));
    }
}
