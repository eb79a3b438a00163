use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

use super::delta::{delta_weights, sign_representatives, DeltaWeights};
use super::descriptor::{Family, Structure};
use super::gamma::structure_group_generators;
use super::weight::{evaluate_weight, Coord, Weight};

/// How the classical factors are matched with the chirality halves of
/// `Δ_r` for even `r`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Pairing {
    /// `r ≡ 2`: `E ↔ Δ^+`; `r ≡ 6`: `E ↔ Δ^-`; `r ≡ 0, 4`: first factor `↔ Δ^+`.
    Literal,
    /// The opposite matching.
    Swapped,
}

struct Block {
    coords: Vec<Coord>,
    lambdas: Vec<Weight>,
    /// Bare `λ` representatives appended for odd orthogonal multiplicity.
    tail: bool,
}

fn blocks(structure: &Structure, pairing: Pairing) -> Vec<Block> {
    let (m1, m2) = structure.m_pair();
    let theta = structure.theta_coords();
    let theta_p = structure.theta_prime_coords();
    match delta_weights(structure.r()) {
        DeltaWeights::Odd(l) => vec![Block {
            coords: theta,
            lambdas: l,
            tail: structure.family() == Family::Orthogonal && m1 % 2 == 1,
        }],
        DeltaWeights::Even { plus, minus } => {
            let swapped = pairing == Pairing::Swapped;
            match structure.family() {
                Family::Unitary => {
                    let e_with_plus = (structure.r() % 8 == 2) != swapped;
                    vec![Block {
                        coords: theta,
                        lambdas: if e_with_plus { plus } else { minus },
                        tail: false,
                    }]
                }
                family => {
                    let orth = family == Family::OrthogonalPair;
                    let first = (theta, m1, m1 > 0);
                    let second = (theta_p, m2, m2 > 0);
                    let (with_plus, with_minus) = if swapped { (second, first) } else { (first, second) };
                    let mut out = Vec::new();
                    for ((coords, m, present), lambdas) in [(with_plus, plus), (with_minus, minus)] {
                        if present {
                            out.push(Block {
                                coords,
                                lambdas,
                                tail: orth && m % 2 == 1,
                            });
                        }
                    }
                    out
                }
            }
        }
    }
}

/// Formal roots `η` of `TM ⊗ C` under an explicit pairing.
pub fn tangent_weights_with(structure: &Structure, pairing: Pairing) -> Vec<Weight> {
    let mut out = Vec::new();
    for block in blocks(structure, pairing) {
        for c in &block.coords {
            for l in &block.lambdas {
                out.push(Weight::coord(*c) + l.clone());
            }
        }
        if block.tail {
            out.extend(sign_representatives(&block.lambdas));
        }
    }
    out
}

/// Whether every element of `Γ` is trivial on every tangent weight.
pub fn is_tangent_trivial(structure: &Structure, weights: &[Weight]) -> Result<bool> {
    for p in structure_group_generators(structure)? {
        for w in weights {
            if !evaluate_weight(w, &p)?.is_one() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn pairing_cache() -> &'static Mutex<HashMap<Structure, Pairing>> {
    static CACHE: OnceLock<Mutex<HashMap<Structure, Pairing>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The pairing under which `Γ` acts trivially on the tangent weights:
/// literal if it works, swapped otherwise. Cached per structure.
pub fn resolve_pairing(structure: &Structure) -> Result<Pairing> {
    if let Some(p) = pairing_cache().lock().expect("cache poisoned").get(structure) {
        return Ok(*p);
    }
    let mut chosen = None;
    for p in [Pairing::Literal, Pairing::Swapped] {
        if is_tangent_trivial(structure, &tangent_weights_with(structure, p))? {
            chosen = Some(p);
            break;
        }
    }
    let p = chosen.ok_or_else(|| Error::NoConsistentPairing(structure.to_string()))?;
    pairing_cache().lock().expect("cache poisoned").insert(*structure, p);
    Ok(p)
}

/// The `N/2` formal roots `η` of `TM ⊗ C`.
pub fn tangent_weight_assignment(structure: &Structure) -> Result<Vec<Weight>> {
    let p = resolve_pairing(structure)?;
    Ok(tangent_weights_with(structure, p))
}
