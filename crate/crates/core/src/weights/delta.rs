use super::weight::Weight;

/// Weights of the spin module(s) of `Spin(r)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DeltaWeights {
    /// `r` odd: one list `λ`, even negative-sign count first.
    Odd(Vec<Weight>),
    /// `r` even: `λ^+` (even negative count) and `λ^-` (odd).
    Even { plus: Vec<Weight>, minus: Vec<Weight> },
}

impl DeltaWeights {
    /// `λ` for odd `r`, `λ^+` followed by `λ^-` for even `r`.
    pub fn all(&self) -> Vec<Weight> {
        match self {
            DeltaWeights::Odd(l) => l.clone(),
            DeltaWeights::Even { plus, minus } => plus.iter().chain(minus).cloned().collect(),
        }
    }
}

/// Sign vectors of length `k` in binary counting order, `φ_1` as the least
/// significant bit and a set bit meaning a negative sign.
fn sign_vectors(k: usize) -> Vec<Vec<i8>> {
    (0..1u64 << k)
        .map(|bits| (0..k).map(|j| if bits >> j & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

/// Within a list closed under negation, puts the vectors with a positive
/// last coordinate first and their reflections second, in matching order.
fn reflection_ordered(list: Vec<Vec<i8>>) -> Vec<Vec<i8>> {
    let first: Vec<Vec<i8>> = list.into_iter().filter(|v| *v.last().unwrap() > 0).collect();
    let second: Vec<Vec<i8>> = first.iter().map(|v| v.iter().map(|s| -s).collect()).collect();
    first.into_iter().chain(second).collect()
}

pub fn delta_weights(r: u32) -> DeltaWeights {
    let k = (r / 2) as usize;
    let all = sign_vectors(k);
    let neg = |v: &Vec<i8>| v.iter().filter(|s| **s < 0).count();
    let (even, odd): (Vec<_>, Vec<_>) = all.into_iter().partition(|v| neg(v) % 2 == 0);
    let to_weights = |l: Vec<Vec<i8>>| l.iter().map(|v| Weight::half_spin(v)).collect::<Vec<_>>();
    if r % 2 == 1 {
        return DeltaWeights::Odd(to_weights(even.into_iter().chain(odd).collect()));
    }
    if r % 4 == 0 {
        DeltaWeights::Even {
            plus: to_weights(reflection_ordered(even)),
            minus: to_weights(reflection_ordered(odd)),
        }
    } else {
        DeltaWeights::Even {
            plus: to_weights(even),
            minus: to_weights(odd),
        }
    }
}

/// One weight from each pair `{w, -w}` of a list closed under negation.
///
/// Uses the first half of the list when it already is such a set of
/// representatives, otherwise the weights whose last nonzero coordinate is
/// positive, in list order.
pub fn sign_representatives(list: &[Weight]) -> Vec<Weight> {
    let half = &list[..list.len() / 2];
    let closed = half.iter().any(|w| half.contains(&-w.clone()));
    if !closed {
        return half.to_vec();
    }
    list.iter()
        .filter(|w| {
            w.terms()
                .last()
                .is_some_and(|(_, q)| *q > num_traits::Zero::zero())
        })
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(v: &[i8]) -> Weight {
        Weight::half_spin(v)
    }

    #[test]
    fn small_ranks() {
        assert_eq!(delta_weights(3), DeltaWeights::Odd(vec![hs(&[1]), hs(&[-1])]));
        assert_eq!(
            delta_weights(4),
            DeltaWeights::Even {
                plus: vec![hs(&[1, 1]), hs(&[-1, -1])],
                minus: vec![hs(&[-1, 1]), hs(&[1, -1])],
            }
        );
        assert_eq!(
            delta_weights(2),
            DeltaWeights::Even {
                plus: vec![hs(&[1])],
                minus: vec![hs(&[-1])],
            }
        );
    }

    #[test]
    fn rank_six_ordering() {
        let DeltaWeights::Even { minus, .. } = delta_weights(6) else {
            panic!()
        };
        assert_eq!(minus, vec![hs(&[-1, 1, 1]), hs(&[1, -1, 1]), hs(&[1, 1, -1]), hs(&[-1, -1, -1])]);
    }

    #[test]
    fn reflection_halves() {
        for r in [4u32, 8, 12] {
            let DeltaWeights::Even { plus, minus } = delta_weights(r) else {
                panic!()
            };
            for l in [plus, minus] {
                let h = l.len() / 2;
                for i in 0..h {
                    assert_eq!(l[i + h], -l[i].clone());
                }
            }
        }
    }

    #[test]
    fn representatives() {
        let l = delta_weights(7).all();
        let reps = sign_representatives(&l);
        assert_eq!(reps.len(), 4);
        assert_eq!(reps, l[..4].to_vec());
        let l9 = delta_weights(9).all();
        let reps9 = sign_representatives(&l9);
        assert_eq!(reps9.len(), 8);
        for w in &reps9 {
            assert!(!reps9.contains(&-w.clone()));
        }
    }
}
