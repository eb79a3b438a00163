use proptest::prelude::*;

use spindex_core::clifford::{volume_element, CliffordElement};
use spindex_core::scalar::{GaussianRational, Rational};
use spindex_core::spin::{chirality_split, kappa, kappa_generator, kappa_monomial, kernel_check, weight_eigencheck, SpinMatrix};

type G = GaussianRational;

fn element(n: usize, terms: Vec<(u32, i64, i64)>) -> CliffordElement<G> {
    let mask = (1u32 << n) - 1;
    terms.into_iter().fold(CliffordElement::zero(n).unwrap(), |acc, (b, re, im)| {
        acc.add(&CliffordElement::monomial(n, b & mask, G::from_ints(re, im)).unwrap())
            .unwrap()
    })
}

fn terms() -> impl Strategy<Value = Vec<(u32, i64, i64)>> {
    prop::collection::vec((any::<u32>(), -3i64..=3, -3i64..=3), 1..5)
}

#[test]
fn generator_relations_up_to_ten() {
    for n in 1..=10 {
        for i in 1..=n {
            for j in 1..=n {
                let ei = CliffordElement::<G>::generator(n, i).unwrap();
                let ej = CliffordElement::<G>::generator(n, j).unwrap();
                let anti = ei.mul(&ej).unwrap().add(&ej.mul(&ei).unwrap()).unwrap();
                let expect = if i == j { G::from_ints(-2, 0) } else { G::zero() };
                assert_eq!(anti.as_scalar(), Some(expect), "n={n} i={i} j={j}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_is_associative(n in 3usize..=8, a in terms(), b in terms(), c in terms()) {
        let (a, b, c) = (element(n, a), element(n, b), element(n, c));
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kappa_is_multiplicative(n in 1usize..=8, a in any::<u32>(), b in any::<u32>()) {
        let mask = (1u32 << n) - 1;
        let x = CliffordElement::monomial(n, a & mask, G::one()).unwrap();
        let y = CliffordElement::monomial(n, b & mask, G::one()).unwrap();
        let lhs = kappa(&x.mul(&y).unwrap()).unwrap();
        let rhs = kappa(&x).unwrap().mul(&kappa(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kappa_is_linear(n in 2usize..=6, a in terms(), b in terms()) {
        let (a, b) = (element(n, a), element(n, b));
        let lhs = kappa(&a.add(&b).unwrap()).unwrap();
        let rhs = kappa(&a).unwrap().add(&kappa(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn kappa_generators_anticommute() {
    for n in 1..=8 {
        let dim = 1usize << (n / 2);
        for i in 1..=n {
            for j in 1..=n {
                let a: SpinMatrix<G> = kappa_generator(n, i).unwrap();
                let b: SpinMatrix<G> = kappa_generator(n, j).unwrap();
                let anti = a.mul(&b).unwrap().add(&b.mul(&a).unwrap()).unwrap();
                let expect = if i == j {
                    SpinMatrix::scalar(dim, G::from_ints(-2, 0))
                } else {
                    SpinMatrix::zero(dim)
                };
                assert_eq!(anti, expect, "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn monomial_images_match_products_of_generators() {
    let n = 5;
    for blade in 0u32..(1 << n) {
        let mut m = SpinMatrix::<G>::identity(1 << (n / 2));
        for i in 0..n {
            if blade & (1 << i) != 0 {
                m = m.mul(&kappa_generator(n, i + 1).unwrap()).unwrap();
            }
        }
        assert_eq!(kappa_monomial::<G>(n, blade).unwrap(), m);
    }
}

#[test]
fn volume_table() {
    let i = G::i();
    let one = G::one();
    let expected = [(2, i.clone()), (4, -one.clone()), (6, -i), (8, one)];
    for (n, on_plus) in expected {
        let split = chirality_split(n).unwrap();
        assert_eq!(split.vol_on_plus, on_plus, "n={n}");
        assert_eq!(split.vol_on_minus, -on_plus.clone());
        assert_eq!(split.rank_plus, 1 << (n / 2 - 1));
    }
    let vol = volume_element::<G>(4).unwrap();
    let sq = vol.mul(&vol).unwrap();
    assert_eq!(sq.as_scalar(), Some(G::one()));
}

#[test]
fn kernels_rank_eight() {
    let report = kernel_check(8).unwrap();
    assert!(report.passed);
    assert_eq!(report.kernel_plus, report.expected_plus);
    assert_eq!(report.kernel_minus, report.expected_minus);
}

#[test]
fn weight_eigencheck_through_eight() {
    for n in [2, 3, 4, 5, 6, 7, 8] {
        let report = weight_eigencheck(n).unwrap();
        assert!(report.passed(), "n={n}: {:?}", report.failures.first());
        assert_eq!(report.checked, 1 << (n / 2));
    }
}

#[test]
fn rational_coefficients_survive_round_trip() {
    let x = CliffordElement::monomial(3, 0b101, G::real(Rational::new(3.into(), 7.into()))).unwrap();
    let back = x.map_coefficients(|g| g.clone());
    assert_eq!(x, back);
}
