use spindex_core::weights::{
    element_action_on_rep, is_tangent_trivial, spinor_module_action, structure_group_elements,
    tangent_weight_assignment, ClassicalPart, GammaElement, RepDescriptor, SpinPart, SpinorModuleMode,
    Structure,
};

fn sign_of(structure: Structure, element: &GammaElement) -> i8 {
    let rep = RepDescriptor::twisted_spinor(structure, vec![]).unwrap();
    let outcome = element_action_on_rep(&element.params(&structure), &rep).unwrap();
    outcome
        .scalar()
        .unwrap_or_else(|| panic!("{structure}: {element} does not act as a scalar: {outcome}"))
        .as_sign()
        .expect("sign")
}

fn find(structure: &Structure, classical: &[ClassicalPart], spin: SpinPart) -> GammaElement {
    structure_group_elements(structure)
        .unwrap()
        .into_iter()
        .find(|g| g.classical == classical && g.spin == spin)
        .unwrap_or_else(|| panic!("{structure}: element missing"))
}

fn parity(k: u32) -> i8 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

use ClassicalPart::{IId, Id, MinusId};
use SpinPart::{MinusOne, MinusVol, Vol};

#[test]
fn rank_three_sign() {
    for m in 1..=3 {
        let s = Structure::single(3, m).unwrap();
        assert_eq!(sign_of(s, &find(&s, &[MinusId], MinusOne)), parity(m));
    }
}

#[test]
fn rank_four_signs() {
    for m1 in 1..=2 {
        for m2 in 1..=2 {
            let s = Structure::pair(4, m1, m2).unwrap();
            assert_eq!(sign_of(s, &find(&s, &[MinusId, MinusId], MinusOne)), parity(m1 + m2));
            assert_eq!(sign_of(s, &find(&s, &[Id, MinusId], Vol)), parity(m2));
            assert_eq!(sign_of(s, &find(&s, &[MinusId, Id], MinusVol)), parity(m1));
        }
    }
}

#[test]
fn rank_six_signs() {
    for m in 1..=2 {
        let s = Structure::single(6, m).unwrap();
        assert_eq!(sign_of(s, &find(&s, &[MinusId], MinusOne)), 1);
        assert_eq!(sign_of(s, &find(&s, &[IId], MinusVol)), parity(m));
    }
}

#[test]
fn rank_eight_mixed_parity() {
    let s = Structure::pair(8, 1, 2).unwrap();
    assert_eq!(sign_of(s, &find(&s, &[Id, MinusId], Vol)), -1);
    let s = Structure::pair(8, 2, 1).unwrap();
    assert_eq!(sign_of(s, &find(&s, &[MinusId, Id], MinusVol)), -1);
}

fn supported_structures() -> Vec<Structure> {
    let mut out = Vec::new();
    for r in 2..=9u32 {
        if r % 4 == 0 {
            for m1 in 0..=3 {
                for m2 in 0..=3 {
                    if m1 + m2 > 0 {
                        out.push(Structure::pair(r, m1, m2).unwrap());
                    }
                }
            }
        } else {
            for m in 1..=3 {
                out.push(Structure::single(r, m).unwrap());
            }
        }
    }
    out
}

#[test]
fn tangent_weights_are_invariant() {
    for s in supported_structures() {
        let eta = tangent_weight_assignment(&s).unwrap();
        assert_eq!(eta.len() * 2, s.dimension(), "{s}");
        assert!(is_tangent_trivial(&s, &eta).unwrap(), "{s}");
    }
}

#[test]
fn structural_shortcut_agrees_with_enumeration() {
    for s in supported_structures() {
        if tangent_weight_assignment(&s).unwrap().len() > 16 {
            continue;
        }
        for g in structure_group_elements(&s).unwrap() {
            let p = g.params(&s);
            let a = spinor_module_action(&p, &s, SpinorModuleMode::Enumerate).unwrap();
            let b = spinor_module_action(&p, &s, SpinorModuleMode::Structural).unwrap();
            assert_eq!(a.scalar(), b.scalar(), "{s} {g}");
        }
    }
}
