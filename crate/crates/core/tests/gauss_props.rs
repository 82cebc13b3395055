mod common;

use proptest::prelude::*;
use vlink::gauss::{
    apply_move, apply_move_with_inverse, enumerate_moves, parse_gauss, serialize_gauss, supporting_genus,
    validate, MoveInstance,
};
use vlink::gen::{random_code, rng};

fn code(seed: u64, max: usize) -> vlink::gauss::GaussCode {
    random_code(&mut rng(seed), max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn serialization_round_trips(seed in any::<u64>()) {
        let c = code(seed, 8);
        let back = parse_gauss(&serialize_gauss(&c)).unwrap();
        prop_assert_eq!(back.canonical_string(), c.canonical_string());
        let raw = parse_gauss(&c.raw_text()).unwrap();
        prop_assert_eq!(raw, c);
    }

    #[test]
    fn canonical_form_ignores_symmetries(seed in any::<u64>(), shift in 0usize..16, offset in 1u32..50) {
        let c = code(seed, 8);
        let expected = c.canonical_string();
        let relabeled = c.relabel(|id| id * 3 + offset);
        prop_assert_eq!(relabeled.canonical_string(), expected.clone());
        for comp in 0..c.num_components() {
            prop_assert_eq!(c.rotate(comp, shift).canonical_string(), expected.clone());
        }
        let reversed: Vec<usize> = (0..c.num_components()).rev().collect();
        prop_assert_eq!(c.permute_components(&reversed).canonical_string(), expected);
    }

    #[test]
    fn genus_matches_dart_oracle(seed in any::<u64>()) {
        let c = code(seed, 8);
        let g = supporting_genus(&c);
        prop_assert_eq!(g, common::genus_oracle(&c));
        prop_assert_eq!(supporting_genus(&c.relabel(|id| id + 7)), g);
        prop_assert_eq!(supporting_genus(&c.rotate(0, 3)), g);
    }

    #[test]
    fn enumerated_moves_apply_and_invert(seed in any::<u64>()) {
        let c = code(seed, 5);
        for m in enumerate_moves(&c) {
            let (moved, inverse) = apply_move_with_inverse(&c, &m).unwrap();
            prop_assert!(validate(moved.components()).is_empty());
            let back = apply_move(&moved, &inverse).unwrap();
            prop_assert_eq!(back.canonical_string(), c.canonical_string(), "{:?}", m);
        }
    }

    #[test]
    fn forbidden_keeps_codes_valid(seed in any::<u64>()) {
        let c = code(seed, 8);
        for m in enumerate_moves(&c).into_iter().filter(|m| matches!(m, MoveInstance::Forbidden { .. })) {
            let moved = apply_move(&c, &m).unwrap();
            prop_assert!(validate(moved.components()).is_empty());
            prop_assert_eq!(moved.num_crossings(), c.num_crossings());
        }
    }
}

#[test]
fn oracle_pins_small_genera() {
    assert_eq!(common::genus_oracle(&vlink::gauss::GaussCode::unknot()), 0);
    assert_eq!(common::genus_oracle(&parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap()), 0);
    assert_eq!(common::genus_oracle(&parse_gauss("O1+ U2+ U1+ O2+").unwrap()), 1);
    let kishino = vlink::catalog::lookup("kishino").unwrap().code;
    assert_eq!(common::genus_oracle(&kishino), 2);
}
