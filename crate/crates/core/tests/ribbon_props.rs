mod common;

use proptest::prelude::*;
use vlink::algebra::{alexander_quandle, conjugation_quandle, dihedral_quandle, FiniteGroup, FiniteQuandle};
use vlink::gen::{random_knot, random_ribbon, rng};
use vlink::present::{count_quandle_colorings, wirtinger_quandle, Presentation};
use vlink::ribbon::{ribbon_quandle, tube, RibbonData};

fn targets() -> Vec<FiniteQuandle> {
    vec![
        dihedral_quandle(3).unwrap(),
        dihedral_quandle(4).unwrap(),
        alexander_quandle(5, 2).unwrap(),
        conjugation_quandle(&FiniteGroup::symmetric(3)),
    ]
}

fn counts(p: &Presentation, ts: &[FiniteQuandle]) -> Vec<u64> {
    ts.iter().map(|q| count_quandle_colorings(p, q, "q").unwrap().total).collect()
}

fn ribbon(seed: u64) -> RibbonData {
    random_ribbon(&mut rng(seed), 4, 5, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ribbon_counts_match_brute_force(seed in any::<u64>()) {
        let p = ribbon_quandle(&ribbon(seed));
        for q in targets() {
            prop_assert_eq!(count_quandle_colorings(&p, &q, "q").unwrap().total, common::brute_quandle(&p, &q));
        }
    }

    #[test]
    fn stable_moves_preserve_counts_and_genus(seed in any::<u64>()) {
        let r = ribbon(seed);
        let ts = targets();
        let base = counts(&ribbon_quandle(&r), &ts);
        for (slide, along, end) in r.legal_slides() {
            let s = r.handle_slide(slide, along, end).unwrap();
            prop_assert_eq!(s.genus(), r.genus());
            prop_assert_eq!(counts(&ribbon_quandle(&s), &ts), base.clone(), "slide {} along {} {:?}", slide, along, end);
        }
        for b in 1..=r.num_bases() {
            let s = r.add_trivial_base(b).unwrap();
            prop_assert_eq!(s.genus(), r.genus());
            prop_assert_eq!(counts(&ribbon_quandle(&s), &ts), base.clone());
        }
        for j in 0..r.handles().len() {
            prop_assert_eq!(counts(&ribbon_quandle(&r.reverse_handle(j).unwrap()), &ts), base.clone());
        }
        prop_assert_eq!(r.handle_pass(), r);
    }

    #[test]
    fn ribbon_json_round_trips(seed in any::<u64>()) {
        let r = ribbon(seed);
        let back: RibbonData = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn tube_agrees_with_wirtinger(seed in any::<u64>()) {
        let c = random_knot(&mut rng(seed), 6);
        let t = tube(&c).unwrap();
        prop_assert_eq!(t.num_bases(), t.handles().len());
        let ts = targets();
        prop_assert_eq!(counts(&ribbon_quandle(&t), &ts), counts(&wirtinger_quandle(&c), &ts));
    }
}
