use proptest::prelude::*;

use fpb_core::basket::canonical_form;
use fpb_core::diagram::{build_arc_diagram, dt_from_gauss, simplify_r_moves, PlanarDiagram};
use fpb_core::invariants::pd_invariants;
use fpb_core::{parse_code, BasketCode};

fn code_strategy(max_bands: usize) -> impl Strategy<Value = BasketCode> {
    bands(0..=max_bands)
}

fn bands(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = BasketCode> {
    n.prop_flat_map(|n| Just((1..=n).flat_map(|l| [l, l]).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|word| BasketCode::new(word).unwrap())
}

fn knot_strategy(n: usize) -> impl Strategy<Value = BasketCode> {
    bands(n..=n).prop_filter("knot", |c| c.component_count() == 1)
}

proptest! {
    #[test]
    fn display_parses_back(code in code_strategy(9)) {
        prop_assert_eq!(parse_code(&code.to_string()).unwrap(), code);
    }

    #[test]
    fn canonical_form_is_idempotent(code in code_strategy(6)) {
        let c = canonical_form(&code);
        prop_assert_eq!(canonical_form(&c), c.clone());
        prop_assert!(c <= code);
    }

    #[test]
    fn four_crossings_per_linked_pair(code in code_strategy(7)) {
        let diagram = build_arc_diagram(&code);
        prop_assert_eq!(diagram.crossing_count(), 4 * code.interleaved_pairs().len());
        prop_assert_eq!(diagram.component_count(), code.component_count());
    }

    #[test]
    fn dt_codes_are_valid(code in knot_strategy(6), start in 0usize..12, ccw: bool) {
        let gauss = build_arc_diagram(&code).gauss_code(start, ccw).unwrap();
        let dt = dt_from_gauss(&gauss).unwrap();
        let mut seen: Vec<i64> = dt.entries().iter().map(|e| e.abs()).collect();
        seen.sort_unstable();
        let want: Vec<i64> = (1..=dt.entries().len() as i64).map(|i| 2 * i).collect();
        prop_assert_eq!(seen, want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reidemeister_simplification_keeps_the_knot(code in knot_strategy(6)) {
        let gauss = build_arc_diagram(&code).gauss_code(0, false).unwrap();
        let raw = pd_invariants(&PlanarDiagram::from_gauss(&gauss).unwrap(), 64).unwrap();
        let small = pd_invariants(&PlanarDiagram::from_gauss(&simplify_r_moves(&gauss).unwrap()).unwrap(), 64).unwrap();
        prop_assert_eq!(&raw.jones, &small.jones);
        prop_assert_eq!(raw.fingerprint(), small.fingerprint());
    }
}
