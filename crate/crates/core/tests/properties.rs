mod support;

use num_integer::Integer;
use pretzel_core::{d_invariants, CharCovector, PlumbingGraph};
use proptest::prelude::*;
use support::{big, box_d_invariants, form, ClassKeyer};

fn chain() -> impl Strategy<Value = PlumbingGraph> {
    prop::collection::vec(-6i64..=-2, 1..=5).prop_map(|w| {
        let edges = (1..w.len()).map(|i| (i - 1, i)).collect();
        PlumbingGraph::new(w, edges).unwrap()
    })
}

/// Three legs on one centre; indefinite draws are discarded.
fn star() -> impl Strategy<Value = Option<PlumbingGraph>> {
    (-4i64..=-1, prop::collection::vec(prop::collection::vec(-5i64..=-2, 1..=2), 3)).prop_map(|(c, legs)| {
        let mut weights = vec![c];
        let mut edges = Vec::new();
        for leg in legs {
            let mut prev = 0;
            for w in leg {
                weights.push(w);
                edges.push((prev, weights.len() - 1));
                prev = weights.len() - 1;
            }
        }
        PlumbingGraph::new(weights, edges).ok()
    })
}

fn graph() -> impl Strategy<Value = PlumbingGraph> {
    prop_oneof![chain().prop_map(Some), star()].prop_filter_map("indefinite", |g| g)
}

fn negate(k: &CharCovector) -> CharCovector {
    CharCovector(k.0.iter().map(|x| -x).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn class_count_is_det(g in graph()) {
        let t = d_invariants(&g).unwrap();
        let keyer = ClassKeyer::new(&form(g.weights(), g.edges()));
        prop_assert_eq!(t.len() as i64, keyer.order());
        prop_assert_eq!(t.order(), keyer.order());
    }

    #[test]
    fn conjugation_symmetry(g in graph()) {
        let t = d_invariants(&g).unwrap();
        for (m, d) in t.iter() {
            prop_assert_eq!(t.d_of(&negate(&m.covector)).unwrap(), d);
        }
    }

    #[test]
    fn engine_matches_box_oracle(g in graph()) {
        let t = d_invariants(&g).unwrap();
        let oracle = box_d_invariants(&g);
        let keyer = ClassKeyer::new(&form(g.weights(), g.edges()));
        for (m, d) in t.iter() {
            prop_assert_eq!(d, &big(&oracle[&keyer.key(&m.covector.0)]));
        }
    }

    #[test]
    fn labelling_is_consistent(g in graph(), seed in 1i64..1000) {
        let t = d_invariants(&g).unwrap();
        let Ok(unit) = t.unit_class() else { return Ok(()) };
        let n = t.order();
        let table = t.label_by_unit(unit).unwrap();
        prop_assert!(table.is_conjugation_symmetric());
        prop_assert_eq!(table.label(0), t.zero_class().unwrap());
        let ell = (seed..seed + n).find(|l| l.gcd(&n) == 1).unwrap() % n;
        let direct = t.label_by_unit(table.label(ell)).unwrap();
        let relabelled = table.relabel(ell);
        prop_assert_eq!(direct.values(), relabelled.values());
        for i in 0..n {
            prop_assert_eq!(direct.label(i), relabelled.label(i));
        }
    }
}
