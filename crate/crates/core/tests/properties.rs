//! Property tests for graph operations, canonical forms and the index.

mod common;

use abs_extremal::io::{from_graph6, to_graph6};
use abs_extremal::{abs_index, canonical_form, is_isomorphic, Graph};
use proptest::prelude::*;

/// A graph on `lo..=hi` vertices with roughly the given edge density.
fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.0f64..=1.0).prop_flat_map(|(n, density)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(density.clamp(0.01, 0.99)), pairs).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let edges: Vec<_> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| it.next().unwrap()).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn with_perm(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(lo, hi).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(1, 62)) {
        let text = to_graph6(&g);
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in with_perm(1, 14)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
        // the canonical form is itself a labeling of g
        prop_assert!(is_isomorphic(&canonical_form(&g).to_graph(), &g));
    }

    #[test]
    fn edge_change_changes_the_class(g in graph(2, 10)) {
        // same order, different edge count: never isomorphic
        let (u, v) = (0, 1);
        let h = if g.has_edge(u, v) {
            Graph::from_edges(g.order(), g.edges().filter(|&e| e != (u, v))).unwrap()
        } else {
            g.add_edge(u, v).unwrap()
        };
        prop_assert_ne!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn abs_is_bit_exact_under_relabeling((g, perm) in with_perm(1, 40)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(abs_index(&g).to_bits(), abs_index(&h).to_bits());
    }

    #[test]
    fn abs_agrees_with_naive_sum(g in graph(1, 40)) {
        let naive = common::naive_abs(g.order(), &common::edges_of(&g));
        prop_assert!((abs_index(&g) - naive).abs() <= 1e-12 * naive.max(1.0));
    }

    #[test]
    fn adding_an_edge_raises_abs(g in graph(2, 30), pick in any::<prop::sample::Index>()) {
        // joining two isolated vertices adds an edge of weight zero
        let candidates: Vec<_> = g.non_edges().filter(|&(u, v)| g.degree(u) + g.degree(v) >= 1).collect();
        prop_assume!(!candidates.is_empty());
        let (u, v) = *pick.get(&candidates);
        prop_assert!(abs_index(&g.add_edge(u, v).unwrap()) > abs_index(&g));
    }

    #[test]
    fn complement_is_an_involution(g in graph(1, 64)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.order();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn join_is_symmetric_up_to_isomorphism(a in graph(1, 6), b in graph(1, 6)) {
        let ab = a.join(&b).unwrap();
        let ba = b.join(&a).unwrap();
        prop_assert!(is_isomorphic(&ab, &ba));
        prop_assert_eq!(ab.edge_count(), a.edge_count() + b.edge_count() + a.order() * b.order());
    }

    #[test]
    fn complement_commutes_with_join(a in graph(1, 6), b in graph(1, 6)) {
        // the complement of a join is the disjoint union of complements
        let lhs = a.join(&b).unwrap().complement();
        let rhs = a.complement().disjoint_union(&b.complement()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
