//! Randomized invariants of the kernel and the graph operations.

use kfree_core::graph::{
    are_isomorphic, blow_up, blow_up_size, canonical_form, from_graph6, to_graph6, twin_classes, Graph,
    WeightVector,
};
use kfree_core::invariants::{aes_peel, chromatic_number, clique_number, has_clique};
use kfree_core::saturation::{is_saturated, saturate};
use kfree_core::symmetrization::{multipartite_classes, zykov, zykov_reduce};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for j in 0..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        g.add_edge(i, j);
                    }
                }
            }
            g
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn triangle_free_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_map(|g| {
        let mut h = Graph::empty(g.order());
        for (u, v) in g.edges() {
            if !h.neighbors(u).any(|w| h.has_edge(v, w)) {
                h.add_edge(u, v);
            }
        }
        h
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_with_perm(24)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn blow_up_multiplies_edges(g in graph(8), seed in prop::collection::vec(1usize..4, 8)) {
        let w = WeightVector::new(seed[..g.order()].to_vec()).unwrap();
        let b = blow_up(&g, &w).unwrap();
        let expected: u64 = g.edges().map(|(u, v)| (w.as_slice()[u] * w.as_slice()[v]) as u64).sum();
        prop_assert_eq!(b.size() as u64, expected);
        prop_assert_eq!(blow_up_size(&g, w.as_slice()), expected);
        prop_assert_eq!(b.order(), w.total());
        prop_assert_eq!(clique_number(&b).0, clique_number(&g).0);
    }

    #[test]
    fn twin_classes_are_exact(g in graph(14)) {
        let p = twin_classes(&g);
        prop_assert!(p.covers(g.order()));
        let reps: Vec<usize> = p.blocks().iter().map(|b| b[0]).collect();
        for b in p.blocks() {
            for &x in b {
                prop_assert_eq!(g.row(x), g.row(b[0]));
            }
        }
        for (i, &a) in reps.iter().enumerate() {
            for &b in &reps[i + 1..] {
                prop_assert_ne!(g.row(a), g.row(b));
            }
        }
    }

    #[test]
    fn zykov_matches_deletion(g in graph(10), a in 0usize..10, b in 0usize..10) {
        let n = g.order();
        prop_assume!(n >= 2);
        let (u, v) = (a % n, b % n);
        prop_assume!(u != v);
        let z = zykov(&g, u, v).unwrap();
        let del = g.delete_vertex(u);
        prop_assert_eq!(clique_number(&z).0, clique_number(&del).0);
        prop_assert_eq!(chromatic_number(&z).0, chromatic_number(&del).0);
        prop_assert_eq!(z.row(u).iter().zip(z.row(v)).all(|(x, y)| x == y), true);
    }

    #[test]
    fn reduction_reaches_turan(g in graph(12)) {
        let (out, trace) = zykov_reduce(&g);
        let omega = clique_number(&g).0;
        let s = multipartite_classes(&out).unwrap();
        prop_assert!(s <= omega.max(1) || g.order() == 0);
        prop_assert!(out.size() >= g.size());
        prop_assert_eq!(trace.replay(&g).unwrap(), out);
        prop_assert!(trace.steps.iter().all(|s| s.edge_delta >= 0));
    }

    #[test]
    fn saturation_completes(g in triangle_free_graph(12)) {
        let s = saturate(&g, 3).unwrap();
        prop_assert!(g.edges().all(|(u, v)| s.has_edge(u, v)));
        prop_assert!(is_saturated(&s, 3).unwrap().is_saturated);
    }

    #[test]
    fn coloring_is_proper_and_bounded(g in graph(14)) {
        let (chi, c) = chromatic_number(&g);
        prop_assert!(c.is_proper(&g));
        prop_assert_eq!(c.palette(), chi);
        let (omega, w) = clique_number(&g);
        prop_assert!(g.is_clique(&w));
        prop_assert!(!has_clique(&g, omega + 1));
        prop_assert!(omega <= chi);
    }

    #[test]
    fn peeling_respects_degree_bound(g in triangle_free_graph(16)) {
        let p = aes_peel(&g, 2).unwrap();
        prop_assert!(p.bound_respected(2));
        for b in p.parts.blocks() {
            prop_assert!(g.is_independent(b));
        }
        prop_assert_eq!(p.parts.covered() + p.removed.len(), g.order());
    }
}
