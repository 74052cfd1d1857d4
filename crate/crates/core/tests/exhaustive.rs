//! Exhaustive checks over all small graphs.

use kfree_core::constructions::turan_number;
use kfree_core::graph::{enumerate_graphs, twin_classes, Filter, Graph};
use kfree_core::invariants::{aes_peel, clique_number, has_clique};
use kfree_core::lambda::{lambda_lower_bound, lambda_of, lambda_search};
use kfree_core::saturation::{is_saturated, saturate};

fn all_up_to(n: usize, filter: Filter) -> Vec<Graph> {
    (1..=n).flat_map(|k| enumerate_graphs(k, filter).unwrap()).collect()
}

/// Σ_v (r - 1 - deg_C(v)) maximized over every `r`-subset, by brute force.
fn lambda_brute(g: &Graph, r: usize) -> usize {
    let n = g.order();
    let mut best = usize::MAX;
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != r {
            continue;
        }
        let c: Vec<usize> = (0..n).filter(|&v| (mask >> v) & 1 == 1).collect();
        if !g.is_clique(&c) {
            continue;
        }
        let value: usize = (0..n)
            .map(|v| r - 1 - c.iter().filter(|&&x| g.has_edge(v, x)).count().min(r - 1))
            .sum();
        best = best.min(value);
    }
    best
}

#[test]
fn saturation_of_all_small_graphs() {
    for q in [3, 4] {
        for g in all_up_to(8, Filter::CliqueFree(q)) {
            let s = saturate(&g, q).unwrap();
            assert!(g.edges().all(|(u, v)| s.has_edge(u, v)));
            let rep = is_saturated(&s, q).unwrap();
            assert!(rep.is_saturated);
            for w in &rep.witnesses {
                let mut set = w.completion.clone().unwrap();
                set.extend([w.pair.0, w.pair.1]);
                let mut h = s.clone();
                h.add_edge(w.pair.0, w.pair.1);
                assert!(h.is_clique(&set));
            }
        }
    }
}

#[test]
fn dense_3_saturated_graphs_have_few_twin_classes() {
    for n in 1..=8 {
        let t = turan_number(n, 2) as i64;
        for g in enumerate_graphs(n, Filter::triangle_free()).unwrap() {
            if (g.size() as i64) <= t - 2 * n as i64 || !is_saturated(&g, 3).unwrap().is_saturated {
                continue;
            }
            let f = aes_peel(&g, 2).unwrap().removed.len();
            assert!(twin_classes(&g).len() <= f + (1 << (f + 1)), "{g:?}");
        }
    }
}

#[test]
fn lambda_formulas_agree() {
    for g in all_up_to(8, Filter::None) {
        let r = clique_number(&g).0;
        if r < 2 {
            continue;
        }
        let rep = lambda_of(&g, r).unwrap();
        assert_eq!(rep.value, lambda_brute(&g, r), "{g:?}");
        assert_eq!(rep.value, rep.deficiencies.iter().sum::<usize>());
        let sum: usize = rep.clique.iter().map(|&v| g.degree(v)).sum();
        assert_eq!(rep.value, (r - 1) * g.order() - sum);
    }
}

#[test]
fn search_respects_lower_bound() {
    for (r, k, max) in [(2, 3, 7), (3, 4, 7), (2, 2, 4), (3, 3, 5)] {
        let res = lambda_search(r, k, max, 1 << 20).unwrap();
        let best = res.best.unwrap();
        assert!(best >= lambda_lower_bound(r, k), "r = {r}, k = {k}");
        assert!(res.is_complete());
        for g6 in &res.realizing {
            let g = kfree_core::graph::from_graph6(g6).unwrap();
            assert_eq!(clique_number(&g).0, r);
            assert!(!has_clique(&g, r + 1));
            assert_eq!(lambda_of(&g, r).unwrap().value, best);
        }
    }
}
