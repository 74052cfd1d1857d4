//! Enumeration cross-checked against brute force over labeled graphs.

use kfree_core::graph::{
    canonical_form, enumerate_graphs, for_each_graph, from_graph6, to_graph6, Filter, Graph,
};
use std::collections::HashSet;
use std::ops::ControlFlow;

/// Every labeled graph on `n` vertices, bucketed by canonical form.
fn labeled_oracle(n: usize, keep: impl Fn(&Graph) -> bool) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut classes = HashSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| (mask >> i) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if keep(&g) {
            classes.insert(canonical_form(&g));
        }
    }
    classes.len()
}

fn triangle_free(g: &Graph) -> bool {
    g.edges()
        .all(|(u, v)| !g.neighbors(u).any(|w| g.has_edge(v, w)))
}

fn count(n: usize, filter: Filter) -> usize {
    let mut c = 0;
    let _ = for_each_graph(n, filter, |_| {
        c += 1;
        ControlFlow::Continue(())
    })
    .unwrap();
    c
}

#[test]
fn counts_match_labeled_oracle() {
    for n in 1..=6 {
        assert_eq!(count(n, Filter::None), labeled_oracle(n, |_| true), "n = {n}");
        assert_eq!(
            count(n, Filter::triangle_free()),
            labeled_oracle(n, triangle_free),
            "triangle-free, n = {n}"
        );
    }
}

#[test]
fn order_eight_counts() {
    assert_eq!(count(8, Filter::None), 12346);
}

#[test]
fn triangle_free_counts_to_eleven() {
    assert_eq!(count(10, Filter::triangle_free()), 12172);
    assert_eq!(count(11, Filter::triangle_free()), 105071);
}

#[test]
fn graph6_round_trips_every_small_graph() {
    for n in 0..=8 {
        for g in enumerate_graphs(n, Filter::None).unwrap() {
            assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
        }
    }
}
