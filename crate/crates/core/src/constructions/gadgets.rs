use super::Construction;
use crate::graph::Graph;

/// Mycielski construction: vertices `0..n` copy `g`, `n + i` shadows `i`,
/// `2n` is joined to every shadow.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.order();
    let mut m = Graph::empty(2 * n + 1);
    for (a, b) in g.edges() {
        m.add_edge(a, b);
        m.add_edge(n + a, b);
        m.add_edge(n + b, a);
    }
    for i in 0..n {
        m.add_edge(n + i, 2 * n);
    }
    m
}

/// The Grötzsch graph, the Mycielskian of `C5`.
pub fn groetzsch() -> Graph {
    mycielskian(&Graph::cycle(5))
}

/// The 12-vertex `K4`-free, 5-chromatic graph with `Λ_3 = 2`.
///
/// Labels: `v1 v2 v3 a12 b12 b23 c23 a13 b13 c13 x y` are `0..12`.
pub fn lambda35_gadget() -> Construction {
    const NAMES: [&str; 12] = ["v1", "v2", "v3", "a12", "b12", "b23", "c23", "a13", "b13", "c13", "x", "y"];
    let id = |s: &str| NAMES.iter().position(|&t| t == s).unwrap();
    let mut g = Graph::empty(12);
    let mut join = |a: &str, b: &str| g.add_edge(id(a), id(b));
    join("v1", "v2");
    join("v2", "v3");
    join("v1", "v3");
    for (name, ends) in [
        ("a12", ["v1", "v2"]),
        ("b12", ["v1", "v2"]),
        ("b23", ["v2", "v3"]),
        ("c23", ["v2", "v3"]),
        ("a13", ["v1", "v3"]),
        ("b13", ["v1", "v3"]),
        ("c13", ["v1", "v3"]),
    ] {
        for e in ends {
            join(name, e);
        }
    }
    for t in ["v1", "a12", "a13", "y", "b12", "b23", "b13"] {
        join("x", t);
    }
    for t in ["v3", "c23", "c13", "b12", "b23", "b13"] {
        join("y", t);
    }
    for a in ["a12", "a13"] {
        for c in ["c23", "c13"] {
            if a[1..] != c[1..] {
                join(a, c);
            }
        }
    }
    Construction {
        graph: g,
        groups: NAMES.iter().enumerate().map(|(i, s)| (s.to_string(), vec![i])).collect(),
    }
}

/// The triangle-free graph built on `F = C5 + K1` with `Λ_2 = 6`.
///
/// Labels: `F` is `0..6` (cycle `0..5`, isolated `5`), then `v = 6`,
/// `w = 7`, then `v_I` for each independent set `I` of `F` in increasing
/// bitmask order, then the `w_I` in the same order. With `include_empty`
/// the empty set counts as an independent set.
pub fn lambda25_gadget(include_empty: bool) -> Construction {
    let f = Graph::cycle(5).with_vertex(std::iter::empty());
    let sets: Vec<u32> = (0u32..64)
        .filter(|&m| include_empty || m != 0)
        .filter(|&m| f.edges().all(|(a, b)| (m >> a) & 1 == 0 || (m >> b) & 1 == 0))
        .collect();
    let k = sets.len();
    let (v, w) = (6, 7);
    let vi = |i: usize| 8 + i;
    let wi = |i: usize| 8 + k + i;
    let mut g = Graph::empty(8 + 2 * k);
    for (a, b) in f.edges() {
        g.add_edge(a, b);
    }
    g.add_edge(v, w);
    for (i, &si) in sets.iter().enumerate() {
        g.add_edge(vi(i), v);
        g.add_edge(wi(i), w);
        for x in 0..6 {
            if (si >> x) & 1 == 1 {
                g.add_edge(vi(i), x);
                g.add_edge(wi(i), x);
            }
        }
        for (j, &sj) in sets.iter().enumerate() {
            if si & sj == 0 {
                g.add_edge(vi(i), wi(j));
            }
        }
    }
    Construction {
        graph: g,
        groups: vec![
            ("F".into(), (0..6).collect()),
            ("v".into(), vec![v]),
            ("w".into(), vec![w]),
            ("v_I".into(), (0..k).map(vi).collect()),
            ("w_I".into(), (0..k).map(wi).collect()),
        ],
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, canonical_form};
    use crate::invariants::{chromatic_number, clique_number, has_clique};

    #[test]
    fn groetzsch_parameters() {
        let g = groetzsch();
        assert_eq!(g.order(), 11);
        assert_eq!(g.size(), 20);
        assert_eq!(clique_number(&g).0, 2);
        assert_eq!(chromatic_number(&g).0, 4);
    }

    #[test]
    fn groetzsch_labelings_agree() {
        let g = groetzsch();
        let perm = [7, 3, 10, 0, 5, 1, 9, 2, 8, 4, 6];
        let h = g.permuted(&perm);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn lambda35_parameters() {
        let g = lambda35_gadget().graph;
        assert_eq!(g.order(), 12);
        assert_eq!(g.size(), 33);
        assert_eq!(clique_number(&g).0, 3);
        assert_eq!(chromatic_number(&g).0, 5);
    }

    #[test]
    fn lambda25_orders() {
        let inclusive = lambda25_gadget(true);
        assert_eq!(inclusive.group("v_I").unwrap().len(), 22);
        assert_eq!(inclusive.graph.order(), 52);
        let exclusive = lambda25_gadget(false);
        assert_eq!(exclusive.graph.order(), 50);
        assert!(!has_clique(&inclusive.graph, 3));
        assert!(!has_clique(&exclusive.graph, 3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(2, 1), 2);
        assert_eq!(binomial(3, 5), 0);
    }
}
