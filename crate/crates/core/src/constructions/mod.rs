//! Closed-form quantities and the explicit graph families.
//!
//! Every constructor fixes its vertex labeling; [`Construction::groups`]
//! names the vertex sets used to build the graph so that outputs can be
//! inspected and reproduced exactly.

mod examples;
mod gadgets;

pub use examples::{example_3sat_twinfree, example_3sat_unbounded, example_no_small_blowup, example_rsat_twinfree};
pub use gadgets::{binomial, groetzsch, lambda25_gadget, lambda35_gadget, mycielskian};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("order {n} is below the minimum {min} for r = {r}")]
    OrderTooSmall { n: usize, r: usize, min: usize },
    #[error("r = {0} is outside the supported range")]
    RankOutOfRange(usize),
    #[error("level {l} outside 1..={max}")]
    LevelOutOfRange { l: usize, max: usize },
    #[error("no primed variant for n = {n}, r = {r}: the two modified classes have equal size")]
    NoPrimeVariant { n: usize, r: usize },
    #[error("invalid parameters: {0}")]
    Parameters(String),
}

/// A constructed graph together with its named vertex groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    pub groups: Vec<(String, Vec<usize>)>,
}

impl Construction {
    pub fn group(&self, name: &str) -> Option<&[usize]> {
        self.groups
            .iter()
            .find(|(g, _)| g == name)
            .map(|(_, v)| v.as_slice())
    }
}

/// Class sizes of `T(n, r)`, larger classes first.
pub fn turan_class_sizes(n: usize, r: usize) -> Vec<usize> {
    assert!(r >= 1, "Turán graphs need at least one class");
    let (q, rem) = (n / r, n % r);
    (0..r).map(|i| if i < rem { q + 1 } else { q }).collect()
}

/// Edge count `t(n, r)` of the Turán graph.
pub fn turan_number(n: usize, r: usize) -> u64 {
    let sizes = turan_class_sizes(n, r);
    let n = n as u64;
    let squares: u64 = sizes.iter().map(|&s| (s as u64) * (s as u64)).sum();
    (n * n - squares) / 2
}

/// `T(n, r)`, classes as consecutive blocks, larger classes first.
pub fn turan_graph(n: usize, r: usize) -> Graph {
    Graph::complete_multipartite(&turan_class_sizes(n, r))
}

/// Maximum size of a `K_{r+1}`-free graph of order `n` that is not
/// `r`-colorable.
pub fn h_value(n: usize, r: usize) -> Result<u64, ConstructionError> {
    if r < 2 {
        return Err(ConstructionError::RankOutOfRange(r));
    }
    if n < r + 3 {
        return Err(ConstructionError::OrderTooSmall { n, r, min: r + 3 });
    }
    let t = turan_number(n, r);
    Ok(if n > 2 * r { t - (n / r) as u64 + 1 } else { t - 2 })
}

/// Which of the two extremal families to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Plain,
    Prime,
}

/// Class sizes of `T(n-1, r)` in the order `V1, V2, V3, ...`.
fn extremal_layout(n: usize, r: usize) -> Vec<usize> {
    let mut sizes = turan_class_sizes(n - 1, r);
    if n > 2 * r {
        // two smallest classes first, larger of the two as V1
        sizes.sort_unstable();
        let (a, b) = (sizes[0], sizes[1]);
        let mut rest: Vec<usize> = sizes[2..].to_vec();
        rest.sort_unstable_by(|x, y| y.cmp(x));
        let mut out = vec![b, a];
        out.extend(rest);
        out
    } else {
        sizes.sort_unstable_by(|x, y| y.cmp(x));
        sizes
    }
}

/// The extremal graph `G_{n,r}`.
pub fn extremal_g(n: usize, r: usize) -> Result<Construction, ConstructionError> {
    extremal_family(n, r, 1, Variant::Plain)
}

/// Largest level `l` admitted by [`extremal_family`].
pub fn max_level(n: usize, r: usize, variant: Variant) -> Result<usize, ConstructionError> {
    h_value(n, r)?;
    let sizes = extremal_layout(n, r);
    match variant {
        Variant::Plain => Ok(sizes[0] - 1),
        Variant::Prime if sizes[0] != sizes[1] => Ok(sizes[1] - 1),
        Variant::Prime => Err(ConstructionError::NoPrimeVariant { n, r }),
    }
}

/// The graph `G^(l)` (plain) or `G'^(l)` (prime) of order `n`.
///
/// Layout: classes `V1, V2, ...` of `T(n-1, r)` as consecutive blocks,
/// `u = n - 1`, `v1` and `v2` the first vertices of `V1` and `V2`. The set
/// `W` consists of the first `l` vertices of `V1` (plain) or `V2` (prime),
/// so `W` always contains `v1` resp. `v2`.
pub fn extremal_family(n: usize, r: usize, l: usize, variant: Variant) -> Result<Construction, ConstructionError> {
    let max = max_level(n, r, variant)?;
    if l == 0 || l > max {
        return Err(ConstructionError::LevelOutOfRange { l, max });
    }
    let sizes = extremal_layout(n, r);
    let mut g = Graph::complete_multipartite(&sizes).with_vertex(std::iter::empty());
    let u = n - 1;
    let mut classes = Vec::with_capacity(r);
    let mut start = 0;
    for &s in &sizes {
        classes.push((start..start + s).collect::<Vec<_>>());
        start += s;
    }
    let (v1, v2) = (classes[0][0], classes[1][0]);
    for class in &classes[2..] {
        for &x in class {
            g.add_edge(u, x);
        }
    }
    g.add_edge(u, v1);
    g.add_edge(u, v2);
    g.remove_edge(v1, v2);
    let (host, other) = match variant {
        Variant::Plain => (0, v2),
        Variant::Prime => (1, v1),
    };
    let w: Vec<usize> = classes[host][..l].to_vec();
    for &x in &w[1..] {
        g.add_edge(u, x);
        g.remove_edge(other, x);
    }
    let mut groups: Vec<(String, Vec<usize>)> = classes
        .into_iter()
        .enumerate()
        .map(|(i, c)| (format!("V{}", i + 1), c))
        .collect();
    groups.push(("u".into(), vec![u]));
    groups.push(("W".into(), w));
    Ok(Construction { graph: g, groups })
}

/// Every valid `(variant, l)` for order `n` and rank `r`.
pub fn extremal_members(n: usize, r: usize) -> Result<Vec<(Variant, usize, Construction)>, ConstructionError> {
    let mut out = Vec::new();
    for variant in [Variant::Plain, Variant::Prime] {
        let max = match max_level(n, r, variant) {
            Ok(m) => m,
            Err(ConstructionError::NoPrimeVariant { .. }) => continue,
            Err(e) => return Err(e),
        };
        for l in 1..=max {
            out.push((variant, l, extremal_family(n, r, l, variant)?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::invariants::{clique_number, is_r_colorable};

    #[test]
    fn turan_numbers() {
        assert_eq!(turan_number(5, 2), 6);
        assert_eq!(turan_number(10, 3), 33);
        assert_eq!(turan_number(7, 4), 18);
        assert_eq!(turan_graph(6, 3), Graph::complete_multipartite(&[2, 2, 2]));
        assert_eq!(turan_graph(6, 3).size(), 12);
        assert_eq!(turan_graph(10, 3).size(), 33);
    }

    #[test]
    fn h_values() {
        assert_eq!(h_value(5, 2), Ok(5));
        assert_eq!(h_value(10, 3), Ok(31));
        assert_eq!(h_value(7, 4), Ok(16));
        assert_eq!(h_value(8, 2), Ok(13));
        assert_eq!(h_value(5, 3), Err(ConstructionError::OrderTooSmall { n: 5, r: 3, min: 6 }));
    }

    #[test]
    fn g52_is_c5() {
        let g = extremal_g(5, 2).unwrap().graph;
        assert!(are_isomorphic(&g, &Graph::cycle(5)));
    }

    #[test]
    fn g_10_3_meets_h() {
        let g = extremal_g(10, 3).unwrap().graph;
        assert_eq!(g.size() as u64, h_value(10, 3).unwrap());
        assert_eq!(clique_number(&g).0, 3);
        assert!(!is_r_colorable(&g, 3).0);
    }

    #[test]
    fn g72_is_not_bipartite() {
        assert!(!is_r_colorable(&extremal_g(7, 2).unwrap().graph, 2).0);
    }

    #[test]
    fn first_level_is_g() {
        let g = extremal_g(9, 3).unwrap();
        assert_eq!(extremal_family(9, 3, 1, Variant::Plain).unwrap(), g);
        assert_eq!(extremal_family(9, 3, 1, Variant::Prime).unwrap().graph, g.graph);
    }

    #[test]
    fn second_level_for_8_2() {
        let g = extremal_family(8, 2, 2, Variant::Plain).unwrap().graph;
        assert_eq!(g.size(), 13);
        let p = extremal_family(8, 2, 2, Variant::Prime).unwrap().graph;
        assert_eq!(p.size(), 13);
        assert!(!are_isomorphic(&g, &p));
    }

    #[test]
    fn level_bounds_are_enforced() {
        assert_eq!(
            extremal_family(8, 2, 4, Variant::Plain),
            Err(ConstructionError::LevelOutOfRange { l: 4, max: 3 })
        );
        assert_eq!(
            extremal_family(8, 3, 1, Variant::Prime),
            Err(ConstructionError::NoPrimeVariant { n: 8, r: 3 })
        );
        assert!(extremal_family(7, 2, 0, Variant::Plain).is_err());
    }

    #[test]
    fn every_member_has_the_extremal_properties() {
        for r in 2..=4 {
            for n in r + 3..=14 {
                let h = h_value(n, r).unwrap();
                for (_, _, c) in extremal_members(n, r).unwrap() {
                    assert_eq!(c.graph.size() as u64, h, "n = {n}, r = {r}");
                    assert_eq!(clique_number(&c.graph).0, r);
                    assert!(!is_r_colorable(&c.graph, r).0);
                }
            }
        }
    }
}
