//! Extraction of a large complete tripartite subgraph from a 4-saturated
//! graph, and the two counting facts it relies on.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits;
use crate::constructions::turan_number;
use crate::graph::Graph;
use crate::invariants::{aes_peel, PeelError};
use crate::saturation::is_saturated;

pub const DEFAULT_C_PARAM: usize = 10;

/// Three disjoint independent sets, pairwise completely joined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripartiteCertificate {
    pub parts: [Vec<usize>; 3],
    pub covered: usize,
    pub order: usize,
    pub exceptional: usize,
    pub small: usize,
    pub kept_buckets: usize,
}

impl TripartiteCertificate {
    pub fn fraction(&self) -> f64 {
        if self.order == 0 {
            1.0
        } else {
            self.covered as f64 / self.order as f64
        }
    }

    /// Brute-force re-check against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), TripartiteError> {
        let mut seen = vec![false; g.order()];
        for p in &self.parts {
            for &x in p {
                if x >= g.order() || seen[x] {
                    return Err(TripartiteError::Certificate(format!("vertex {x} repeated or out of range")));
                }
                seen[x] = true;
            }
            for (i, &x) in p.iter().enumerate() {
                for &y in &p[i + 1..] {
                    if g.has_edge(x, y) {
                        return Err(TripartiteError::Certificate(format!("edge {x}-{y} inside a part")));
                    }
                }
            }
        }
        for i in 0..3 {
            for j in i + 1..3 {
                for &x in &self.parts[i] {
                    for &y in &self.parts[j] {
                        if !g.has_edge(x, y) {
                            return Err(TripartiteError::Certificate(format!("missing cross edge {x}-{y}")));
                        }
                    }
                }
            }
        }
        if self.covered != self.parts.iter().map(Vec::len).sum::<usize>() {
            return Err(TripartiteError::Certificate("coverage count is wrong".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TripartiteError {
    #[error("graph contains K4: {0:?}")]
    ContainsK4(Vec<usize>),
    #[error("graph is not 4-saturated: adding {0}-{1} creates no K4")]
    NotSaturated(usize, usize),
    #[error("invalid certificate: {0}")]
    Certificate(String),
    #[error(transparent)]
    Peel(#[from] PeelError),
}

/// Peels to a 3-partition, discards the exceptional vertices and the
/// neighborhoods that would break completeness, and keeps the large
/// buckets of vertices with equal neighborhoods in the removed set. The
/// remaining vertices of the buckets are then added greedily.
pub fn extract_tripartite(g: &Graph, c_param: usize) -> Result<TripartiteCertificate, TripartiteError> {
    let rep = is_saturated(g, 4).expect("q = 4 is valid");
    if let Some(k) = rep.clique {
        return Err(TripartiteError::ContainsK4(k));
    }
    if let Some((u, v)) = rep.missing().next() {
        return Err(TripartiteError::NotSaturated(u, v));
    }
    let n = g.order();
    let peel = aes_peel(g, 3)?;
    let mut part_of = vec![usize::MAX; n];
    for (i, b) in peel.parts.blocks().iter().enumerate() {
        for &x in b {
            part_of[x] = i;
        }
    }
    let words = bits::words_for(n).max(1);
    let mut removed = vec![0u64; words];
    let mut u_set = vec![0u64; words];
    for &v in &peel.removed {
        bits::set(&mut removed, v);
        bits::set(&mut u_set, v);
    }
    let mut small = 0;
    for &v in &peel.removed {
        let mut sides: Vec<Vec<usize>> = peel
            .parts
            .blocks()
            .iter()
            .map(|b| b.iter().copied().filter(|&x| g.has_edge(v, x)).collect())
            .collect();
        sides.sort_by_key(Vec::len);
        let is_small = sides[0].len() < c_param;
        for &x in &sides[0] {
            bits::set(&mut removed, x);
            if is_small {
                bits::set(&mut u_set, x);
            }
        }
        if is_small {
            small += 1;
        } else {
            for &x in &sides[1] {
                bits::set(&mut removed, x);
            }
        }
    }
    let mut buckets: BTreeMap<(usize, Vec<u64>), Vec<usize>> = BTreeMap::new();
    for w in (0..n).filter(|&w| !bits::test(&removed, w)) {
        let key: Vec<u64> = g.row(w).iter().zip(&u_set).map(|(a, b)| a & b).collect();
        buckets.entry((part_of[w], key)).or_default().push(w);
    }
    let threshold = 4 * (peel.removed.len() + 1) * n;
    let mut parts: [Vec<usize>; 3] = Default::default();
    let mut kept_buckets = 0;
    for ((p, _), b) in &buckets {
        if b.len() * b.len() >= threshold {
            parts[*p].extend(b);
            kept_buckets += 1;
        }
    }
    let mut cert = TripartiteCertificate {
        parts,
        covered: 0,
        order: n,
        exceptional: peel.removed.len(),
        small,
        kept_buckets,
    };
    cert.covered = cert.parts.iter().map(Vec::len).sum();
    cert.validate(g)?;

    let mut rest: Vec<(usize, &Vec<usize>)> = buckets.iter().map(|((p, _), b)| (*p, b)).collect();
    rest.sort_by_key(|(_, b)| std::cmp::Reverse(b.len()));
    for (p, b) in rest {
        for &w in b {
            if cert.parts[p].contains(&w) {
                continue;
            }
            let fits = (0..3)
                .filter(|&q| q != p)
                .all(|q| cert.parts[q].iter().all(|&x| g.has_edge(w, x)));
            if fits {
                cert.parts[p].push(w);
            }
        }
    }
    for p in cert.parts.iter_mut() {
        p.sort_unstable();
    }
    cert.covered = cert.parts.iter().map(Vec::len).sum();
    cert.validate(g)?;
    Ok(cert)
}

/// Maximum size of a triangle-free subgraph of `K_{a,b,c}`, by exhaustion.
///
/// Panics when `ab + bc + ca > 24`.
pub fn max_triangle_free_tripartite(a: usize, b: usize, c: usize) -> usize {
    let host = Graph::complete_multipartite(&[a, b, c]);
    let edges: Vec<(usize, usize)> = host.edges().collect();
    assert!(edges.len() <= 24, "too many subgraphs to search");
    let triangles: Vec<u32> = {
        let idx = |x: usize, y: usize| edges.iter().position(|&e| e == (x.min(y), x.max(y)));
        let mut t = Vec::new();
        for (i, &(x, y)) in edges.iter().enumerate() {
            for z in y + 1..host.order() {
                if let (Some(j), Some(k)) = (idx(x, z), idx(y, z)) {
                    t.push((1 << i) | (1 << j) | (1 << k));
                }
            }
        }
        t
    };
    (0u32..1 << edges.len())
        .filter(|m| triangles.iter().all(|t| m & t != *t))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// The bound `t(3m, 3) - m²/4` for triangle-free tripartite graphs on
/// parts `(m, m, m)`, rounded down.
pub fn tripartite_bound(m: usize) -> u64 {
    turan_number(3 * m, 3) - (m * m).div_ceil(4) as u64
}

/// `⌊b/a⌋` edge-disjoint copies of `K_{a,a,a}` inside `K_{a,b,c}`
/// (parts labeled `0..a`, `a..a+b`, `a+b..a+b+c`), for `a <= b <= c`.
pub fn balanced_packing(a: usize, b: usize, c: usize) -> Vec<[Vec<usize>; 3]> {
    assert!(0 < a && a <= b && b <= c, "need 0 < a <= b <= c");
    (0..b / a)
        .map(|j| {
            [
                (0..a).collect(),
                (a + j * a..a + (j + 1) * a).collect(),
                (a + b + j * a..a + b + (j + 1) * a).collect(),
            ]
        })
        .collect()
}
