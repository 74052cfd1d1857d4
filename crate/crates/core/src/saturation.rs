//! `K_q`-saturation: reports with completion witnesses, and greedy
//! saturation.

use serde::Serialize;

use crate::graph::Graph;
use crate::invariants::find_clique;

/// A non-edge and the lexicographically first `q - 2` vertices completing
/// it to a `K_q`, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonEdgeWitness {
    pub pair: (usize, usize),
    pub completion: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub q: usize,
    pub is_free: bool,
    /// A `K_q` in the graph when it is not `K_q`-free.
    pub clique: Option<Vec<usize>>,
    pub is_saturated: bool,
    pub witnesses: Vec<NonEdgeWitness>,
}

impl SaturationReport {
    /// Non-edges that can be added without creating a `K_q`.
    pub fn missing(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.witnesses.iter().filter(|w| w.completion.is_none()).map(|w| w.pair)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SaturationError {
    #[error("q must be at least 3, got {0}")]
    CliqueTooSmall(usize),
    #[error("graph already contains K_{}: {clique:?}", clique.len())]
    ContainsClique { clique: Vec<usize> },
}

fn completion(g: &Graph, u: usize, v: usize, q: usize) -> Option<Vec<usize>> {
    let common: Vec<u64> = g.row(u).iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
    find_clique(g, q - 2, Some(&common))
}

/// Full saturation report for `K_q`.
pub fn is_saturated(g: &Graph, q: usize) -> Result<SaturationReport, SaturationError> {
    if q < 3 {
        return Err(SaturationError::CliqueTooSmall(q));
    }
    let clique = find_clique(g, q, None);
    let witnesses: Vec<NonEdgeWitness> = g
        .non_edges()
        .map(|(u, v)| NonEdgeWitness {
            pair: (u, v),
            completion: completion(g, u, v, q),
        })
        .collect();
    let is_free = clique.is_none();
    let is_saturated = is_free && witnesses.iter().all(|w| w.completion.is_some());
    Ok(SaturationReport {
        q,
        is_free,
        clique,
        is_saturated,
        witnesses,
    })
}

/// Adds non-edges in lexicographic order whenever no `K_q` appears.
pub fn saturate(g: &Graph, q: usize) -> Result<Graph, SaturationError> {
    if q < 3 {
        return Err(SaturationError::CliqueTooSmall(q));
    }
    if let Some(clique) = find_clique(g, q, None) {
        return Err(SaturationError::ContainsClique { clique });
    }
    let mut h = g.clone();
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            if !h.has_edge(u, v) && completion(&h, u, v, q).is_none() {
                h.add_edge(u, v);
            }
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::turan_graph;

    #[test]
    fn report_examples() {
        assert!(is_saturated(&turan_graph(6, 3), 4).unwrap().is_saturated);
        assert!(is_saturated(&Graph::cycle(5), 3).unwrap().is_saturated);
        let p4 = is_saturated(&Graph::path(4), 3).unwrap();
        assert!(p4.is_free);
        assert!(!p4.is_saturated);
        assert_eq!(p4.missing().collect::<Vec<_>>(), vec![(0, 3)]);
        let k3 = is_saturated(&Graph::complete(3), 3).unwrap();
        assert!(!k3.is_free);
        assert_eq!(k3.clique, Some(vec![0, 1, 2]));
        assert_eq!(is_saturated(&Graph::empty(3), 2), Err(SaturationError::CliqueTooSmall(2)));
    }

    #[test]
    fn witnesses_complete_the_clique() {
        let g = turan_graph(7, 3);
        let rep = is_saturated(&g, 4).unwrap();
        for w in &rep.witnesses {
            let mut set = w.completion.clone().unwrap();
            set.extend([w.pair.0, w.pair.1]);
            let mut h = g.clone();
            h.add_edge(w.pair.0, w.pair.1);
            assert!(h.is_clique(&set));
        }
    }

    #[test]
    fn saturate_examples() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(saturate(&Graph::empty(4), 3).unwrap(), star);
        assert_eq!(saturate(&Graph::cycle(5), 3).unwrap(), Graph::cycle(5));
        let t = turan_graph(6, 3);
        let mut minus = t.clone();
        minus.remove_edge(0, 2);
        assert_eq!(saturate(&minus, 4).unwrap(), t);
        assert_eq!(
            saturate(&Graph::complete(3), 3),
            Err(SaturationError::ContainsClique { clique: vec![0, 1, 2] })
        );
    }
}
