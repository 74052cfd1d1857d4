use super::clique::find_clique;
use super::coloring::is_r_colorable;
use crate::graph::{Graph, Partition, PartitionKind};

/// One removal: `vertex` had `degree` neighbors among the `order` vertices
/// still present.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeelStep {
    pub vertex: usize,
    pub degree: usize,
    pub order: usize,
}

impl PeelStep {
    /// The degree bound `deg <= (3r-4)/(3r-1) * order`, in integers.
    pub fn within_bound(&self, r: usize) -> bool {
        self.degree * (3 * r - 1) <= (3 * r - 4) * self.order
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelResult {
    /// Removed vertices in removal order.
    pub removed: Vec<usize>,
    pub steps: Vec<PeelStep>,
    /// Color classes of the remaining graph, in original labels.
    pub parts: Partition,
}

impl PeelResult {
    pub fn bound_respected(&self, r: usize) -> bool {
        self.steps.iter().all(|s| s.within_bound(r))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PeelError {
    #[error("graph contains a clique on {} vertices: {witness:?}", witness.len())]
    NotCliqueFree { witness: Vec<usize> },
    #[error("peeling needs r >= 2, got {0}")]
    RankTooSmall(usize),
}

/// Removes minimum-degree vertices (lowest label first) until the rest is
/// `r`-colorable.
pub fn aes_peel(g: &Graph, r: usize) -> Result<PeelResult, PeelError> {
    if r < 2 {
        return Err(PeelError::RankTooSmall(r));
    }
    if let Some(witness) = find_clique(g, r + 1, None) {
        return Err(PeelError::NotCliqueFree { witness });
    }
    let mut alive: Vec<usize> = (0..g.order()).collect();
    let mut removed = Vec::new();
    let mut steps = Vec::new();
    loop {
        let sub = g.induced(&alive);
        if let (true, Some(c)) = is_r_colorable(&sub, r) {
            let labels = c.colors();
            let mut blocks = vec![Vec::new(); r];
            for (i, &v) in alive.iter().enumerate() {
                blocks[labels[i]].push(v);
            }
            return Ok(PeelResult {
                removed,
                steps,
                parts: Partition::new(PartitionKind::RPartition, blocks),
            });
        }
        let (i, degree) = (0..alive.len())
            .map(|i| (i, sub.degree(i)))
            .min_by_key(|&(i, d)| (d, i))
            .expect("a non-colorable graph has vertices");
        steps.push(PeelStep {
            vertex: alive[i],
            degree,
            order: alive.len(),
        });
        removed.push(alive.remove(i));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_graphs_peel_nothing() {
        let p = aes_peel(&Graph::complete_multipartite(&[4, 4]), 2).unwrap();
        assert!(p.removed.is_empty());
        assert_eq!(p.parts.block_sizes(), vec![4, 4]);
    }

    #[test]
    fn c5_loses_one_vertex() {
        let c5 = Graph::cycle(5);
        let p = aes_peel(&c5, 2).unwrap();
        assert_eq!(p.removed, vec![0]);
        assert!(p.bound_respected(2));
        assert_eq!(p.parts.covered(), 4);
        for b in p.parts.blocks() {
            assert!(c5.is_independent(b));
        }
    }

    #[test]
    fn cliques_are_rejected() {
        assert_eq!(
            aes_peel(&Graph::complete(3), 2),
            Err(PeelError::NotCliqueFree { witness: vec![0, 1, 2] })
        );
        assert_eq!(aes_peel(&Graph::empty(2), 1), Err(PeelError::RankTooSmall(1)));
    }
}
