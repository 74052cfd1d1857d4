//! Zykov symmetrization, increasing reduction to a complete multipartite
//! graph, and edge switches around a singleton color class.

use crate::graph::{twin_classes, Graph, Partition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetrizationError {
    #[error("vertex {0} used twice")]
    SameVertex(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(usize, usize),
    #[error("switch precondition failed: {0}")]
    Switch(String),
    #[error("trace step {0} does not apply to the graph")]
    Replay(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Zykov,
    Switch,
}

/// One recorded modification.
///
/// For a Zykov step `u` became a twin of `v`. For a switch the edge `uv`
/// was replaced by `vw`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    pub u: usize,
    pub v: usize,
    pub w: Option<usize>,
    pub was_adjacent: bool,
    pub edge_delta: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymmetrizationTrace {
    pub steps: Vec<Step>,
}

impl SymmetrizationTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-applies every step to `g`, checking the recorded facts.
    pub fn replay(&self, g: &Graph) -> Result<Graph, SymmetrizationError> {
        let mut cur = g.clone();
        for (i, s) in self.steps.iter().enumerate() {
            if s.u >= cur.order() || s.v >= cur.order() || cur.has_edge(s.u, s.v) != s.was_adjacent {
                return Err(SymmetrizationError::Replay(i));
            }
            let next = match s.kind {
                StepKind::Zykov => zykov(&cur, s.u, s.v).map_err(|_| SymmetrizationError::Replay(i))?,
                StepKind::Switch => {
                    let w = s.w.ok_or(SymmetrizationError::Replay(i))?;
                    if w >= cur.order() || cur.has_edge(s.v, w) || s.v == w {
                        return Err(SymmetrizationError::Replay(i));
                    }
                    let mut h = cur.clone();
                    h.remove_edge(s.u, s.v);
                    h.add_edge(s.v, w);
                    h
                }
            };
            if next.size() as i64 - cur.size() as i64 != s.edge_delta {
                return Err(SymmetrizationError::Replay(i));
            }
            cur = next;
        }
        Ok(cur)
    }
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<(), SymmetrizationError> {
    for x in [u, v] {
        if x >= g.order() {
            return Err(SymmetrizationError::OutOfRange {
                vertex: x,
                order: g.order(),
            });
        }
    }
    if u == v {
        return Err(SymmetrizationError::SameVertex(u));
    }
    Ok(())
}

/// Makes `u` a twin of `v`; if they were adjacent the edge `uv` goes too.
pub fn zykov(g: &Graph, u: usize, v: usize) -> Result<Graph, SymmetrizationError> {
    check_pair(g, u, v)?;
    let mut h = g.clone();
    let old: Vec<usize> = g.neighbors(u).collect();
    for x in old {
        h.remove_edge(u, x);
    }
    let new: Vec<usize> = g.neighbors(v).filter(|&x| x != u).collect();
    for x in new {
        h.add_edge(u, x);
    }
    Ok(h)
}

/// Whether `Z_{u,v}` is increasing, i.e. `deg(u) <= deg(v)`.
pub fn is_increasing(g: &Graph, u: usize, v: usize) -> Result<bool, SymmetrizationError> {
    check_pair(g, u, v)?;
    if g.has_edge(u, v) {
        return Err(SymmetrizationError::Adjacent(u, v));
    }
    Ok(g.degree(u) <= g.degree(v))
}

/// Merges non-adjacent twin classes by increasing symmetrizations until
/// the graph is complete multipartite.
///
/// The pair of classes with lexicographically smallest representatives is
/// merged first; the class of smaller degree becomes twins of the other,
/// and on equal degrees the class with the larger representative moves.
pub fn zykov_reduce(g: &Graph) -> (Graph, SymmetrizationTrace) {
    let mut cur = g.clone();
    let mut trace = SymmetrizationTrace::default();
    loop {
        let classes = twin_classes(&cur);
        let blocks = classes.blocks();
        let pair = (0..blocks.len())
            .flat_map(|i| (i + 1..blocks.len()).map(move |j| (i, j)))
            .find(|&(i, j)| !cur.has_edge(blocks[i][0], blocks[j][0]));
        let Some((i, j)) = pair else {
            return (cur, trace);
        };
        let (a, b) = (blocks[i][0], blocks[j][0]);
        let (mover, target) = if cur.degree(b) <= cur.degree(a) { (j, a) } else { (i, b) };
        for &x in &blocks[mover] {
            let next = zykov(&cur, x, target).expect("distinct vertices");
            trace.steps.push(Step {
                kind: StepKind::Zykov,
                u: x,
                v: target,
                w: None,
                was_adjacent: false,
                edge_delta: next.size() as i64 - cur.size() as i64,
            });
            cur = next;
        }
    }
}

/// Number of classes of a complete multipartite graph, or `None` if `g`
/// is not complete multipartite.
pub fn multipartite_classes(g: &Graph) -> Option<usize> {
    let classes = twin_classes(g);
    let blocks = classes.blocks();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if !g.has_edge(blocks[i][0], blocks[j][0]) {
                return None;
            }
        }
    }
    Some(blocks.len())
}

/// Replaces the edge `uv` by `vw` after checking the switch configuration:
/// `{u}` is a block of `parts`, every block is independent, `v` and `w` are
/// non-adjacent neighbors of `u` in different blocks, and `v2 != v` is
/// another neighbor of `u` in the block of `v`.
pub fn switch_edge(
    g: &Graph,
    parts: &Partition,
    u: usize,
    v: usize,
    w: usize,
    v2: usize,
) -> Result<Graph, SymmetrizationError> {
    let fail = |m: String| Err(SymmetrizationError::Switch(m));
    for x in [u, v, w, v2] {
        if x >= g.order() {
            return Err(SymmetrizationError::OutOfRange {
                vertex: x,
                order: g.order(),
            });
        }
    }
    if !parts.covers(g.order()) {
        return fail("partition does not cover the graph".into());
    }
    if let Some(b) = parts.blocks().iter().find(|b| !g.is_independent(b)) {
        return fail(format!("block {b:?} is not independent"));
    }
    let block = |x: usize| parts.block_of(x).expect("covered");
    if parts.blocks()[block(u)] != [u] {
        return fail(format!("{u} is not a singleton block"));
    }
    for x in [v, w, v2] {
        if !g.has_edge(u, x) {
            return fail(format!("{x} is not a neighbor of {u}"));
        }
    }
    if block(v) == block(w) {
        return fail(format!("{v} and {w} share a block"));
    }
    if g.has_edge(v, w) {
        return fail(format!("{v} and {w} are adjacent"));
    }
    if v2 == v || block(v2) != block(v) {
        return fail(format!("{v2} is not a second neighbor of {u} in the block of {v}"));
    }
    let mut h = g.clone();
    h.remove_edge(u, v);
    h.add_edge(v, w);
    Ok(h)
}

/// Lexicographically first valid switch `(v, w, v2)` at `u`.
pub fn find_switch(g: &Graph, parts: &Partition, u: usize) -> Option<(usize, usize, usize)> {
    let nbrs: Vec<usize> = g.neighbors(u).collect();
    for &v in &nbrs {
        for &w in &nbrs {
            if w == v || g.has_edge(v, w) || parts.block_of(v) == parts.block_of(w) {
                continue;
            }
            if let Some(&v2) = nbrs.iter().find(|&&x| x != v && parts.block_of(x) == parts.block_of(v)) {
                return Some((v, w, v2));
            }
        }
    }
    None
}

/// Applies switches at `u` until none is possible.
pub fn run_switches(g: &Graph, parts: &Partition, u: usize) -> Result<(Graph, SymmetrizationTrace), SymmetrizationError> {
    let mut cur = g.clone();
    let mut trace = SymmetrizationTrace::default();
    while let Some((v, w, v2)) = find_switch(&cur, parts, u) {
        let next = switch_edge(&cur, parts, u, v, w, v2)?;
        trace.steps.push(Step {
            kind: StepKind::Switch,
            u,
            v,
            w: Some(w),
            was_adjacent: true,
            edge_delta: 0,
        });
        cur = next;
    }
    Ok((cur, trace))
}
