use super::clique::clique_number;
use crate::graph::{Graph, Partition, PartitionKind};

/// A proper vertex coloring with colors `0..palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    palette: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("coloring has {got} entries, graph has {expected} vertices")]
    Length { expected: usize, got: usize },
    #[error("edge {0}-{1} is monochromatic")]
    Monochromatic(usize, usize),
}

impl Coloring {
    pub fn new(g: &Graph, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if colors.len() != g.order() {
            return Err(ColoringError::Length {
                expected: g.order(),
                got: colors.len(),
            });
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| colors[u] == colors[v]) {
            return Err(ColoringError::Monochromatic(u, v));
        }
        let palette = colors.iter().max().map_or(0, |&c| c + 1);
        Ok(Coloring { colors, palette })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn classes(&self) -> Partition {
        Partition::from_labels(PartitionKind::Coloring, &self.colors)
    }
}

/// The search gave up before deciding; `lower..=upper` brackets χ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("node budget {budget} exhausted with the chromatic number still in {lower}..={upper}")]
pub struct BudgetExhausted {
    pub lower: usize,
    pub upper: usize,
    pub budget: u64,
}

/// Exact chromatic number with an optimal coloring.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    chromatic_number_with_budget(g, u64::MAX).expect("unbounded search always finishes")
}

/// As [`chromatic_number`], giving up after `budget` search nodes.
pub fn chromatic_number_with_budget(g: &Graph, budget: u64) -> Result<(usize, Coloring), BudgetExhausted> {
    let greedy = dsatur_greedy(g);
    let upper = greedy.palette();
    let lower = clique_number(g).0;
    let mut spent = 0u64;
    for k in lower..upper {
        let mut search = Search::new(g, k, budget.saturating_sub(spent));
        let found = search.run();
        spent = spent.saturating_add(search.nodes);
        match found {
            Some(Some(c)) => return Ok((k, c)),
            Some(None) => {}
            None => {
                return Err(BudgetExhausted {
                    lower: k,
                    upper,
                    budget,
                })
            }
        }
    }
    Ok((upper, greedy))
}

/// Whether `g` admits a proper `r`-coloring, with a witness.
pub fn is_r_colorable(g: &Graph, r: usize) -> (bool, Option<Coloring>) {
    let c = k_coloring(g, r, u64::MAX).expect("unbounded search always finishes");
    (c.is_some(), c)
}

/// A proper `k`-coloring if one exists; `Err` when the budget runs out.
pub fn k_coloring(g: &Graph, k: usize, budget: u64) -> Result<Option<Coloring>, BudgetExhausted> {
    let mut search = Search::new(g, k, budget);
    search.run().ok_or(BudgetExhausted {
        lower: k,
        upper: g.order().max(k),
        budget,
    })
}

/// Greedy DSATUR: repeatedly color the most saturated vertex with its
/// smallest free color.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.order();
    let mut colors = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    let deg = g.degrees();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by(|&a, &b| (sat[a], deg[a]).cmp(&(sat[b], deg[b])).then(b.cmp(&a)))
            .expect("an uncolored vertex remains");
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        colors[v] = c;
        for u in g.neighbors(v) {
            if seen[u].len() <= c {
                seen[u].resize(c + 1, false);
            }
            if !seen[u][c] {
                seen[u][c] = true;
                sat[u] += 1;
            }
        }
    }
    Coloring::new(g, colors).expect("greedy coloring is proper")
}

const NONE: u16 = u16::MAX;

/// Backtracking DSATUR for a fixed number of colors, with forward checking
/// and symmetry breaking on unused colors.
struct Search<'a> {
    g: &'a Graph,
    k: usize,
    n: usize,
    color: Vec<u16>,
    forbidden: Vec<u32>,
    sat: Vec<u32>,
    deg: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, budget: u64) -> Self {
        let n = g.order();
        Search {
            g,
            k,
            n,
            color: vec![NONE; n],
            forbidden: vec![0; n * k.max(1)],
            sat: vec![0; n],
            deg: g.degrees(),
            nodes: 0,
            budget,
        }
    }

    /// `None` when the budget runs out.
    fn run(&mut self) -> Option<Option<Coloring>> {
        if self.n == 0 {
            return Some(Some(Coloring::new(self.g, vec![]).unwrap()));
        }
        if self.k == 0 {
            return Some(None);
        }
        if self.k >= self.n {
            return Some(Some(Coloring::new(self.g, (0..self.n).collect()).unwrap()));
        }
        match self.descend(0, 0) {
            Err(()) => None,
            Ok(false) => Some(None),
            Ok(true) => {
                let colors = self.color.iter().map(|&c| c as usize).collect();
                Some(Some(Coloring::new(self.g, colors).expect("search keeps colors proper")))
            }
        }
    }

    fn select(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0u32, 0usize);
        for v in 0..self.n {
            if self.color[v] == NONE {
                let kv = (self.sat[v], self.deg[v]);
                if best == usize::MAX || kv > key {
                    best = v;
                    key = kv;
                }
            }
        }
        best
    }

    fn descend(&mut self, colored: usize, used: usize) -> Result<bool, ()> {
        if colored == self.n {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let v = self.select();
        let limit = self.k.min(used + 1);
        for c in 0..limit {
            if self.forbidden[v * self.k + c] > 0 {
                continue;
            }
            let alive = self.assign(v, c);
            if alive && self.descend(colored + 1, used.max(c + 1))? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }

    /// Colors `v` with `c`; false if some uncolored neighbor is left
    /// without a free color.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c as u16;
        let mut alive = true;
        for u in self.g.neighbors(v) {
            let f = &mut self.forbidden[u * self.k + c];
            *f += 1;
            if *f == 1 {
                self.sat[u] += 1;
                if self.color[u] == NONE && self.sat[u] as usize == self.k {
                    alive = false;
                }
            }
        }
        alive
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = NONE;
        for u in self.g.neighbors(v) {
            let f = &mut self.forbidden[u * self.k + c];
            *f -= 1;
            if *f == 0 {
                self.sat[u] -= 1;
            }
        }
    }
}
