//! `Λ_r(G)`, bounded search for `Λ_r(k)`, optimal blow-ups and the
//! resulting edge estimates.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::constructions::turan_number;
use crate::graph::{
    blow_up_size, for_each_graph_up_to, to_graph6, EnumerationError, Filter, Graph, WeightVector,
};
use crate::invariants::{clique_number, k_coloring};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LambdaError {
    #[error("clique number is {found}, expected {expected} (witness {witness:?})")]
    CliqueNumber {
        expected: usize,
        found: usize,
        witness: Vec<usize>,
    },
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaReport {
    pub r: usize,
    pub value: usize,
    /// An `r`-clique of maximum degree sum, lexicographically first.
    pub clique: Vec<usize>,
    /// `r - 1 - deg_C(v)` for every vertex `v`.
    pub deficiencies: Vec<usize>,
}

/// Lexicographically first `r`-clique maximizing the degree sum.
fn heaviest_clique(g: &Graph, r: usize) -> Option<(Vec<usize>, usize)> {
    let deg = g.degrees();
    let mut best: Option<(Vec<usize>, usize)> = None;
    let mut cur = Vec::with_capacity(r);

    fn rec(
        g: &Graph,
        deg: &[usize],
        r: usize,
        cand: Vec<usize>,
        cur: &mut Vec<usize>,
        sum: usize,
        best: &mut Option<(Vec<usize>, usize)>,
    ) {
        if cur.len() == r {
            if best.as_ref().is_none_or(|(_, b)| sum > *b) {
                *best = Some((cur.clone(), sum));
            }
            return;
        }
        let need = r - cur.len();
        if cand.len() < need {
            return;
        }
        if let Some((_, b)) = best {
            let mut top: Vec<usize> = cand.iter().map(|&v| deg[v]).collect();
            top.sort_unstable_by(|a, b| b.cmp(a));
            if sum + top[..need].iter().sum::<usize>() <= *b {
                return;
            }
        }
        for (i, &v) in cand.iter().enumerate() {
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&x| g.has_edge(v, x)).collect();
            cur.push(v);
            rec(g, deg, r, next, cur, sum + deg[v], best);
            cur.pop();
        }
    }

    rec(g, &deg, r, (0..g.order()).collect(), &mut cur, 0, &mut best);
    best
}

/// `Λ_r(g) = (r-1)|V| - max_C Σ_{v∈C} deg(v)` over `r`-cliques `C`.
pub fn lambda_of(g: &Graph, r: usize) -> Result<LambdaReport, LambdaError> {
    let (omega, witness) = clique_number(g);
    if omega != r || r == 0 {
        return Err(LambdaError::CliqueNumber {
            expected: r,
            found: omega,
            witness,
        });
    }
    let (clique, sum) = heaviest_clique(g, r).expect("an r-clique exists");
    let n = g.order();
    let value = (r - 1) * n - sum;
    let deficiencies: Vec<usize> = (0..n)
        .map(|v| r - 1 - clique.iter().filter(|&&c| c != v && g.has_edge(v, c)).count().min(r - 1))
        .collect();
    assert_eq!(value, deficiencies.iter().sum::<usize>(), "the two expressions for Λ disagree");
    Ok(LambdaReport {
        r,
        value,
        clique,
        deficiencies,
    })
}

/// `max(k - r, 0)`, a lower bound on `Λ_r(k)`.
pub fn lambda_lower_bound(r: usize, k: usize) -> usize {
    k.saturating_sub(r)
}

/// Adds a vertex adjacent to everything. Turns a graph with `ω = r - 1`,
/// `χ ≥ k - 1` into one with `ω = r`, `χ ≥ k` and the same `Λ`.
pub fn monotone_transfer(g: &Graph) -> Graph {
    g.with_vertex(0..g.order())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaSearchResult {
    pub r: usize,
    pub k: usize,
    pub max_order: usize,
    /// Minimum of `Λ_r` over qualifying graphs in range.
    pub best: Option<usize>,
    /// Smallest order attaining `best`.
    pub order: Option<usize>,
    /// Graphs of that order attaining `best`, as graph6.
    pub realizing: Vec<String>,
    pub examined: u64,
    pub chromatic_checks: u64,
    /// Candidates whose chromatic number the budget could not settle.
    pub undecided: u64,
}

impl LambdaSearchResult {
    pub fn is_complete(&self) -> bool {
        self.undecided == 0
    }
}

/// Exhaustive minimum of `Λ_r` over `K_{r+1}`-free graphs of order at most
/// `max_order` with `ω = r` and `χ ≥ k`.
pub fn lambda_search(r: usize, k: usize, max_order: usize, budget: u64) -> Result<LambdaSearchResult, LambdaError> {
    if r < 2 || k < r {
        return Err(LambdaError::Parameters(format!("need k >= r >= 2, got r = {r}, k = {k}")));
    }
    let mut res = LambdaSearchResult {
        r,
        k,
        max_order,
        best: None,
        order: None,
        realizing: Vec::new(),
        examined: 0,
        chromatic_checks: 0,
        undecided: 0,
    };
    let mut key: Option<(usize, usize)> = None;
    let _ = for_each_graph_up_to(max_order, Filter::CliqueFree(r + 1), |g| {
        res.examined += 1;
        let Some((_, sum)) = heaviest_clique(g, r) else {
            return ControlFlow::Continue(());
        };
        let cand = ((r - 1) * g.order() - sum, g.order());
        if key.is_some_and(|b| cand > b) {
            return ControlFlow::Continue(());
        }
        res.chromatic_checks += 1;
        match k_coloring(g, k - 1, budget) {
            Ok(Some(_)) => {}
            Ok(None) => {
                if key != Some(cand) {
                    key = Some(cand);
                    res.realizing.clear();
                }
                res.realizing.push(to_graph6(g).expect("enumerated orders fit graph6"));
            }
            Err(_) => res.undecided += 1,
        }
        ControlFlow::Continue(())
    })?;
    if let Some((v, o)) = key {
        res.best = Some(v);
        res.order = Some(o);
    }
    Ok(res)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlowupOptimum {
    pub weights: WeightVector,
    pub edges: u64,
    /// Clique carrying all weight above one.
    pub clique: Vec<usize>,
    pub r: usize,
    pub lambda: usize,
    /// `r·e - (r·t(n, r) - Λ·n)`: the estimate's error, scaled by `r`.
    pub scaled_gap: i64,
}

/// All maximal cliques, each ascending, in Bron–Kerbosch order.
fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = *p.iter().chain(&x).max_by_key(|&&u| (p.iter().filter(|&&v| g.has_edge(u, v)).count(), usize::MAX - u)).unwrap();
        let mut p = p;
        let mut x = x;
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        for v in branch {
            r.push(v);
            let np = p.iter().copied().filter(|&u| g.has_edge(v, u)).collect();
            let nx = x.iter().copied().filter(|&u| g.has_edge(v, u)).collect();
            rec(g, r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    rec(g, &mut Vec::new(), (0..g.order()).collect(), Vec::new(), &mut out);
    out.sort();
    out
}

/// Integer weights (each at least one, summing to `n`) maximizing the
/// edge count of the blow-up.
///
/// Some optimum puts all surplus on a clique; on a fixed clique the gain
/// is separable and concave, so unit-by-unit greedy allocation is exact.
pub fn optimal_blowup(h: &Graph, n: usize) -> Result<BlowupOptimum, LambdaError> {
    let l = h.order();
    if l == 0 || n < l {
        return Err(LambdaError::Parameters(format!("need 0 < |V(h)| = {l} <= n = {n}")));
    }
    let deg = h.degrees();
    let mut best: Option<(u64, Vec<usize>, Vec<usize>)> = None;
    for c in maximal_cliques(h) {
        let mut w = vec![1usize; l];
        for _ in 0..n - l {
            let &i = c
                .iter()
                .max_by_key(|&&i| (deg[i] as i64 - (w[i] as i64 - 1), std::cmp::Reverse(i)))
                .expect("cliques are non-empty");
            w[i] += 1;
        }
        let e = blow_up_size(h, &w);
        if best.as_ref().is_none_or(|(b, _, _)| e > *b) {
            best = Some((e, w, c));
        }
    }
    let (edges, w, clique) = best.expect("a non-empty graph has a maximal clique");
    let (r, _) = clique_number(h);
    let lambda = lambda_of(h, r)?.value;
    let scaled_gap = r as i64 * edges as i64 - (r as i64 * turan_number(n, r) as i64 - (lambda * n) as i64);
    Ok(BlowupOptimum {
        weights: WeightVector::new(w).expect("weights start at one"),
        edges,
        clique,
        r,
        lambda,
        scaled_gap,
    })
}

/// `t(n, r) - Λ·n/r` as the exact fraction `(r·t(n, r) - Λ·n) / r`. Only
/// the leading terms: the true maximum differs by a bounded amount.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SizeEstimate {
    pub numerator: i64,
    pub denominator: i64,
}

impl SizeEstimate {
    pub fn floor(&self) -> i64 {
        self.numerator.div_euclid(self.denominator)
    }

    pub fn as_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

/// Leading-order maximum size of a `K_{r+1}`-free graph on `n` vertices
/// with `χ ≥ k`, given `Λ_r(k) = lambda`.
pub fn extremal_size_estimate(n: usize, r: usize, k: usize, lambda: usize) -> Result<SizeEstimate, LambdaError> {
    if r < 2 || k <= r {
        return Err(LambdaError::Parameters(format!("need k > r >= 2, got r = {r}, k = {k}")));
    }
    Ok(SizeEstimate {
        numerator: r as i64 * turan_number(n, r) as i64 - (lambda * n) as i64,
        denominator: r as i64,
    })
}
