//! Isomorph-free generation by canonical augmentation.
//!
//! A graph of order `n` is produced from its canonical parent of order
//! `n - 1` by appending a vertex. The child is accepted only when the new
//! vertex lies in the orbit singled out by an isomorphism-invariant rule,
//! so each isomorphism class has exactly one parent; isomorphic siblings
//! are removed per parent. Hereditary filters prune during generation.

use super::canon::{canonical_labeling, rooted_form};
use super::Graph;
use std::collections::HashSet;
use std::ops::ControlFlow;

/// Largest order accepted for unrestricted enumeration.
pub const MAX_UNRESTRICTED_ORDER: usize = 11;

/// Largest order accepted with a triangle-free (or stronger) filter.
const MAX_TRIANGLE_FREE_ORDER: usize = 16;

/// Hereditary property enforced during generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    None,
    /// No clique on `q` vertices.
    CliqueFree(usize),
}

impl Filter {
    pub fn triangle_free() -> Self {
        Filter::CliqueFree(3)
    }

    /// Largest order this filter may be enumerated at.
    pub fn max_order(self) -> usize {
        match self {
            Filter::CliqueFree(q) if q <= 3 => MAX_TRIANGLE_FREE_ORDER,
            _ => MAX_UNRESTRICTED_ORDER,
        }
    }

    fn forbidden_in_neighborhood(self) -> Option<usize> {
        match self {
            Filter::None => None,
            Filter::CliqueFree(q) => Some(q.saturating_sub(1)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EnumerationError {
    #[error(
        "enumeration of order {n} with filter {filter:?} is infeasible (limit {limit}); \
         roughly {estimate:.2e} isomorphism classes without a filter"
    )]
    Infeasible {
        n: usize,
        filter: Filter,
        limit: usize,
        estimate: f64,
    },
}

/// Rough count 2^C(n,2) / n! of unlabeled graphs on `n` vertices.
fn class_estimate(n: usize) -> f64 {
    let log2 = (n * n.saturating_sub(1) / 2) as f64 - (1..=n).map(|k| (k as f64).log2()).sum::<f64>();
    log2.exp2()
}

fn check(n: usize, filter: Filter) -> Result<(), EnumerationError> {
    let limit = filter.max_order();
    if n > limit {
        return Err(EnumerationError::Infeasible {
            n,
            filter,
            limit,
            estimate: class_estimate(n),
        });
    }
    Ok(())
}

/// One representative per isomorphism class of order `n`, each in
/// canonical form, sorted.
pub fn enumerate_graphs(n: usize, filter: Filter) -> Result<Vec<Graph>, EnumerationError> {
    let mut out = Vec::new();
    let _ = for_each_graph(n, filter, |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out)
}

/// Streams the classes of order `n` in generation order.
pub fn for_each_graph<F>(n: usize, filter: Filter, mut visit: F) -> Result<ControlFlow<()>, EnumerationError>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    check(n, filter)?;
    Ok(descend(&Graph::empty(0), n, filter, false, &mut visit))
}

/// Streams the classes of every order `0..=max_order`, parents before
/// children.
pub fn for_each_graph_up_to<F>(
    max_order: usize,
    filter: Filter,
    mut visit: F,
) -> Result<ControlFlow<()>, EnumerationError>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    check(max_order, filter)?;
    Ok(descend(&Graph::empty(0), max_order, filter, true, &mut visit))
}

fn descend(
    g: &Graph,
    target: usize,
    filter: Filter,
    every_order: bool,
    visit: &mut dyn FnMut(&Graph) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if every_order || g.order() == target {
        visit(g)?;
    }
    if g.order() == target {
        return ControlFlow::Continue(());
    }
    for child in children(g, filter) {
        descend(&child, target, filter, every_order, visit)?;
    }
    ControlFlow::Continue(())
}

/// The generation tree cut at a fixed depth: subtrees below the roots are
/// disjoint and together cover every class of the target order, so a run
/// can be resumed from any root index.
#[derive(Debug, Clone)]
pub struct EnumerationPlan {
    n: usize,
    filter: Filter,
    roots: Vec<Graph>,
}

impl EnumerationPlan {
    pub fn new(n: usize, filter: Filter, split_depth: usize) -> Result<Self, EnumerationError> {
        check(n, filter)?;
        let depth = split_depth.min(n);
        let mut roots = Vec::new();
        let _ = descend(&Graph::empty(0), depth, filter, false, &mut |g| {
            roots.push(g.clone());
            ControlFlow::Continue(())
        });
        Ok(EnumerationPlan { n, filter, roots })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn filter(&self) -> Filter {
        self.filter
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Graph] {
        &self.roots
    }

    /// Visits every class of the target order below root `index`.
    pub fn run_chunk<F>(&self, index: usize, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&Graph) -> ControlFlow<()>,
    {
        descend(&self.roots[index], self.n, self.filter, false, &mut visit)
    }
}

/// Accepted canonical children of a canonical parent.
fn children(parent: &Graph, filter: Filter) -> Vec<Graph> {
    let p = parent.order();
    assert!(p < 64, "enumeration is limited to orders below 65");
    let rows: Vec<u64> = (0..p).map(|v| parent.row(v)[0]).collect();
    let forbidden = filter.forbidden_in_neighborhood();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut subsets = Vec::new();
    if forbidden == Some(0) {
        return out;
    }
    free_subsets(&rows, forbidden, 0, 0, &mut subsets);
    let parent_deg: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    for s in subsets {
        if let Some(form) = accept(parent, &rows, &parent_deg, s) {
            if seen.insert(form.clone()) {
                out.push(form);
            }
        }
    }
    out
}

/// All subsets of `0..rows.len()` containing no clique of size `forbidden`.
fn free_subsets(rows: &[u64], forbidden: Option<usize>, start: usize, current: u64, out: &mut Vec<u64>) {
    out.push(current);
    for x in start..rows.len() {
        let ok = match forbidden {
            None => true,
            Some(k) => !has_clique(rows, current & rows[x], k - 1),
        };
        if ok {
            free_subsets(rows, forbidden, x + 1, current | (1u64 << x), out);
        }
    }
}

/// Whether the vertices of `set` contain a clique on `k` vertices.
fn has_clique(rows: &[u64], set: u64, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (set.count_ones() as usize) < k {
        return false;
    }
    let mut rest = set;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(rows, rest & rows[x], k - 1) {
            return true;
        }
    }
    false
}

/// Canonical form of `parent + v` with `N(v) = s`, if the new vertex is
/// in the distinguished orbit.
fn accept(parent: &Graph, rows: &[u64], parent_deg: &[u32], s: u64) -> Option<Graph> {
    let p = parent.order();
    let mut deg: Vec<u32> = parent_deg.to_vec();
    let mut x = s;
    while x != 0 {
        deg[x.trailing_zeros() as usize] += 1;
        x &= x - 1;
    }
    deg.push(s.count_ones());
    let child_row = |v: usize| if v == p { s } else { rows[v] | (((s >> v) & 1) << p) };
    let key = |v: usize| {
        let mut sum = 0u32;
        let mut r = child_row(v);
        while r != 0 {
            sum += deg[r.trailing_zeros() as usize];
            r &= r - 1;
        }
        (deg[v], sum)
    };
    let keys: Vec<(u32, u32)> = (0..=p).map(key).collect();
    let best = *keys.iter().max().expect("child is non-empty");
    if keys[p] != best {
        return None;
    }
    let child = parent.with_vertex((0..p).filter(|&v| (s >> v) & 1 == 1));
    let cl = canonical_labeling(&child);
    if keys.iter().filter(|&&k| k == best).count() == 1 {
        return Some(cl.form);
    }
    let w = *cl
        .labeling
        .iter()
        .rev()
        .find(|&&v| keys[v] == best)
        .expect("p itself attains the maximum");
    if w == p || cl.orbits[w] == cl.orbits[p] || rooted_form(&child, w) == rooted_form(&child, p) {
        Some(cl.form)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn all_graph_counts() {
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(count(n, Filter::None), e, "n = {n}");
        }
    }

    #[test]
    fn triangle_free_counts() {
        let expected = [1, 1, 2, 3, 7, 14, 38, 107, 410, 1897];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(count(n, Filter::triangle_free()), e, "n = {n}");
        }
    }

    #[test]
    fn clique_free_filter_matches_post_filtering() {
        for q in [3, 4, 5] {
            for n in 0..=7 {
                let all = enumerate_graphs(n, Filter::None).unwrap();
                let kept = all
                    .iter()
                    .filter(|g| {
                        let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
                        !has_clique(&rows, (1u64 << n) - 1, q)
                    })
                    .count();
                assert_eq!(count(n, Filter::CliqueFree(q)), kept, "q = {q}, n = {n}");
            }
        }
    }

    #[test]
    fn output_is_sorted_and_canonical() {
        let gs = enumerate_graphs(5, Filter::None).unwrap();
        assert!(gs.windows(2).all(|w| w[0] < w[1]));
        assert!(gs.iter().all(|g| super::super::canonical_form(g) == *g));
    }

    #[test]
    fn oversized_requests_are_rejected() {
        let err = enumerate_graphs(12, Filter::None).unwrap_err();
        let EnumerationError::Infeasible { estimate, .. } = err;
        assert!(estimate > 1e10);
        assert!(enumerate_graphs(17, Filter::triangle_free()).is_err());
    }

    #[test]
    fn plan_chunks_partition_the_classes() {
        let plan = EnumerationPlan::new(7, Filter::None, 4).unwrap();
        assert_eq!(plan.len(), 11);
        let mut total = 0;
        for i in 0..plan.len() {
            let _ = plan.run_chunk(i, |_| {
                total += 1;
                ControlFlow::Continue(())
            });
        }
        assert_eq!(total, 1044);
    }

    #[test]
    fn up_to_visits_every_order() {
        let mut by_order = vec![0; 6];
        let _ = for_each_graph_up_to(5, Filter::triangle_free(), |g| {
            by_order[g.order()] += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(by_order, vec![1, 1, 2, 3, 7, 14]);
    }
}
