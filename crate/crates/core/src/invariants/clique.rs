use crate::bits::VertexSet;
use crate::graph::Graph;

/// Maximum clique size with a witness, vertices ascending.
pub fn clique_number(g: &Graph) -> (usize, Vec<usize>) {
    let mut best = Vec::new();
    let mut current = Vec::new();
    let cand = VertexSet::full(g.order());
    expand(g, cand, &mut current, &mut best);
    best.sort_unstable();
    (best.len(), best)
}

fn expand(g: &Graph, mut cand: VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let (order, bounds) = color_sort(g, &cand);
    for i in (0..order.len()).rev() {
        if current.len() + bounds[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let next = cand.intersection(g.row(v));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, next, current, best);
        }
        current.pop();
        cand.remove(v);
    }
}

/// Greedy sequential coloring of `cand`; returns vertices by color and the
/// color number of each as an upper bound on cliques among it and its
/// predecessors.
fn color_sort(g: &Graph, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.len());
    let mut bounds = Vec::with_capacity(cand.len());
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            uncolored.remove(v);
            q.subtract(g.row(v));
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

/// Lexicographically first `k`-clique (as an ascending vertex list) among
/// `within`, or among all vertices.
pub fn find_clique(g: &Graph, k: usize, within: Option<&[u64]>) -> Option<Vec<usize>> {
    let cand = match within {
        Some(w) => VertexSet::from_words(w.to_vec()),
        None => VertexSet::full(g.order()),
    };
    let mut current = Vec::with_capacity(k);
    if lex_first(g, &cand, k, &mut current) {
        Some(current)
    } else {
        None
    }
}

/// Whether `g` contains a clique on `k` vertices.
pub fn has_clique(g: &Graph, k: usize) -> bool {
    find_clique(g, k, None).is_some()
}

fn lex_first(g: &Graph, cand: &VertexSet, k: usize, current: &mut Vec<usize>) -> bool {
    if k == 0 {
        return true;
    }
    if cand.len() < k {
        return false;
    }
    if k == 1 {
        current.push(cand.first().expect("non-empty"));
        return true;
    }
    let mut rest = cand.clone();
    while let Some(v) = rest.first() {
        if rest.len() < k {
            return false;
        }
        rest.remove(v);
        let next = rest.intersection(g.row(v));
        if next.len() >= k - 1 && greedy_bound(g, &next) >= k - 1 {
            current.push(v);
            if lex_first(g, &next, k - 1, current) {
                return true;
            }
            current.pop();
        }
    }
    false
}

/// Number of colors a greedy coloring of `cand` uses.
fn greedy_bound(g: &Graph, cand: &VertexSet) -> usize {
    let mut uncolored = cand.clone();
    let mut colors = 0;
    while !uncolored.is_empty() {
        colors += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            uncolored.remove(v);
            q.subtract(g.row(v));
        }
    }
    colors
}
