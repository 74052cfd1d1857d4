//! Canonical labeling by individualization and refinement.
//!
//! The search tree is the usual one: refine an ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton
//! cell, recurse. Every discrete leaf yields a relabeled adjacency matrix
//! and the lexicographically largest one is the canonical form. Two kinds
//! of pruning are used, both driven by automorphisms found as pairs of
//! leaves with identical matrices:
//!
//! * when a leaf matches the best leaf, the subtree below the node where
//!   their paths diverge is an automorphic image of one already explored
//!   and is abandoned;
//! * at every node, children in the same orbit as an explored child under
//!   the known automorphisms fixing the node's path are skipped.

use super::Graph;
use crate::bits;
use std::cmp::Ordering;
use std::collections::VecDeque;

/// Result of canonical labeling.
#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    /// `labeling[p]` is the vertex of the input placed at position `p`.
    pub labeling: Vec<usize>,
    /// The input relabeled so that `labeling[p]` becomes `p`.
    pub form: Graph,
    /// Smallest member of each vertex's orbit under the automorphisms met
    /// during the search; a refinement of the true orbit partition.
    pub(crate) orbits: Vec<u32>,
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let cells = if g.order() == 0 {
        vec![]
    } else {
        vec![(0..g.order()).collect()]
    };
    run(g, cells)
}

pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).form
}

/// Canonical form of `g` with `root` distinguished. Two roots give equal
/// forms iff some automorphism maps one to the other.
pub(crate) fn rooted_form(g: &Graph, root: usize) -> Graph {
    let rest: Vec<usize> = (0..g.order()).filter(|&v| v != root).collect();
    let mut cells = vec![vec![root]];
    if !rest.is_empty() {
        cells.push(rest);
    }
    run(g, cells).form
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

#[derive(Clone)]
struct Cells {
    lab: Vec<u32>,
    pos: Vec<u32>,
    /// Start of the cell containing each position.
    start_of: Vec<u32>,
    /// End (exclusive) of the cell starting at each start position.
    end: Vec<u32>,
    count: usize,
}

impl Cells {
    fn from_ordered(n: usize, cells: &[Vec<usize>]) -> Self {
        let mut c = Cells {
            lab: Vec::with_capacity(n),
            pos: vec![0; n],
            start_of: vec![0; n],
            end: vec![0; n],
            count: 0,
        };
        for cell in cells {
            let s = c.lab.len();
            for &v in cell {
                c.pos[v] = c.lab.len() as u32;
                c.lab.push(v as u32);
            }
            let e = c.lab.len();
            for p in s..e {
                c.start_of[p] = s as u32;
            }
            c.end[s] = e as u32;
            c.count += 1;
        }
        c
    }

    fn discrete(&self) -> bool {
        self.count == self.lab.len()
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    words: usize,
    best_cert: Vec<u64>,
    best_lab: Vec<u32>,
    best_path: Vec<u32>,
    have_best: bool,
    scratch: Vec<u64>,
    generators: Vec<Vec<u32>>,
    queue: VecDeque<u32>,
    in_queue: Vec<bool>,
    mask: Vec<u64>,
    keyed: Vec<(u32, u32)>,
}

fn run(g: &Graph, cells: Vec<Vec<usize>>) -> CanonicalLabeling {
    let n = g.order();
    let words = g.row_words();
    let mut search = Search {
        g,
        n,
        words,
        best_cert: vec![0; n * words],
        best_lab: Vec::new(),
        best_path: Vec::new(),
        have_best: false,
        scratch: vec![0; n * words],
        generators: Vec::new(),
        queue: VecDeque::new(),
        in_queue: vec![false; n],
        mask: vec![0; words],
        keyed: Vec::with_capacity(n),
    };
    let mut root = Cells::from_ordered(n, &cells);
    let mut s = 0;
    while s < n {
        search.queue.push_back(s as u32);
        search.in_queue[s] = true;
        s = root.end[s] as usize;
    }
    search.refine(&mut root);
    let mut path = Vec::new();
    search.explore(root, &mut path);

    let labeling: Vec<usize> = search.best_lab.iter().map(|&v| v as usize).collect();
    let mut form = Graph::empty(n);
    for p in 0..n {
        for q in bits::ones(&search.best_cert[p * words..(p + 1) * words]) {
            if q > p {
                form.add_edge(p, q);
            }
        }
    }
    let uf = search.stabilizer_orbits(&[]);
    let orbits = (0..n as u32).map(|v| find(&uf, v)).collect();
    CanonicalLabeling {
        labeling,
        form,
        orbits,
    }
}

impl Search<'_> {
    fn refine(&mut self, c: &mut Cells) {
        while let Some(ws) = self.queue.pop_front() {
            let ws = ws as usize;
            self.in_queue[ws] = false;
            self.mask.iter_mut().for_each(|w| *w = 0);
            for p in ws..c.end[ws] as usize {
                bits::set(&mut self.mask, c.lab[p] as usize);
            }
            let mut s = 0;
            while s < self.n {
                let e = c.end[s] as usize;
                if e - s > 1 {
                    self.split(c, s, e);
                }
                s = e;
            }
        }
    }

    /// Splits cell `s..e` by neighbor counts into the current mask.
    fn split(&mut self, c: &mut Cells, s: usize, e: usize) {
        self.keyed.clear();
        let mut uniform = true;
        let mut first = None;
        for p in s..e {
            let v = c.lab[p];
            let k = bits::count_and(self.g.row(v as usize), &self.mask) as u32;
            match first {
                None => first = Some(k),
                Some(f) if f != k => uniform = false,
                _ => {}
            }
            self.keyed.push((k, v));
        }
        if uniform {
            return;
        }
        self.keyed.sort_unstable();
        for (i, &(_, v)) in self.keyed.iter().enumerate() {
            c.lab[s + i] = v;
            c.pos[v as usize] = (s + i) as u32;
        }
        let was_queued = self.in_queue[s];
        let mut frag_start = s;
        let mut largest = (0, s);
        let mut starts = Vec::new();
        for i in 0..self.keyed.len() {
            let boundary = i + 1 == self.keyed.len() || self.keyed[i].0 != self.keyed[i + 1].0;
            if boundary {
                let frag_end = s + i + 1;
                c.end[frag_start] = frag_end as u32;
                for p in frag_start..frag_end {
                    c.start_of[p] = frag_start as u32;
                }
                if frag_end - frag_start > largest.0 {
                    largest = (frag_end - frag_start, frag_start);
                }
                starts.push(frag_start);
                frag_start = frag_end;
            }
        }
        c.count += starts.len() - 1;
        for &f in &starts {
            let skip = if was_queued { f == s } else { f == largest.1 };
            if !skip && !self.in_queue[f] {
                self.in_queue[f] = true;
                self.queue.push_back(f as u32);
            }
        }
    }

    fn individualize(&mut self, c: &mut Cells, v: usize) {
        let p = c.pos[v] as usize;
        let s = c.start_of[p] as usize;
        let e = c.end[s] as usize;
        let other = c.lab[s];
        c.lab.swap(s, p);
        c.pos[v] = s as u32;
        c.pos[other as usize] = p as u32;
        c.end[s] = (s + 1) as u32;
        c.end[s + 1] = e as u32;
        for q in s + 1..e {
            c.start_of[q] = (s + 1) as u32;
        }
        c.count += 1;
        self.queue.push_back(s as u32);
        self.in_queue[s] = true;
    }

    /// Returns the depth to unwind to when an automorphism makes the rest
    /// of this subtree redundant.
    fn explore(&mut self, c: Cells, path: &mut Vec<u32>) -> Option<usize> {
        if c.discrete() {
            return self.leaf(&c, path);
        }
        let depth = path.len();
        let mut s = 0;
        while c.end[s] as usize - s == 1 {
            s += 1;
        }
        let e = c.end[s] as usize;
        let mut candidates: Vec<u32> = c.lab[s..e].to_vec();
        candidates.sort_unstable();
        let mut explored: Vec<u32> = Vec::new();
        let mut orbits: Option<(usize, Vec<u32>)> = None;
        for &x in &candidates {
            if !explored.is_empty() {
                if orbits.as_ref().is_none_or(|(seen, _)| *seen != self.generators.len()) {
                    orbits = Some((self.generators.len(), self.stabilizer_orbits(path)));
                }
                let uf = &orbits.as_ref().unwrap().1;
                let rx = find(uf, x);
                if explored.iter().any(|&y| find(uf, y) == rx) {
                    continue;
                }
            }
            let mut child = c.clone();
            self.individualize(&mut child, x as usize);
            self.refine(&mut child);
            path.push(x);
            let unwind = self.explore(child, path);
            path.pop();
            explored.push(x);
            if let Some(d) = unwind {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, c: &Cells, path: &[u32]) -> Option<usize> {
        let w = self.words;
        let mut order = if self.have_best {
            Ordering::Equal
        } else {
            Ordering::Greater
        };
        for p in 0..self.n {
            let row = &mut self.scratch[p * w..(p + 1) * w];
            row.iter_mut().for_each(|x| *x = 0);
            for u in self.g.neighbors(c.lab[p] as usize) {
                bits::set(row, c.pos[u] as usize);
            }
            if order == Ordering::Equal {
                order = (*row).cmp(&self.best_cert[p * w..(p + 1) * w]);
                if order == Ordering::Less {
                    return None;
                }
            }
        }
        match order {
            Ordering::Greater => {
                std::mem::swap(&mut self.best_cert, &mut self.scratch);
                self.best_lab = c.lab.clone();
                self.best_path = path.to_vec();
                self.have_best = true;
                None
            }
            Ordering::Equal => {
                let mut gamma = vec![0u32; self.n];
                for p in 0..self.n {
                    gamma[self.best_lab[p] as usize] = c.lab[p];
                }
                if self.generators.len() < 8 * self.n.max(8) {
                    self.generators.push(gamma);
                }
                let common = path
                    .iter()
                    .zip(&self.best_path)
                    .take_while(|(a, b)| a == b)
                    .count();
                Some(common)
            }
            Ordering::Less => None,
        }
    }

    /// Union-find over orbits of the known automorphisms fixing `path`.
    fn stabilizer_orbits(&self, path: &[u32]) -> Vec<u32> {
        let mut uf: Vec<u32> = (0..self.n as u32).collect();
        for gamma in &self.generators {
            if path.iter().all(|&v| gamma[v as usize] == v) {
                for (v, &img) in gamma.iter().enumerate() {
                    let a = find(&uf, v as u32);
                    let b = find(&uf, img);
                    if a != b {
                        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                        uf[hi as usize] = lo;
                    }
                }
            }
        }
        uf
    }
}

fn find(uf: &[u32], mut x: u32) -> u32 {
    while uf[x as usize] != x {
        x = uf[x as usize];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn shuffled(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(rng);
        g.permuted(&perm)
    }

    #[test]
    fn labeling_reproduces_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..12 {
            let g = random_graph(&mut rng, n, 0.4);
            let cl = canonical_labeling(&g);
            let mut inverse = vec![0; n];
            for (p, &v) in cl.labeling.iter().enumerate() {
                inverse[v] = p;
            }
            assert_eq!(g.permuted(&inverse), cl.form);
        }
    }

    #[test]
    fn relabelings_of_p3_agree() {
        let forms: Vec<Graph> = [[(0, 1), (1, 2)], [(0, 2), (2, 1)], [(1, 0), (0, 2)]]
            .iter()
            .map(|e| canonical_form(&Graph::from_edges(3, e).unwrap()))
            .collect();
        assert!(forms.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5);
        // explicit isomorphism C5 -> complement: i -> 2i mod 5
        let perm: Vec<usize> = (0..5).map(|i| (2 * i) % 5).collect();
        assert_eq!(c5.permuted(&perm), c5.complement());
        assert_eq!(canonical_form(&c5), canonical_form(&c5.complement()));
    }

    #[test]
    fn small_isomorphism_examples() {
        assert!(are_isomorphic(&Graph::complete(3), &Graph::cycle(3)));
        let star = Graph::complete_multipartite(&[1, 3]);
        assert!(!are_isomorphic(&Graph::path(4), &star));
        assert!(!are_isomorphic(&Graph::cycle(6), &Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap()));
    }

    #[test]
    fn symmetric_graphs_terminate_quickly() {
        for g in [
            Graph::empty(40),
            Graph::complete(40),
            Graph::complete_multipartite(&[15, 15, 15]),
            Graph::cycle(60),
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(g.order() as u64);
            let h = shuffled(&mut rng, &g);
            assert_eq!(canonical_form(&g), canonical_form(&h));
        }
    }

    #[test]
    fn permutation_invariance_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let h = shuffled(&mut rng, &g);
            assert_eq!(canonical_form(&g), canonical_form(&h), "{g:?}");
        }
    }

    #[test]
    fn rooted_forms_separate_orbits() {
        // Path 0-1-2-3: orbits {0,3} and {1,2}.
        let p4 = Graph::path(4);
        assert_eq!(rooted_form(&p4, 0), rooted_form(&p4, 3));
        assert_eq!(rooted_form(&p4, 1), rooted_form(&p4, 2));
        assert_ne!(rooted_form(&p4, 0), rooted_form(&p4, 1));
    }
}
