use super::gadgets::binomial;
use super::{turan_class_sizes, Construction, ConstructionError};
use crate::graph::Graph;
use crate::invariants::has_clique;

fn invalid(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::Parameters(msg.into())
}

fn range(start: usize, len: usize) -> Vec<usize> {
    (start..start + len).collect()
}

fn join_all(g: &mut Graph, a: &[usize], b: &[usize]) {
    for &x in a {
        for &y in b {
            g.add_edge(x, y);
        }
    }
}

/// All `k`-subsets of `0..n` as bitmasks, in lexicographic order of their
/// sorted element lists.
fn combinations(n: usize, k: usize) -> Vec<u64> {
    fn rec(n: usize, k: usize, start: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for x in start..n {
            if n - x >= k {
                rec(n, k - 1, x + 1, cur | (1 << x), out);
            }
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, 0, &mut out);
    out
}

/// 3-saturated graph of order `n` with `2^(f+1) + f` or more twin classes.
///
/// Labels: `S = 0..f`; `u_I = f + I` for each bitmask `I` over `S`; `w_I`
/// follows in the same order; then `U'` and `W'` (the larger one first when
/// the remainder is odd).
pub fn example_3sat_unbounded(f: usize, n: usize) -> Result<Construction, ConstructionError> {
    if f == 0 {
        return Err(invalid("f must be positive"));
    }
    if f >= 20 || ((4 * f) as f64) >= (n as f64).log2() * 2.0 {
        return Err(invalid(format!("f = {f} needs f < log2(n)/2 for n = {n}")));
    }
    let k = 1usize << f;
    let core = f + 2 * k;
    if n < core + 2 {
        return Err(invalid(format!("n = {n} leaves U' or W' empty")));
    }
    let rest = n - core;
    let s = range(0, f);
    let u = range(f, k);
    let w = range(f + k, k);
    let u2 = range(core, rest.div_ceil(2));
    let w2 = range(core + u2.len(), rest / 2);
    let mut g = Graph::empty(n);
    for i in 0..k {
        for (b, &sv) in s.iter().enumerate() {
            if (i >> b) & 1 == 1 {
                g.add_edge(u[i], sv);
                g.add_edge(w[i], sv);
            }
        }
        for j in 0..k {
            if i & j == 0 {
                g.add_edge(u[i], w[j]);
            }
        }
    }
    join_all(&mut g, &u2, &w2);
    join_all(&mut g, &u2, &w);
    join_all(&mut g, &u, &w2);
    Ok(Construction {
        graph: g,
        groups: vec![
            ("S".into(), s),
            ("U".into(), u),
            ("W".into(), w),
            ("U'".into(), u2),
            ("W'".into(), w2),
        ],
    })
}

/// Adds the three-set gadget: removes edges between `w1`, `w2`, `w3`,
/// matches `w2[i]` with `w3[i]`, and joins the `j`-th vertex of `w1` to the
/// `j`-th `m/2`-subset `U` of `w2` and to the partners of `w2 \ U`.
fn three_set_gadget(g: &mut Graph, w1: &[usize], w2: &[usize], w3: &[usize]) {
    let m = w2.len();
    for (a, b) in [(w1, w2), (w1, w3), (w2, w3)] {
        for &x in a {
            for &y in b {
                g.remove_edge(x, y);
            }
        }
    }
    for i in 0..m {
        g.add_edge(w2[i], w3[i]);
    }
    let subsets = combinations(m, m / 2);
    for (j, &x) in w1.iter().enumerate() {
        let mask = subsets[j];
        for i in 0..m {
            if (mask >> i) & 1 == 1 {
                g.add_edge(x, w2[i]);
            } else {
                g.add_edge(x, w3[i]);
            }
        }
    }
}

/// `(r+1)`-saturated graph of order `n` whose set `W1` has no twins.
///
/// Labels: classes of `T(n-1, r)` as consecutive blocks (larger first),
/// `W1`, `W2`, `W3` the initial segments of the first three classes,
/// `v = n - 1`.
pub fn example_no_small_blowup(m: usize, r: usize, n: usize) -> Result<Construction, ConstructionError> {
    if r < 3 {
        return Err(ConstructionError::RankOutOfRange(r));
    }
    if m == 0 || m % 2 == 1 || m > 62 {
        return Err(invalid(format!("m = {m} must be a positive even number")));
    }
    let big_m = binomial(m, m / 2);
    if n < r + 1 {
        return Err(invalid(format!("n = {n} too small")));
    }
    let sizes = turan_class_sizes(n - 1, r);
    let smallest = *sizes.iter().min().unwrap();
    if big_m > smallest || m > smallest {
        return Err(invalid(format!(
            "C(m, m/2) = {big_m} and m = {m} must fit in the classes of T({}, {r})",
            n - 1
        )));
    }
    let mut g = Graph::complete_multipartite(&sizes).with_vertex(std::iter::empty());
    let mut starts = Vec::new();
    let mut acc = 0;
    for &s in &sizes {
        starts.push(acc);
        acc += s;
    }
    let v = n - 1;
    let w1 = range(starts[0], big_m);
    let w2 = range(starts[1], m);
    let w3 = range(starts[2], m);
    for &x in w1.iter().chain(&w2).chain(&w3) {
        g.add_edge(v, x);
    }
    for j in 3..r {
        for x in starts[j]..starts[j] + sizes[j] {
            g.add_edge(v, x);
        }
    }
    three_set_gadget(&mut g, &w1, &w2, &w3);
    let mut groups: Vec<(String, Vec<usize>)> = (0..r)
        .map(|j| (format!("V{}", j + 1), range(starts[j], sizes[j])))
        .collect();
    groups.push(("W1".into(), w1));
    groups.push(("W2".into(), w2));
    groups.push(("W3".into(), w3));
    groups.push(("v".into(), vec![v]));
    Ok(Construction { graph: g, groups })
}

/// Twin-free 3-saturated graph of order `2m + 4 log2 m`.
///
/// Labels, with `L = log2 m`: `S1`, `S2`, `U1`, `U2` are blocks of `L`,
/// then `B1`, `B2` blocks of `m`. `B1[j]` sees `S2[i]` iff bit `i` of `j`
/// is set, likewise `B2` and `S1`; `U1[i]` and `S1[i]` are matched.
pub fn example_3sat_twinfree(m: usize) -> Result<Construction, ConstructionError> {
    if m < 2 || !m.is_power_of_two() {
        return Err(invalid(format!("m = {m} must be a power of two, at least 2")));
    }
    let l = m.trailing_zeros() as usize;
    let n = 2 * m + 4 * l;
    let s1 = range(0, l);
    let s2 = range(l, l);
    let u1 = range(2 * l, l);
    let u2 = range(3 * l, l);
    let b1 = range(4 * l, m);
    let b2 = range(4 * l + m, m);
    let mut g = Graph::empty(n);
    join_all(&mut g, &s1, &s2);
    join_all(&mut g, &u1, &u2);
    join_all(&mut g, &b1, &b2);
    for j in 0..m {
        for i in 0..l {
            if (j >> i) & 1 == 1 {
                g.add_edge(b1[j], s2[i]);
                g.add_edge(b2[j], s1[i]);
            } else {
                g.add_edge(u1[i], b2[j]);
                g.add_edge(u2[i], b1[j]);
            }
        }
    }
    for i in 0..l {
        g.add_edge(u1[i], s1[i]);
        g.add_edge(u2[i], s2[i]);
    }
    Ok(Construction {
        graph: g,
        groups: vec![
            ("S1".into(), s1),
            ("S2".into(), s2),
            ("U1".into(), u1),
            ("U2".into(), u2),
            ("B1".into(), b1),
            ("B2".into(), b2),
        ],
    })
}

/// Twin-free `(r+1)`-saturated graph of order `r (C(m, m/2) + 2m + 1)`.
///
/// Labels: classes `V_0..V_{r-1}` of `T(n-r, r)` as consecutive blocks of
/// `M + 2m`; inside `V_j` come `W^(j)_1`, then `W^(j-1)_2`, then
/// `W^(j-2)_3` (indices mod `r`). The hubs `u_0..u_{r-1}` are the last `r`
/// vertices; hub edges are added greedily in lexicographic pair order.
pub fn example_rsat_twinfree(m: usize, r: usize) -> Result<Construction, ConstructionError> {
    if r < 3 {
        return Err(ConstructionError::RankOutOfRange(r));
    }
    if m == 0 || m % 2 == 1 || m > 62 {
        return Err(invalid(format!("m = {m} must be a positive even number")));
    }
    let big_m = binomial(m, m / 2);
    let class = big_m + 2 * m;
    let n = r * (class + 1);
    let base = Graph::complete_multipartite(&vec![class; r]);
    let mut g = Graph::empty(n);
    for (a, b) in base.edges() {
        g.add_edge(a, b);
    }
    let start = |j: usize| j * class;
    let w1 = |i: usize| range(start(i), big_m);
    let w2 = |i: usize| range(start((i + 1) % r) + big_m, m);
    let w3 = |i: usize| range(start((i + 2) % r) + big_m + m, m);
    let hubs: Vec<usize> = (n - r..n).collect();
    for i in 0..r {
        three_set_gadget(&mut g, &w1(i), &w2(i), &w3(i));
    }
    for i in 0..r {
        let u = hubs[i];
        for x in w1(i).into_iter().chain(w2(i)).chain(w3(i)) {
            g.add_edge(u, x);
        }
        for k in 0..r {
            if ![i, (i + 1) % r, (i + 2) % r].contains(&k) {
                for x in start(k)..start(k) + class {
                    g.add_edge(u, x);
                }
            }
        }
    }
    for a in 0..r {
        for b in a + 1..r {
            g.add_edge(hubs[a], hubs[b]);
            if has_clique(&g, r + 1) {
                g.remove_edge(hubs[a], hubs[b]);
            }
        }
    }
    let mut groups: Vec<(String, Vec<usize>)> = (0..r)
        .map(|j| (format!("V{j}"), range(start(j), class)))
        .collect();
    for i in 0..r {
        groups.push((format!("W{i}_1"), w1(i)));
        groups.push((format!("W{i}_2"), w2(i)));
        groups.push((format!("W{i}_3"), w3(i)));
    }
    groups.push(("hubs".into(), hubs));
    Ok(Construction { graph: g, groups })
}
