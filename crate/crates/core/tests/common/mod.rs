//! Brute-force oracles and generators shared by the integration tests.
//! Nothing here calls into the library's search code.

#![allow(dead_code)]

use critgraph::Graph;
use rand::Rng;

/// Adjacency matrix copy, so the oracles never touch library internals.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random cograph built by random unions and joins of single vertices.
/// Returns the graph together with its chromatic number, which for a
/// cograph is additive over joins and maximal over unions.
pub fn random_cograph<R: Rng>(rng: &mut R, n: usize) -> (Graph, usize) {
    assert!(n >= 1);
    if n == 1 {
        return (Graph::empty(1), 1);
    }
    let left = rng.gen_range(1..n);
    let (a, ca) = random_cograph(rng, left);
    let (b, cb) = random_cograph(rng, n - left);
    if rng.gen_bool(0.5) {
        (a.disjoint_union(&b), ca.max(cb))
    } else {
        (a.join(&b), ca + cb)
    }
}

/// Sizes of all subsets, iterated as bitmasks.
pub fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..(1u64 << n)
}

pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn is_clique_mask(m: &[Vec<bool>], mask: u64) -> bool {
    let vs = members(mask);
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| m[u][v]))
}

pub fn is_stable_mask(m: &[Vec<bool>], mask: u64) -> bool {
    let vs = members(mask);
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !m[u][v]))
}

pub fn brute_clique_number(g: &Graph) -> usize {
    let m = matrix(g);
    subsets(g.order())
        .filter(|&s| is_clique_mask(&m, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_independence_number(g: &Graph) -> usize {
    let m = matrix(g);
    subsets(g.order())
        .filter(|&s| is_stable_mask(&m, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest `k` with a proper `k`-coloring, by plain backtracking over
/// vertices in index order.
pub fn brute_chromatic_number(g: &Graph) -> usize {
    let m = matrix(g);
    let n = g.order();
    (0..=n)
        .find(|&k| {
            let mut colors = vec![usize::MAX; n];
            colorable(&m, k, 0, &mut colors)
        })
        .unwrap()
}

fn colorable(m: &[Vec<bool>], k: usize, v: usize, colors: &mut [usize]) -> bool {
    if v == colors.len() {
        return true;
    }
    for c in 0..k {
        if (0..v).all(|u| !(m[u][v] && colors[u] == c)) {
            colors[v] = c;
            if colorable(m, k, v + 1, colors) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Whether the vertices `vs` of `g` induce a copy of `pattern`, trying every
/// bijection.
pub fn induces(g: &[Vec<bool>], vs: &[usize], pattern: &[Vec<bool>]) -> bool {
    let k = vs.len();
    if pattern.len() != k {
        return false;
    }
    permutations(k)
        .iter()
        .any(|p| (0..k).all(|i| (i + 1..k).all(|j| g[vs[p[i]]][vs[p[j]]] == pattern[i][j])))
}

/// Whether `g` contains `pattern` as an induced subgraph, over all subsets.
pub fn brute_contains(g: &Graph, pattern: &Graph) -> bool {
    let gm = matrix(g);
    let pm = matrix(pattern);
    let k = pattern.order();
    subsets(g.order())
        .filter(|s| s.count_ones() as usize == k)
        .any(|s| induces(&gm, &members(s), &pm))
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && induces(&matrix(g), &(0..g.order()).collect::<Vec<_>>(), &matrix(h))
}

/// graph6 written out from the format description: size prefix, then the
/// upper triangle column by column, six bits per character, plus 63.
pub fn graph6_oracle(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).unwrap()
}
