//! Simple undirected graphs with bitset adjacency rows.

use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

/// Largest order accepted by [`are_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
    #[error("isomorphism test limited to {limit} vertices, got {order}")]
    TooLarge { order: usize, limit: usize },
}

type Words = SmallVec<[u64; 2]>;

fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

/// A subset of `0..n` for a fixed owner size `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Words,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: SmallVec::from_elem(0, word_count(n)),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let bits = (n - lo).min(64);
            *w = if bits == 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        s
    }

    /// Builds a set from members, rejecting indices outside `0..n`.
    pub fn from_members<I>(n: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::new(n);
        for v in members {
            if v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Size of the ground set, not the number of members.
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn intersect_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
    }

    /// Members of `0..n` not in this set.
    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(&a, &b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Keeps only members strictly greater than `v`.
    pub fn retain_above(&mut self, v: usize) {
        let cut = v + 1;
        for (i, w) in self.words.iter_mut().enumerate() {
            let lo = i * 64;
            if lo + 64 <= cut {
                *w = 0;
            } else if lo < cut {
                *w &= u64::MAX << (cut - lo);
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Finite simple undirected graph on vertices `0..n`. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from unordered pairs; duplicates collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph { rows })
    }

    /// Builds from adjacency rows that the caller guarantees are symmetric
    /// and loop-free.
    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Self {
        debug_assert!(rows.iter().enumerate().all(|(v, r)| !r.contains(v)));
        Graph { rows }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![VertexSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let rows = (0..n)
            .map(|v| {
                let mut r = VertexSet::full(n);
                r.remove(v);
                r
            })
            .collect();
        Graph { rows }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// The cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// `N(v) ∪ {v}`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, r)| r.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.rows[v])
        })
    }

    pub fn is_stable(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.rows[v].is_disjoint(set))
    }

    /// Subgraph induced by `set`, relabeled by ascending original index.
    pub fn induced(&self, set: &VertexSet) -> Result<Self, GraphError> {
        if set.universe() != self.order() {
            if let Some(v) = set.iter().find(|&v| v >= self.order()) {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: self.order(),
                });
            }
        }
        Ok(self.induced_by(&set.iter().collect::<Vec<_>>()))
    }

    /// Subgraph induced by the listed vertices, with vertex `i` of the result
    /// being `vertices[i]`. Panics on out-of-range or repeated indices.
    pub fn induced_by(&self, vertices: &[usize]) -> Self {
        let m = vertices.len();
        let mut rows = vec![VertexSet::new(m); m];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                assert_ne!(u, v, "repeated vertex {u} in induced_by");
                if self.has_edge(u, v) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        Graph { rows }
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Self {
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced_by(&keep)
    }

    pub fn complement(&self) -> Self {
        let n = self.order();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, r)| {
                let mut c = r.complement();
                c.remove(v);
                c
            })
            .collect::<Vec<_>>();
        debug_assert!(rows.iter().all(|r| r.universe() == n));
        Graph { rows }
    }

    /// `G + H`; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.order();
        let n = shift + other.order();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Self::from_edges(n, edges.collect::<Vec<_>>()).expect("union edges are valid")
    }

    /// Join of `G` and `H`: disjoint union plus every edge between the parts.
    pub fn join(&self, other: &Graph) -> Self {
        let shift = self.order();
        let cross = (0..shift).flat_map(|u| (0..other.order()).map(move |v| (u, v + shift)));
        let edges: Vec<_> = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .chain(cross)
            .collect();
        Self::from_edges(shift + other.order(), edges).expect("join edges are valid")
    }

    /// Graph whose vertex `perm[v]` plays the role of vertex `v` here.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order());
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::from_edges(self.order(), edges).expect("permutation must be a bijection")
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Isomorphism test for graphs of order at most [`ISOMORPHISM_LIMIT`].
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    for x in [g, h] {
        if x.order() > ISOMORPHISM_LIMIT {
            return Err(GraphError::TooLarge {
                order: x.order(),
                limit: ISOMORPHISM_LIMIT,
            });
        }
    }
    Ok(isomorphism(g, h).is_some())
}

/// A bijection `f` with `uv ∈ E(g) ⟺ f(u)f(v) ∈ E(h)`, searched by
/// backtracking over degree classes. No size limit; callers bound the cost.
pub(crate) fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    // Most constrained vertices first: large degree, then low index.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut map = vec![usize::MAX; n];
    let mut used = VertexSet::new(n);
    if extend_isomorphism(g, h, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend_isomorphism(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let mut candidates = used.complement();
    for &u in &order[..depth] {
        if g.has_edge(u, v) {
            candidates.intersect_with(h.neighbors(map[u]));
        } else {
            candidates.difference_with(h.neighbors(map[u]));
        }
    }
    for w in candidates.iter() {
        if h.degree(w) != g.degree(v) {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend_isomorphism(g, h, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
    }
    map[v] = usize::MAX;
    false
}
