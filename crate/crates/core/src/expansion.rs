//! Clique expansions, in particular clique expansions of `C5`, and the
//! enumeration of vertex-critical (gem, co-gem)-free graphs.
//!
//! Every vertex-critical (gem, co-gem)-free graph is complete or a clique
//! expansion of `C5`. An expansion of `C5` with bag sizes `(k1, ..., k5)` is
//! `k`-vertex-critical (for `k >= 3`) exactly when the sizes sum to `2k - 1`
//! and every two cyclically adjacent sizes sum to at most `k - 1`.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("expected {expected} bag sizes, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("bag {index} has size zero")]
    ZeroSize { index: usize },
    #[error("criticality criterion requires k >= 3, got {0}")]
    KBelowThree(usize),
    #[error("malformed profile {0:?} (expected five comma-separated positive integers)")]
    Malformed(String),
}

/// Bag sizes `(k1, ..., k5)` of a clique expansion of `C5`; bag `i` replaces
/// cycle vertex `i` and is complete to bags `i ± 1 (mod 5)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpansionProfile([usize; 5]);

impl ExpansionProfile {
    pub fn new(bags: [usize; 5]) -> Result<Self, ExpansionError> {
        if let Some(index) = bags.iter().position(|&b| b == 0) {
            return Err(ExpansionError::ZeroSize { index });
        }
        Ok(ExpansionProfile(bags))
    }

    pub fn bags(&self) -> [usize; 5] {
        self.0
    }

    /// Vertex count of the expansion.
    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ω` of the expansion: maximal cliques are unions of two adjacent bags.
    pub fn clique_number(&self) -> usize {
        (0..5)
            .map(|i| self.0[i] + self.0[(i + 1) % 5])
            .max()
            .unwrap()
    }

    pub fn graph(&self) -> Graph {
        expand(&Graph::cycle(5), &self.0).expect("profile sizes are positive")
    }

    /// The 10 images under rotations and reflections of the cycle.
    pub fn dihedral_images(&self) -> [[usize; 5]; 10] {
        let b = self.0;
        let mut out = [[0; 5]; 10];
        for shift in 0..5 {
            for i in 0..5 {
                out[2 * shift][i] = b[(shift + i) % 5];
                out[2 * shift + 1][i] = b[(shift + 5 - i) % 5];
            }
        }
        out
    }

    pub fn canonical(&self) -> CanonicalProfile {
        canonical_profile(self)
    }
}

impl fmt::Display for ExpansionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.0;
        write!(f, "{a},{b},{c},{d},{e}")
    }
}

impl FromStr for ExpansionProfile {
    type Err = ExpansionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| p.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| ExpansionError::Malformed(s.to_string()))?;
        let bags: [usize; 5] = parts
            .try_into()
            .map_err(|_| ExpansionError::Malformed(s.to_string()))?;
        ExpansionProfile::new(bags)
    }
}

/// Lexicographically smallest dihedral image of a profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalProfile(ExpansionProfile);

impl CanonicalProfile {
    pub fn profile(&self) -> ExpansionProfile {
        self.0
    }
}

impl fmt::Display for CanonicalProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn canonical_profile(p: &ExpansionProfile) -> CanonicalProfile {
    let min = p.dihedral_images().into_iter().min().unwrap();
    CanonicalProfile(ExpansionProfile(min))
}

/// Index ranges of the bags of `expand(base, sizes)`, in base-vertex order.
pub fn bag_ranges(sizes: &[usize]) -> Vec<Range<usize>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let r = start..start + s;
            start += s;
            r
        })
        .collect()
}

/// Clique expansion: base vertex `i` becomes a clique of `sizes[i]` vertices,
/// occupying a consecutive index range; bags are complete to each other iff
/// their base vertices are adjacent.
pub fn expand(base: &Graph, sizes: &[usize]) -> Result<Graph, ExpansionError> {
    if sizes.len() != base.order() {
        return Err(ExpansionError::LengthMismatch {
            expected: base.order(),
            found: sizes.len(),
        });
    }
    if let Some(index) = sizes.iter().position(|&s| s == 0) {
        return Err(ExpansionError::ZeroSize { index });
    }
    let ranges = bag_ranges(sizes);
    let n: usize = sizes.iter().sum();
    let bag_sets: Vec<VertexSet> = ranges
        .iter()
        .map(|r| VertexSet::from_members(n, r.clone()).unwrap())
        .collect();
    let mut rows = Vec::with_capacity(n);
    for (i, r) in ranges.iter().enumerate() {
        let mut row = bag_sets[i].clone();
        for j in base.neighbors(i) {
            row = row.union(&bag_sets[j]);
        }
        for v in r.clone() {
            let mut own = row.clone();
            own.remove(v);
            rows.push(own);
        }
    }
    Ok(Graph::from_rows(rows))
}

/// `χ` of the expansion in closed form: `max(ω, ⌈n / 2⌉)`.
pub fn profile_chi(p: &ExpansionProfile) -> usize {
    p.clique_number().max(p.order().div_ceil(2))
}

/// Whether the expansion of `p` is `k`-vertex-critical, by the bag-size
/// criterion. Defined for `k >= 3` only.
pub fn is_critical_profile(p: &ExpansionProfile, k: usize) -> Result<bool, ExpansionError> {
    if k < 3 {
        return Err(ExpansionError::KBelowThree(k));
    }
    let b = p.bags();
    Ok(p.order() == 2 * k - 1 && (0..5).all(|i| b[i] + b[(i + 1) % 5] < k))
}

/// Canonical profiles of all `k`-vertex-critical clique expansions of `C5`,
/// ascending. Empty for `k < 3`.
pub fn critical_profiles(k: usize) -> Vec<CanonicalProfile> {
    if k < 3 {
        return Vec::new();
    }
    let total = 2 * k - 1;
    // Parts are at least 1 and adjacent pairs at most k - 1.
    let cap = k - 2;
    let mut out = Vec::new();
    let mut bags = [0usize; 5];
    compositions(total, cap, 0, &mut bags, &mut |b| {
        let p = ExpansionProfile(*b);
        if (0..5).all(|i| b[i] + b[(i + 1) % 5] < k) && canonical_profile(&p).0 == p {
            out.push(CanonicalProfile(p));
        }
    });
    out
}

/// Visits compositions of `remaining` into the parts `bags[index..]`, each in
/// `1..=cap`, in lexicographic order.
fn compositions(
    remaining: usize,
    cap: usize,
    index: usize,
    bags: &mut [usize; 5],
    visit: &mut impl FnMut(&[usize; 5]),
) {
    let slots_after = 4 - index;
    if slots_after == 0 {
        if (1..=cap).contains(&remaining) {
            bags[index] = remaining;
            visit(bags);
        }
        return;
    }
    let hi = cap.min(remaining.saturating_sub(slots_after));
    for part in 1..=hi {
        bags[index] = part;
        compositions(remaining - part, cap, index + 1, bags, visit);
    }
}

/// One `k`-vertex-critical (gem, co-gem)-free graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalGraph {
    Complete(usize),
    C5Expansion(CanonicalProfile),
}

impl CriticalGraph {
    pub fn graph(&self) -> Graph {
        match self {
            CriticalGraph::Complete(k) => Graph::complete(*k),
            CriticalGraph::C5Expansion(p) => p.profile().graph(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            CriticalGraph::Complete(k) => *k,
            CriticalGraph::C5Expansion(p) => p.profile().order(),
        }
    }
}

impl fmt::Display for CriticalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalGraph::Complete(k) => write!(f, "K{k}"),
            CriticalGraph::C5Expansion(p) => p.fmt(f),
        }
    }
}

/// All `k`-vertex-critical (gem, co-gem)-free graphs up to isomorphism:
/// `K_k` first, then the critical `C5` expansions by ascending canonical
/// profile.
pub fn enumerate_k_critical(k: usize) -> Vec<CriticalGraph> {
    let mut out = vec![CriticalGraph::Complete(k)];
    out.extend(
        critical_profiles(k)
            .into_iter()
            .map(CriticalGraph::C5Expansion),
    );
    out
}

/// `num(k)` for `k = 1..=k_max`.
pub fn count_table(k_max: usize) -> Vec<usize> {
    (1..=k_max)
        .map(|k| 1 + critical_profiles(k).len())
        .collect()
}
