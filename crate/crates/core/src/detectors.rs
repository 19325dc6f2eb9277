//! Induced-subgraph search, forbidden-graph tests, cliques, stable sets and
//! modules.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// `P4 + P1`.
pub fn co_gem() -> Graph {
    Graph::path(4).disjoint_union(&Graph::empty(1))
}

/// Complement of `P4 + P1`: a path `0-1-2-3` plus vertex 4 adjacent to all of it.
pub fn gem() -> Graph {
    Graph::path(4).join(&Graph::empty(1))
}

/// `P3 + ℓP1`.
pub fn p3_plus_isolated(l: usize) -> Graph {
    Graph::path(3).disjoint_union(&Graph::empty(l))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForbiddenFamily {
    Gem,
    CoGem,
    P4,
    C5,
    /// `P3 + ℓP1`; `ℓ = 0` is plain `P3`.
    P3PlusIsolated(usize),
    Custom {
        name: String,
        pattern: Graph,
    },
}

impl ForbiddenFamily {
    pub fn pattern(&self) -> Graph {
        match self {
            ForbiddenFamily::Gem => gem(),
            ForbiddenFamily::CoGem => co_gem(),
            ForbiddenFamily::P4 => Graph::path(4),
            ForbiddenFamily::C5 => Graph::cycle(5),
            ForbiddenFamily::P3PlusIsolated(l) => p3_plus_isolated(*l),
            ForbiddenFamily::Custom { pattern, .. } => pattern.clone(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            ForbiddenFamily::Gem => "gem".into(),
            ForbiddenFamily::CoGem => "co-gem".into(),
            ForbiddenFamily::P4 => "P4".into(),
            ForbiddenFamily::C5 => "C5".into(),
            ForbiddenFamily::P3PlusIsolated(l) => format!("P3+{l}P1"),
            ForbiddenFamily::Custom { name, .. } => name.clone(),
        }
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown forbidden family {0:?} (expected gem, co-gem, p4, c5 or p3+<l>p1)")]
pub struct UnknownFamily(pub String);

impl FromStr for ForbiddenFamily {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "gem" => return Ok(ForbiddenFamily::Gem),
            "co-gem" | "cogem" => return Ok(ForbiddenFamily::CoGem),
            "p4" => return Ok(ForbiddenFamily::P4),
            "c5" => return Ok(ForbiddenFamily::C5),
            "p3" => return Ok(ForbiddenFamily::P3PlusIsolated(0)),
            _ => {}
        }
        let count = lower
            .strip_prefix("p3+")
            .and_then(|rest| rest.strip_suffix("p1"))
            .ok_or_else(|| UnknownFamily(s.to_string()))?;
        let l = if count.is_empty() {
            1
        } else {
            count.parse().map_err(|_| UnknownFamily(s.to_string()))?
        };
        Ok(ForbiddenFamily::P3PlusIsolated(l))
    }
}

/// Finds an induced copy of `pattern` in `g`. The returned vector maps each
/// pattern vertex to its image.
pub fn find_induced_map(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.order();
    if k > g.order() {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p));
    let mut map = vec![usize::MAX; k];
    let mut used = VertexSet::new(g.order());
    if extend_match(g, pattern, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend_match(
    g: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&p) = order.get(depth) else {
        return true;
    };
    let mut candidates = used.complement();
    for &q in &order[..depth] {
        if pattern.has_edge(p, q) {
            candidates.intersect_with(g.neighbors(map[q]));
        } else {
            candidates.difference_with(g.neighbors(map[q]));
        }
    }
    let need = pattern.degree(p);
    for v in candidates.iter() {
        if g.degree(v) < need {
            continue;
        }
        map[p] = v;
        used.insert(v);
        if extend_match(g, pattern, order, depth + 1, map, used) {
            return true;
        }
        used.remove(v);
    }
    false
}

/// Vertex set inducing a copy of `pattern`, if any.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<VertexSet> {
    find_induced_map(g, pattern)
        .map(|m| VertexSet::from_members(g.order(), m).expect("matcher returns in-range vertices"))
}

/// `None` iff `g` is free of the family's pattern; otherwise the family name
/// and an induced copy.
pub fn freeness_witness(g: &Graph, family: &ForbiddenFamily) -> Option<(String, VertexSet)> {
    find_induced(g, &family.pattern()).map(|s| (family.name(), s))
}

/// Greedy sequential coloring of `candidates` (index order), returned as
/// vertices sorted by color class with the 1-based class number of each.
fn color_sort(g: &Graph, candidates: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(candidates.len());
    let mut bounds = Vec::with_capacity(candidates.len());
    let mut rest = candidates.clone();
    let mut color = 0;
    while !rest.is_empty() {
        color += 1;
        let mut avail = rest.clone();
        while let Some(v) = avail.first() {
            order.push(v);
            bounds.push(color);
            rest.remove(v);
            avail.remove(v);
            avail.difference_with(g.neighbors(v));
        }
    }
    (order, bounds)
}

fn grow_clique(
    g: &Graph,
    current: &mut Vec<usize>,
    mut candidates: VertexSet,
    best: &mut Vec<usize>,
) {
    let (order, bounds) = color_sort(g, &candidates);
    for i in (0..order.len()).rev() {
        if current.len() + bounds[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let next = candidates.intersection(g.neighbors(v));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            grow_clique(g, current, next, best);
        }
        current.pop();
        candidates.remove(v);
    }
}

/// A maximum clique, by branch and bound with a greedy-coloring bound.
pub fn max_clique(g: &Graph) -> VertexSet {
    max_clique_within(g, &g.vertices())
}

/// A maximum clique of `G[within]`.
pub fn max_clique_within(g: &Graph, within: &VertexSet) -> VertexSet {
    let mut best = Vec::new();
    grow_clique(g, &mut Vec::new(), within.clone(), &mut best);
    VertexSet::from_members(g.order(), best).expect("clique vertices are in range")
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum stable set, found as a maximum clique of the complement.
pub fn max_stable_set(g: &Graph) -> VertexSet {
    max_clique(&g.complement())
}

pub fn independence_number(g: &Graph) -> usize {
    max_stable_set(g).len()
}

/// All maximal cliques (Bron–Kerbosch with Tomita pivoting), sorted by
/// member list. Empty for the null graph.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    bron_kerbosch(
        g,
        &mut Vec::new(),
        g.vertices(),
        VertexSet::new(n),
        &mut out,
    );
    out.sort_by_key(VertexSet::to_vec);
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(VertexSet::from_members(g.order(), r.iter().copied()).unwrap());
        }
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (p.intersection_len(g.neighbors(u)), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    for v in p.difference(g.neighbors(pivot)).to_vec() {
        r.push(v);
        bron_kerbosch(
            g,
            r,
            p.intersection(g.neighbors(v)),
            x.intersection(g.neighbors(v)),
            out,
        );
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// True iff `s` is stable and meets every maximal clique of `g`.
pub fn is_very_good_stable_set(g: &Graph, s: &VertexSet) -> bool {
    g.is_stable(s) && maximal_cliques(g).iter().all(|k| !k.is_disjoint(s))
}

/// True iff every vertex outside `m` sees all of `m` or none of it.
pub fn is_module(g: &Graph, m: &VertexSet) -> bool {
    let size = m.len();
    m.complement().iter().all(|v| {
        let seen = g.neighbors(v).intersection_len(m);
        seen == 0 || seen == size
    })
}

/// Smallest module containing `seed`: repeatedly absorb the lowest splitter.
pub fn module_closure(g: &Graph, seed: &VertexSet) -> VertexSet {
    let mut m = seed.clone();
    loop {
        let size = m.len();
        let splitter = m.complement().iter().find(|&v| {
            let seen = g.neighbors(v).intersection_len(&m);
            seen != 0 && seen != size
        });
        match splitter {
            Some(v) => m.insert(v),
            None => return m,
        }
    }
}

/// Some module `M` with `1 < |M| < n`, or `None` if `g` is prime.
pub fn find_nontrivial_module(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            let mut seed = VertexSet::new(n);
            seed.insert(u);
            seed.insert(v);
            let m = module_closure(g, &seed);
            if m.len() < n {
                return Some(m);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied()).unwrap()
    }

    #[test]
    fn family_patterns() {
        let g = gem();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degree(4), 4);
        assert_eq!(co_gem().edge_count(), 3);
        assert_eq!(p3_plus_isolated(2).order(), 5);
        assert_eq!(p3_plus_isolated(0), Graph::path(3));
    }

    #[test]
    fn parse_families() {
        assert_eq!("gem".parse(), Ok(ForbiddenFamily::Gem));
        assert_eq!("co-gem".parse(), Ok(ForbiddenFamily::CoGem));
        assert_eq!("P4".parse(), Ok(ForbiddenFamily::P4));
        assert_eq!("c5".parse(), Ok(ForbiddenFamily::C5));
        assert_eq!("p3+2p1".parse(), Ok(ForbiddenFamily::P3PlusIsolated(2)));
        assert_eq!("p3+0p1".parse(), Ok(ForbiddenFamily::P3PlusIsolated(0)));
        assert_eq!("p3+p1".parse(), Ok(ForbiddenFamily::P3PlusIsolated(1)));
        assert!("p5".parse::<ForbiddenFamily>().is_err());
        assert!("p3+xp1".parse::<ForbiddenFamily>().is_err());
        assert_eq!(ForbiddenFamily::P3PlusIsolated(2).name(), "P3+2P1");
    }

    #[test]
    fn find_induced_examples() {
        let g = gem();
        assert_eq!(find_induced(&g, &g), Some(g.vertices()));

        let p6 = Graph::path(6);
        assert_eq!(find_induced(&p6, &p3_plus_isolated(2)), None);

        let two_p3 = Graph::path(3).disjoint_union(&Graph::path(3));
        let w = find_induced(&two_p3, &p3_plus_isolated(2)).unwrap();
        assert_eq!(w.len(), 5);
        let h = two_p3.induced(&w).unwrap();
        assert!(are_isomorphic(&h, &p3_plus_isolated(2)).unwrap());
    }

    #[test]
    fn pattern_larger_than_host() {
        assert_eq!(find_induced(&Graph::complete(3), &Graph::empty(4)), None);
    }

    #[test]
    fn freeness_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(freeness_witness(&c5, &ForbiddenFamily::Gem), None);
        assert_eq!(freeness_witness(&c5, &ForbiddenFamily::CoGem), None);
        // The dominating vertex of the gem rules out an induced P3+P1.
        assert_eq!(
            freeness_witness(&gem(), &ForbiddenFamily::P3PlusIsolated(1)),
            None
        );
        let (name, w) = freeness_witness(&co_gem(), &ForbiddenFamily::P3PlusIsolated(1)).unwrap();
        assert_eq!(name, "P3+1P1");
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn max_clique_examples() {
        assert_eq!(max_clique(&Graph::complete(5)).len(), 5);
        let e = max_clique(&Graph::cycle(5));
        assert_eq!(e.len(), 2);
        assert!(Graph::cycle(5).is_clique(&e));
        assert_eq!(max_clique(&Graph::empty(0)).len(), 0);
        assert_eq!(max_clique(&Graph::empty(3)).len(), 1);
    }

    #[test]
    fn stable_set_examples() {
        assert_eq!(max_stable_set(&Graph::complete(5)).len(), 1);
        assert_eq!(max_stable_set(&Graph::cycle(5)).len(), 2);
        assert_eq!(max_stable_set(&Graph::empty(5)).len(), 5);
    }

    #[test]
    fn maximal_clique_examples() {
        let c5 = maximal_cliques(&Graph::cycle(5));
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|k| k.len() == 2));
        let k5 = maximal_cliques(&Graph::complete(5));
        assert_eq!(k5, vec![Graph::complete(5).vertices()]);
        let p3 = maximal_cliques(&Graph::path(3));
        assert_eq!(p3, vec![set(3, &[0, 1]), set(3, &[1, 2])]);
        assert_eq!(
            maximal_cliques(&Graph::empty(2)),
            vec![set(2, &[0]), set(2, &[1])]
        );
    }

    #[test]
    fn very_good_examples() {
        let c5 = Graph::cycle(5);
        assert!(!is_very_good_stable_set(&c5, &set(5, &[0, 2])));
        let k5 = Graph::complete(5);
        assert!(is_very_good_stable_set(&k5, &set(5, &[3])));
        // Not stable.
        assert!(!is_very_good_stable_set(&k5, &set(5, &[0, 1])));
    }

    #[test]
    fn module_examples() {
        assert_eq!(find_nontrivial_module(&Graph::cycle(5)), None);
        let m = find_nontrivial_module(&Graph::complete(5)).unwrap();
        assert_eq!(m, set(5, &[0, 1]));
        assert!(is_module(&Graph::complete(5), &set(5, &[2, 4])));
        assert_eq!(find_nontrivial_module(&Graph::path(4)), None);
        assert_eq!(find_nontrivial_module(&Graph::complete(1)), None);
    }
}
