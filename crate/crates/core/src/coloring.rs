//! Exact k-colorability and chromatic number.
//!
//! The solver pre-colors one maximum clique with distinct colors, then runs
//! DSATUR-ordered backtracking where a vertex may only open the next unused
//! color index. Both rules only remove color-permutation symmetry, so the
//! search stays complete.

use serde::{Deserialize, Serialize};

use crate::detectors::max_clique;
use crate::graph::Graph;

/// A total assignment of colors in `0..k` to the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Self {
        Coloring { k, colors }
    }

    /// Color budget.
    pub fn budget(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Number of distinct colors actually used.
    pub fn used(&self) -> usize {
        let mut seen = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Straight edge scan: total, within budget, and proper.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> bool {
    c.colors.len() == g.order()
        && c.colors.iter().all(|&x| x < c.k)
        && g.edges().all(|(u, v)| c.colors[u] != c.colors[v])
}

const UNCOLORED: usize = usize::MAX;

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    /// `counts[v * k + c]`: colored neighbors of `v` with color `c`.
    counts: Vec<u32>,
    saturation: Vec<usize>,
    remaining: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.order();
        Dsatur {
            g,
            k,
            colors: vec![UNCOLORED; n],
            counts: vec![0; n * k],
            saturation: vec![0; n],
            remaining: n,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        self.remaining -= 1;
        for u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.k + c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = UNCOLORED;
        self.remaining += 1;
        for u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Uncolored vertex of maximum saturation, lowest index on ties.
    fn select(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.colors.len() {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            match best {
                Some(b) if self.saturation[b] >= self.saturation[v] => {}
                _ => best = Some(v),
            }
        }
        best
    }

    /// `opened`: number of color indices used so far.
    fn search(&mut self, opened: usize) -> bool {
        if self.remaining == 0 {
            return true;
        }
        let v = self.select().expect("remaining > 0");
        if self.saturation[v] >= self.k {
            return false;
        }
        let limit = (opened + 1).min(self.k);
        for c in 0..limit {
            if self.counts[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(opened.max(c + 1)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

/// A proper `k`-coloring of `g` if one exists. Complete: `None` means `g`
/// has no `k`-coloring. `k = 0` succeeds only on the null graph.
pub fn k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return Some(Coloring::new(k, Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let clique = max_clique(g);
    if clique.len() > k {
        return None;
    }
    let mut solver = Dsatur::new(g, k);
    for (c, v) in clique.iter().enumerate() {
        solver.assign(v, c);
    }
    if solver.search(clique.len()) {
        Some(Coloring::new(k, solver.colors))
    } else {
        None
    }
}

/// `χ(g)` with a witness coloring whose budget equals `χ(g)`. The null graph
/// has chromatic number 0.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    if g.order() == 0 {
        return (0, Coloring::new(0, Vec::new()));
    }
    let mut k = max_clique(g).len();
    loop {
        if let Some(c) = k_colorable(g, k) {
            return (k, c);
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_colorable_examples() {
        let c5 = Graph::cycle(5);
        assert!(k_colorable(&c5, 2).is_none());
        let c = k_colorable(&c5, 3).unwrap();
        assert!(verify_coloring(&c5, &c));
    }

    #[test]
    fn chromatic_number_examples() {
        let (chi, c) = chromatic_number(&Graph::complete(5));
        assert_eq!(chi, 5);
        assert!(verify_coloring(&Graph::complete(5), &c));
        assert_eq!(chromatic_number(&Graph::cycle(5)).0, 3);
        assert_eq!(chromatic_number(&Graph::empty(4)).0, 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).0, 0);
        assert_eq!(chromatic_number(&Graph::cycle(7)).0, 3);
        assert_eq!(chromatic_number(&Graph::cycle(8)).0, 2);
    }

    #[test]
    fn verify_examples() {
        let c5 = Graph::cycle(5);
        assert!(verify_coloring(&c5, &Coloring::new(3, vec![0, 1, 0, 1, 2])));
        assert!(!verify_coloring(
            &Graph::complete(3),
            &Coloring::new(3, vec![0, 0, 0])
        ));
        assert!(verify_coloring(
            &Graph::complete(5),
            &Coloring::new(5, vec![3, 0, 4, 1, 2])
        ));
        // Over budget, partial.
        assert!(!verify_coloring(
            &c5,
            &Coloring::new(2, vec![0, 1, 0, 1, 2])
        ));
        assert!(!verify_coloring(&c5, &Coloring::new(3, vec![0, 1, 0, 1])));
    }

    #[test]
    fn zero_budget() {
        assert!(k_colorable(&Graph::empty(0), 0).is_some());
        assert!(k_colorable(&Graph::empty(1), 0).is_none());
    }
}
