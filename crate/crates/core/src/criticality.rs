//! Definition-level vertex-criticality.

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{chromatic_number, k_colorable};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    /// The `k` the question was asked at.
    pub k: usize,
    pub chi: usize,
    /// `per_vertex[v]` is `χ(G - v)` when computed exactly, otherwise
    /// `chi - 1` if `G - v` is `(chi - 1)`-colorable and `chi` if not.
    pub per_vertex: Vec<usize>,
    pub exact: bool,
    pub verdict: bool,
}

fn report(g: &Graph, k: usize, exact: bool) -> CriticalityReport {
    let chi = chromatic_number(g).0;
    let per_vertex: Vec<usize> = (0..g.order())
        .into_par_iter()
        .map(|v| {
            let rest = g.remove_vertex(v);
            if exact {
                chromatic_number(&rest).0
            } else if chi > 0 && k_colorable(&rest, chi - 1).is_some() {
                chi - 1
            } else {
                chi
            }
        })
        .collect();
    let verdict = chi == k && per_vertex.iter().all(|&c| c < k);
    CriticalityReport {
        k,
        chi,
        per_vertex,
        exact,
        verdict,
    }
}

/// Tests whether `χ(G) = k` and `χ(G - v) < k` for every vertex `v`.
///
/// Each deletion costs one `(χ - 1)`-colorability call, which suffices since
/// deleting a vertex lowers the chromatic number by at most one.
pub fn is_k_vertex_critical(g: &Graph, k: usize) -> CriticalityReport {
    report(g, k, false)
}

/// Same verdict as [`is_k_vertex_critical`], with exact `χ(G - v)` entries.
pub fn criticality_report_exact(g: &Graph, k: usize) -> CriticalityReport {
    report(g, k, true)
}
