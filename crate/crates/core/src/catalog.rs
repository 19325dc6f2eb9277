//! The ten special (gem, co-gem)-free base graphs `G1..G10`.
//!
//! Vertex `v_i` of each drawing is index `i - 1`. `G1` is `C5`; the others
//! contain the stable triple `{v1, v4, v6}`, which meets every maximal clique
//! of every clique expansion of the base graph.
//!
//! The related six-part class has parts `A1..A6` with `A1` complete to
//! `A2 ∪ A5`, `A2` complete to `A1 ∪ A3 ∪ A6`, `A3` complete to
//! `A2 ∪ A4 ∪ A6`, `A4` complete to `A3 ∪ A5`, all other pairs anti-complete
//! except `A5`–`A6`, which is unconstrained. No recognizer for it is provided.

use thiserror::Error;

use crate::detectors::is_very_good_stable_set;
use crate::expansion::{bag_ranges, expand, ExpansionError};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("catalog id {0} out of range 1..=10")]
    UnknownId(usize),
    #[error("G{0} has no marked triple; very-good checks need id 2..=10")]
    NoMarkedTriple(usize),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
}

const ORDERS: [usize; 10] = [5, 7, 7, 7, 7, 8, 8, 8, 8, 9];

const EDGES: [&[(usize, usize)]; 10] = [
    // G1
    &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
    // G2
    &[
        (0, 1),
        (0, 4),
        (0, 6),
        (1, 2),
        (1, 5),
        (2, 3),
        (2, 5),
        (2, 6),
        (3, 4),
        (3, 6),
    ],
    // G3
    &[
        (0, 1),
        (0, 4),
        (1, 2),
        (1, 5),
        (1, 6),
        (2, 3),
        (2, 5),
        (3, 4),
        (3, 6),
        (4, 6),
        (5, 6),
    ],
    // G4
    &[
        (0, 1),
        (0, 4),
        (1, 2),
        (1, 5),
        (2, 3),
        (2, 5),
        (3, 4),
        (3, 6),
        (4, 6),
        (5, 6),
    ],
    // G5
    &[
        (0, 1),
        (0, 4),
        (0, 6),
        (1, 2),
        (1, 5),
        (2, 3),
        (2, 5),
        (2, 6),
        (3, 4),
        (3, 6),
        (4, 5),
    ],
    // G6
    &[
        (0, 1),
        (0, 4),
        (1, 2),
        (1, 5),
        (1, 7),
        (2, 3),
        (2, 5),
        (3, 4),
        (3, 6),
        (3, 7),
        (4, 6),
        (4, 7),
        (5, 6),
        (5, 7),
    ],
    // G7
    &[
        (0, 1),
        (0, 4),
        (0, 7),
        (1, 2),
        (1, 5),
        (1, 6),
        (2, 3),
        (2, 5),
        (2, 6),
        (2, 7),
        (3, 4),
        (3, 7),
        (4, 5),
        (5, 6),
    ],
    // G8
    &[
        (0, 1),
        (0, 4),
        (0, 6),
        (1, 2),
        (1, 5),
        (1, 6),
        (2, 3),
        (2, 5),
        (3, 4),
        (3, 6),
        (3, 7),
        (4, 7),
        (5, 7),
        (6, 7),
    ],
    // G9
    &[
        (0, 1),
        (0, 4),
        (0, 6),
        (1, 2),
        (1, 5),
        (2, 3),
        (2, 5),
        (2, 6),
        (3, 4),
        (3, 6),
        (3, 7),
        (4, 5),
        (4, 7),
        (5, 7),
    ],
    // G10
    &[
        (0, 1),
        (0, 4),
        (0, 6),
        (0, 7),
        (1, 2),
        (1, 5),
        (1, 6),
        (2, 3),
        (2, 5),
        (2, 7),
        (3, 4),
        (3, 6),
        (3, 8),
        (4, 7),
        (4, 8),
        (5, 7),
        (5, 8),
        (6, 8),
    ],
];

/// Indices of `v1, v4, v6`.
pub const MARKED: [usize; 3] = [0, 3, 5];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: usize,
    pub graph: Graph,
    /// `Some(MARKED)` for ids 2..=10.
    pub marked: Option<[usize; 3]>,
}

pub fn base_graph(id: usize) -> Result<CatalogEntry, CatalogError> {
    if !(1..=10).contains(&id) {
        return Err(CatalogError::UnknownId(id));
    }
    let graph = Graph::from_edges(ORDERS[id - 1], EDGES[id - 1].iter().copied())
        .expect("catalog edge lists are valid");
    Ok(CatalogEntry {
        id,
        graph,
        marked: (id >= 2).then_some(MARKED),
    })
}

pub fn all() -> Vec<CatalogEntry> {
    (1..=10).map(|id| base_graph(id).unwrap()).collect()
}

/// Expands `G_id` by cliques of the given sizes and checks that every triple
/// with one vertex from each of the bags of `v1`, `v4`, `v6` is a very good
/// stable set.
pub fn very_good_check(id: usize, sizes: &[usize]) -> Result<bool, CatalogError> {
    let entry = base_graph(id)?;
    let marked = entry.marked.ok_or(CatalogError::NoMarkedTriple(id))?;
    let g = expand(&entry.graph, sizes)?;
    let ranges = bag_ranges(sizes);
    let [a, b, c] = marked.map(|i| ranges[i].clone());
    for x in a {
        for y in b.clone() {
            for z in c.clone() {
                let s = VertexSet::from_members(g.order(), [x, y, z]).unwrap();
                if !is_very_good_stable_set(&g, &s) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detectors::{freeness_witness, ForbiddenFamily};

    #[test]
    fn orders_and_sizes() {
        let sizes: Vec<usize> = all().iter().map(|e| e.graph.edge_count()).collect();
        assert_eq!(sizes, vec![5, 10, 11, 10, 11, 14, 14, 14, 14, 18]);
        let orders: Vec<usize> = all().iter().map(|e| e.graph.order()).collect();
        assert_eq!(orders, ORDERS.to_vec());
        assert_eq!(base_graph(1).unwrap().graph, Graph::cycle(5));
        assert_eq!(base_graph(1).unwrap().marked, None);
    }

    #[test]
    fn unknown_ids() {
        assert_eq!(base_graph(0), Err(CatalogError::UnknownId(0)));
        assert_eq!(base_graph(11), Err(CatalogError::UnknownId(11)));
        assert_eq!(
            very_good_check(1, &[1; 5]),
            Err(CatalogError::NoMarkedTriple(1))
        );
        assert!(matches!(
            very_good_check(2, &[1; 5]),
            Err(CatalogError::Expansion(
                ExpansionError::LengthMismatch { .. }
            ))
        ));
    }

    #[test]
    fn marked_triple_is_stable() {
        for e in all().into_iter().skip(1) {
            let s = VertexSet::from_members(e.graph.order(), MARKED).unwrap();
            assert!(e.graph.is_stable(&s), "G{}", e.id);
        }
    }

    #[test]
    fn gem_and_co_gem_free() {
        for e in all() {
            for fam in [ForbiddenFamily::Gem, ForbiddenFamily::CoGem] {
                assert_eq!(freeness_witness(&e.graph, &fam), None, "G{} {fam}", e.id);
            }
        }
    }

    #[test]
    fn very_good_examples() {
        assert_eq!(very_good_check(2, &[1; 7]), Ok(true));
        assert_eq!(very_good_check(10, &[1; 9]), Ok(true));
        assert_eq!(very_good_check(3, &[3, 2, 1, 3, 2, 3, 1]), Ok(true));
    }
}
