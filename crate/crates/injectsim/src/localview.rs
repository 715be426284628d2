//! Strictly local (at most 2-hop) node knowledge.
//!
//! Every classifier decision is a function of the ego view only: a node's
//! 1-hop neighbor set, the edges among those neighbors, and each neighbor's
//! own 1-hop neighbor set. Nothing beyond two hops is extracted.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::SimError;
use crate::topology::Topology;

/// The 2-hop knowledge of a single node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgoView {
    pub center: usize,
    pub neighbors: BTreeSet<usize>,
    /// Unordered pairs {u, w} of neighbors of the center that are adjacent,
    /// stored as (min, max).
    pub neighbor_edges: BTreeSet<(usize, usize)>,
    /// Full 1-hop neighbor set of each neighbor.
    pub neighbor_neighbors: BTreeMap<usize, BTreeSet<usize>>,
}

impl EgoView {
    pub fn degree(&self) -> usize {
        self.neighbors.len()
    }
}

pub fn ego_view(topo: &Topology, v: usize) -> Result<EgoView, SimError> {
    if v >= topo.node_count() {
        return Err(SimError::InvalidNode(v));
    }
    let neighbors: BTreeSet<usize> = topo.neighbors(v).iter().copied().collect();
    let mut neighbor_edges = BTreeSet::new();
    let mut neighbor_neighbors = BTreeMap::new();
    for &u in &neighbors {
        let nu: BTreeSet<usize> = topo.neighbors(u).iter().copied().collect();
        for &w in &neighbors {
            if w > u && nu.contains(&w) {
                neighbor_edges.insert((u, w));
            }
        }
        neighbor_neighbors.insert(u, nu);
    }
    Ok(EgoView { center: v, neighbors, neighbor_edges, neighbor_neighbors })
}

/// Local clustering coefficient: realized links among neighbors over
/// k(k-1)/2 possible. Defined as 0 for degree <= 1.
pub fn clustering_coefficient(view: &EgoView) -> f64 {
    let k = view.degree();
    if k <= 1 {
        return 0.0;
    }
    let possible = (k * (k - 1)) / 2;
    view.neighbor_edges.len() as f64 / possible as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::Topology;

    #[test]
    fn triangle_view() {
        let topo = Topology::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let view = ego_view(&topo, 0).unwrap();
        assert_eq!(view.neighbors, [1, 2].into_iter().collect());
        assert_eq!(view.neighbor_edges, [(1, 2)].into_iter().collect());
        assert_eq!(clustering_coefficient(&view), 1.0);
    }

    #[test]
    fn star_center_has_no_neighbor_edges() {
        let topo = Topology::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let view = ego_view(&topo, 0).unwrap();
        assert!(view.neighbor_edges.is_empty());
        assert_eq!(clustering_coefficient(&view), 0.0);
    }

    #[test]
    fn one_of_three_links() {
        // center 0 with neighbors 1,2,3 and the single edge 1-2
        let topo = Topology::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let view = ego_view(&topo, 0).unwrap();
        let cc = clustering_coefficient(&view);
        assert!((cc - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn low_degree_cc_is_zero() {
        let topo = Topology::from_edges(2, &[(0, 1)]).unwrap();
        let view = ego_view(&topo, 0).unwrap();
        assert_eq!(clustering_coefficient(&view), 0.0);
    }

    #[test]
    fn view_internally_consistent() {
        let params = crate::topology::SimParams::new(60, 300.0, 50.0, 11).unwrap();
        let topo = crate::topology::generate_topology(params);
        for v in 0..topo.node_count() {
            let view = ego_view(&topo, v).unwrap();
            assert!(!view.neighbors.contains(&v));
            for (&u, nu) in &view.neighbor_neighbors {
                assert!(!nu.contains(&u));
                assert!(nu.contains(&v));
            }
            // neighbor_edges agrees with the per-neighbor sets
            for &u in &view.neighbors {
                for &w in &view.neighbors {
                    if w > u {
                        let adjacent = view.neighbor_neighbors[&u].contains(&w);
                        assert_eq!(view.neighbor_edges.contains(&(u, w)), adjacent);
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_node_rejected() {
        let topo = Topology::from_edges(3, &[(0, 1)]).unwrap();
        assert!(ego_view(&topo, 5).is_err());
    }
}
