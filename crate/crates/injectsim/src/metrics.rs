//! Hop-count efficiency metrics on connected topologies.
//!
//! All metrics are plain BFS hop counts. The set-to-all average normalizes by
//! the number of summed ordered pairs, |S|(|N|-1), so that taking S = N
//! recovers the all-pair average exactly.

use std::collections::VecDeque;

use crate::error::SimError;
use crate::topology::Topology;

/// The three per-run metrics plus the partition sizes they were computed on.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricTriple {
    pub all_pair: f64,
    pub candidates_to_all: Option<f64>,
    pub discharged_to_all: Option<f64>,
    pub candidate_count: usize,
    pub discharged_count: usize,
}

/// BFS hop counts from `source` to every node. Errors if any node is
/// unreachable.
pub fn hop_distances(topo: &Topology, source: usize) -> Result<Vec<usize>, SimError> {
    if source >= topo.node_count() {
        return Err(SimError::InvalidNode(source));
    }
    let n = topo.node_count();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &v in topo.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    if reached < n {
        return Err(SimError::Disconnected);
    }
    Ok(dist)
}

/// Full hop-distance matrix, row per source.
pub fn distance_matrix(topo: &Topology) -> Result<Vec<Vec<usize>>, SimError> {
    (0..topo.node_count()).map(|s| hop_distances(topo, s)).collect()
}

/// Average shortest path over all ordered pairs i != j.
pub fn all_pair_avg(topo: &Topology) -> Result<f64, SimError> {
    let matrix = distance_matrix(topo)?;
    Ok(all_pair_avg_from(&matrix))
}

pub(crate) fn all_pair_avg_from(matrix: &[Vec<usize>]) -> f64 {
    let n = matrix.len();
    let total: usize = matrix.iter().map(|row| row.iter().sum::<usize>()).sum();
    total as f64 / (n * (n - 1)) as f64
}

/// Mean hop distance from a source in `sources` to a distinct node,
/// normalized by |sources| * (|N|-1).
pub fn set_to_all_avg(topo: &Topology, sources: &[usize]) -> Result<f64, SimError> {
    if sources.is_empty() {
        return Err(SimError::EmptySourceSet);
    }
    let mut total = 0usize;
    for &s in sources {
        total += hop_distances(topo, s)?.iter().sum::<usize>();
    }
    Ok(total as f64 / (sources.len() * (topo.node_count() - 1)) as f64)
}

pub(crate) fn set_to_all_avg_from(matrix: &[Vec<usize>], sources: &[usize]) -> Option<f64> {
    if sources.is_empty() {
        return None;
    }
    let n = matrix.len();
    let total: usize = sources.iter().map(|&s| matrix[s].iter().sum::<usize>()).sum();
    Some(total as f64 / (sources.len() * (n - 1)) as f64)
}
