//! Geometric random graph generation and global structural properties.
//!
//! Nodes are placed uniformly at random in a square area and linked whenever
//! their Euclidean distance is at most the transmission range (unit-disk
//! model with a homogeneous, bidirectional range).

use std::collections::VecDeque;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::SimError;

/// Parameters of a single generated network instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimParams {
    pub node_count: usize,
    pub area_side: f64,
    pub tx_range: f64,
    pub seed: u64,
}

impl SimParams {
    pub fn new(node_count: usize, area_side: f64, tx_range: f64, seed: u64) -> Result<Self, SimError> {
        if node_count < 2 {
            return Err(SimError::InvalidParams("node_count must be at least 2".into()));
        }
        if !(area_side > 0.0) {
            return Err(SimError::InvalidParams("area_side must be positive".into()));
        }
        if !(tx_range > 0.0) {
            return Err(SimError::InvalidParams("tx_range must be positive".into()));
        }
        Ok(Self { node_count, area_side, tx_range, seed })
    }
}

/// An immutable network instance: node positions plus the derived adjacency.
#[derive(Debug, Clone, PartialEq)]
pub struct Topology {
    positions: Vec<(f64, f64)>,
    adjacency: Vec<Vec<usize>>,
    params: SimParams,
}

impl Topology {
    pub fn node_count(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[(f64, f64)] {
        &self.positions
    }

    pub fn params(&self) -> &SimParams {
        &self.params
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Build a topology directly from an explicit undirected edge list.
    /// Positions are synthetic; intended for tests and fixtures.
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Result<Self, SimError> {
        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in edges {
            if u >= node_count || v >= node_count {
                return Err(SimError::InvalidNode(u.max(v)));
            }
            if u == v {
                return Err(SimError::InvalidParams(format!("self-loop at node {u}")));
            }
            if !adjacency[u].contains(&v) {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let params = SimParams { node_count, area_side: 1.0, tx_range: 1.0, seed: 0 };
        Ok(Self { positions: vec![(0.0, 0.0); node_count], adjacency, params })
    }

    /// Edge-list text format: first line `n`, then one `u v` line per edge
    /// with u < v, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.node_count()).unwrap();
        for u in 0..self.node_count() {
            for &v in &self.adjacency[u] {
                if u < v {
                    writeln!(out, "{u} {v}").unwrap();
                }
            }
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self, SimError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| SimError::Parse("empty edge list".into()))?
            .trim()
            .parse()
            .map_err(|_| SimError::Parse("bad node count line".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut parts = line.split_whitespace();
            let u: usize = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| SimError::Parse(format!("bad edge line: {line}")))?;
            let v: usize = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| SimError::Parse(format!("bad edge line: {line}")))?;
            edges.push((u, v));
        }
        Self::from_edges(n, &edges)
    }
}

/// Draw node positions uniformly over the square and derive the unit-disk
/// adjacency. Deterministic for a fixed seed: the ChaCha8 stream is consumed
/// as exactly two `f64` draws per node, in node-ID order.
pub fn generate_topology(params: SimParams) -> Topology {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut positions = Vec::with_capacity(params.node_count);
    for _ in 0..params.node_count {
        let x = rng.gen::<f64>() * params.area_side;
        let y = rng.gen::<f64>() * params.area_side;
        positions.push((x, y));
    }

    let range_sq = params.tx_range * params.tx_range;
    let mut adjacency = vec![Vec::new(); params.node_count];
    for u in 0..params.node_count {
        for v in (u + 1)..params.node_count {
            let dx = positions[u].0 - positions[v].0;
            let dy = positions[u].1 - positions[v].1;
            if dx * dx + dy * dy <= range_sq {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
    }
    Topology { positions, adjacency, params }
}

/// Network density nπr²/a²: total nominal coverage of all nodes over the
/// simulation area. Discs are not clipped at the boundary.
pub fn network_density(params: &SimParams) -> f64 {
    density_for(params.node_count, params.area_side, params.tx_range)
}

pub fn density_for(node_count: usize, area_side: f64, tx_range: f64) -> f64 {
    node_count as f64 * std::f64::consts::PI * tx_range * tx_range / (area_side * area_side)
}

/// True iff a breadth-first traversal from node 0 reaches every node.
pub fn is_connected(topo: &Topology) -> bool {
    let n = topo.node_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[0] = true;
    queue.push_back(0);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &v in topo.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    reached == n
}
