//! Independent oracles used by the integration and acceptance suites.
//!
//! Everything here recomputes results from raw adjacency with a different
//! algorithm than the library path it checks: union-find for connectivity
//! and neighborhood components, brute-force triple enumeration for border
//! predicates, repeated edge relaxation for hop distances.

#![allow(dead_code)]

use injectsim::topology::{generate_topology, is_connected, SimParams, Topology};

pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Connectivity via union-find over all edges.
pub fn connected_oracle(topo: &Topology) -> bool {
    let n = topo.node_count();
    if n == 0 {
        return true;
    }
    let mut uf = UnionFind::new(n);
    for u in 0..n {
        for &v in topo.neighbors(u) {
            uf.union(u, v);
        }
    }
    let root = uf.find(0);
    (1..n).all(|v| uf.find(v) == root)
}

/// Bridge predicate via union-find on the subgraph induced by N(v).
pub fn bridge_oracle(topo: &Topology, v: usize) -> bool {
    let neighbors = topo.neighbors(v);
    let k = neighbors.len();
    if k <= 1 {
        return false;
    }
    let mut uf = UnionFind::new(k);
    for (i, &a) in neighbors.iter().enumerate() {
        for (j, &b) in neighbors.iter().enumerate().skip(i + 1) {
            if topo.has_edge(a, b) {
                uf.union(i, j);
            }
        }
    }
    let root = uf.find(0);
    (1..k).any(|i| uf.find(i) != root)
}

/// Weak predicate by recounting links among neighbors from raw adjacency.
pub fn weak_oracle(topo: &Topology, v: usize, t_c: f64) -> bool {
    let neighbors = topo.neighbors(v);
    let k = neighbors.len();
    if k < 3 {
        return true;
    }
    let mut links = 0usize;
    for (i, &a) in neighbors.iter().enumerate() {
        for &b in &neighbors[i + 1..] {
            if topo.has_edge(a, b) {
                links += 1;
            }
        }
    }
    let cc = links as f64 / ((k * (k - 1)) / 2) as f64;
    cc < t_c
}

/// Enumerate every (a, b, r) triple over the full graph: a, b distinct
/// neighbors of v, r a common neighbor of a and b outside N(v) ∪ {v}.
/// Returns (any_valid_covers, any_valid, all_valid_cover).
fn border_triples(topo: &Topology, v: usize) -> (bool, bool, bool) {
    let n = topo.node_count();
    let neighbors = topo.neighbors(v);
    let mut any_valid = false;
    let mut any_covers = false;
    let mut all_cover = true;
    for (i, &a) in neighbors.iter().enumerate() {
        for &b in &neighbors[i + 1..] {
            let mut valid = false;
            for r in 0..n {
                if r == v || topo.has_edge(v, r) {
                    continue;
                }
                if topo.has_edge(a, r) && topo.has_edge(b, r) {
                    valid = true;
                    break;
                }
            }
            if !valid {
                continue;
            }
            any_valid = true;
            let covers = neighbors
                .iter()
                .filter(|&&u| u != a && u != b)
                .all(|&u| topo.has_edge(a, u) || topo.has_edge(b, u));
            if covers {
                any_covers = true;
            } else {
                all_cover = false;
            }
        }
    }
    (any_covers, any_valid, all_cover)
}

pub fn obtrusive_oracle(topo: &Topology, v: usize) -> bool {
    border_triples(topo, v).0
}

pub fn restrained_oracle(topo: &Topology, v: usize) -> bool {
    let (_, any_valid, all_cover) = border_triples(topo, v);
    any_valid && all_cover
}

/// Hop distances by repeated relaxation over the edge list until fixpoint.
pub fn relaxation_distances(topo: &Topology, source: usize) -> Vec<Option<usize>> {
    let n = topo.node_count();
    let mut dist: Vec<Option<usize>> = vec![None; n];
    dist[source] = Some(0);
    loop {
        let mut changed = false;
        for u in 0..n {
            if let Some(du) = dist[u] {
                for &v in topo.neighbors(u) {
                    if dist[v].map_or(true, |dv| dv > du + 1) {
                        dist[v] = Some(du + 1);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return dist;
        }
    }
}

pub fn all_pair_avg_oracle(topo: &Topology) -> f64 {
    let n = topo.node_count();
    let mut total = 0usize;
    for s in 0..n {
        total += relaxation_distances(topo, s)
            .iter()
            .map(|d| d.expect("connected"))
            .sum::<usize>();
    }
    total as f64 / (n * (n - 1)) as f64
}

pub fn set_to_all_oracle(topo: &Topology, sources: &[usize]) -> f64 {
    let n = topo.node_count();
    let total: usize = sources
        .iter()
        .map(|&s| {
            relaxation_distances(topo, s)
                .iter()
                .map(|d| d.expect("connected"))
                .sum::<usize>()
        })
        .sum();
    total as f64 / (sources.len() * (n - 1)) as f64
}

/// Induced subgraph of the closed 2-hop ball around `center`, with the
/// center's new id.
pub fn two_hop_ball(topo: &Topology, center: usize) -> (Topology, usize) {
    let mut ball = vec![center];
    for &u in topo.neighbors(center) {
        ball.push(u);
        for &w in topo.neighbors(u) {
            ball.push(w);
        }
    }
    ball.sort_unstable();
    ball.dedup();
    let mut edges = Vec::new();
    for (i, &u) in ball.iter().enumerate() {
        for &v in topo.neighbors(u) {
            if let Ok(j) = ball.binary_search(&v) {
                if j > i {
                    edges.push((i, j));
                }
            }
        }
    }
    let center_in_ball = ball.binary_search(&center).unwrap();
    (Topology::from_edges(ball.len(), &edges).unwrap(), center_in_ball)
}

/// A deterministic battery of random instances with 30..=60 nodes. The area
/// is shrunk so that connected instances are common enough to sample.
pub fn random_instances(count: usize, connected_only: bool) -> Vec<Topology> {
    let mut out = Vec::with_capacity(count);
    let mut seed = 0u64;
    let mut i = 0usize;
    while out.len() < count {
        let node_count = 30 + (i * 7) % 31;
        i += 1;
        let params = SimParams::new(node_count, 200.0, 50.0, seed).unwrap();
        seed += 1;
        let topo = generate_topology(params);
        if connected_only && !is_connected(&topo) {
            continue;
        }
        out.push(topo);
    }
    out
}
