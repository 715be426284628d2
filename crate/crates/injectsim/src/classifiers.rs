//! The five localized election heuristics, as pure predicates over [`EgoView`].
//!
//! A predicate flags nodes that are inappropriate injection points; `classify`
//! partitions the node set into discharged (flagged) and candidates (the rest).

use crate::error::SimError;
use crate::localview::{clustering_coefficient, ego_view, EgoView};
use crate::topology::Topology;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassifierSpec {
    Bridge,
    /// Discharge nodes with degree < 3 or clustering coefficient < T_C.
    Weak { cc_threshold: f64 },
    ObtrusiveBorder,
    RestrainedBorder,
    /// Discharge nodes with degree < k.
    Degree { threshold: usize },
}

impl ClassifierSpec {
    pub fn validate(&self) -> Result<(), SimError> {
        match *self {
            ClassifierSpec::Weak { cc_threshold } => {
                if cc_threshold <= 0.0 || cc_threshold >= 1.0 {
                    return Err(SimError::InvalidParams(format!(
                        "cc_threshold must be in (0,1), got {cc_threshold}"
                    )));
                }
            }
            ClassifierSpec::Degree { threshold } => {
                if threshold < 1 {
                    return Err(SimError::InvalidParams("degree threshold must be >= 1".into()));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Short name used in CSV output and CLI flags.
    pub fn name(&self) -> &'static str {
        match self {
            ClassifierSpec::Bridge => "bridge",
            ClassifierSpec::Weak { .. } => "weak",
            ClassifierSpec::ObtrusiveBorder => "oborder",
            ClassifierSpec::RestrainedBorder => "rborder",
            ClassifierSpec::Degree { .. } => "degree",
        }
    }

    /// Threshold parameter rendered for CSV output; empty when parameterless.
    pub fn param_string(&self) -> String {
        match self {
            ClassifierSpec::Weak { cc_threshold } => format!("{cc_threshold}"),
            ClassifierSpec::Degree { threshold } => format!("{threshold}"),
            _ => String::new(),
        }
    }

    pub fn evaluate(&self, view: &EgoView) -> bool {
        match *self {
            ClassifierSpec::Bridge => is_bridge(view),
            ClassifierSpec::Weak { cc_threshold } => is_weak(view, cc_threshold),
            ClassifierSpec::ObtrusiveBorder => is_obtrusive_border(view),
            ClassifierSpec::RestrainedBorder => is_restrained_border(view),
            ClassifierSpec::Degree { threshold } => is_low_degree(view, threshold),
        }
    }
}

/// Partition of the node set into injection point candidates and discharged
/// candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub candidates: Vec<usize>,
    pub discharged: Vec<usize>,
}

/// True iff the neighbors of the center induce a disconnected subgraph,
/// i.e. the center is the only local path between neighbor groups.
/// Degree <= 1 neighborhoods count as connected.
pub fn is_bridge(view: &EgoView) -> bool {
    let k = view.degree();
    if k <= 1 {
        return false;
    }
    let nodes: Vec<usize> = view.neighbors.iter().copied().collect();
    let index = |id: usize| nodes.binary_search(&id).unwrap();
    let mut seen = vec![false; k];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = stack.pop() {
        let u = nodes[i];
        for &(a, b) in &view.neighbor_edges {
            let other = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            let j = index(other);
            if !seen[j] {
                seen[j] = true;
                reached += 1;
                stack.push(j);
            }
        }
    }
    reached < k
}

/// True iff degree < 3 or clustering coefficient strictly below `t_c`.
pub fn is_weak(view: &EgoView, t_c: f64) -> bool {
    view.degree() < 3 || clustering_coefficient(view) < t_c
}

/// A spanning pair {a, b} of neighbors of the center is valid if a and b
/// share a common neighbor r outside the center's neighborhood (r != center).
/// The pair covers if every other neighbor of the center is adjacent to a or b.
fn spanning_pairs(view: &EgoView) -> Vec<(usize, usize, bool)> {
    let v = view.center;
    let nodes: Vec<usize> = view.neighbors.iter().copied().collect();
    let mut pairs = Vec::new();
    for (i, &a) in nodes.iter().enumerate() {
        let na = &view.neighbor_neighbors[&a];
        for &b in &nodes[i + 1..] {
            let nb = &view.neighbor_neighbors[&b];
            let has_ref = na
                .intersection(nb)
                .any(|&r| r != v && !view.neighbors.contains(&r));
            if !has_ref {
                continue;
            }
            let covers = nodes
                .iter()
                .filter(|&&u| u != a && u != b)
                .all(|&u| na.contains(&u) || nb.contains(&u));
            pairs.push((a, b, covers));
        }
    }
    pairs
}

/// True iff at least one valid spanning pair covers the neighborhood.
pub fn is_obtrusive_border(view: &EgoView) -> bool {
    spanning_pairs(view).iter().any(|&(_, _, covers)| covers)
}

/// True iff at least one valid spanning pair exists and every valid pair
/// covers the neighborhood. Implies the obtrusive condition.
pub fn is_restrained_border(view: &EgoView) -> bool {
    let pairs = spanning_pairs(view);
    !pairs.is_empty() && pairs.iter().all(|&(_, _, covers)| covers)
}

/// True iff degree is strictly below `k`.
pub fn is_low_degree(view: &EgoView, k: usize) -> bool {
    view.degree() < k
}

/// Evaluate the predicate on every node's ego view. Discharged nodes are the
/// flagged ones; candidates are the complement.
pub fn classify(topo: &Topology, spec: &ClassifierSpec) -> Classification {
    let mut candidates = Vec::new();
    let mut discharged = Vec::new();
    for v in 0..topo.node_count() {
        let view = ego_view(topo, v).expect("valid node id");
        if spec.evaluate(&view) {
            discharged.push(v);
        } else {
            candidates.push(v);
        }
    }
    Classification { candidates, discharged }
}
