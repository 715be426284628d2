//! Simulator and experiment harness for localized injection-point candidate
//! election in wireless ad-hoc networks.
//!
//! Geometric random graphs are generated over a square area with a uniform
//! transmission range; five at-most-2-hop heuristics (bridge, weak, obtrusive
//! border, restrained border, node degree) partition the nodes into injection
//! point candidates and discharged candidates; hop-count metrics measure how
//! efficiently each set spreads information, swept over network densities.

pub mod classifiers;
pub mod cli;
pub mod error;
pub mod experiment;
pub mod localview;
pub mod metrics;
pub mod topology;

pub use classifiers::{classify, Classification, ClassifierSpec};
pub use error::SimError;
pub use experiment::{full_battery, run_single, sweep, sweep_serial, SweepConfig, SweepRecord};
pub use localview::{clustering_coefficient, ego_view, EgoView};
pub use metrics::{all_pair_avg, hop_distances, set_to_all_avg, MetricTriple};
pub use topology::{generate_topology, is_connected, network_density, SimParams, Topology};
