//! Sweep driver: for each node count, generate a fixed number of connected
//! topologies (rejecting partitioned ones), run every classifier on the same
//! topology sequence, and aggregate per-density metric means.

use rayon::prelude::*;

use crate::classifiers::{classify, Classification, ClassifierSpec};
use crate::error::SimError;
use crate::metrics::{all_pair_avg_from, distance_matrix, set_to_all_avg_from, MetricTriple};
use crate::topology::{density_for, generate_topology, is_connected, SimParams, Topology};

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub node_counts: Vec<usize>,
    pub area_side: f64,
    pub tx_range: f64,
    pub runs_per_density: usize,
    pub master_seed: u64,
    pub specs: Vec<ClassifierSpec>,
    /// Cap on rejected (disconnected) topologies per run slot before the run
    /// is abandoned. Connectivity at density 2.62 is roughly 5e-5, so the
    /// default budgets ~50 expected acceptances per slot.
    pub max_rejections: u64,
    /// Density boundary used to tag low- vs high-density regions in output.
    pub region_cut: f64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SimError> {
        if self.runs_per_density < 1 {
            return Err(SimError::InvalidParams("runs_per_density must be >= 1".into()));
        }
        if self.node_counts.is_empty() {
            return Err(SimError::InvalidParams("node_counts must be non-empty".into()));
        }
        if !self.node_counts.windows(2).all(|w| w[0] < w[1]) {
            return Err(SimError::InvalidParams("node_counts must be strictly increasing".into()));
        }
        for spec in &self.specs {
            spec.validate()?;
        }
        Ok(())
    }
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            node_counts: (30..=210).step_by(15).collect(),
            area_side: 300.0,
            tx_range: 50.0,
            runs_per_density: 50,
            master_seed: 42,
            specs: full_battery(),
            max_rejections: 1_000_000,
            region_cut: 7.85,
        }
    }
}

/// The seven classifier configurations of the full experiment battery.
pub fn full_battery() -> Vec<ClassifierSpec> {
    vec![
        ClassifierSpec::Bridge,
        ClassifierSpec::Weak { cc_threshold: 0.35 },
        ClassifierSpec::Weak { cc_threshold: 0.4 },
        ClassifierSpec::ObtrusiveBorder,
        ClassifierSpec::RestrainedBorder,
        ClassifierSpec::Degree { threshold: 5 },
        ClassifierSpec::Degree { threshold: 7 },
    ]
}

/// Aggregated result for one (density, classifier) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub density: f64,
    pub node_count: usize,
    pub spec: ClassifierSpec,
    pub runs_used: usize,
    pub mean_all_pair: f64,
    /// Mean over the runs where the candidate set was non-empty; absent when
    /// no run contributed.
    pub mean_candidates: Option<f64>,
    pub mean_discharged: Option<f64>,
    /// Number of runs contributing to `mean_candidates` / `mean_discharged`.
    pub candidate_runs: usize,
    pub discharged_runs: usize,
    pub mean_discharged_fraction: f64,
    pub rejected_topologies: u64,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Per-attempt topology seed, a pure function of the sweep coordinates.
pub fn derive_seed(master_seed: u64, node_count: usize, run_index: usize, attempt: u64) -> u64 {
    let mut s = splitmix64(master_seed);
    s = splitmix64(s ^ node_count as u64);
    s = splitmix64(s ^ run_index as u64);
    splitmix64(s ^ attempt)
}

/// One classified, measured run on the topology generated by `params`.
/// The topology must be connected.
pub fn run_single(
    params: SimParams,
    spec: &ClassifierSpec,
) -> Result<(MetricTriple, Classification), SimError> {
    let topo = generate_topology(params);
    if !is_connected(&topo) {
        return Err(SimError::Disconnected);
    }
    let matrix = distance_matrix(&topo)?;
    Ok(measure(&topo, &matrix, spec))
}

fn measure(topo: &Topology, matrix: &[Vec<usize>], spec: &ClassifierSpec) -> (MetricTriple, Classification) {
    let classification = classify(topo, spec);
    let triple = MetricTriple {
        all_pair: all_pair_avg_from(matrix),
        candidates_to_all: set_to_all_avg_from(matrix, &classification.candidates),
        discharged_to_all: set_to_all_avg_from(matrix, &classification.discharged),
        candidate_count: classification.candidates.len(),
        discharged_count: classification.discharged.len(),
    };
    (triple, classification)
}

struct AcceptedRun {
    topology: Topology,
    matrix: Vec<Vec<usize>>,
    rejections: u64,
}

/// Rejection-sample a connected topology for one run slot. Returns `None`
/// if the rejection cap is exhausted first.
fn accept_run(config: &SweepConfig, node_count: usize, run_index: usize) -> Option<AcceptedRun> {
    for attempt in 0..=config.max_rejections {
        let seed = derive_seed(config.master_seed, node_count, run_index, attempt);
        let params = SimParams {
            node_count,
            area_side: config.area_side,
            tx_range: config.tx_range,
            seed,
        };
        let topo = generate_topology(params);
        if is_connected(&topo) {
            let matrix = distance_matrix(&topo).expect("connected");
            return Some(AcceptedRun { topology: topo, matrix, rejections: attempt });
        }
    }
    None
}

fn aggregate(
    config: &SweepConfig,
    node_count: usize,
    runs: &[AcceptedRun],
    rejected: u64,
    spec: &ClassifierSpec,
) -> SweepRecord {
    let mut sum_all = 0.0;
    let mut sum_cand = 0.0;
    let mut sum_disch = 0.0;
    let mut cand_runs = 0usize;
    let mut disch_runs = 0usize;
    let mut sum_frac = 0.0;
    for run in runs {
        let (triple, _) = measure(&run.topology, &run.matrix, spec);
        sum_all += triple.all_pair;
        if let Some(c) = triple.candidates_to_all {
            sum_cand += c;
            cand_runs += 1;
        }
        if let Some(d) = triple.discharged_to_all {
            sum_disch += d;
            disch_runs += 1;
        }
        sum_frac += triple.discharged_count as f64 / node_count as f64;
    }
    let runs_used = runs.len();
    SweepRecord {
        density: density_for(node_count, config.area_side, config.tx_range),
        node_count,
        spec: *spec,
        runs_used,
        mean_all_pair: if runs_used > 0 { sum_all / runs_used as f64 } else { f64::NAN },
        mean_candidates: (cand_runs > 0).then(|| sum_cand / cand_runs as f64),
        mean_discharged: (disch_runs > 0).then(|| sum_disch / disch_runs as f64),
        candidate_runs: cand_runs,
        discharged_runs: disch_runs,
        mean_discharged_fraction: if runs_used > 0 { sum_frac / runs_used as f64 } else { f64::NAN },
        rejected_topologies: rejected,
    }
}

fn sweep_density(config: &SweepConfig, node_count: usize, parallel: bool) -> Vec<SweepRecord> {
    let run_indices: Vec<usize> = (0..config.runs_per_density).collect();
    let accepted: Vec<Option<AcceptedRun>> = if parallel {
        run_indices
            .par_iter()
            .map(|&i| accept_run(config, node_count, i))
            .collect()
    } else {
        run_indices.iter().map(|&i| accept_run(config, node_count, i)).collect()
    };
    let rejected: u64 = accepted
        .iter()
        .map(|r| r.as_ref().map_or(config.max_rejections + 1, |a| a.rejections))
        .sum();
    let runs: Vec<AcceptedRun> = accepted.into_iter().flatten().collect();
    config
        .specs
        .iter()
        .map(|spec| aggregate(config, node_count, &runs, rejected, spec))
        .collect()
}

fn sweep_impl(config: &SweepConfig, parallel: bool) -> Result<Vec<SweepRecord>, SimError> {
    config.validate()?;
    let mut records = Vec::new();
    for &node_count in &config.node_counts {
        records.extend(sweep_density(config, node_count, parallel));
    }
    Ok(records)
}

/// Run the full sweep with runs executing in parallel. Output is identical
/// to [`sweep_serial`]: per-run seeds are pre-derived and aggregation order
/// is fixed by run index.
pub fn sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>, SimError> {
    sweep_impl(config, true)
}

pub fn sweep_serial(config: &SweepConfig) -> Result<Vec<SweepRecord>, SimError> {
    sweep_impl(config, false)
}
