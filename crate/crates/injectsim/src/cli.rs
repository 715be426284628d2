//! Command-line front end: flag parsing, CSV emission, and a static SVG
//! line chart per classifier configuration.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Arg, ArgAction, Command};

use crate::classifiers::ClassifierSpec;
use crate::experiment::{full_battery, SweepConfig, SweepRecord};
use crate::error::SimError;

#[derive(Debug, Clone, PartialEq)]
pub struct OutputSpec {
    pub csv_path: PathBuf,
    pub plot_path: Option<PathBuf>,
    /// Decimal places for reals in the CSV.
    pub precision: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Runtime(#[from] SimError),
}

fn command() -> Command {
    Command::new("injectsim")
        .about("Sweep injection-point election heuristics over geometric random graph densities")
        .disable_help_flag(false)
        .arg(
            Arg::new("nodes")
                .long("nodes")
                .value_name("START:END:STEP|LIST")
                .default_value("30:210:15")
                .help("node counts, as start:end:step or a comma-separated list"),
        )
        .arg(
            Arg::new("area")
                .long("area")
                .value_name("SIDE")
                .default_value("300")
                .help("side length of the square simulation area"),
        )
        .arg(
            Arg::new("range")
                .long("range")
                .value_name("R")
                .default_value("50")
                .help("transmission range"),
        )
        .arg(
            Arg::new("runs")
                .long("runs")
                .value_name("N")
                .default_value("50")
                .help("connected topologies per density"),
        )
        .arg(
            Arg::new("seed")
                .long("seed")
                .value_name("U64")
                .default_value("42")
                .help("master seed"),
        )
        .arg(
            Arg::new("classifier")
                .long("classifier")
                .value_name("NAME")
                .default_value("all")
                .value_parser(["bridge", "weak", "oborder", "rborder", "degree", "all"])
                .help("which heuristic to run"),
        )
        .arg(
            Arg::new("tc")
                .long("tc")
                .value_name("T_C")
                .action(ArgAction::Append)
                .help("clustering-coefficient threshold for weak (repeatable; default 0.35,0.4)"),
        )
        .arg(
            Arg::new("k")
                .long("k")
                .value_name("K")
                .action(ArgAction::Append)
                .help("degree threshold (repeatable; default 5,7)"),
        )
        .arg(
            Arg::new("out")
                .long("out")
                .value_name("CSV")
                .required(true)
                .help("CSV output path"),
        )
        .arg(
            Arg::new("plot")
                .long("plot")
                .value_name("SVG")
                .help("optional SVG line-chart output path"),
        )
        .arg(
            Arg::new("region-cut")
                .long("region-cut")
                .value_name("DENSITY")
                .default_value("7.85")
                .help("density boundary between the low- and high-density regions"),
        )
}

fn parse_nodes(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("--nodes: cannot parse '{text}'"));
    let counts: Vec<usize> = if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let start: usize = parts[0].parse().map_err(|_| bad())?;
        let end: usize = parts[1].parse().map_err(|_| bad())?;
        let step: usize = parts[2].parse().map_err(|_| bad())?;
        if step == 0 || end < start {
            return Err(bad());
        }
        (start..=end).step_by(step).collect()
    } else {
        text.split(',')
            .map(|s| s.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?
    };
    if counts.is_empty() || !counts.windows(2).all(|w| w[0] < w[1]) {
        return Err(CliError::Usage(format!(
            "--nodes: counts must be non-empty and strictly increasing, got '{text}'"
        )));
    }
    if counts[0] < 2 {
        return Err(CliError::Usage("--nodes: counts must be at least 2".into()));
    }
    Ok(counts)
}

fn parse_num<T: std::str::FromStr>(flag: &str, text: &str) -> Result<T, CliError> {
    text.parse()
        .map_err(|_| CliError::Usage(format!("{flag}: cannot parse '{text}'")))
}

pub fn parse_args<I, S>(argv: I) -> Result<(SweepConfig, OutputSpec), CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let matches = command()
        .try_get_matches_from(argv)
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let tc_values: Vec<f64> = match matches.get_many::<String>("tc") {
        Some(values) => values
            .map(|s| parse_num::<f64>("--tc", s))
            .collect::<Result<_, _>>()?,
        None => vec![0.35, 0.4],
    };
    for &tc in &tc_values {
        if tc <= 0.0 || tc >= 1.0 {
            return Err(CliError::Usage(format!("--tc: must be in (0,1), got {tc}")));
        }
    }
    let k_values: Vec<usize> = match matches.get_many::<String>("k") {
        Some(values) => values
            .map(|s| parse_num::<usize>("--k", s))
            .collect::<Result<_, _>>()?,
        None => vec![5, 7],
    };
    for &k in &k_values {
        if k < 1 {
            return Err(CliError::Usage("--k: must be at least 1".into()));
        }
    }

    let classifier = matches.get_one::<String>("classifier").unwrap().as_str();
    let specs: Vec<ClassifierSpec> = match classifier {
        "bridge" => vec![ClassifierSpec::Bridge],
        "weak" => tc_values
            .iter()
            .map(|&t| ClassifierSpec::Weak { cc_threshold: t })
            .collect(),
        "oborder" => vec![ClassifierSpec::ObtrusiveBorder],
        "rborder" => vec![ClassifierSpec::RestrainedBorder],
        "degree" => k_values
            .iter()
            .map(|&k| ClassifierSpec::Degree { threshold: k })
            .collect(),
        "all" => {
            if tc_values == [0.35, 0.4] && k_values == [5, 7] {
                full_battery()
            } else {
                let mut specs = vec![ClassifierSpec::Bridge];
                specs.extend(tc_values.iter().map(|&t| ClassifierSpec::Weak { cc_threshold: t }));
                specs.push(ClassifierSpec::ObtrusiveBorder);
                specs.push(ClassifierSpec::RestrainedBorder);
                specs.extend(k_values.iter().map(|&k| ClassifierSpec::Degree { threshold: k }));
                specs
            }
        }
        other => return Err(CliError::Usage(format!("--classifier: unknown '{other}'"))),
    };
    let area: f64 = parse_num("--area", matches.get_one::<String>("area").unwrap())?;
    let range: f64 = parse_num("--range", matches.get_one::<String>("range").unwrap())?;
    if area <= 0.0 {
        return Err(CliError::Usage("--area: must be positive".into()));
    }
    if range <= 0.0 {
        return Err(CliError::Usage("--range: must be positive".into()));
    }
    let runs: usize = parse_num("--runs", matches.get_one::<String>("runs").unwrap())?;
    if runs < 1 {
        return Err(CliError::Usage("--runs: must be at least 1".into()));
    }

    let config = SweepConfig {
        node_counts: parse_nodes(matches.get_one::<String>("nodes").unwrap())?,
        area_side: area,
        tx_range: range,
        runs_per_density: runs,
        master_seed: parse_num("--seed", matches.get_one::<String>("seed").unwrap())?,
        specs,
        max_rejections: 1_000_000,
        region_cut: parse_num("--region-cut", matches.get_one::<String>("region-cut").unwrap())?,
    };
    let output = OutputSpec {
        csv_path: PathBuf::from(matches.get_one::<String>("out").unwrap()),
        plot_path: matches.get_one::<String>("plot").map(PathBuf::from),
        precision: 4,
    };
    Ok((config, output))
}

fn fmt_real(value: f64, precision: usize) -> String {
    format!("{value:.precision$}")
}

fn fmt_opt(value: Option<f64>, precision: usize) -> String {
    value.map_or(String::new(), |v| fmt_real(v, precision))
}

fn sorted_records(records: &[SweepRecord]) -> Vec<&SweepRecord> {
    let mut sorted: Vec<&SweepRecord> = records.iter().collect();
    sorted.sort_by(|a, b| {
        (a.spec.name(), a.spec.param_string())
            .cmp(&(b.spec.name(), b.spec.param_string()))
            .then(a.density.partial_cmp(&b.density).unwrap())
    });
    sorted
}

/// Render the CSV table: one row per record, LF line endings, rows sorted by
/// (classifier, param, density), absent metrics as empty fields.
pub fn render_csv(records: &[SweepRecord], precision: usize) -> String {
    let mut out = String::from(
        "density,node_count,classifier,param,runs_used,rejected,all_pair,candidates_to_all,discharged_to_all,discharged_fraction\n",
    );
    for r in sorted_records(records) {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            fmt_real(r.density, precision),
            r.node_count,
            r.spec.name(),
            r.spec.param_string(),
            r.runs_used,
            r.rejected_topologies,
            fmt_real(r.mean_all_pair, precision),
            fmt_opt(r.mean_candidates, precision),
            fmt_opt(r.mean_discharged, precision),
            fmt_real(r.mean_discharged_fraction, precision),
        )
        .unwrap();
    }
    out
}

pub fn emit_csv(records: &[SweepRecord], spec: &OutputSpec) -> Result<(), CliError> {
    if records.is_empty() {
        return Err(CliError::Usage("no records to emit".into()));
    }
    std::fs::write(&spec.csv_path, render_csv(records, spec.precision)).map_err(SimError::Io)?;
    Ok(())
}

const CHART_W: f64 = 640.0;
const CHART_H: f64 = 360.0;
const MARGIN_L: f64 = 60.0;
const MARGIN_R: f64 = 20.0;
const MARGIN_T: f64 = 40.0;
const MARGIN_B: f64 = 50.0;

struct Series<'a> {
    label: &'a str,
    color: &'a str,
    points: Vec<(f64, Option<f64>)>,
}

fn render_chart(out: &mut String, title: &str, series: &[Series], y_offset: f64) {
    let xs: Vec<f64> = series[0].points.iter().map(|p| p.0).collect();
    let (x_min, x_max) = (xs[0], xs[xs.len() - 1]);
    let ys: Vec<f64> = series
        .iter()
        .flat_map(|s| s.points.iter().filter_map(|p| p.1))
        .collect();
    let y_min = ys.iter().cloned().fold(f64::INFINITY, f64::min).floor().max(0.0);
    let y_max = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max).ceil();
    let y_max = if y_max <= y_min { y_min + 1.0 } else { y_max };

    let px = |x: f64| MARGIN_L + (x - x_min) / (x_max - x_min) * (CHART_W - MARGIN_L - MARGIN_R);
    let py = |y: f64| {
        y_offset + CHART_H - MARGIN_B
            - (y - y_min) / (y_max - y_min) * (CHART_H - MARGIN_T - MARGIN_B)
    };

    writeln!(
        out,
        "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"14\" text-anchor=\"middle\">{}</text>",
        CHART_W / 2.0,
        y_offset + 20.0,
        title
    )
    .unwrap();
    // axes
    writeln!(
        out,
        "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\"/>",
        MARGIN_L,
        y_offset + CHART_H - MARGIN_B,
        CHART_W - MARGIN_R,
        y_offset + CHART_H - MARGIN_B
    )
    .unwrap();
    writeln!(
        out,
        "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\"/>",
        MARGIN_L,
        y_offset + MARGIN_T,
        MARGIN_L,
        y_offset + CHART_H - MARGIN_B
    )
    .unwrap();
    // x ticks at every density, y ticks at integers
    for &x in &xs {
        writeln!(
            out,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"9\" text-anchor=\"middle\">{:.2}</text>",
            px(x),
            y_offset + CHART_H - MARGIN_B + 14.0,
            x
        )
        .unwrap();
    }
    let mut y_tick = y_min;
    while y_tick <= y_max + 1e-9 {
        writeln!(
            out,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"9\" text-anchor=\"end\">{:.0}</text>",
            MARGIN_L - 6.0,
            py(y_tick) + 3.0,
            y_tick
        )
        .unwrap();
        y_tick += 1.0;
    }
    writeln!(
        out,
        "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" text-anchor=\"middle\">network density</text>",
        (MARGIN_L + CHART_W - MARGIN_R) / 2.0,
        y_offset + CHART_H - 12.0
    )
    .unwrap();
    writeln!(
        out,
        "<text x=\"14\" y=\"{:.1}\" font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 14 {:.1})\">average hops</text>",
        y_offset + CHART_H / 2.0,
        y_offset + CHART_H / 2.0
    )
    .unwrap();

    let mut legend_y = y_offset + MARGIN_T + 4.0;
    for s in series {
        // split the series into contiguous present segments; absent points
        // become gaps, not zeros
        let mut segment: Vec<(f64, f64)> = Vec::new();
        let mut segments: Vec<Vec<(f64, f64)>> = Vec::new();
        for &(x, y) in &s.points {
            match y {
                Some(y) => segment.push((x, y)),
                None => {
                    if !segment.is_empty() {
                        segments.push(std::mem::take(&mut segment));
                    }
                }
            }
        }
        if !segment.is_empty() {
            segments.push(segment);
        }
        let empty = segments.iter().all(|seg| seg.is_empty());
        for seg in &segments {
            let coords: Vec<String> = seg
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
                .collect();
            if seg.len() == 1 {
                writeln!(
                    out,
                    "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\" fill=\"{}\"/>",
                    px(seg[0].0),
                    py(seg[0].1),
                    s.color
                )
                .unwrap();
            } else {
                writeln!(
                    out,
                    "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>",
                    coords.join(" "),
                    s.color
                )
                .unwrap();
            }
        }
        let label = if empty {
            format!("{} (no data)", s.label)
        } else {
            s.label.to_string()
        };
        writeln!(
            out,
            "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"14\" height=\"3\" fill=\"{}\"/>",
            MARGIN_L + 10.0,
            legend_y,
            s.color
        )
        .unwrap();
        writeln!(
            out,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"10\">{}</text>",
            MARGIN_L + 28.0,
            legend_y + 4.0,
            label
        )
        .unwrap();
        legend_y += 14.0;
    }
}

/// Render one chart per (classifier, param): three series over density.
pub fn render_plot(records: &[SweepRecord]) -> Result<String, CliError> {
    let sorted = sorted_records(records);
    let mut groups: Vec<(String, Vec<&SweepRecord>)> = Vec::new();
    for r in sorted {
        let key = if r.spec.param_string().is_empty() {
            r.spec.name().to_string()
        } else {
            format!("{} {}", r.spec.name(), r.spec.param_string())
        };
        match groups.last_mut() {
            Some((k, list)) if *k == key => list.push(r),
            _ => groups.push((key, vec![r])),
        }
    }
    for (key, list) in &groups {
        if list.len() < 2 {
            return Err(CliError::Usage(format!(
                "plot requires records for at least 2 densities, got {} for {key}",
                list.len()
            )));
        }
    }

    let total_h = CHART_H * groups.len() as f64;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{CHART_W}\" height=\"{total_h}\" font-family=\"sans-serif\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    );
    for (i, (key, list)) in groups.iter().enumerate() {
        let series = [
            Series {
                label: "all-pair shortest path",
                color: "#1f77b4",
                points: list.iter().map(|r| (r.density, Some(r.mean_all_pair))).collect(),
            },
            Series {
                label: "injection point candidates-to-all",
                color: "#2ca02c",
                points: list.iter().map(|r| (r.density, r.mean_candidates)).collect(),
            },
            Series {
                label: "discharged candidates-to-all",
                color: "#d62728",
                points: list.iter().map(|r| (r.density, r.mean_discharged)).collect(),
            },
        ];
        render_chart(&mut out, key, &series, i as f64 * CHART_H);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn emit_plot(records: &[SweepRecord], spec: &OutputSpec) -> Result<(), CliError> {
    let path = spec
        .plot_path
        .as_ref()
        .ok_or_else(|| CliError::Usage("no plot path given".into()))?;
    let svg = render_plot(records)?;
    std::fs::write(path, svg).map_err(SimError::Io)?;
    Ok(())
}
