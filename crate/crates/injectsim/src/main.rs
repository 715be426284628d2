use std::process::ExitCode;

use injectsim::cli::{emit_csv, emit_plot, parse_args};
use injectsim::experiment::sweep;

fn main() -> ExitCode {
    let (config, output) = match parse_args(std::env::args()) {
        Ok(parsed) => parsed,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };

    let records = match sweep(&config) {
        Ok(records) => records,
        Err(e) => {
            eprintln!("sweep failed: {e}");
            return ExitCode::from(2);
        }
    };

    if let Err(e) = emit_csv(&records, &output) {
        eprintln!("csv output failed: {e}");
        return ExitCode::from(2);
    }
    if output.plot_path.is_some() {
        if let Err(e) = emit_plot(&records, &output) {
            eprintln!("plot output failed: {e}");
            return ExitCode::from(2);
        }
    }

    // nonzero exit when any density failed to reach the requested run count
    let incomplete = records.iter().any(|r| r.runs_used < config.runs_per_density);
    if incomplete {
        eprintln!("warning: some densities exhausted the rejection cap");
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
