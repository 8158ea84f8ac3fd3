use std::path::{Path, PathBuf};

use clap::Args;
use kepler_so4::coherent::write_json;
use kepler_so4::dynamics::{trace_precession, write_trace_csv, TimeSpec, TraceOptions, TraceSummary};
use serde::Serialize;

use crate::config::{ensure_parent, output_path, parse_time, ScenarioArgs, ScenarioConfig};
use crate::error::CliResult;

#[derive(Args, Debug)]
pub struct EvolveArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// End of the sampled interval, e.g. 0.25Tp, 3Tcl, 1e-10s.
    #[arg(long, value_parser = parse_time, default_value = "0.25Tp")]
    pub t_max: TimeSpec,
    /// Number of evenly spaced samples.
    #[arg(long, default_value_t = 26)]
    pub samples: usize,
    /// Trace CSV path (default: <outdir>/trace.csv); the summary goes next to it as .json.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct EvolveReport {
    config: ScenarioConfig,
    #[serde(flatten)]
    summary: TraceSummary,
    /// Signed least-squares rate; its sign gives the sense of precession.
    direction: Option<&'static str>,
}

pub fn run(args: &EvolveArgs, outdir: &Path) -> CliResult<(PathBuf, PathBuf)> {
    let mut s = args.scenario.resolve()?;
    let csv = output_path(args.out.as_deref(), outdir, "trace.csv");
    let json = csv.with_extension("json");
    let opts = TraceOptions { truncation: s.truncation, l_eff: s.l_eff, consts: s.consts, ..TraceOptions::default() };
    let trace = trace_precession(&s.params, args.t_max, args.samples, &opts)?;
    s.config.time = Some(args.t_max);
    s.config.samples = Some(trace.samples.len());
    s.config.outputs = vec![csv.clone(), json.clone()];
    let direction = trace.fitted_rate.map(|r| if r >= 0.0 { "counterclockwise" } else { "clockwise" });
    ensure_parent(&csv)?;
    write_trace_csv(&csv, &trace)?;
    write_json(&json, &EvolveReport { config: s.config, summary: trace.summary(), direction })?;
    Ok((csv, json))
}
