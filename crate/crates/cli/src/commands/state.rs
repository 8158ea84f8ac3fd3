use std::path::PathBuf;

use clap::Args;
use kepler_so4::coherent::{dephasing_phi_eta, write_coupled_csv, write_json, ObservableReport};
use kepler_so4::hydrogenic::{dephasing_test_l, precession_rate_sr, t_classical};
use serde::Serialize;

use super::prepare;
use crate::config::{ensure_parent, output_path, ScenarioArgs, ScenarioConfig};
use crate::error::CliResult;

#[derive(Args, Debug)]
pub struct StateArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// JSON report path (default: <outdir>/state.json).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write coupled-basis amplitudes as CSV to this path.
    #[arg(long)]
    pub amplitudes: Option<PathBuf>,
}

#[derive(Serialize)]
struct StateReport {
    config: ScenarioConfig,
    observables: ObservableReport,
    eccentricity: f64,
    l_eff: f64,
    t_cl_seconds: f64,
    t_p_seconds: Option<f64>,
    precession_ratio: Option<f64>,
    /// Rotation per classical period, rad.
    delta_omega: Option<f64>,
    /// `2 pi eta^2 / (eta^4 - 1)`, planar states away from eta = 1.
    delta_phi_closed_form: Option<f64>,
    /// `2 pi (Delta L3)^2 / l_eff` from the measured total variance.
    delta_phi_from_variance: Option<f64>,
}

pub fn run(args: &StateArgs, outdir: &std::path::Path) -> CliResult<PathBuf> {
    let mut s = args.scenario.resolve()?;
    let p = prepare(&s)?;
    let shell = s.params.shell;
    let out = output_path(args.out.as_deref(), outdir, "state.json");
    s.config.outputs.push(out.clone());
    if let Some(a) = &args.amplitudes {
        s.config.outputs.push(a.clone());
    }
    let t_cl = t_classical(shell, &s.consts);
    let positive = p.l_eff > 0.0;
    let report = StateReport {
        eccentricity: p.report.eccentricity,
        observables: p.report,
        l_eff: p.l_eff,
        t_cl_seconds: t_cl,
        t_p_seconds: p.t_p,
        precession_ratio: p.t_p.map(|t| t / t_cl),
        delta_omega: if positive { Some(precession_rate_sr(shell.z(), p.l_eff, &s.consts)?) } else { None },
        delta_phi_closed_form: s.params.eta.and_then(|eta| dephasing_phi_eta(eta).ok()),
        delta_phi_from_variance: if positive { Some(dephasing_test_l(p.l_eff, p.report.l_var)?) } else { None },
        config: s.config,
    };
    ensure_parent(&out)?;
    write_json(&out, &report)?;
    if let Some(path) = &args.amplitudes {
        ensure_parent(path)?;
        write_coupled_csv(path, &p.coupled)?;
    }
    Ok(out)
}
