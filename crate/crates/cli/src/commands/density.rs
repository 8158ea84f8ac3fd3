use std::path::{Path, PathBuf};

use clap::Args;
use kepler_so4::coherent::write_json;
use kepler_so4::dynamics::{evolve, precession_angle, EvolutionSpec, TimeSpec};
use kepler_so4::render::{
    classical_overlay, density_grid, principal_axis, write_grid, write_overlay_csv, DEFAULT_EXTENT_AU,
    DEFAULT_RESOLUTION,
};
use serde::Serialize;

use super::{overlay_rotation, prepare, Prepared};
use crate::config::{ensure_parent, output_path, parse_time, Scenario, ScenarioArgs, ScenarioConfig};
use crate::error::{CliError, CliResult};

/// Points on each classical overlay.
pub const OVERLAY_POINTS: usize = 720;

#[derive(Args, Debug)]
pub struct DensityArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// Evolution time, e.g. 0.25Tp.
    #[arg(long, value_parser = parse_time, default_value = "0")]
    pub time: TimeSpec,
    /// Full width of the field of view, bohr.
    #[arg(long, default_value_t = DEFAULT_EXTENT_AU)]
    pub extent: f64,
    /// Pixels per side.
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    pub res: usize,
    /// Grid path (default: <outdir>/density.txt); a JSON sidecar is written next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the precessed classical ellipse as CSV to this path.
    #[arg(long)]
    pub overlay: Option<PathBuf>,
}

#[derive(Serialize)]
pub(crate) struct DensityReport {
    pub config: ScenarioConfig,
    pub time_seconds: f64,
    pub field_of_view_um: f64,
    pub principal_axis: Option<f64>,
    pub precession_angle: Option<f64>,
    pub overlay_rotation: Option<f64>,
}

/// Renders one grid (and optionally its overlay) for an already prepared state.
pub(crate) fn render(
    s: &Scenario,
    p: &Prepared,
    time: TimeSpec,
    extent: f64,
    res: usize,
    grid_path: &Path,
    overlay_path: Option<&Path>,
) -> CliResult<DensityReport> {
    let shell = s.params.shell;
    let mut spec = EvolutionSpec::new(shell, time);
    spec.consts = s.consts;
    spec.l_eff = s.l_eff;
    let t_s = time.to_seconds(shell, p.l_eff, &s.consts)?;
    let psi = evolve(&p.coupled, &spec)?;
    let mut grid = density_grid(&psi, extent, res, t_s).map_err(|e| CliError::Config(e.to_string()))?;
    grid.eta = s.params.eta;
    ensure_parent(grid_path)?;
    write_grid(grid_path, &grid)?;
    let mut config = s.config.clone();
    config.time = Some(time);
    config.extent_au = Some(extent);
    config.resolution = Some(res);
    config.outputs = vec![grid_path.to_path_buf(), grid_path.with_extension("json")];
    let mut rotation = None;
    if let Some(path) = overlay_path {
        let eps = p.report.eccentricity.min(1.0 - 1e-12);
        let theta = overlay_rotation(p, t_s);
        let overlay = classical_overlay(shell, eps, theta, OVERLAY_POINTS)?;
        ensure_parent(path)?;
        write_overlay_csv(path, &overlay)?;
        config.outputs.push(path.to_path_buf());
        rotation = Some(theta);
    }
    let report = DensityReport {
        config,
        time_seconds: t_s,
        field_of_view_um: s.consts.au_to_meters(extent) * 1e6,
        principal_axis: principal_axis(&grid).ok(),
        precession_angle: precession_angle(&psi).ok(),
        overlay_rotation: rotation,
    };
    write_json(&grid_path.with_extension("json"), &report)?;
    Ok(report)
}

pub fn run(args: &DensityArgs, outdir: &Path) -> CliResult<PathBuf> {
    let s = args.scenario.resolve()?;
    let p = prepare(&s)?;
    let grid_path = output_path(args.out.as_deref(), outdir, "density.txt");
    render(&s, &p, args.time, args.extent, args.res, &grid_path, args.overlay.as_deref())?;
    Ok(grid_path)
}
