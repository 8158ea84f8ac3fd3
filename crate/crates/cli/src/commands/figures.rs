use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::Args;
use kepler_so4::coherent::{dephasing_phi_eps, eccentricity_of_eta, write_json, EtaBranch};
use kepler_so4::dynamics::TimeSpec;
use kepler_so4::hydrogenic::ShellSpec;
use kepler_so4::render::{DEFAULT_EXTENT_AU, DEFAULT_RESOLUTION};
use serde::Serialize;

use super::density::{render, DensityReport};
use super::prepare;
use crate::config::{LEffArg, ScenarioArgs};
use crate::error::{CliError, CliResult};

/// Orbits shown in the snapshot figure.
const SNAPSHOT_ETAS: [f64; 3] = [0.2, 0.3, 0.4];

#[derive(Args, Debug)]
pub struct FiguresArgs {
    /// Principal quantum number of the snapshots.
    #[arg(long, default_value_t = 141)]
    pub n: u32,
    /// Pixels per side of each snapshot grid.
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    pub res: usize,
    /// Full width of the field of view, bohr.
    #[arg(long, default_value_t = DEFAULT_EXTENT_AU)]
    pub extent: f64,
}

#[derive(Serialize)]
struct FiguresManifest {
    n: u32,
    resolution: usize,
    extent_au: f64,
    files: Vec<PathBuf>,
    snapshots: Vec<DensityReport>,
    version: &'static str,
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Core(kepler_so4::Error::Io { path: path.to_path_buf(), source: e })
}

fn write_csv(path: &Path, header: &str, rows: impl Iterator<Item = Vec<f64>>) -> CliResult<()> {
    let file = File::create(path).map_err(|e| io_err(path, e))?;
    let mut w = BufWriter::new(file);
    let body = || -> std::io::Result<()> {
        writeln!(w, "{header}")?;
        for row in rows {
            let line: Vec<String> = row.iter().map(|v| format!("{v:e}")).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        w.flush()
    };
    body().map_err(|e| io_err(path, e))
}

/// `eta = k / 20` for `k = 0..=100`.
fn fig1_rows() -> impl Iterator<Item = Vec<f64>> {
    (0..=100).map(|k| {
        let eta = f64::from(k) / 20.0;
        vec![eta, eccentricity_of_eta(eta).expect("eta >= 0")]
    })
}

/// `eps = k / 100` for `k = 0..=99`, both branches of `|delta phi|`.
fn fig2_rows() -> impl Iterator<Item = Vec<f64>> {
    (0..=99).map(|k| {
        let eps = f64::from(k) / 100.0;
        let below = dephasing_phi_eps(eps, EtaBranch::Below).expect("eps < 1").abs();
        let above = dephasing_phi_eps(eps, EtaBranch::Above).expect("eps < 1").abs();
        vec![eps, below, above]
    })
}

fn tag(eta: f64) -> String {
    format!("{eta:.1}")
}

pub fn run(args: &FiguresArgs, outdir: &Path) -> CliResult<PathBuf> {
    ShellSpec::hydrogen(args.n).map_err(|e| CliError::Config(e.to_string()))?;
    std::fs::create_dir_all(outdir).map_err(|e| io_err(outdir, e))?;
    let mut files = Vec::new();

    let fig1 = outdir.join("fig1.csv");
    write_csv(&fig1, "eta,eps", fig1_rows())?;
    files.push(fig1);
    let fig2 = outdir.join("fig2.csv");
    write_csv(&fig2, "eps,abs_dphi_eta_below_1,abs_dphi_eta_above_1", fig2_rows())?;
    files.push(fig2);

    let mut snapshots = Vec::new();
    for eta in SNAPSHOT_ETAS {
        let scenario = ScenarioArgs {
            n: args.n,
            z: 1,
            eta: Some(eta),
            zeta1: None,
            zeta2: None,
            truncation: kepler_so4::coherent::DEFAULT_TRUNCATION,
            l_eff: LEffArg::Norm,
            alpha_scale: 1.0,
        };
        let s = scenario.resolve()?;
        let p = prepare(&s)?;
        for (label, frac) in [("t0", 0.0), ("tp4", 0.25)] {
            let stem = format!("fig3_eta{}_{label}", tag(eta));
            let grid = outdir.join(format!("{stem}.txt"));
            let overlay = outdir.join(format!("{stem}_overlay.csv"));
            let time = TimeSpec::precession_periods(frac)?;
            let report = render(&s, &p, time, args.extent, args.res, &grid, Some(&overlay))?;
            files.extend(report.config.outputs.iter().cloned());
            snapshots.push(report);
        }
    }
    let manifest_path = outdir.join("figures.json");
    files.push(manifest_path.clone());
    let manifest = FiguresManifest {
        n: args.n,
        resolution: args.res,
        extent_au: args.extent,
        files,
        snapshots,
        version: env!("CARGO_PKG_VERSION"),
    };
    write_json(&manifest_path, &manifest)?;
    Ok(manifest_path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_contains_reference_eccentricity() {
        let row = fig1_rows().find(|r| r[0] == 0.2).unwrap();
        assert!((row[1] - 0.385).abs() < 1e-3);
        assert_eq!(fig1_rows().count(), 101);
    }

    #[test]
    fn fig2_lower_branch_rises_from_zero() {
        let rows: Vec<Vec<f64>> = fig2_rows().collect();
        assert_eq!(rows[0][1], 0.0);
        assert!(rows.windows(2).all(|w| w[1][1] > w[0][1]));
    }
}
