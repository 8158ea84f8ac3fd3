use std::f64::consts::PI;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{evolve, precession_angle_with, rotate_about_z, EvolutionSpec, TimeSpec};
use crate::coherent::{
    build_product_state, observables, to_coupled_with, CoherentParams, LEffConvention, DEFAULT_TRUNCATION,
};
use crate::hydrogenic::{t_precession, PhysicalConstants};
use crate::{Error, Execution, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceSample {
    pub t: f64,
    /// Unwrapped, relative to the initial orientation.
    pub theta: f64,
    /// `|<R(theta) psi0 | psi(t)>|^2`.
    pub fidelity: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrecessionTrace {
    pub samples: Vec<TraceSample>,
    /// Least-squares slope of theta against t, rad/s. Signed.
    pub fitted_rate: Option<f64>,
    /// `2 pi / T_p`, rad/s.
    pub predicted_rate: f64,
    /// `| |fitted| - predicted | / predicted`.
    pub relative_error: Option<f64>,
    /// RMS residual of the linear fit, rad.
    pub fit_rms: Option<f64>,
    pub l_eff: f64,
    pub t_p: f64,
}

/// JSON summary written next to a trace CSV.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceSummary {
    pub fitted_rate: Option<f64>,
    pub predicted_rate: f64,
    pub relative_error: Option<f64>,
    pub fit_rms: Option<f64>,
    pub l_eff: f64,
    pub t_p: f64,
    pub n_samples: usize,
    pub t_max: f64,
    pub final_fidelity: f64,
}

impl PrecessionTrace {
    pub fn summary(&self) -> TraceSummary {
        TraceSummary {
            fitted_rate: self.fitted_rate,
            predicted_rate: self.predicted_rate,
            relative_error: self.relative_error,
            fit_rms: self.fit_rms,
            l_eff: self.l_eff,
            t_p: self.t_p,
            n_samples: self.samples.len(),
            t_max: self.samples.last().map_or(0.0, |s| s.t),
            final_fidelity: self.samples.last().map_or(1.0, |s| s.fidelity),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TraceOptions {
    pub truncation: f64,
    pub l_eff: LEffConvention,
    pub consts: PhysicalConstants,
    pub exec: Execution,
}

impl Default for TraceOptions {
    fn default() -> Self {
        TraceOptions {
            truncation: DEFAULT_TRUNCATION,
            l_eff: LEffConvention::default(),
            consts: PhysicalConstants::default(),
            exec: Execution::default(),
        }
    }
}

/// Samples the orientation of `<A>` and the rigid-rotation fidelity at
/// `n_samples` evenly spaced times in `[0, t_max]`. A zero `t_max` gives
/// the single sample at `t = 0`.
pub fn trace_precession(
    params: &CoherentParams,
    t_max: TimeSpec,
    n_samples: usize,
    opts: &TraceOptions,
) -> Result<PrecessionTrace> {
    let shell = params.shell;
    let product = build_product_state(params, opts.truncation)?;
    let report = observables(&product)?;
    let psi0 = to_coupled_with(&product, opts.exec);
    // fails with UndefinedOrientation for circular input
    let theta0 = precession_angle_with(&psi0, opts.exec)?;

    let l_eff = report.l_eff(opts.l_eff);
    let t_p = t_precession(shell, l_eff, &opts.consts)?;
    let t_end = t_max.to_seconds(shell, l_eff, &opts.consts)?;
    let n_samples = if t_end == 0.0 { 1 } else { n_samples };
    if t_end > 0.0 && n_samples < 3 {
        return Err(Error::Contract(format!("need at least 3 samples, got {n_samples}")));
    }
    let min_samples = (4.0 * t_end / t_p).ceil() as usize + 2;
    if t_end > 0.0 && n_samples < min_samples {
        return Err(Error::Contract(format!(
            "{n_samples} samples cannot be unwrapped over {:.3} precession periods; need {min_samples}",
            t_end / t_p
        )));
    }

    let step = if n_samples > 1 { t_end / (n_samples - 1) as f64 } else { 0.0 };
    let mut evo = EvolutionSpec::new(shell, TimeSpec::seconds(0.0)?);
    evo.consts = opts.consts;
    evo.l_eff = opts.l_eff;
    let raw = opts.exec.map_indexed(n_samples, |k| -> Result<(f64, f64, f64)> {
        let t = if k + 1 == n_samples { t_end } else { k as f64 * step };
        let mut sp = evo;
        sp.time = TimeSpec::seconds(t)?;
        let psi = evolve(&psi0, &sp)?;
        let angle = precession_angle_with(&psi, Execution::Sequential)? - theta0;
        let reference = rotate_about_z(&psi0, angle);
        let fidelity = reference.inner(&psi)?.norm_sqr();
        Ok((t, angle, fidelity))
    });

    let mut samples = Vec::with_capacity(n_samples);
    let mut prev = 0.0;
    for r in raw {
        let (t, angle, fidelity) = r?;
        let theta = if samples.is_empty() { angle } else { unwrap_near(angle, prev) };
        prev = theta;
        samples.push(TraceSample { t, theta, fidelity });
    }

    let predicted_rate = 2.0 * PI / t_p;
    let fit = linear_fit(&samples);
    Ok(PrecessionTrace {
        fitted_rate: fit.map(|f| f.0),
        relative_error: fit.map(|f| (f.0.abs() - predicted_rate).abs() / predicted_rate),
        fit_rms: fit.map(|f| f.1),
        samples,
        predicted_rate,
        l_eff,
        t_p,
    })
}

/// Shift `angle` by a multiple of 2 pi to lie within pi of `prev`.
fn unwrap_near(angle: f64, prev: f64) -> f64 {
    angle - 2.0 * PI * ((angle - prev) / (2.0 * PI)).round()
}

/// Slope through `(t, theta)` and the RMS residual; `None` if all times coincide.
fn linear_fit(samples: &[TraceSample]) -> Option<(f64, f64)> {
    let n = samples.len() as f64;
    let tm = samples.iter().map(|s| s.t).sum::<f64>() / n;
    let ym = samples.iter().map(|s| s.theta).sum::<f64>() / n;
    let sxx: f64 = samples.iter().map(|s| (s.t - tm).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = samples.iter().map(|s| (s.t - tm) * (s.theta - ym)).sum();
    let slope = sxy / sxx;
    let rss: f64 = samples
        .iter()
        .map(|s| (s.theta - ym - slope * (s.t - tm)).powi(2))
        .sum();
    Some((slope, (rss / n).sqrt()))
}

/// CSV with columns `t_seconds,theta_rad,fidelity`.
pub fn write_trace_csv(path: &Path, trace: &PrecessionTrace) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut body = || -> std::io::Result<()> {
        writeln!(w, "t_seconds,theta_rad,fidelity")?;
        for s in &trace.samples {
            writeln!(w, "{:e},{:e},{:e}", s.t, s.theta, s.fidelity)?;
        }
        w.flush()
    };
    body().map_err(|e| Error::io(path, e))
}

pub fn write_trace_summary(path: &Path, trace: &PrecessionTrace) -> Result<()> {
    crate::coherent::write_json(path, &trace.summary())
}
