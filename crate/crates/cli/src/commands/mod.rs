mod density;
mod evolve;
mod figures;
mod state;

pub use density::{run as density, DensityArgs};
pub use evolve::{run as evolve, EvolveArgs};
pub use figures::{run as figures, FiguresArgs};
pub use state::{run as state, StateArgs};

use std::f64::consts::PI;

use kepler_so4::coherent::{build_product_state, observables, to_coupled, CoupledState, ObservableReport};
use kepler_so4::hydrogenic::t_precession;

use crate::config::Scenario;
use crate::error::CliResult;

/// Built state with its t = 0 observables.
pub(crate) struct Prepared {
    pub report: ObservableReport,
    pub coupled: CoupledState,
    pub l_eff: f64,
    /// `None` when `l_eff` vanishes (straight-line orbit).
    pub t_p: Option<f64>,
}

pub(crate) fn prepare(s: &Scenario) -> CliResult<Prepared> {
    let product = build_product_state(&s.params, s.truncation)?;
    let report = observables(&product)?;
    let l_eff = report.l_eff(s.l_eff);
    let t_p = if l_eff > 0.0 { Some(t_precession(s.params.shell, l_eff, &s.consts)?) } else { None };
    Ok(Prepared { report, coupled: to_coupled(&product), l_eff, t_p })
}

/// Perihelion direction of the classical overlay at time `t` (s): along the
/// initial `<A>`, turning in the sense of the orbital motion at `2 pi / T_p`.
pub(crate) fn overlay_rotation(p: &Prepared, t: f64) -> f64 {
    let base = p.report.a_vec[1].atan2(p.report.a_vec[0]);
    match p.t_p {
        Some(t_p) => base + p.report.l_vec[2].signum() * 2.0 * PI * t / t_p,
        None => base,
    }
}
