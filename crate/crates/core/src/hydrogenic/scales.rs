use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{PhysicalConstants, ShellSpec, SPEED_OF_LIGHT_SI};
use crate::{Error, Result};

/// Unperturbed shell energy `-Z^2 / (2 n^2)`, hartree.
pub fn energy0(shell: ShellSpec) -> f64 {
    let (n, z) = (f64::from(shell.n()), f64::from(shell.z()));
    -z * z / (2.0 * n * n)
}

/// First-order `-p^4 / (8 c^2)` correction for `(n, l)`, hartree.
pub fn energy1(shell: ShellSpec, l: u32, consts: &PhysicalConstants) -> Result<f64> {
    shell.check_l(l)?;
    let (n, z) = (f64::from(shell.n()), f64::from(shell.z()));
    let a2 = consts.alpha * consts.alpha;
    Ok(-(z.powi(4) * a2 / (2.0 * n.powi(3))) * (1.0 / (f64::from(l) + 0.5) - 3.0 / (4.0 * n)))
}

/// Classical Kepler period `2 pi n^3 / Z^2` in atomic time units.
pub fn t_classical_au(shell: ShellSpec) -> f64 {
    let (n, z) = (f64::from(shell.n()), f64::from(shell.z()));
    2.0 * PI * n.powi(3) / (z * z)
}

/// Classical Kepler period in seconds.
pub fn t_classical(shell: ShellSpec, consts: &PhysicalConstants) -> f64 {
    consts.au_to_seconds(t_classical_au(shell))
}

/// `<r> = n^2 / Z` in bohr.
pub fn mean_radius(shell: ShellSpec) -> f64 {
    let (n, z) = (f64::from(shell.n()), f64::from(shell.z()));
    n * n / z
}

fn check_l_eff(l_eff: f64) -> Result<()> {
    if l_eff > 0.0 && l_eff.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("effective angular momentum {l_eff} must be positive")))
    }
}

/// Precession period `4 pi n^3 l_eff^2 / (Z^4 alpha^2)` in atomic time units.
pub fn t_precession_au(shell: ShellSpec, l_eff: f64, consts: &PhysicalConstants) -> Result<f64> {
    check_l_eff(l_eff)?;
    let (n, z) = (f64::from(shell.n()), f64::from(shell.z()));
    Ok(4.0 * PI * n.powi(3) * l_eff * l_eff / (z.powi(4) * consts.alpha * consts.alpha))
}

/// Precession period in seconds.
pub fn t_precession(shell: ShellSpec, l_eff: f64, consts: &PhysicalConstants) -> Result<f64> {
    Ok(consts.au_to_seconds(t_precession_au(shell, l_eff, consts)?))
}

/// Rotation of the orbit per classical period, `pi Z^2 alpha^2 / l_eff^2`.
pub fn precession_rate_sr(z: u32, l_eff: f64, consts: &PhysicalConstants) -> Result<f64> {
    check_l_eff(l_eff)?;
    let z = f64::from(z);
    Ok(PI * z * z * consts.alpha * consts.alpha / (l_eff * l_eff))
}

/// Special-relativistic perihelion advance per period for an inverse-square
/// force of strength `gmm` (J m) and angular momentum `ang_mom` (J s).
pub fn precession_rate_classical_gravity(gmm: f64, ang_mom: f64) -> Result<f64> {
    if !(gmm > 0.0 && ang_mom > 0.0) {
        return Err(Error::Domain(format!(
            "force strength {gmm} and angular momentum {ang_mom} must be positive"
        )));
    }
    let ratio = gmm / (SPEED_OF_LIGHT_SI * ang_mom);
    Ok(PI * ratio * ratio)
}

/// General-relativistic advance, six times the special-relativistic rate.
pub fn precession_rate_general_relativity(gmm: f64, ang_mom: f64) -> Result<f64> {
    Ok(6.0 * precession_rate_classical_gravity(gmm, ang_mom)?)
}

/// Quadratic-term phase spread after one classical period,
/// `3 pi var(n) / <n>`.
pub fn dephasing_test_n(n_mean: f64, n_var: f64) -> Result<f64> {
    if !(n_mean > 0.0) || n_var < 0.0 {
        return Err(Error::Domain(format!("need n_mean > 0 and n_var >= 0, got {n_mean}, {n_var}")));
    }
    Ok(3.0 * PI * n_var / n_mean)
}

/// Quadratic-term phase spread after one precession period,
/// `2 pi var(l) / l_eff` with `l_eff = <l> + 1/2`.
pub fn dephasing_test_l(l_eff: f64, l_var: f64) -> Result<f64> {
    check_l_eff(l_eff)?;
    if l_var < 0.0 {
        return Err(Error::Domain(format!("variance {l_var} is negative")));
    }
    Ok(2.0 * PI * l_var / l_eff)
}

/// Time scales and rates for one shell and effective angular momentum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SemiclassicalReport {
    pub t_cl: f64,
    pub t_p: f64,
    pub ratio: f64,
    pub delta_omega: f64,
    pub l_eff: f64,
}

impl SemiclassicalReport {
    pub fn new(shell: ShellSpec, l_eff: f64, consts: &PhysicalConstants) -> Result<Self> {
        let t_cl = t_classical(shell, consts);
        let t_p = t_precession(shell, l_eff, consts)?;
        Ok(SemiclassicalReport {
            t_cl,
            t_p,
            ratio: t_p / t_cl,
            delta_omega: precession_rate_sr(shell.z(), l_eff, consts)?,
            l_eff,
        })
    }
}
