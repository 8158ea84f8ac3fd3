use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::amath::HalfInt;
use crate::{Error, Result};

fn check_eta(eta: f64) -> Result<()> {
    if eta >= 0.0 && eta.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("eta = {eta} must be finite and non-negative")))
    }
}

/// `2 eta / (1 + eta^2)`.
pub fn eccentricity_of_eta(eta: f64) -> Result<f64> {
    check_eta(eta)?;
    Ok(2.0 * eta / (1.0 + eta * eta))
}

/// Which preimage of the two-to-one map `eta -> eccentricity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EtaBranch {
    /// `eta < 1`
    Below,
    /// `eta > 1`
    Above,
}

fn check_eps(eps: f64) -> Result<()> {
    if (0.0..1.0).contains(&eps) {
        Ok(())
    } else {
        Err(Error::Domain(format!("eccentricity {eps} outside [0, 1)")))
    }
}

/// Inverse of [`eccentricity_of_eta`] on the chosen branch.
pub fn eta_of_eccentricity(eps: f64, branch: EtaBranch) -> Result<f64> {
    check_eps(eps)?;
    let s = (1.0 - eps * eps).sqrt();
    Ok(match branch {
        EtaBranch::Below => eps / (1.0 + s),
        EtaBranch::Above if eps == 0.0 => f64::INFINITY,
        EtaBranch::Above => (1.0 + s) / eps,
    })
}

/// `<L3>` of the planar state, `2j (eta^2 - 1) / (1 + eta^2)`.
pub fn planar_l3(j: HalfInt, eta: f64) -> f64 {
    let e2 = eta * eta;
    2.0 * j.value() * (e2 - 1.0) / (1.0 + e2)
}

/// `<A1>` of the planar state, `4 j eta / (1 + eta^2)`.
pub fn planar_a1(j: HalfInt, eta: f64) -> f64 {
    4.0 * j.value() * eta / (1.0 + eta * eta)
}

/// `<L^2>` of the planar state.
pub fn planar_l2(j: HalfInt, eta: f64) -> f64 {
    let j = j.value();
    let e2 = eta * eta;
    2.0 * j * (j + 1.0) + 2.0 * j * j * (e2 * e2 - 6.0 * e2 + 1.0) / ((1.0 + e2) * (1.0 + e2))
}

/// `(Delta J3)^2 = 2 j eta^2 / (1 + eta^2)^2` in one SO(3) coherent state.
pub fn so3_j3_variance(j: HalfInt, eta: f64) -> f64 {
    let e2 = eta * eta;
    2.0 * j.value() * e2 / ((1.0 + e2) * (1.0 + e2))
}

/// `(Delta L3)^2` of the planar state: the two SO(3) variances add because
/// `M` and `N` commute.
pub fn l_variance_closed_form(j: HalfInt, eta: f64) -> Result<f64> {
    check_eta(eta)?;
    Ok(2.0 * so3_j3_variance(j, eta))
}

/// Signed dephasing test quantity `2 pi eta^2 / (eta^4 - 1)`.
pub fn dephasing_phi_eta(eta: f64) -> Result<f64> {
    check_eta(eta)?;
    if eta == 1.0 {
        return Err(Error::Singular("dephasing diverges at eta = 1".into()));
    }
    let e2 = eta * eta;
    Ok(2.0 * PI * e2 / ((e2 - 1.0) * (e2 + 1.0)))
}

/// The same quantity in terms of eccentricity,
/// `2 pi e^2 (2 - e^2 +- 2s) / (8 - 8 e^2 +- 4 (2 - e^2) s)` with
/// `s = sqrt(1 - e^2)`, `+` on the `eta > 1` branch.
///
/// Numerator and denominator factor as `(1 +- s)^2` and `+-4 s (1 +- s)^2`;
/// they are evaluated in that form, with `1 - s = e^2 / (1 + s)`, so the
/// lower branch keeps full precision as `e -> 0`.
pub fn dephasing_phi_eps(eps: f64, branch: EtaBranch) -> Result<f64> {
    check_eps(eps)?;
    if eps == 0.0 {
        return Ok(0.0);
    }
    let e2 = eps * eps;
    let s = (1.0 - e2).sqrt();
    let (u, sign) = match branch {
        EtaBranch::Below => (e2 / (1.0 + s), -1.0),
        EtaBranch::Above => (1.0 + s, 1.0),
    };
    let numerator = 2.0 * PI * e2 * u * u;
    let denominator = sign * 4.0 * s * u * u;
    Ok(numerator / denominator)
}
