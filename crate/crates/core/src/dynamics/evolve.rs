use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::TimeSpec;
use crate::coherent::{observables, to_product_with, CoupledState, LEffConvention};
use crate::ddouble::DoubleDouble;
use crate::hydrogenic::{energy0, energy1, PhysicalConstants, ShellSpec};
use crate::{Error, Execution, Result};

/// `|<A>|` below `ORIENTATION_THRESHOLD * n` has no defined direction.
const ORIENTATION_THRESHOLD: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvolutionSpec {
    pub shell: ShellSpec,
    pub time: TimeSpec,
    /// Omit the phase common to the whole shell.
    pub drop_global_phase: bool,
    /// Include the `-p^4/(8c^2)` splitting. Without it the state is stationary.
    pub relativistic: bool,
    pub l_eff: LEffConvention,
    pub consts: PhysicalConstants,
}

impl EvolutionSpec {
    pub fn new(shell: ShellSpec, time: TimeSpec) -> Self {
        EvolutionSpec {
            shell,
            time,
            drop_global_phase: true,
            relativistic: true,
            l_eff: LEffConvention::default(),
            consts: PhysicalConstants::default(),
        }
    }
}

struct CoupledMoments {
    l_vec: [f64; 3],
    l2: f64,
    l3_sq: f64,
}

fn moments(state: &CoupledState) -> CoupledMoments {
    let mut l_plus = Complex64::new(0.0, 0.0);
    let (mut l3, mut l3_sq, mut l2) = (0.0, 0.0, 0.0);
    for (l, m, a) in state.iter() {
        let p = a.norm_sqr();
        if p == 0.0 {
            continue;
        }
        let (lf, mf) = (f64::from(l), f64::from(m));
        l3 += p * mf;
        l3_sq += p * mf * mf;
        l2 += p * lf * (lf + 1.0);
        if m < l as i32 {
            let c = (lf * (lf + 1.0) - mf * (mf + 1.0)).sqrt();
            l_plus += state.get(l, m + 1).conj() * a * c;
        }
    }
    CoupledMoments {
        l_vec: [l_plus.re, l_plus.im, l3],
        l2,
        l3_sq,
    }
}

/// `<L>` evaluated directly in the `|l m>` basis.
pub fn angular_momentum(state: &CoupledState) -> [f64; 3] {
    moments(state).l_vec
}

fn l_eff(state: &CoupledState, convention: LEffConvention) -> f64 {
    let mo = moments(state);
    let norm = mo.l_vec.iter().map(|x| x * x).sum::<f64>().sqrt();
    match convention {
        LEffConvention::AngularMomentumNorm => norm,
        LEffConvention::MeanPlusHalf => norm + 0.5,
        LEffConvention::RootMeanSquare => {
            let var = mo.l3_sq - mo.l_vec[2] * mo.l_vec[2];
            (mo.l2 - var + 0.25).max(0.0).sqrt()
        }
    }
}

/// Multiplies each `(l, m)` amplitude by `exp(-i E(n, l) t)`.
///
/// Phases are taken relative to `l_ref = round(|<L>|)`, so the large
/// shell-wide part never enters the per-`l` differences, and every phase is
/// reduced mod 2 pi in double-double arithmetic.
pub fn evolve(state: &CoupledState, spec: &EvolutionSpec) -> Result<CoupledState> {
    let shell = state.shell();
    if shell != spec.shell {
        return Err(Error::Contract(format!(
            "state has n = {}, Z = {} but the evolution is for n = {}, Z = {}",
            shell.n(),
            shell.z(),
            spec.shell.n(),
            spec.shell.z()
        )));
    }
    let needs_l_eff = matches!(spec.time.unit, super::TimeUnit::Tp) && spec.time.value > 0.0;
    let le = if needs_l_eff { l_eff(state, spec.l_eff) } else { 0.0 };
    let t_s = spec.time.to_seconds(shell, le, &spec.consts)?;
    let t_au = spec.consts.seconds_to_au(t_s);
    if t_au == 0.0 {
        return Ok(state.clone());
    }

    let n = shell.n();
    let l_norm = moments(state).l_vec.iter().map(|x| x * x).sum::<f64>().sqrt();
    let l_ref = (l_norm.round() as u32).min(n - 1);
    let (nf, zf) = (f64::from(n), f64::from(shell.z()));
    let alpha = spec.consts.alpha;
    let k = zf.powi(4) * alpha * alpha / (2.0 * nf.powi(3));
    let ref_half = f64::from(l_ref) + 0.5;

    let global = if spec.drop_global_phase {
        DoubleDouble::from_f64(0.0)
    } else {
        let e_ref = energy0(shell) + if spec.relativistic { energy1(shell, l_ref, &spec.consts)? } else { 0.0 };
        DoubleDouble::product(e_ref, t_au)
    };

    let mut out = state.clone();
    let amps = out.amplitudes_mut();
    for l in 0..n {
        let delta = if spec.relativistic {
            let dl = f64::from(l) - f64::from(l_ref);
            k * dl / ((f64::from(l) + 0.5) * ref_half)
        } else {
            0.0
        };
        let phase = (DoubleDouble::product(delta, t_au) + global).rem_two_pi();
        if phase == 0.0 {
            continue;
        }
        let factor = Complex64::from_polar(1.0, -phase);
        let li = l as i32;
        let start = CoupledState::index(l, -li);
        for a in &mut amps[start..=start + 2 * l as usize] {
            *a *= factor;
        }
    }
    Ok(out)
}

/// Rigid rotation by `theta` about z: amplitude `(l, m)` gains `exp(-i m theta)`.
pub fn rotate_about_z(state: &CoupledState, theta: f64) -> CoupledState {
    let mut out = state.clone();
    let n = state.shell().n() as i32;
    let amps = out.amplitudes_mut();
    for l in 0..n {
        for m in -l..=l {
            amps[CoupledState::index(l as u32, m)] *= Complex64::from_polar(1.0, -f64::from(m) * theta);
        }
    }
    out
}

/// `atan2(<A2>, <A1>)`, the in-plane direction of the Runge-Lenz vector.
pub fn precession_angle(state: &CoupledState) -> Result<f64> {
    precession_angle_with(state, Execution::default())
}

pub fn precession_angle_with(state: &CoupledState, exec: Execution) -> Result<f64> {
    let report = observables(&to_product_with(state, exec))?;
    let magnitude = report.a_norm();
    let threshold = ORIENTATION_THRESHOLD * f64::from(state.shell().n());
    if magnitude <= threshold {
        return Err(Error::UndefinedOrientation { magnitude, threshold });
    }
    Ok(report.a_angle())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherent::{build_product_state, to_coupled, CoherentParams};
    use std::f64::consts::PI;

    fn canonical(n: u32, eta: f64) -> CoupledState {
        let shell = ShellSpec::hydrogen(n).unwrap();
        to_coupled(&build_product_state(&CoherentParams::planar(shell, eta).unwrap(), 1e-12).unwrap())
    }

    fn spec(n: u32, t: TimeSpec) -> EvolutionSpec {
        EvolutionSpec::new(ShellSpec::hydrogen(n).unwrap(), t)
    }

    #[test]
    fn zero_time_is_identity() {
        let s = canonical(30, 0.3);
        let out = evolve(&s, &spec(30, TimeSpec::seconds(0.0).unwrap())).unwrap();
        assert_eq!(out, s);
    }

    #[test]
    fn norm_and_l_moments_conserved() {
        let s = canonical(60, 0.4);
        let before = moments(&s);
        for t in [0.01, 0.37, 1.0, 3.3] {
            let mut sp = spec(60, TimeSpec::precession_periods(t).unwrap());
            sp.drop_global_phase = false;
            let out = evolve(&s, &sp).unwrap();
            assert!((out.norm_sqr() - 1.0).abs() < 1e-12);
            let after = moments(&out);
            assert!((after.l_vec[2] - before.l_vec[2]).abs() < 1e-12 * 60.0);
            assert!((after.l3_sq - before.l3_sq).abs() < 1e-12 * 3600.0);
            assert!((after.l2 - before.l2).abs() < 1e-12 * 3600.0);
        }
    }

    #[test]
    fn circular_state_only_changes_phase() {
        let s = canonical(141, 0.0);
        let mut sp = spec(141, TimeSpec::seconds(0.1).unwrap());
        sp.drop_global_phase = false;
        let out = evolve(&s, &sp).unwrap();
        assert!((out.get(140, -140).norm() - 1.0).abs() < 1e-14);
        assert!((out.inner(&s).unwrap().norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn stationary_without_relativistic_term() {
        let s = canonical(41, 0.3);
        let a0 = precession_angle(&s).unwrap();
        let mut sp = spec(41, TimeSpec::seconds(0.05).unwrap());
        sp.relativistic = false;
        sp.drop_global_phase = false;
        let out = evolve(&s, &sp).unwrap();
        assert!((precession_angle(&out).unwrap() - a0).abs() < 1e-10);
        assert!((out.inner(&s).unwrap().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn shell_mismatch_rejected() {
        let s = canonical(10, 0.3);
        assert!(matches!(evolve(&s, &spec(11, TimeSpec::seconds(1.0).unwrap())), Err(Error::Contract(_))));
    }

    #[test]
    fn canonical_angle_is_zero() {
        assert!(precession_angle(&canonical(141, 0.2)).unwrap().abs() < 1e-12);
    }

    #[test]
    fn rotation_moves_a_rigidly() {
        let s = canonical(25, 0.5);
        assert_eq!(rotate_about_z(&s, 0.0), s);
        let full = rotate_about_z(&s, 2.0 * PI);
        for (a, b) in full.amplitudes().iter().zip(s.amplitudes()) {
            assert!((a - b).norm() < 1e-12);
        }
        for theta in [0.3, -1.1, 2.5] {
            let r = rotate_about_z(&s, theta);
            assert!((precession_angle(&r).unwrap() - theta).abs() < 1e-8);
        }
    }

    #[test]
    fn circular_orientation_undefined() {
        assert!(matches!(
            precession_angle(&canonical(20, 0.0)),
            Err(Error::UndefinedOrientation { .. })
        ));
    }

    #[test]
    fn coupled_l_matches_product_observables() {
        let s = canonical(141, 0.2);
        let l = angular_momentum(&s);
        assert!((l[2] + 129.2308).abs() < 1e-4);
        assert!(l[0].abs() < 1e-9 && l[1].abs() < 1e-9);
    }
}
