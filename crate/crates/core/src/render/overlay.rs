use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::hydrogenic::{mean_radius, ShellSpec};
use crate::{Error, Result};

/// Kepler ellipse with one focus at the origin.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllipseOverlay {
    pub semi_major: f64,
    pub eccentricity: f64,
    /// Direction of perihelion.
    pub rotation: f64,
    pub points: Vec<[f64; 2]>,
}

impl EllipseOverlay {
    /// Focal radius `a (1 - e^2) / (1 + e cos(phi - rotation))`.
    pub fn radius_at(&self, phi: f64) -> f64 {
        let e = self.eccentricity;
        self.semi_major * (1.0 - e * e) / (1.0 + e * (phi - self.rotation).cos())
    }
}

/// Classical orbit of semi-major axis `n^2 / Z` sampled at `n_points`
/// evenly spaced polar angles.
pub fn classical_overlay(shell: ShellSpec, eps: f64, theta: f64, n_points: usize) -> Result<EllipseOverlay> {
    if !(0.0..1.0).contains(&eps) {
        return Err(Error::Domain(format!("eccentricity {eps} outside [0, 1)")));
    }
    if n_points == 0 {
        return Err(Error::Domain("overlay needs at least one point".into()));
    }
    let mut overlay = EllipseOverlay {
        semi_major: mean_radius(shell),
        eccentricity: eps,
        rotation: theta,
        points: Vec::with_capacity(n_points),
    };
    for k in 0..n_points {
        let phi = 2.0 * PI * k as f64 / n_points as f64;
        let r = overlay.radius_at(phi);
        overlay.points.push([r * phi.cos(), r * phi.sin()]);
    }
    Ok(overlay)
}
