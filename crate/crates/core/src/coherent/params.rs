use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::hydrogenic::ShellSpec;
use crate::{Error, Result};

/// Parameters of `|n, zeta1, zeta2> = |j, zeta1>|j, zeta2>`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoherentParams {
    pub shell: ShellSpec,
    pub zeta1: Complex64,
    pub zeta2: Complex64,
    /// Set for the planar family `zeta1 = eta`, `zeta2 = -eta`.
    pub eta: Option<f64>,
}

impl CoherentParams {
    /// Orbit in the x-y plane with `<L>` along z and `<A>` along x.
    pub fn planar(shell: ShellSpec, eta: f64) -> Result<Self> {
        if !(eta >= 0.0 && eta.is_finite()) {
            return Err(Error::Domain(format!("eta = {eta} must be finite and non-negative")));
        }
        Ok(CoherentParams {
            shell,
            zeta1: Complex64::new(eta, 0.0),
            zeta2: Complex64::new(-eta, 0.0),
            eta: Some(eta),
        })
    }

    pub fn general(shell: ShellSpec, zeta1: Complex64, zeta2: Complex64) -> Result<Self> {
        if !(zeta1.is_finite() && zeta2.is_finite()) {
            return Err(Error::Domain("zeta parameters must be finite".into()));
        }
        Ok(CoherentParams {
            shell,
            zeta1,
            zeta2,
            eta: None,
        })
    }

    /// Whether `eta = 1`, the degenerate straight-line orbit.
    pub fn is_degenerate(&self) -> bool {
        self.eta == Some(1.0)
    }
}
