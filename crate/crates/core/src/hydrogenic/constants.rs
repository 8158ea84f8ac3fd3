use serde::{Deserialize, Serialize};

/// Speed of light, m/s (exact).
pub const SPEED_OF_LIGHT_SI: f64 = 299_792_458.0;
/// Reduced Planck constant, J s (exact).
pub const HBAR_SI: f64 = 1.054_571_817e-34;

/// Dimensionless coupling plus the SI bridges for atomic time and length.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    pub alpha: f64,
    /// seconds per atomic unit of time
    pub atomic_time_si: f64,
    /// meters per bohr
    pub bohr_radius_si: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
        alpha: 7.297_352_569_3e-3,
        atomic_time_si: 2.418_884_326_585_7e-17,
        bohr_radius_si: 5.291_772_109_03e-11,
    };

    /// Speed of light in atomic units.
    pub fn c_au(&self) -> f64 {
        1.0 / self.alpha
    }

    pub fn seconds_to_au(&self, s: f64) -> f64 {
        s / self.atomic_time_si
    }

    pub fn au_to_seconds(&self, t: f64) -> f64 {
        t * self.atomic_time_si
    }

    pub fn au_to_meters(&self, x: f64) -> f64 {
        x * self.bohr_radius_si
    }

    /// Copy with alpha multiplied by `scale`. Used to check that regressions
    /// are sensitive to the coupling.
    pub fn with_alpha_scaled(self, scale: f64) -> Self {
        PhysicalConstants {
            alpha: self.alpha * scale,
            ..self
        }
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}
