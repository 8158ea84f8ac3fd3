//! Hydrogenic shells: energies, semiclassical time scales, precession rates
//! and the position-space basis functions.
//!
//! Everything internal is in Hartree atomic units (hbar = m = e = 1,
//! c = 1/alpha). Seconds and meters appear only in the functions that say so.

mod constants;
mod radial;
mod scales;
mod shell;
mod ylm;

pub use constants::{PhysicalConstants, HBAR_SI, SPEED_OF_LIGHT_SI};
pub use radial::{radial_wavefunction, RadialEvaluator};
pub use scales::{
    dephasing_test_l, dephasing_test_n, energy0, energy1, mean_radius,
    precession_rate_classical_gravity, precession_rate_general_relativity, precession_rate_sr,
    t_classical, t_classical_au, t_precession, t_precession_au, SemiclassicalReport,
};
pub use shell::ShellSpec;
pub use ylm::{equatorial_prefactor, sph_harm, sph_harm_equatorial};
