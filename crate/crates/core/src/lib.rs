//! SO(4) coherent states of a hydrogenic shell and their precession under the
//! relativistic kinetic-energy correction.
//!
//! The crate is organised bottom-up:
//!
//! - [`amath`]: half-integers, log-factorials, Clebsch-Gordan coefficients and
//!   SO(3) coherent-state coefficients, all safe at large `j`.
//! - [`hydrogenic`]: energies, time scales, precession rates and the
//!   position-space basis functions `R_nl` and `Y_lm`.
//! - [`coherent`]: SO(4) coherent states in the product `(m1, m2)` basis, the
//!   Clebsch-Gordan map to the hydrogenic `(l, m)` basis, and observables.
//! - [`dynamics`]: time evolution, precession angle and fidelity traces.
//! - [`render`]: equatorial density grids, classical overlays, file formats.
//!
//! Data-parallel loops go through [`Execution`]; with the `parallel` feature
//! disabled everything runs sequentially.

pub mod amath;
pub mod coherent;
pub mod ddouble;
pub mod dynamics;
mod error;
mod exec;
pub mod hydrogenic;
pub mod render;

pub use error::{Error, Result};
pub use exec::Execution;

pub use num_complex::Complex64;
