//! Reference computations that share no code path with `kepler-so4`.
//!
//! Everything here is deliberately slow and simple: exact rational
//! Clebsch-Gordan coefficients from ladder operators, dense-matrix evolution
//! of a whole shell, and adaptive Gauss-Kronrod quadrature. Quantum numbers
//! are passed as twice their value.

pub mod cg;
pub mod dense;
pub mod quad;

pub use cg::ExactCgTable;
pub use dense::{DenseObservables, DenseShell};
pub use quad::integrate;
