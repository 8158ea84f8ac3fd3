//! Angular-momentum arithmetic that stays finite and accurate at large `j`.

mod clebsch;
mod factorial;
mod halfint;
mod so3;

pub use clebsch::{clebsch_gordan, clebsch_gordan_exact};
pub use factorial::{log_factorial, LogFactorialTable, LOG_FACTORIAL_MAX};
pub use halfint::HalfInt;
pub use so3::{so3_coherent_coeffs, CoherentCoeffVector};

pub(crate) use factorial::lnf;
