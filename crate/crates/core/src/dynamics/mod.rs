//! Time evolution of a shell state under the first-order relativistic
//! correction, and measurement of the resulting in-plane precession.

mod evolve;
mod time;
mod trace;

pub use evolve::{
    angular_momentum, evolve, precession_angle, precession_angle_with, rotate_about_z,
    EvolutionSpec,
};
pub use time::{TimeSpec, TimeUnit};
pub use trace::{
    trace_precession, write_trace_csv, write_trace_summary, PrecessionTrace, TraceOptions, TraceSample,
    TraceSummary,
};
