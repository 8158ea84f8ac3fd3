use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::hydrogenic::{t_classical, t_precession, PhysicalConstants, ShellSpec};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TimeUnit {
    #[serde(rename = "s")]
    Seconds,
    /// Classical Kepler periods.
    #[serde(rename = "Tcl")]
    Tcl,
    /// Precession periods of the state being evolved.
    #[serde(rename = "Tp")]
    Tp,
}

/// A non-negative time with an explicit unit, e.g. `0.25Tp`, `3Tcl`, `1e-10s`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimeSpec {
    pub value: f64,
    pub unit: TimeUnit,
}

impl TimeSpec {
    pub fn new(value: f64, unit: TimeUnit) -> Result<Self> {
        if !(value >= 0.0 && value.is_finite()) {
            return Err(Error::Domain(format!("time {value} must be finite and non-negative")));
        }
        Ok(TimeSpec { value, unit })
    }

    pub fn seconds(value: f64) -> Result<Self> {
        Self::new(value, TimeUnit::Seconds)
    }

    pub fn classical_periods(value: f64) -> Result<Self> {
        Self::new(value, TimeUnit::Tcl)
    }

    pub fn precession_periods(value: f64) -> Result<Self> {
        Self::new(value, TimeUnit::Tp)
    }

    /// Seconds, given the effective angular momentum that fixes `T_p`.
    pub fn to_seconds(&self, shell: ShellSpec, l_eff: f64, consts: &PhysicalConstants) -> Result<f64> {
        Ok(match self.unit {
            TimeUnit::Seconds => self.value,
            TimeUnit::Tcl => self.value * t_classical(shell, consts),
            TimeUnit::Tp if self.value == 0.0 => 0.0,
            TimeUnit::Tp => self.value * t_precession(shell, l_eff, consts)?,
        })
    }
}

impl fmt::Display for TimeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = match self.unit {
            TimeUnit::Seconds => "s",
            TimeUnit::Tcl => "Tcl",
            TimeUnit::Tp => "Tp",
        };
        write!(f, "{}{unit}", self.value)
    }
}

impl FromStr for TimeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (number, unit) = if let Some(v) = s.strip_suffix("Tcl") {
            (v, TimeUnit::Tcl)
        } else if let Some(v) = s.strip_suffix("Tp") {
            (v, TimeUnit::Tp)
        } else if let Some(v) = s.strip_suffix('s') {
            (v, TimeUnit::Seconds)
        } else {
            return Err(Error::Domain(format!("time '{s}' needs a unit suffix: s, Tcl or Tp")));
        };
        let value: f64 = number
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("cannot parse '{number}' as a number in time '{s}'")))?;
        TimeSpec::new(value, unit)
    }
}
