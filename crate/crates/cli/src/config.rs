use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, ValueEnum};
use kepler_so4::coherent::{CoherentParams, LEffConvention, DEFAULT_TRUNCATION};
use kepler_so4::dynamics::TimeSpec;
use kepler_so4::hydrogenic::{PhysicalConstants, ShellSpec};
use kepler_so4::Complex64;
use serde::Serialize;

use crate::error::{CliError, CliResult};

/// State selection shared by every command that builds a state.
#[derive(Args, Clone, Debug)]
#[command(group(ArgGroup::new("shape").required(true).args(["eta", "zeta1"])))]
pub struct ScenarioArgs {
    /// Principal quantum number.
    #[arg(long, default_value_t = 141)]
    pub n: u32,
    /// Nuclear charge.
    #[arg(long = "z", default_value_t = 1)]
    pub z: u32,
    /// Planar coherent state with zeta1 = eta, zeta2 = -eta.
    #[arg(long, conflicts_with_all = ["zeta1", "zeta2"])]
    pub eta: Option<f64>,
    /// General coherent state, first parameter as `re,im`.
    #[arg(long, requires = "zeta2", value_parser = parse_complex, allow_hyphen_values = true)]
    pub zeta1: Option<Complex64>,
    /// General coherent state, second parameter as `re,im`.
    #[arg(long, requires = "zeta1", value_parser = parse_complex, allow_hyphen_values = true)]
    pub zeta2: Option<Complex64>,
    /// Relative amplitude cutoff.
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    pub truncation: f64,
    /// Effective angular momentum used for T_p.
    #[arg(long, value_enum, default_value_t = LEffArg::Norm)]
    pub l_eff: LEffArg,
    /// Multiply the fine-structure constant (sensitivity checks).
    #[arg(long, hide = true, default_value_t = 1.0)]
    pub alpha_scale: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LEffArg {
    /// |<L>|
    Norm,
    /// |<L>| + 1/2
    PlusHalf,
    /// sqrt(<L^2> - (Delta L3)^2 + 1/4)
    Rms,
}

impl From<LEffArg> for LEffConvention {
    fn from(a: LEffArg) -> Self {
        match a {
            LEffArg::Norm => LEffConvention::AngularMomentumNorm,
            LEffArg::PlusHalf => LEffConvention::MeanPlusHalf,
            LEffArg::Rms => LEffConvention::RootMeanSquare,
        }
    }
}

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|_| format!("'{p}' is not a number"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected 're,im', got '{s}'")),
    }
}

/// Times need a unit suffix; a bare zero is accepted.
pub fn parse_time(s: &str) -> Result<TimeSpec, String> {
    if s.trim().parse::<f64>() == Ok(0.0) {
        return Ok(TimeSpec::seconds(0.0).expect("zero is valid"));
    }
    s.parse::<TimeSpec>().map_err(|e| e.to_string())
}

/// Fully resolved configuration, echoed into every JSON output.
#[derive(Clone, Debug, Serialize)]
pub struct ScenarioConfig {
    pub n: u32,
    #[serde(rename = "Z")]
    pub z: u32,
    pub eta: Option<f64>,
    pub zeta1: [f64; 2],
    pub zeta2: [f64; 2],
    pub truncation: f64,
    pub l_eff_convention: LEffConvention,
    pub alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub time: Option<TimeSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extent_au: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolution: Option<usize>,
    pub outputs: Vec<PathBuf>,
    pub version: &'static str,
}

pub struct Scenario {
    pub params: CoherentParams,
    pub consts: PhysicalConstants,
    pub l_eff: LEffConvention,
    pub truncation: f64,
    pub config: ScenarioConfig,
}

impl ScenarioArgs {
    pub fn resolve(&self) -> CliResult<Scenario> {
        let shell = ShellSpec::new(self.n, self.z).map_err(|e| CliError::Config(e.to_string()))?;
        let params = match (self.eta, self.zeta1, self.zeta2) {
            (Some(eta), None, None) => CoherentParams::planar(shell, eta),
            (None, Some(a), Some(b)) => CoherentParams::general(shell, a, b),
            _ => return Err(CliError::Config("give exactly one of --eta or --zeta1/--zeta2".into())),
        }
        .map_err(|e| CliError::Config(e.to_string()))?;
        if !(0.0..1e-6).contains(&self.truncation) {
            return Err(CliError::Config(format!("--truncation {} outside [0, 1e-6)", self.truncation)));
        }
        if !(self.alpha_scale > 0.0 && self.alpha_scale.is_finite()) {
            return Err(CliError::Config("--alpha-scale must be positive".into()));
        }
        let consts = PhysicalConstants::default().with_alpha_scaled(self.alpha_scale);
        let l_eff = LEffConvention::from(self.l_eff);
        let config = ScenarioConfig {
            n: self.n,
            z: self.z,
            eta: params.eta,
            zeta1: [params.zeta1.re, params.zeta1.im],
            zeta2: [params.zeta2.re, params.zeta2.im],
            truncation: self.truncation,
            l_eff_convention: l_eff,
            alpha: consts.alpha,
            time: None,
            samples: None,
            extent_au: None,
            resolution: None,
            outputs: Vec::new(),
            version: env!("CARGO_PKG_VERSION"),
        };
        Ok(Scenario { params, consts, l_eff, truncation: self.truncation, config })
    }
}

/// `explicit` if given, else `name` inside `outdir`.
pub fn output_path(explicit: Option<&Path>, outdir: &Path, name: &str) -> PathBuf {
    explicit.map_or_else(|| outdir.join(name), Path::to_path_buf)
}

pub fn ensure_parent(path: &Path) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| kepler_so4::Error::Io { path: dir.to_path_buf(), source: e })?;
    }
    Ok(())
}
