use num_complex::Complex64;

use super::CoherentParams;
use crate::amath::so3_coherent_coeffs;
use crate::hydrogenic::ShellSpec;
use crate::{Error, Result};

/// Relative amplitude cutoff used when none is given.
pub const DEFAULT_TRUNCATION: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Amplitudes over `|j m1>|j m2>` with `m1, m2 = -j..=j`.
///
/// Stored densely; index `i1 * n + i2` holds `m1 = i1 - j`, `m2 = i2 - j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductState {
    shell: ShellSpec,
    amps: Vec<Complex64>,
}

impl ProductState {
    pub fn from_amplitudes(shell: ShellSpec, amps: Vec<Complex64>) -> Result<Self> {
        let n = shell.n() as usize;
        if amps.len() != n * n {
            return Err(Error::Contract(format!(
                "expected {} product amplitudes for n = {n}, got {}",
                n * n,
                amps.len()
            )));
        }
        Ok(ProductState { shell, amps })
    }

    pub fn shell(&self) -> ShellSpec {
        self.shell
    }

    /// Side length `n = 2j + 1` of the amplitude grid.
    pub fn dim(&self) -> usize {
        self.shell.n() as usize
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Amplitude at integer offsets `(i1, i2)` from `(-j, -j)`.
    pub fn at(&self, i1: usize, i2: usize) -> Complex64 {
        self.amps[i1 * self.dim() + i2]
    }

    /// Amplitude for `(m1, m2)` given as twice-values.
    pub fn get(&self, twice_m1: i32, twice_m2: i32) -> Complex64 {
        let tj = self.shell.n() as i32 - 1;
        let ok = |t: i32| t.abs() <= tj && (tj - t) % 2 == 0;
        if !ok(twice_m1) || !ok(twice_m2) {
            return ZERO;
        }
        self.at(((twice_m1 + tj) / 2) as usize, ((twice_m2 + tj) / 2) as usize)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn nonzero_count(&self) -> usize {
        self.amps.iter().filter(|a| **a != ZERO).count()
    }
}

/// Amplitudes over hydrogenic `|n l m>`, `0 <= l < n`, `|m| <= l`.
///
/// Dense per `l`: index `l^2 + l + m`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoupledState {
    shell: ShellSpec,
    amps: Vec<Complex64>,
}

impl CoupledState {
    pub fn from_amplitudes(shell: ShellSpec, amps: Vec<Complex64>) -> Result<Self> {
        let n = shell.n() as usize;
        if amps.len() != n * n {
            return Err(Error::Contract(format!(
                "expected {} coupled amplitudes for n = {n}, got {}",
                n * n,
                amps.len()
            )));
        }
        Ok(CoupledState { shell, amps })
    }

    /// A single basis state `|n l m>`.
    pub fn basis(shell: ShellSpec, l: u32, m: i32) -> Result<Self> {
        shell.check_l(l)?;
        if m.unsigned_abs() > l {
            return Err(Error::Domain(format!("|m| = {} exceeds l = {l}", m.unsigned_abs())));
        }
        let n = shell.n() as usize;
        let mut amps = vec![ZERO; n * n];
        amps[Self::index(l, m)] = Complex64::new(1.0, 0.0);
        Ok(CoupledState { shell, amps })
    }

    #[inline]
    pub fn index(l: u32, m: i32) -> usize {
        let l = l as i64;
        (l * l + l + i64::from(m)) as usize
    }

    pub fn shell(&self) -> ShellSpec {
        self.shell
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn get(&self, l: u32, m: i32) -> Complex64 {
        if l >= self.shell.n() || m.unsigned_abs() > l {
            return ZERO;
        }
        self.amps[Self::index(l, m)]
    }

    /// `(l, m, amplitude)` for every stored entry, ordered by `l` then `m`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, i32, Complex64)> + '_ {
        let n = self.shell.n();
        (0..n).flat_map(move |l| {
            let li = l as i32;
            (-li..=li).map(move |m| (l, m, self.amps[Self::index(l, m)]))
        })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `<psi|phi>`.
    pub fn inner(&self, other: &CoupledState) -> Result<Complex64> {
        if self.shell != other.shell {
            return Err(Error::Contract("inner product across different shells".into()));
        }
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum())
    }

    /// Probability of each `l`.
    pub fn l_distribution(&self) -> Vec<f64> {
        let n = self.shell.n();
        (0..n)
            .map(|l| {
                let li = l as i32;
                (-li..=li).map(|m| self.amps[Self::index(l, m)].norm_sqr()).sum()
            })
            .collect()
    }
}

/// Product of two SO(3) coherent states, with amplitudes below
/// `truncation * max|amp|` dropped and the remainder renormalized.
pub fn build_product_state(params: &CoherentParams, truncation: f64) -> Result<ProductState> {
    if !(0.0..1e-6).contains(&truncation) {
        return Err(Error::Domain(format!("truncation {truncation} outside [0, 1e-6)")));
    }
    let shell = params.shell;
    let j = shell.j();
    let c1 = so3_coherent_coeffs(j, params.zeta1);
    let c2 = so3_coherent_coeffs(j, params.zeta2);
    let n = shell.n() as usize;
    let mut amps = Vec::with_capacity(n * n);
    for a in &c1.coeffs {
        for b in &c2.coeffs {
            amps.push(a * b);
        }
    }
    let max = amps.iter().map(|a| a.norm()).fold(0.0, f64::max);
    let cut = truncation * max;
    for a in amps.iter_mut() {
        if a.norm() < cut {
            *a = ZERO;
        }
    }
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in amps.iter_mut() {
        *a /= norm;
    }
    Ok(ProductState { shell, amps })
}
