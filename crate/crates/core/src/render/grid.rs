use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coherent::CoupledState;
use crate::hydrogenic::{equatorial_prefactor, RadialEvaluator, ShellSpec};
use crate::{Error, Execution, Result};

/// Field of view of 8e4 bohr, about 4.23 micrometres.
pub const DEFAULT_EXTENT_AU: f64 = 8.0e4;
pub const DEFAULT_RESOLUTION: usize = 512;
const MIN_RESOLUTION: usize = 16;
/// Terms with `|amp|` below this fraction of the largest are skipped.
const TERM_CUTOFF: f64 = 1e-10;

/// Unnormalized `|psi(x, y, 0)|^2` on a square grid centred on the nucleus.
///
/// `values[row * resolution + col]`; rows run in ascending y, columns in
/// ascending x, and pixel `i` has centre `(i + 1/2) h - extent/2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityGrid {
    pub extent: f64,
    pub resolution: usize,
    pub time: f64,
    pub n: u32,
    pub z: u32,
    /// Planar-family parameter, when the state belongs to it.
    pub eta: Option<f64>,
    pub values: Vec<f64>,
}

impl DensityGrid {
    pub fn pixel_size(&self) -> f64 {
        self.extent / self.resolution as f64
    }

    /// Centre coordinate of pixel index `i` along either axis.
    pub fn coord(&self, i: usize) -> f64 {
        (i as f64 + 0.5) * self.pixel_size() - 0.5 * self.extent
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.resolution + col]
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }
}

/// `psi(x, y, 0) = sum_m e^{i m phi} F_m(r)` with
/// `F_m(r) = sum_l a_lm Y_lm(pi/2, 0) R_nl(r)`.
#[derive(Clone, Debug)]
pub struct EquatorialSlice {
    radial: RadialEvaluator,
    ls: Vec<u32>,
    m_min: i32,
    m_count: usize,
    /// `(l index, m - m_min, a_lm Y_lm(pi/2, 0))`
    terms: Vec<(usize, usize, Complex64)>,
}

impl EquatorialSlice {
    pub fn new(state: &CoupledState) -> Self {
        let shell = state.shell();
        let max = state.iter().map(|(_, _, a)| a.norm()).fold(0.0, f64::max);
        let cut = TERM_CUTOFF * max;
        let active: Vec<(u32, i32, Complex64)> = state
            .iter()
            .filter(|(l, m, a)| a.norm() >= cut && a.norm() > 0.0 && (*l as i32 + m) % 2 == 0)
            .map(|(l, m, a)| (l, m, a * equatorial_prefactor(l, m).expect("m within l")))
            .collect();
        let mut ls: Vec<u32> = active.iter().map(|t| t.0).collect();
        ls.sort_unstable();
        ls.dedup();
        let m_min = active.iter().map(|t| t.1).min().unwrap_or(0);
        let m_max = active.iter().map(|t| t.1).max().unwrap_or(0);
        let terms = active
            .iter()
            .map(|&(l, m, c)| (ls.binary_search(&l).unwrap(), (m - m_min) as usize, c))
            .collect();
        EquatorialSlice {
            radial: RadialEvaluator::new(shell),
            ls,
            m_min,
            m_count: (m_max - m_min + 1) as usize,
            terms,
        }
    }

    pub fn shell(&self) -> ShellSpec {
        self.radial.shell()
    }

    /// `F_m(r)` for every active `m`, starting at the smallest.
    fn radial_coefficients(&self, r: f64, out: &mut [Complex64]) {
        let rad: Vec<f64> = self.ls.iter().map(|&l| self.radial.eval(l, r)).collect();
        out.iter_mut().for_each(|v| *v = Complex64::new(0.0, 0.0));
        for &(li, mi, c) in &self.terms {
            out[mi] += c * rad[li];
        }
    }

    fn sum_angles(&self, coeffs: &[Complex64], phi: f64) -> Complex64 {
        let step = Complex64::from_polar(1.0, phi);
        let mut z = Complex64::from_polar(1.0, f64::from(self.m_min) * phi);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs {
            acc += c * z;
            z *= step;
        }
        acc
    }

    pub fn psi(&self, x: f64, y: f64) -> Complex64 {
        if self.terms.is_empty() {
            return Complex64::new(0.0, 0.0);
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.m_count];
        self.radial_coefficients(x.hypot(y), &mut coeffs);
        self.sum_angles(&coeffs, y.atan2(x))
    }

    pub fn density(&self, x: f64, y: f64) -> f64 {
        self.psi(x, y).norm_sqr()
    }
}

pub fn density_grid(state: &CoupledState, extent: f64, resolution: usize, time: f64) -> Result<DensityGrid> {
    density_grid_with(state, extent, resolution, time, Execution::default())
}

/// Evaluates the slice on the grid. Radii repeat under the grid's eightfold
/// symmetry, so `F_m(r)` is computed once per octant cell and shared.
pub fn density_grid_with(
    state: &CoupledState,
    extent: f64,
    resolution: usize,
    time: f64,
    exec: Execution,
) -> Result<DensityGrid> {
    if resolution < MIN_RESOLUTION {
        return Err(Error::Domain(format!("resolution {resolution} is below {MIN_RESOLUTION}")));
    }
    if !(extent > 0.0 && extent.is_finite()) {
        return Err(Error::Domain(format!("extent {extent} must be positive")));
    }
    let shell = state.shell();
    let slice = EquatorialSlice::new(state);
    let h = extent / resolution as f64;
    // |coordinate| = (fold(i) + offset) * h
    let half = resolution / 2;
    let offset = if resolution % 2 == 0 { 0.5 } else { 0.0 };
    let fold = |i: usize| -> usize {
        if resolution % 2 == 0 {
            if i >= half { i - half } else { half - 1 - i }
        } else {
            i.abs_diff(half)
        }
    };
    let span = fold(0) + 1;
    let key = |a: usize, b: usize| -> usize {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        hi * (hi + 1) / 2 + lo
    };
    let cells = span * (span + 1) / 2;
    let mc = slice.m_count;
    let mut cache = vec![Complex64::new(0.0, 0.0); cells * mc];
    if !slice.terms.is_empty() {
        exec.for_each_chunk_mut(&mut cache, mc, |k, out| {
            // invert the triangular key
            let hi = ((((8 * k + 1) as f64).sqrt() - 1.0) / 2.0).floor() as usize;
            let hi = if (hi + 1) * (hi + 2) / 2 <= k { hi + 1 } else { hi };
            let lo = k - hi * (hi + 1) / 2;
            let r = h * (lo as f64 + offset).hypot(hi as f64 + offset);
            slice.radial_coefficients(r, out);
        });
    }
    let coord = |i: usize| (i as f64 + 0.5) * h - 0.5 * extent;
    let mut values = vec![0.0; resolution * resolution];
    if !slice.terms.is_empty() {
        exec.for_each_chunk_mut(&mut values, resolution, |row, out| {
            let y = coord(row);
            let fy = fold(row);
            for (col, v) in out.iter_mut().enumerate() {
                let x = coord(col);
                let k = key(fold(col), fy);
                *v = slice.sum_angles(&cache[k * mc..(k + 1) * mc], y.atan2(x)).norm_sqr();
            }
        });
    }
    Ok(DensityGrid {
        extent,
        resolution,
        time,
        n: shell.n(),
        z: shell.z(),
        eta: None,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherent::{build_product_state, to_coupled, CoherentParams};

    fn canonical(n: u32, eta: f64) -> CoupledState {
        let shell = ShellSpec::hydrogen(n).unwrap();
        to_coupled(&build_product_state(&CoherentParams::planar(shell, eta).unwrap(), 1e-12).unwrap())
    }

    #[test]
    fn grid_matches_pointwise_slice() {
        let s = canonical(12, 0.4);
        for res in [16usize, 17] {
            let g = density_grid_with(&s, 600.0, res, 0.0, Execution::Sequential).unwrap();
            let slice = EquatorialSlice::new(&s);
            let max = g.max_value();
            for row in (0..res).step_by(3) {
                for col in (0..res).step_by(2) {
                    let want = slice.density(g.coord(col), g.coord(row));
                    assert!((g.get(row, col) - want).abs() <= 1e-12 * max, "{res} {row} {col}");
                }
            }
        }
    }

    #[test]
    fn parallel_equals_sequential() {
        let s = canonical(15, 0.3);
        let a = density_grid_with(&s, 900.0, 32, 0.0, Execution::Sequential).unwrap();
        let b = density_grid_with(&s, 900.0, 32, 0.0, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn circular_state_is_rotationally_symmetric() {
        let slice = EquatorialSlice::new(&canonical(141, 0.0));
        let r = 19881.0;
        let d0 = slice.density(r, 0.0);
        assert!(d0 > 0.0);
        for k in 1..24 {
            let phi = 0.2618 * k as f64;
            let d = slice.density(r * phi.cos(), r * phi.sin());
            assert!((d - d0).abs() <= 1e-8 * d0);
        }
    }

    #[test]
    fn canonical_state_mirror_symmetric() {
        let g = density_grid(&canonical(141, 0.2), DEFAULT_EXTENT_AU, 64, 0.0).unwrap();
        let max = g.max_value();
        assert!(max > 0.0);
        for row in 0..32 {
            for col in 0..64 {
                let a = g.get(row, col);
                let b = g.get(63 - row, col);
                assert!((a - b).abs() <= 1e-8 * max);
            }
        }
    }

    #[test]
    fn rejects_bad_geometry() {
        let s = canonical(5, 0.3);
        assert!(density_grid(&s, 100.0, 8, 0.0).is_err());
        assert!(density_grid(&s, -1.0, 32, 0.0).is_err());
    }

    #[test]
    fn view_is_about_four_micrometres() {
        let c = crate::hydrogenic::PhysicalConstants::default();
        assert!((c.au_to_meters(DEFAULT_EXTENT_AU) * 1e6 - 4.233).abs() < 1e-3);
    }
}
