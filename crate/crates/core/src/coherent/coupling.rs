//! Clebsch-Gordan map between `|j m1>|j m2>` and `|n l m>`.
//!
//! The map is block diagonal in `m = m1 + m2`. For sector `m` both sides
//! have `n - |m|` states: `m1` runs over the pairs with that sum and `l`
//! over `|m|..n`. Each block is a real orthogonal matrix, computed once per
//! shell and cached.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use super::{CoupledState, ProductState};
use crate::amath::{clebsch_gordan, HalfInt};
use crate::hydrogenic::ShellSpec;
use crate::{Execution, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// One `m` block: `coeffs[row * size + col]` is
/// `<j m1; j m2 | l m>` with `l = |m| + row` and `i1 = i1_min + col`.
#[derive(Debug)]
pub struct Sector {
    pub m: i32,
    pub i1_min: usize,
    pub size: usize,
    pub coeffs: Vec<f64>,
}

/// Cached Clebsch-Gordan blocks for one principal quantum number.
#[derive(Debug)]
pub struct CouplingTable {
    n: u32,
    sectors: Vec<OnceLock<Arc<Sector>>>,
}

impl CouplingTable {
    fn new(n: u32) -> Self {
        let count = 2 * n as usize - 1;
        CouplingTable {
            n,
            sectors: (0..count).map(|_| OnceLock::new()).collect(),
        }
    }

    /// Shared table for `n`, created on first use.
    pub fn for_n(n: u32) -> Arc<CouplingTable> {
        static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CouplingTable>>>> = OnceLock::new();
        let mut map = TABLES
            .get_or_init(|| Mutex::new(HashMap::new()))
            .lock()
            .unwrap_or_else(|e| e.into_inner());
        map.entry(n).or_insert_with(|| Arc::new(CouplingTable::new(n))).clone()
    }

    /// A fresh table with every block computed, bypassing the shared cache.
    pub fn build_uncached(n: u32, exec: Execution) -> CouplingTable {
        let table = CouplingTable::new(n);
        let count = table.sectors.len();
        let sectors = exec.map_indexed(count, |k| compute_sector(n, k as i32 - (n as i32 - 1), Execution::Sequential));
        for (slot, sector) in table.sectors.iter().zip(sectors) {
            let _ = slot.set(Arc::new(sector));
        }
        table
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Block for `m`, computing it with `exec` if it is not cached yet.
    pub fn sector(&self, m: i32, exec: Execution) -> Arc<Sector> {
        let n = self.n as i32;
        debug_assert!(m.abs() < n);
        let slot = &self.sectors[(m + n - 1) as usize];
        slot.get_or_init(|| Arc::new(compute_sector(self.n, m, exec))).clone()
    }
}

fn compute_sector(n: u32, m: i32, exec: Execution) -> Sector {
    let n = n as i32;
    let tj = n - 1;
    let j = HalfInt::from_twice(tj);
    // i1 + i2 = m + 2j with 0 <= i1, i2 <= n - 1
    let s = m + tj;
    let i1_min = (s - tj).max(0);
    let size = (n - m.abs()) as usize;
    let rows = exec.map_indexed(size, |row| {
        let l = m.abs() + row as i32;
        (0..size)
            .map(|col| {
                let i1 = i1_min + col as i32;
                let i2 = s - i1;
                clebsch_gordan(
                    j,
                    HalfInt::from_twice(2 * i1 - tj),
                    j,
                    HalfInt::from_twice(2 * i2 - tj),
                    HalfInt::from_int(l),
                    HalfInt::from_int(m),
                )
            })
            .collect::<Vec<f64>>()
    });
    Sector {
        m,
        i1_min: i1_min as usize,
        size,
        coeffs: rows.concat(),
    }
}

/// Product-basis amplitudes of sector `m`, in column order.
fn gather_product(state: &ProductState, sector: &Sector) -> Vec<Complex64> {
    let n = state.dim();
    let s = (sector.m + n as i32 - 1) as usize;
    (0..sector.size)
        .map(|c| {
            let i1 = sector.i1_min + c;
            state.at(i1, s - i1)
        })
        .collect()
}

fn sector_has_product_weight(state: &ProductState, m: i32) -> bool {
    let n = state.dim() as i32;
    let s = m + n - 1;
    let lo = (s - (n - 1)).max(0);
    let hi = s.min(n - 1);
    (lo..=hi).any(|i1| state.at(i1 as usize, (s - i1) as usize) != ZERO)
}

fn sector_has_coupled_weight(state: &CoupledState, m: i32) -> bool {
    let n = state.shell().n() as i32;
    (m.abs()..n).any(|l| state.get(l as u32, m) != ZERO)
}

/// `|n l m> = sum_{m1 + m2 = m} <j m1; j m2 | l m> |j m1>|j m2>` applied to
/// a product-basis state.
pub fn to_coupled(state: &ProductState) -> CoupledState {
    to_coupled_with(state, Execution::default())
}

pub fn to_coupled_with(state: &ProductState, exec: Execution) -> CoupledState {
    let shell = state.shell();
    let n = shell.n() as i32;
    let table = CouplingTable::for_n(shell.n());
    let ms: Vec<i32> = (-(n - 1)..n).filter(|&m| sector_has_product_weight(state, m)).collect();
    let blocks = exec.map_indexed(ms.len(), |k| {
        let sector = table.sector(ms[k], Execution::Sequential);
        let x = gather_product(state, &sector);
        let out: Vec<Complex64> = (0..sector.size)
            .map(|row| {
                let r = &sector.coeffs[row * sector.size..(row + 1) * sector.size];
                r.iter().zip(&x).map(|(c, a)| a * *c).sum()
            })
            .collect();
        (sector.m, out)
    });
    let mut amps = vec![ZERO; (n * n) as usize];
    for (m, out) in blocks {
        for (row, v) in out.into_iter().enumerate() {
            let l = (m.abs() + row as i32) as u32;
            amps[CoupledState::index(l, m)] = v;
        }
    }
    CoupledState::from_amplitudes(shell, amps).expect("dimension matches shell")
}

/// Inverse (transpose) of [`to_coupled`].
pub fn to_product(state: &CoupledState) -> ProductState {
    to_product_with(state, Execution::default())
}

pub fn to_product_with(state: &CoupledState, exec: Execution) -> ProductState {
    let shell = state.shell();
    let n = shell.n() as i32;
    let table = CouplingTable::for_n(shell.n());
    let ms: Vec<i32> = (-(n - 1)..n).filter(|&m| sector_has_coupled_weight(state, m)).collect();
    let blocks = exec.map_indexed(ms.len(), |k| {
        let m = ms[k];
        let sector = table.sector(m, Execution::Sequential);
        let coupled: Vec<Complex64> = (0..sector.size)
            .map(|row| state.get((m.abs() + row as i32) as u32, m))
            .collect();
        let mut out = vec![ZERO; sector.size];
        for (row, c) in coupled.iter().enumerate() {
            if *c == ZERO {
                continue;
            }
            let r = &sector.coeffs[row * sector.size..(row + 1) * sector.size];
            for (o, cg) in out.iter_mut().zip(r) {
                *o += c * *cg;
            }
        }
        (sector, out)
    });
    let d = n as usize;
    let mut amps = vec![ZERO; d * d];
    for (sector, out) in blocks {
        let s = (sector.m + n - 1) as usize;
        for (col, v) in out.into_iter().enumerate() {
            let i1 = sector.i1_min + col;
            amps[i1 * d + (s - i1)] = v;
        }
    }
    ProductState::from_amplitudes(shell, amps).expect("dimension matches shell")
}

/// Warm the cache for every sector of `shell`.
pub fn precompute(shell: ShellSpec, exec: Execution) -> Result<()> {
    let n = shell.n() as i32;
    let table = CouplingTable::for_n(shell.n());
    exec.map_indexed((2 * n - 1) as usize, |k| {
        table.sector(k as i32 - (n - 1), Execution::Sequential);
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherent::{build_product_state, CoherentParams};

    #[test]
    fn sectors_are_orthogonal() {
        let table = CouplingTable::for_n(9);
        for m in -8..=8 {
            let s = table.sector(m, Execution::Sequential);
            for a in 0..s.size {
                for b in 0..s.size {
                    let dot: f64 = (0..s.size).map(|c| s.coeffs[a * s.size + c] * s.coeffs[b * s.size + c]).sum();
                    let want = if a == b { 1.0 } else { 0.0 };
                    assert!((dot - want).abs() < 1e-12, "m={m} rows {a},{b}: {dot}");
                }
            }
        }
    }

    #[test]
    fn circular_state_maps_to_stretched_l() {
        let shell = ShellSpec::hydrogen(141).unwrap();
        let p = build_product_state(&CoherentParams::planar(shell, 0.0).unwrap(), 1e-12).unwrap();
        let c = to_coupled(&p);
        assert!((c.get(140, -140) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((c.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn round_trip_small_shell() {
        let shell = ShellSpec::hydrogen(12).unwrap();
        let params = CoherentParams::general(shell, Complex64::new(0.3, 0.8), Complex64::new(-1.2, 0.1)).unwrap();
        let p = build_product_state(&params, 0.0).unwrap();
        let c = to_coupled_with(&p, Execution::Sequential);
        assert!((c.norm_sqr() - 1.0).abs() < 1e-12);
        let back = to_product_with(&c, Execution::Parallel);
        for (a, b) in p.amplitudes().iter().zip(back.amplitudes()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn precompute_fills_all_sectors() {
        let shell = ShellSpec::hydrogen(6).unwrap();
        precompute(shell, Execution::Parallel).unwrap();
        let t = CouplingTable::for_n(6);
        assert!(t.sectors.iter().all(|s| s.get().is_some()));
    }
}
