//! Production path (truncated coherent state, Clebsch-Gordan transform,
//! per-l phases) against dense untruncated evolution through the spectral
//! decomposition of L^2.

use kepler_so4::coherent::{build_product_state, observables, to_coupled, to_product, CoherentParams};
use kepler_so4::dynamics::{evolve, EvolutionSpec, TimeSpec};
use kepler_so4::hydrogenic::{energy1, t_precession, PhysicalConstants, ShellSpec};
use kepler_so4::Complex64;
use kepler_so4_oracle::DenseShell;

/// `|j, zeta>` coefficients from the binomial closed form, index `k = j + m`.
fn coherent_coeffs(tj: usize, zeta: Complex64) -> Vec<Complex64> {
    let norm = (1.0 + zeta.norm_sqr()).powf(-(tj as f64) / 2.0);
    let mut binom = 1.0f64;
    (0..=tj)
        .map(|k| {
            if k > 0 {
                binom *= (tj - k + 1) as f64 / k as f64;
            }
            zeta.powu(k as u32) * (binom.sqrt() * norm)
        })
        .collect()
}

fn check(params: CoherentParams) {
    let shell = params.shell;
    let n = shell.n() as usize;
    let consts = PhysicalConstants::default();
    let dense = DenseShell::new(n);
    let c1 = coherent_coeffs(n - 1, params.zeta1);
    let c2 = coherent_coeffs(n - 1, params.zeta2);
    let psi_dense: Vec<Complex64> = c1.iter().flat_map(|a| c2.iter().map(move |b| a * b)).collect();
    let energies: Vec<f64> = (0..n as u32).map(|l| energy1(shell, l, &consts).unwrap()).collect();

    let product = build_product_state(&params, 1e-12).unwrap();
    let l_eff = observables(&product).unwrap().l_norm();
    let t_p = t_precession(shell, l_eff, &consts).unwrap();
    let psi0 = to_coupled(&product);

    for frac in [0.0, 1.0 / 7.0, 1.0 / 3.0] {
        let t = frac * t_p;
        let mut spec = EvolutionSpec::new(shell, TimeSpec::seconds(t).unwrap());
        spec.consts = consts;
        let prod = observables(&to_product(&evolve(&psi0, &spec).unwrap())).unwrap();
        let reference = dense.observables(&dense.evolve(&psi_dense, &energies, consts.seconds_to_au(t)));
        let tol = 1e-8 * n as f64;
        for k in 0..3 {
            assert!((prod.l_vec[k] - reference.l[k]).abs() < tol, "t={frac} Tp L[{k}]: {} vs {}", prod.l_vec[k], reference.l[k]);
            assert!((prod.a_vec[k] - reference.a[k]).abs() < tol, "t={frac} Tp A[{k}]: {} vs {}", prod.a_vec[k], reference.a[k]);
        }
        assert!((prod.l2 - reference.l2).abs() < tol * n as f64);
        assert!((prod.l_var - reference.l3_var).abs() < tol);
        assert!((reference.norm - 1.0).abs() < 1e-12);
    }
}

#[test]
fn planar_states_agree_with_dense_evolution() {
    let shell = ShellSpec::hydrogen(21).unwrap();
    for eta in [0.2, 0.4, 1.5] {
        check(CoherentParams::planar(shell, eta).unwrap());
    }
}

#[test]
fn general_state_agrees_with_dense_evolution() {
    let shell = ShellSpec::new(21, 3).unwrap();
    check(CoherentParams::general(shell, Complex64::new(0.3, 0.5), Complex64::new(-0.6, 0.2)).unwrap());
}
