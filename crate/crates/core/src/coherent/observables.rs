use serde::{Deserialize, Serialize};

use super::ProductState;
use crate::{Error, Result};

/// Largest tolerated `|<psi|psi> - 1|` on input.
const NORM_TOLERANCE: f64 = 1e-8;

/// Expectation values of the SO(4) generators for one state.
///
/// `l_vec` is in units of hbar; `a_vec` is the scaled Runge-Lenz vector,
/// whose length is `(n - 1)` times the classical eccentricity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObservableReport {
    pub l_vec: [f64; 3],
    pub a_vec: [f64; 3],
    pub l2: f64,
    /// `(Delta L3)^2`.
    pub l_var: f64,
    /// `<L^2 + A^2>`; equals `n^2 - 1` within a shell.
    pub c1: f64,
    /// `<L.A> = <M^2> - <N^2>`; zero within a shell.
    pub c2: f64,
    pub eccentricity: f64,
    pub norm: f64,
}

/// How an effective angular momentum is read off a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LEffConvention {
    /// `|<L>|`. Reproduces the quoted precession periods within 0.5%.
    #[default]
    AngularMomentumNorm,
    /// `|<L>| + 1/2`.
    MeanPlusHalf,
    /// `sqrt(<L^2> - (Delta L3)^2 + 1/4)`.
    RootMeanSquare,
}

impl ObservableReport {
    pub fn l_norm(&self) -> f64 {
        norm3(&self.l_vec)
    }

    pub fn a_norm(&self) -> f64 {
        norm3(&self.a_vec)
    }

    /// In-plane orientation `atan2(<A2>, <A1>)`.
    pub fn a_angle(&self) -> f64 {
        self.a_vec[1].atan2(self.a_vec[0])
    }

    pub fn l_eff(&self, convention: LEffConvention) -> f64 {
        match convention {
            LEffConvention::AngularMomentumNorm => self.l_norm(),
            LEffConvention::MeanPlusHalf => self.l_norm() + 0.5,
            LEffConvention::RootMeanSquare => (self.l2 - self.l_var + 0.25).max(0.0).sqrt(),
        }
    }
}

fn norm3(v: &[f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

/// Evaluates all observables by matrix elements of `M3, N3, M+, N+` in the
/// product basis. Nothing assumes the state factorizes.
pub fn observables(state: &ProductState) -> Result<ObservableReport> {
    let norm = state.norm_sqr();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::Contract(format!("state norm {norm} is not 1")));
    }
    let d = state.dim();
    let tj = d as i32 - 1;
    let jj1 = 0.25 * (tj * (tj + 2)) as f64;
    let m_of = |i: usize| i as f64 - 0.5 * tj as f64;
    // <j m+1| J+ |j m>
    let raise: Vec<f64> = (0..d).map(|i| (jj1 - m_of(i) * (m_of(i) + 1.0)).max(0.0).sqrt()).collect();

    let (mut m3, mut n3, mut l3sq, mut m3n3) = (0.0, 0.0, 0.0, 0.0);
    let (mut msq, mut nsq) = (0.0, 0.0);
    let mut m_plus = num_complex::Complex64::new(0.0, 0.0);
    let mut n_plus = m_plus;
    let mut m_plus_n_minus = m_plus;
    for i1 in 0..d {
        let m1 = m_of(i1);
        for i2 in 0..d {
            let psi = state.at(i1, i2);
            let p = psi.norm_sqr();
            if p == 0.0 {
                continue;
            }
            let m2 = m_of(i2);
            m3 += p * m1;
            n3 += p * m2;
            l3sq += p * (m1 + m2) * (m1 + m2);
            m3n3 += p * m1 * m2;
            // J^2 = J3^2 + (J+J- + J-J+)/2 on its diagonal
            let lower1 = if i1 > 0 { raise[i1 - 1] } else { 0.0 };
            let lower2 = if i2 > 0 { raise[i2 - 1] } else { 0.0 };
            msq += p * (m1 * m1 + 0.5 * (raise[i1] * raise[i1] + lower1 * lower1));
            nsq += p * (m2 * m2 + 0.5 * (raise[i2] * raise[i2] + lower2 * lower2));
            if i1 + 1 < d {
                m_plus += state.at(i1 + 1, i2).conj() * psi * raise[i1];
                if i2 > 0 {
                    m_plus_n_minus += state.at(i1 + 1, i2 - 1).conj() * psi * (raise[i1] * lower2);
                }
            }
            if i2 + 1 < d {
                n_plus += state.at(i1, i2 + 1).conj() * psi * raise[i2];
            }
        }
    }
    let m_vec = [m_plus.re, m_plus.im, m3];
    let n_vec = [n_plus.re, n_plus.im, n3];
    let l_vec = [m_vec[0] + n_vec[0], m_vec[1] + n_vec[1], m_vec[2] + n_vec[2]];
    let a_vec = [m_vec[0] - n_vec[0], m_vec[1] - n_vec[1], m_vec[2] - n_vec[2]];
    // M.N = M3 N3 + (M+N- + M-N+)/2
    let m_dot_n = m3n3 + m_plus_n_minus.re;
    let l2 = msq + nsq + 2.0 * m_dot_n;
    let l_var = (l3sq - l_vec[2] * l_vec[2]).max(0.0);
    let c1 = 2.0 * (msq + nsq);
    let c2 = msq - nsq;
    let eccentricity = if tj == 0 { 0.0 } else { (norm3(&a_vec) / tj as f64).min(1.0) };
    Ok(ObservableReport { l_vec, a_vec, l2, l_var, c1, c2, eccentricity, norm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amath::HalfInt;
    use crate::coherent::{
        build_product_state, eccentricity_of_eta, l_variance_closed_form, planar_a1, planar_l2, planar_l3,
        to_coupled, CoherentParams,
    };
    use crate::hydrogenic::ShellSpec;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn planar(n: u32, eta: f64) -> ObservableReport {
        let shell = ShellSpec::hydrogen(n).unwrap();
        let s = build_product_state(&CoherentParams::planar(shell, eta).unwrap(), 1e-12).unwrap();
        observables(&s).unwrap()
    }

    #[test]
    fn reference_state_values() {
        let r = planar(141, 0.2);
        assert!((r.l_vec[2] - 140.0 * (0.04 - 1.0) / 1.04).abs() < 1e-8);
        assert!((r.a_vec[0] - 280.0 * 0.2 / 1.04).abs() < 1e-8);
        assert!(r.l_vec[0].abs() < 1e-9 && r.l_vec[1].abs() < 1e-9 && r.a_vec[1].abs() < 1e-9);
        let var = l_variance_closed_form(HalfInt::from_int(70), 0.2).unwrap();
        assert!((r.l_var - var).abs() < 1e-8, "{} vs {var}", r.l_var);
        assert!((r.l_var - 10.3550).abs() < 1e-3);
    }

    #[test]
    fn circular_state() {
        let r = planar(141, 0.0);
        assert!((r.l2 - 140.0 * 141.0).abs() < 1e-8);
        assert!((r.l_vec[2] + 140.0).abs() < 1e-12);
        assert!(r.eccentricity < 1e-12);
        assert_eq!(r.l_var, 0.0);
    }

    #[test]
    fn linear_orbit() {
        let r = planar(41, 1.0);
        assert!(r.l_vec[2].abs() < 1e-10);
        assert!((r.eccentricity - 1.0).abs() < 1e-10);
    }

    #[test]
    fn l2_matches_coupled_sum() {
        let shell = ShellSpec::hydrogen(17).unwrap();
        let params = CoherentParams::general(shell, Complex64::new(0.4, -0.3), Complex64::new(-0.7, 0.5)).unwrap();
        let p = build_product_state(&params, 0.0).unwrap();
        let r = observables(&p).unwrap();
        let brute: f64 = to_coupled(&p).iter().map(|(l, _, a)| (l * (l + 1)) as f64 * a.norm_sqr()).sum();
        assert!((r.l2 - brute).abs() < 1e-9 * brute, "{} vs {brute}", r.l2);
    }

    #[test]
    fn unnormalized_rejected() {
        let shell = ShellSpec::hydrogen(3).unwrap();
        let p = ProductState::from_amplitudes(shell, vec![Complex64::new(0.5, 0.0); 9]).unwrap();
        assert!(matches!(observables(&p), Err(Error::Contract(_))));
    }

    #[test]
    fn l_eff_conventions() {
        let r = planar(141, 0.2);
        assert!((r.l_eff(LEffConvention::AngularMomentumNorm) - 129.2308).abs() < 1e-4);
        assert!((r.l_eff(LEffConvention::MeanPlusHalf) - 129.7308).abs() < 1e-4);
        let rms = r.l_eff(LEffConvention::RootMeanSquare);
        assert!(rms > 129.0 && rms < 131.0, "{rms}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn planar_closed_forms(n in 2u32..=141, eta in 0.0f64..3.0) {
            let r = planar(n, eta);
            let j = HalfInt::from_twice(n as i32 - 1);
            let scale = n as f64;
            prop_assert!((r.l_vec[2] - planar_l3(j, eta)).abs() <= 1e-8 * scale);
            prop_assert!((r.a_vec[0] - planar_a1(j, eta)).abs() <= 1e-8 * scale);
            prop_assert!((r.l2 - planar_l2(j, eta)).abs() <= 1e-8 * scale * scale);
            prop_assert!((r.c1 - (n * n - 1) as f64).abs() <= 1e-8 * (n * n) as f64);
            prop_assert!(r.c2.abs() <= 1e-8 * (n * n) as f64);
            let dot: f64 = (0..3).map(|k| r.l_vec[k] * r.a_vec[k]).sum();
            prop_assert!(dot.abs() <= 1e-8 * (n * n) as f64);
            if n > 1 {
                let e = eccentricity_of_eta(eta).unwrap();
                prop_assert!((r.eccentricity - e).abs() <= 1e-8 * e.max(1e-8));
            }
        }

        #[test]
        fn casimirs_for_general_states(
            n in 2u32..=30, a in -2.0f64..2.0, b in -2.0f64..2.0, c in -2.0f64..2.0, d in -2.0f64..2.0,
        ) {
            let shell = ShellSpec::hydrogen(n).unwrap();
            let params = CoherentParams::general(shell, Complex64::new(a, b), Complex64::new(c, d)).unwrap();
            let r = observables(&build_product_state(&params, 0.0).unwrap()).unwrap();
            let nn = (n * n) as f64;
            prop_assert!((r.c1 - (nn - 1.0)).abs() <= 1e-8 * nn);
            prop_assert!(r.c2.abs() <= 1e-8 * nn);
            prop_assert!((0.0..=1.0).contains(&r.eccentricity));
        }
    }
}
