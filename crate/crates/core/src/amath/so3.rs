use num_complex::Complex64;

use super::{lnf, HalfInt};

/// Coefficients of the SO(3) coherent state `|j, zeta>` over `m = -j..=j`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherentCoeffVector {
    pub j: HalfInt,
    pub zeta: Complex64,
    /// `coeffs[k]` is the amplitude of `m = -j + k`.
    pub coeffs: Vec<Complex64>,
}

impl CoherentCoeffVector {
    pub fn get(&self, m: HalfInt) -> Complex64 {
        if !m.is_projection_of(self.j) {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs[((m.twice() + self.j.twice()) / 2) as usize]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// `(<J1>, <J2>, <J3>)` summed directly from the coefficients.
    pub fn expectation(&self) -> [f64; 3] {
        let j = self.j.value();
        let mut j3 = 0.0;
        let mut jplus = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            let m = k as f64 - j;
            j3 += m * c.norm_sqr();
            if let Some(up) = self.coeffs.get(k + 1) {
                jplus += up.conj() * c * ((j - m) * (j + m + 1.0)).sqrt();
            }
        }
        [jplus.re, jplus.im, j3]
    }

    /// `<J3^2> - <J3>^2`.
    pub fn variance_j3(&self) -> f64 {
        let j = self.j.value();
        let (mut s1, mut s2) = (0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            let m = k as f64 - j;
            s1 += m * c.norm_sqr();
            s2 += m * m * c.norm_sqr();
        }
        s2 - s1 * s1
    }
}

/// SO(3) coherent state
/// `sum_m sqrt(C(2j, j+m)) zeta^(j+m) / (1+|zeta|^2)^j |j, m>`.
///
/// Magnitudes are formed in log space and phases accumulated separately, so
/// any finite `zeta` works at any supported `j`. The result is renormalized.
pub fn so3_coherent_coeffs(j: HalfInt, zeta: Complex64) -> CoherentCoeffVector {
    let two_j = i64::from(j.twice());
    let size = (two_j + 1) as usize;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); size];
    let r = zeta.norm();
    if r == 0.0 {
        coeffs[0] = Complex64::new(1.0, 0.0);
        return CoherentCoeffVector { j, zeta, coeffs };
    }
    let ln_r = r.ln();
    let arg = zeta.arg();
    let ln_den = j.value() * (r * r).ln_1p();
    let ln_binom_top = lnf(two_j);
    for (k, c) in coeffs.iter_mut().enumerate() {
        let k = k as i64;
        let log_mag = 0.5 * (ln_binom_top - lnf(k) - lnf(two_j - k)) + k as f64 * ln_r - ln_den;
        *c = Complex64::from_polar(log_mag.exp(), k as f64 * arg);
    }
    let norm = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    for c in coeffs.iter_mut() {
        *c /= norm;
    }
    CoherentCoeffVector { j, zeta, coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// `<J>` for `|j, zeta>` in closed form.
    fn closed_form(j: f64, zeta: Complex64) -> [f64; 3] {
        let s = 1.0 + zeta.norm_sqr();
        [
            2.0 * j * zeta.re / s,
            -2.0 * j * zeta.im / s,
            j * (zeta.norm_sqr() - 1.0) / s,
        ]
    }

    #[test]
    fn zero_zeta_is_lowest_weight() {
        let v = so3_coherent_coeffs(HalfInt::from_int(70), Complex64::new(0.0, 0.0));
        assert_eq!(v.coeffs.len(), 141);
        assert_eq!(v.coeffs[0], Complex64::new(1.0, 0.0));
        assert!(v.coeffs[1..].iter().all(|c| *c == Complex64::new(0.0, 0.0)));
    }

    #[test]
    fn spin_half_at_unit_zeta() {
        let v = so3_coherent_coeffs(HalfInt::from_twice(1), Complex64::new(1.0, 0.0));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((v.coeffs[0] - Complex64::new(s, 0.0)).norm() < 1e-15);
        assert!((v.coeffs[1] - Complex64::new(s, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn unnormalized_formula_is_already_normalized() {
        // direct evaluation without the final rescale, j = 3, zeta = 0.7 - 0.4i
        let zeta = Complex64::new(0.7, -0.4);
        let j = 3i32;
        let binom: [f64; 7] = [1.0, 6.0, 15.0, 20.0, 15.0, 6.0, 1.0];
        let den = (1.0 + zeta.norm_sqr()).powi(j);
        let direct: Vec<Complex64> = (0..7).map(|k| binom[k].sqrt() * zeta.powi(k as i32) / den).collect();
        let v = so3_coherent_coeffs(HalfInt::from_int(j), zeta);
        for (a, b) in v.coeffs.iter().zip(&direct) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn large_zeta_concentrates_on_top() {
        let v = so3_coherent_coeffs(HalfInt::from_int(70), Complex64::new(1e8, 0.0));
        assert!((v.coeffs[140].norm() - 1.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn normalized_and_matches_closed_form(
            tj in 0i32..=140,
            re in -10.0f64..10.0,
            im in -10.0f64..10.0,
        ) {
            let zeta = Complex64::new(re, im);
            prop_assume!(zeta.norm() <= 10.0);
            let j = HalfInt::from_twice(tj);
            let v = so3_coherent_coeffs(j, zeta);
            prop_assert!((v.norm_sqr() - 1.0).abs() < 1e-12);
            let got = v.expectation();
            let want = closed_form(j.value(), zeta);
            for k in 0..3 {
                prop_assert!((got[k] - want[k]).abs() < 1e-10 * j.value().max(1.0),
                    "component {}: {} vs {}", k, got[k], want[k]);
            }
        }
    }
}
