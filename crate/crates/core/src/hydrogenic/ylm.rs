use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::amath::lnf;
use crate::{Error, Result};

fn check_lm(l: u32, m: i32) -> Result<()> {
    if m.unsigned_abs() > l {
        Err(Error::Domain(format!("|m| = {} exceeds l = {l}", m.unsigned_abs())))
    } else {
        Ok(())
    }
}

/// `Y_lm(pi/2, 0)` (real, Condon-Shortley). Zero when `l - m` is odd.
///
/// Uses `P_l^m(0) = (-1)^((l+m)/2) (l+m-1)!! / (l-m)!!` with the double
/// factorials and the normalization combined in log space.
pub fn equatorial_prefactor(l: u32, m: i32) -> Result<f64> {
    check_lm(l, m)?;
    let (li, ma) = (i64::from(l), i64::from(m.abs()));
    if (li + ma) % 2 != 0 {
        return Ok(0.0);
    }
    let k = (li + ma) / 2;
    let p = (li - ma) / 2;
    let ln = 0.5 * ((2.0 * li as f64 + 1.0).ln() - (4.0 * PI).ln() + lnf(li - ma) - lnf(li + ma))
        + lnf(2 * k)
        - k as f64 * LN_2
        - lnf(k)
        - p as f64 * LN_2
        - lnf(p);
    let mut sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    // Y_{l,-m} = (-1)^m conj(Y_lm)
    if m < 0 && ma % 2 == 1 {
        sign = -sign;
    }
    Ok(sign * ln.exp())
}

/// `Y_lm(pi/2, phi)`.
pub fn sph_harm_equatorial(l: u32, m: i32, phi: f64) -> Result<Complex64> {
    let p = equatorial_prefactor(l, m)?;
    Ok(Complex64::from_polar(1.0, f64::from(m) * phi) * p)
}

/// `Y_lm(theta, phi)` for general polar angle, by the normalized
/// associated-Legendre recurrence in `l`.
pub fn sph_harm(l: u32, m: i32, theta: f64, phi: f64) -> Result<Complex64> {
    check_lm(l, m)?;
    let ma = m.unsigned_abs();
    let x = theta.cos();
    let s = theta.sin().abs();
    // normalized P_m^m = (-1)^m sqrt((2m+1)/(4pi) (2m-1)!!/(2m)!!) sin^m
    let mi = i64::from(ma);
    let ln_mm = 0.5 * ((2.0 * mi as f64 + 1.0).ln() - (4.0 * PI).ln() + lnf(2 * mi) - 2.0 * (mi as f64 * LN_2 + lnf(mi)))
        + if ma > 0 { f64::from(ma) * s.ln() } else { 0.0 };
    let mut pmm = if s == 0.0 && ma > 0 { 0.0 } else { ln_mm.exp() };
    if ma % 2 == 1 {
        pmm = -pmm;
    }
    let value = if l == ma {
        pmm
    } else {
        let mf = f64::from(ma);
        let mut p_prev = pmm;
        let mut p_cur = x * (2.0 * mf + 3.0).sqrt() * pmm;
        for ll in (ma + 2)..=l {
            let lf = f64::from(ll);
            let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
            let lp = lf - 1.0;
            let a_prev = ((4.0 * lp * lp - 1.0) / (lp * lp - mf * mf)).sqrt();
            let next = a * (x * p_cur - p_prev / a_prev);
            p_prev = p_cur;
            p_cur = next;
        }
        p_cur
    };
    let mut y = Complex64::from_polar(value, f64::from(ma as i32) * phi);
    if m < 0 {
        y = y.conj();
        if ma % 2 == 1 {
            y = -y;
        }
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn low_order_values() {
        for phi in [0.0, 0.7, -2.0] {
            let y = sph_harm_equatorial(0, 0, phi).unwrap();
            assert_relative_eq!(y.re, 0.28209479177387814, max_relative = 1e-14);
            assert_eq!(sph_harm_equatorial(1, 0, phi).unwrap(), Complex64::new(0.0, 0.0));
        }
        // Y_11(pi/2, 0) = -sqrt(3/(8 pi)), Y_{1,-1} = +sqrt(3/(8 pi))
        let want = (3.0 / (8.0 * PI)).sqrt();
        assert_relative_eq!(equatorial_prefactor(1, 1).unwrap(), -want, max_relative = 1e-14);
        assert_relative_eq!(equatorial_prefactor(1, -1).unwrap(), want, max_relative = 1e-14);
        // Y_20(pi/2) = -(1/4) sqrt(5/pi)
        assert_relative_eq!(equatorial_prefactor(2, 0).unwrap(), -0.25 * (5.0 / PI).sqrt(), max_relative = 1e-14);
        assert!(sph_harm_equatorial(3, 4, 0.0).is_err());
    }

    #[test]
    fn stretched_equatorial_magnitude() {
        // |Y_ll(pi/2, 0)| = sqrt((2l+1)!! / (4 pi (2l)!!)), the ratio evaluated by a running product
        for l in [1u32, 10, 60, 140] {
            let mut ratio = 1.0f64;
            for k in 1..=l {
                ratio *= (2.0 * f64::from(k) + 1.0) / (2.0 * f64::from(k));
            }
            let want = (ratio / (4.0 * PI)).sqrt();
            assert_relative_eq!(equatorial_prefactor(l, l as i32).unwrap().abs(), want, max_relative = 1e-12);
        }
    }

    #[test]
    fn general_theta_agrees_at_equator() {
        for l in 0..=60u32 {
            for m in -(l as i32)..=(l as i32) {
                let a = sph_harm_equatorial(l, m, 0.37).unwrap();
                let b = sph_harm(l, m, PI / 2.0, 0.37).unwrap();
                assert!((a - b).norm() < 1e-12, "l={l} m={m}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn general_theta_closed_forms() {
        let (t, p) = (0.9f64, 0.4f64);
        // Y_10 = sqrt(3/4pi) cos t ; Y_21 = -sqrt(15/8pi) sin t cos t e^{ip}
        assert_relative_eq!(sph_harm(1, 0, t, p).unwrap().re, (3.0 / (4.0 * PI)).sqrt() * t.cos(), max_relative = 1e-14);
        let y21 = sph_harm(2, 1, t, p).unwrap();
        let want = Complex64::from_polar(-(15.0 / (8.0 * PI)).sqrt() * t.sin() * t.cos(), p);
        assert!((y21 - want).norm() < 1e-14);
    }

    #[test]
    fn addition_theorem_at_equator() {
        // sum_m |Y_lm|^2 = (2l+1)/(4 pi) independent of phi
        for l in 0..=50u32 {
            for phi in [0.0, 1.1, 2.9] {
                let s: f64 = (-(l as i32)..=(l as i32))
                    .map(|m| sph_harm_equatorial(l, m, phi).unwrap().norm_sqr())
                    .sum();
                assert_relative_eq!(s, (2.0 * f64::from(l) + 1.0) / (4.0 * PI), max_relative = 1e-10);
            }
        }
    }
}
