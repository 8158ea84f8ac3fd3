//! Clebsch-Gordan coefficients `<j1 m1; j2 m2 | l m>` in the Condon-Shortley
//! convention, from the single-sum Racah formula.
//!
//! The alternating sum is written as `t_kmin * sum_k rho_k` where
//! `rho_{k+1} / rho_k` is a ratio of small integers. The prefactor and the
//! leading term live in log space. The sum itself is first evaluated in
//! compensated double precision; when the cancellation ratio
//! `sum |rho_k| / |sum rho_k|` is large enough to threaten 1e-10 relative
//! accuracy, it is re-evaluated exactly with big integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{lnf, HalfInt};

/// Above this cancellation ratio the floating-point sum is not trusted.
const MAX_CANCELLATION: f64 = 1.0e3;

/// Integer parameters of the Racah sum for one coefficient.
struct RacahTerms {
    /// j1+j2-l, j1-m1, j2+m2: decreasing factorial arguments
    a: i64,
    b: i64,
    c: i64,
    /// l-j2+m1, l-j1-m2: increasing factorial arguments
    d: i64,
    e: i64,
    kmin: i64,
    kmax: i64,
    /// ln of the square root prefactor
    log_prefactor: f64,
}

impl RacahTerms {
    fn new(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, l: HalfInt, m: HalfInt) -> Option<Self> {
        let (tj1, tm1, tj2, tm2, tl, tm) = (
            i64::from(j1.twice()),
            i64::from(m1.twice()),
            i64::from(j2.twice()),
            i64::from(m2.twice()),
            i64::from(l.twice()),
            i64::from(m.twice()),
        );
        if tm1 + tm2 != tm {
            return None;
        }
        if !m1.is_projection_of(j1) || !m2.is_projection_of(j2) || !m.is_projection_of(l) {
            return None;
        }
        if tl < (tj1 - tj2).abs() || tl > tj1 + tj2 || (tj1 + tj2 + tl) % 2 != 0 {
            return None;
        }
        let h = |x: i64| x / 2;
        let a = h(tj1 + tj2 - tl);
        let b = h(tj1 - tm1);
        let c = h(tj2 + tm2);
        let d = h(tl - tj2 + tm1);
        let e = h(tl - tj1 - tm2);
        let kmin = 0.max(-d).max(-e);
        let kmax = a.min(b).min(c);
        if kmin > kmax {
            return None;
        }
        let log_prefactor = 0.5
            * ((tl as f64 + 1.0).ln() + lnf(a) + lnf(h(tj1 - tj2 + tl)) + lnf(h(-tj1 + tj2 + tl))
                - lnf(h(tj1 + tj2 + tl) + 1)
                + lnf(h(tj1 + tm1))
                + lnf(b)
                + lnf(h(tj2 - tm2))
                + lnf(c)
                + lnf(h(tl + tm))
                + lnf(h(tl - tm)));
        Some(RacahTerms {
            a,
            b,
            c,
            d,
            e,
            kmin,
            kmax,
            log_prefactor,
        })
    }

    /// ln|t_kmin| and its sign.
    fn leading_term(&self) -> (f64, f64) {
        let k = self.kmin;
        let log = -(lnf(k)
            + lnf(self.a - k)
            + lnf(self.b - k)
            + lnf(self.c - k)
            + lnf(self.d + k)
            + lnf(self.e + k));
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        (log, sign)
    }

    /// (p_k, q_k) with rho_{k+1} / rho_k = -p_k / q_k.
    fn ratio(&self, k: i64) -> (i64, i64) {
        (
            (self.a - k) * (self.b - k) * (self.c - k),
            (k + 1) * (self.d + k + 1) * (self.e + k + 1),
        )
    }

    /// Compensated floating sum of rho_k, with its cancellation ratio.
    fn float_sum(&self) -> (f64, f64) {
        let (mut sum, mut comp, mut abs_sum) = (0.0f64, 0.0f64, 0.0f64);
        let mut rho = 1.0f64;
        for k in self.kmin..=self.kmax {
            let t = sum + rho;
            if sum.abs() >= rho.abs() {
                comp += (sum - t) + rho;
            } else {
                comp += (rho - t) + sum;
            }
            sum = t;
            abs_sum += rho.abs();
            if k < self.kmax {
                let (p, q) = self.ratio(k);
                rho *= -(p as f64) / (q as f64);
            }
        }
        let s = sum + comp;
        let cancellation = if s == 0.0 { f64::INFINITY } else { abs_sum / s.abs() };
        (s, cancellation)
    }

    /// Exact sum of rho_k as (ln|S|, sign), or None when S is exactly zero.
    fn exact_sum(&self) -> Option<(f64, f64)> {
        // Horner from the innermost term: acc <- 1 - (p/q) acc.
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for k in (self.kmin..self.kmax).rev() {
            let (p, q) = self.ratio(k);
            num = &den * q - &num * p;
            den *= q;
        }
        if num.is_zero() {
            return None;
        }
        let sign = if num.is_negative() { -1.0 } else { 1.0 };
        Some((ln_big(&num.abs()) - ln_big(&den), sign))
    }

    fn evaluate(&self, force_exact: bool) -> f64 {
        let (log_t0, sign_t0) = self.leading_term();
        let (log_s, sign_s) = if force_exact {
            match self.exact_sum() {
                Some(v) => v,
                None => return 0.0,
            }
        } else {
            let (s, cancellation) = self.float_sum();
            if cancellation <= MAX_CANCELLATION {
                (s.abs().ln(), s.signum())
            } else {
                match self.exact_sum() {
                    Some(v) => v,
                    None => return 0.0,
                }
            }
        };
        sign_t0 * sign_s * (self.log_prefactor + log_t0 + log_s).exp()
    }
}

/// Natural log of a positive big integer.
fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        // every BigInt up to ~1e301 converts finitely
        let (_, digits) = x.to_u64_digits();
        let mut v = 0.0f64;
        for d in digits.iter().rev() {
            v = v * 18446744073709551616.0 + *d as f64;
        }
        v.ln()
    } else {
        let shift = bits - 64;
        let top: BigInt = x >> shift;
        let (_, digits) = top.to_u64_digits();
        let mut v = 0.0f64;
        for d in digits.iter().rev() {
            v = v * 18446744073709551616.0 + *d as f64;
        }
        v.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Condon-Shortley Clebsch-Gordan coefficient `<j1 m1; j2 m2 | l m>`.
///
/// Returns exactly 0 when a selection rule fails: `m != m1 + m2`, the
/// triangle rule, or a projection outside its multiplet.
pub fn clebsch_gordan(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, l: HalfInt, m: HalfInt) -> f64 {
    match RacahTerms::new(j1, m1, j2, m2, l, m) {
        Some(t) => t.evaluate(false),
        None => 0.0,
    }
}

/// As [`clebsch_gordan`] but always evaluates the alternating sum exactly.
pub fn clebsch_gordan_exact(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, l: HalfInt, m: HalfInt) -> f64 {
    match RacahTerms::new(j1, m1, j2, m2, l, m) {
        Some(t) => t.evaluate(true),
        None => 0.0,
    }
}
