use super::ShellSpec;
use crate::amath::lnf;
use crate::Result;

const RESCALE_HI: f64 = 1.0e150;
const RESCALE_LO: f64 = 1.0e-150;
const LN_RESCALE: f64 = 345.38776394910684; // ln(1e150)

/// Radial functions `R_nl` for one shell, with the normalization logs
/// precomputed for every `l`.
#[derive(Clone, Debug)]
pub struct RadialEvaluator {
    shell: ShellSpec,
    log_norm: Vec<f64>,
}

impl RadialEvaluator {
    pub fn new(shell: ShellSpec) -> Self {
        let n = i64::from(shell.n());
        let nf = n as f64;
        let z = f64::from(shell.z());
        let log_norm = (0..n)
            .map(|l| {
                1.5 * (2.0 * z / nf).ln() + 0.5 * (lnf(n - l - 1) - (2.0 * nf).ln() - lnf(n + l))
            })
            .collect();
        RadialEvaluator { shell, log_norm }
    }

    pub fn shell(&self) -> ShellSpec {
        self.shell
    }

    /// `R_nl(r)`; `l` must be below `n`.
    pub fn eval(&self, l: u32, r: f64) -> f64 {
        let n = self.shell.n();
        debug_assert!(l < n);
        let rho = 2.0 * f64::from(self.shell.z()) * r / f64::from(n);
        if rho == 0.0 {
            if l > 0 {
                return 0.0;
            }
            // L_{n-1}^{(1)}(0) = n
            return (self.log_norm[0]).exp() * f64::from(n);
        }
        let (ln_lag, sign) = log_laguerre(n - l - 1, 2 * l + 1, rho);
        let ln_r = self.log_norm[l as usize] + f64::from(l) * rho.ln() - 0.5 * rho + ln_lag;
        sign * ln_r.exp()
    }
}

/// ln|L_k^(a)(x)| and its sign by forward recurrence in the degree, with the
/// running pair rescaled whenever it leaves [1e-150, 1e150].
fn log_laguerre(k: u32, a: u32, x: f64) -> (f64, f64) {
    let a = f64::from(a);
    let mut prev = 1.0f64;
    if k == 0 {
        return (0.0, 1.0);
    }
    let mut cur = 1.0 + a - x;
    let mut log_scale = 0.0f64;
    for i in 1..k {
        let i = f64::from(i);
        let next = ((2.0 * i + 1.0 + a - x) * cur - (i + a) * prev) / (i + 1.0);
        prev = cur;
        cur = next;
        let big = cur.abs().max(prev.abs());
        if big > RESCALE_HI {
            cur /= RESCALE_HI;
            prev /= RESCALE_HI;
            log_scale += LN_RESCALE;
        } else if big < RESCALE_LO && big > 0.0 {
            cur *= RESCALE_HI;
            prev *= RESCALE_HI;
            log_scale -= LN_RESCALE;
        }
    }
    if cur == 0.0 {
        return (f64::NEG_INFINITY, 1.0);
    }
    (cur.abs().ln() + log_scale, cur.signum())
}

/// Normalized hydrogenic radial function `R_nl(r)`, `r` in bohr.
pub fn radial_wavefunction(shell: ShellSpec, l: u32, r: f64) -> Result<f64> {
    shell.check_l(l)?;
    if r < 0.0 {
        return Err(crate::Error::Domain(format!("radius {r} is negative")));
    }
    Ok(RadialEvaluator::new(shell).eval(l, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn shell(n: u32, z: u32) -> ShellSpec {
        ShellSpec::new(n, z).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_relative_eq!(radial_wavefunction(shell(1, 1), 0, 1.0).unwrap(), 2.0 * (-1.0f64).exp(), max_relative = 1e-14);
        for r in [0.0, 0.3, 2.0, 7.5] {
            // R_20 = (1/sqrt 2)(1 - r/2) e^{-r/2}, R_21 = r e^{-r/2} / (2 sqrt 6)
            let r20 = (1.0 - r / 2.0) * (-r / 2.0f64).exp() / 2f64.sqrt();
            let r21 = r * (-r / 2.0f64).exp() / (2.0 * 6f64.sqrt());
            assert!((radial_wavefunction(shell(2, 1), 0, r).unwrap() - r20).abs() < 1e-14);
            assert!((radial_wavefunction(shell(2, 1), 1, r).unwrap() - r21).abs() < 1e-14);
            // Z scaling: R_nl^Z(r) = Z^{3/2} R_nl^1(Z r)
            let z3 = radial_wavefunction(shell(2, 3), 1, r).unwrap();
            assert_relative_eq!(z3, 3f64.powf(1.5) * radial_wavefunction(shell(2, 1), 1, 3.0 * r).unwrap(), max_relative = 1e-13, epsilon = 1e-300);
        }
        assert_eq!(radial_wavefunction(shell(2, 1), 1, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn domain_errors() {
        assert!(radial_wavefunction(shell(3, 1), 3, 1.0).is_err());
        assert!(radial_wavefunction(shell(3, 1), 0, -1.0).is_err());
    }

    #[test]
    fn large_n_is_finite() {
        let ev = RadialEvaluator::new(shell(141, 1));
        for l in [0, 1, 70, 128, 140] {
            for r in [1.0, 100.0, 5000.0, 19881.0, 39000.0] {
                let v = ev.eval(l, r);
                assert!(v.is_finite(), "l={l} r={r}");
            }
        }
    }
}
