use std::sync::OnceLock;

use crate::{Error, Result};

/// Largest argument held by the shared table. Covers every factorial needed
/// for shells up to n = 200 and Clebsch-Gordan arguments up to j = 200.
pub const LOG_FACTORIAL_MAX: usize = 1024;

/// Table of `ln(k!)` for `k = 0..=max_arg`.
#[derive(Clone, Debug)]
pub struct LogFactorialTable {
    values: Vec<f64>,
}

impl LogFactorialTable {
    /// Accumulates `ln k` with Neumaier compensation so the table error stays
    /// at the level of a single rounding.
    pub fn new(max_arg: usize) -> Self {
        let mut values = Vec::with_capacity(max_arg + 1);
        values.push(0.0);
        let (mut sum, mut comp) = (0.0f64, 0.0f64);
        for k in 1..=max_arg {
            let x = (k as f64).ln();
            let t = sum + x;
            if sum.abs() >= x.abs() {
                comp += (sum - t) + x;
            } else {
                comp += (x - t) + sum;
            }
            sum = t;
            values.push(sum + comp);
        }
        LogFactorialTable { values }
    }

    /// The process-wide table, built on first use.
    pub fn shared() -> &'static LogFactorialTable {
        static TABLE: OnceLock<LogFactorialTable> = OnceLock::new();
        TABLE.get_or_init(|| LogFactorialTable::new(LOG_FACTORIAL_MAX))
    }

    pub fn max_arg(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, k: usize) -> Result<f64> {
        self.values.get(k).copied().ok_or_else(|| {
            Error::Range(format!(
                "log_factorial({k}) exceeds table maximum {}",
                self.max_arg()
            ))
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// `ln(k!)` from the shared table.
pub fn log_factorial(k: usize) -> Result<f64> {
    LogFactorialTable::shared().get(k)
}

/// Unchecked lookup for hot loops whose arguments are bounded by construction.
#[inline]
pub(crate) fn lnf(k: i64) -> f64 {
    debug_assert!(k >= 0 && (k as usize) <= LOG_FACTORIAL_MAX, "lnf({k})");
    LogFactorialTable::shared().values[k as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(log_factorial(0).unwrap(), 0.0);
        assert_eq!(log_factorial(1).unwrap(), 0.0);
        // ln(120)
        assert!((log_factorial(5).unwrap() - 4.787491742782046).abs() < 1e-15);
    }

    #[test]
    fn out_of_range_is_an_error() {
        assert!(matches!(
            log_factorial(LOG_FACTORIAL_MAX + 1),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn successive_differences_are_logs() {
        let t = LogFactorialTable::shared();
        for k in 1..=t.max_arg() {
            let d = t.values()[k] - t.values()[k - 1];
            let want = (k as f64).ln();
            // one ulp of the larger table entry
            let tol = 4.0 * f64::EPSILON * t.values()[k].abs().max(1.0);
            assert!((d - want).abs() <= tol, "k = {k}: {d} vs {want}");
        }
    }

    #[test]
    fn covers_largest_shell() {
        assert!(LogFactorialTable::shared().max_arg() >= 4 * 200);
    }
}
