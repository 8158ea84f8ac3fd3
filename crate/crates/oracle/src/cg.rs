//! Clebsch-Gordan coefficients by explicit construction of coupled states.
//!
//! Each multiplet `|j, m>` is rescaled to `|m>> = c_m |j, m>` with
//! `c_j = 1` and `c_{m-1}^2 = c_m^2 (j-m+1)/(j+m)`, which makes the lowering
//! operator integral: `J- |m>> = (j+m) |m-1>>`. In that basis the
//! highest-weight states follow from rational Gram-Schmidt and the rest from
//! repeated lowering, so every coefficient comes out as a signed square root
//! of an exact rational.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

type Vector = BTreeMap<i32, BigRational>; // keyed by twice m1

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `c_m^2` for a multiplet of twice-spin `tj`, keyed by twice m.
fn metric(tj: i32) -> BTreeMap<i32, BigRational> {
    let mut g = BTreeMap::new();
    let mut c2 = BigRational::one();
    g.insert(tj, c2.clone());
    let mut tm = tj;
    while tm > -tj {
        // j - m + 1 and j + m in twice units
        let up = (tj - tm + 2) / 2;
        let down = (tj + tm) / 2;
        c2 = c2 * rat(up as i64) / rat(down as i64);
        tm -= 2;
        g.insert(tm, c2.clone());
    }
    g
}

/// All coefficients `<j1 m1; j2 m2 | J M>` for fixed `j1, j2`.
pub struct ExactCgTable {
    tj1: i32,
    tj2: i32,
    /// (twice J, twice M) -> (unnormalized vector over twice m1, its squared norm)
    states: BTreeMap<(i32, i32), (Vector, BigRational)>,
    g1: BTreeMap<i32, BigRational>,
    g2: BTreeMap<i32, BigRational>,
}

impl ExactCgTable {
    pub fn new(tj1: i32, tj2: i32) -> Self {
        assert!(tj1 >= 0 && tj2 >= 0);
        let g1 = metric(tj1);
        let g2 = metric(tj2);
        let mut table = ExactCgTable {
            tj1,
            tj2,
            states: BTreeMap::new(),
            g1,
            g2,
        };
        let mut tjj = tj1 + tj2;
        while tjj >= (tj1 - tj2).abs() {
            let top = table.highest_weight(tjj);
            let mut v = top;
            let mut tm = tjj;
            loop {
                let n = table.norm2(&v, tm);
                table.states.insert((tjj, tm), (v.clone(), n));
                if tm == -tjj {
                    break;
                }
                v = table.lower(&v, tm);
                tm -= 2;
            }
            tjj -= 2;
        }
        table
    }

    fn weight(&self, tm1: i32, tm: i32) -> BigRational {
        &self.g1[&tm1] * &self.g2[&(tm - tm1)]
    }

    fn dot(&self, a: &Vector, b: &Vector, tm: i32) -> BigRational {
        let mut s = BigRational::zero();
        for (k, x) in a {
            if let Some(y) = b.get(k) {
                s += x * y * self.weight(*k, tm);
            }
        }
        s
    }

    fn norm2(&self, v: &Vector, tm: i32) -> BigRational {
        self.dot(v, v, tm)
    }

    fn lower(&self, v: &Vector, tm: i32) -> Vector {
        let mut out = Vector::new();
        for (&tm1, x) in v {
            let tm2 = tm - tm1;
            if tm1 > -self.tj1 {
                let f = rat(((self.tj1 + tm1) / 2) as i64);
                *out.entry(tm1 - 2).or_insert_with(BigRational::zero) += x * f;
            }
            if tm2 > -self.tj2 {
                let f = rat(((self.tj2 + tm2) / 2) as i64);
                *out.entry(tm1).or_insert_with(BigRational::zero) += x * f;
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    fn highest_weight(&self, tjj: i32) -> Vector {
        // start from |m1 = j1>>|m2 = J - j1>> and project out larger J
        let mut v = Vector::new();
        v.insert(self.tj1, BigRational::one());
        let tm = tjj;
        let mut tk = tjj + 2;
        while tk <= self.tj1 + self.tj2 {
            let (u, un) = &self.states[&(tk, tm)];
            let c = self.dot(u, &v, tm) / un;
            for (k, x) in u {
                *v.entry(*k).or_insert_with(BigRational::zero) -= &c * x;
            }
            tk += 2;
        }
        v.retain(|_, x| !x.is_zero());
        v
    }

    /// Signed square of the coefficient: `sign(C) * C^2` as an exact rational.
    pub fn signed_square(&self, tm1: i32, tm2: i32, tjj: i32, tm: i32) -> BigRational {
        if tm1 + tm2 != tm || tm1.abs() > self.tj1 || tm2.abs() > self.tj2 {
            return BigRational::zero();
        }
        let Some((v, n)) = self.states.get(&(tjj, tm)) else {
            return BigRational::zero();
        };
        let Some(x) = v.get(&tm1) else {
            return BigRational::zero();
        };
        let sq = x * x * self.weight(tm1, tm) / n;
        if x.is_negative() {
            -sq
        } else {
            sq
        }
    }

    pub fn get(&self, tm1: i32, tm2: i32, tjj: i32, tm: i32) -> f64 {
        let s = self.signed_square(tm1, tm2, tjj, tm);
        let mag = s.abs().to_f64().unwrap_or(0.0).sqrt();
        if s.is_negative() {
            -mag
        } else {
            mag
        }
    }

    pub fn tj1(&self) -> i32 {
        self.tj1
    }

    pub fn tj2(&self) -> i32 {
        self.tj2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_half_pair() {
        let t = ExactCgTable::new(1, 1);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((t.get(1, -1, 2, 0) - s).abs() < 1e-15);
        assert!((t.get(-1, 1, 2, 0) - s).abs() < 1e-15);
        assert!((t.get(1, -1, 0, 0) - s).abs() < 1e-15);
        assert!((t.get(-1, 1, 0, 0) + s).abs() < 1e-15);
        assert_eq!(t.get(1, 1, 2, 2), 1.0);
    }

    #[test]
    fn one_times_one_textbook_values() {
        // <1 1; 1 -1 | 0 0> = 1/sqrt(3), <1 0; 1 0 | 0 0> = -1/sqrt(3)
        let t = ExactCgTable::new(2, 2);
        let r3 = 1.0 / 3f64.sqrt();
        assert!((t.get(2, -2, 0, 0) - r3).abs() < 1e-15);
        assert!((t.get(0, 0, 0, 0) + r3).abs() < 1e-15);
        // <1 0; 1 0 | 1 0> = 0, <1 1; 1 0 | 1 1> = 1/sqrt(2)
        assert_eq!(t.get(0, 0, 2, 0), 0.0);
        assert!((t.get(2, 0, 2, 2) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        // <1 0; 1 0 | 2 0> = sqrt(2/3)
        assert!((t.get(0, 0, 4, 0) - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }
}
