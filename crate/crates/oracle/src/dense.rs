//! Whole-shell dense linear algebra in the product basis `|m1>|m2>`.
//!
//! The coupled basis is never built from Clebsch-Gordan coefficients here:
//! `L^2 = (M + N)^2` is diagonalized directly and evolution under an
//! `l`-dependent energy is applied through its spectral projectors, which
//! are independent of eigenvector sign choices.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

/// Expectation values of a dense shell state.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseObservables {
    pub l: [f64; 3],
    pub a: [f64; 3],
    pub l2: f64,
    pub l3_var: f64,
    pub norm: f64,
}

pub struct DenseShell {
    n: usize,
    /// twice j
    tj: i32,
    /// L^2 eigenvectors (columns) and the l of each column
    vectors: DMatrix<f64>,
    ls: Vec<usize>,
    l_ops: [DMatrix<Complex64>; 3],
    a_ops: [DMatrix<Complex64>; 3],
    l2: DMatrix<f64>,
}

fn ladder(tj: i32) -> (DMatrix<f64>, DMatrix<f64>) {
    // (J3, J+) on the (2j+1)-dim multiplet, index k <-> m = -j + k
    let d = (tj + 1) as usize;
    let j = f64::from(tj) / 2.0;
    let mut j3 = DMatrix::zeros(d, d);
    let mut jp = DMatrix::zeros(d, d);
    for k in 0..d {
        let m = k as f64 - j;
        j3[(k, k)] = m;
        if k + 1 < d {
            jp[(k + 1, k)] = ((j - m) * (j + m + 1.0)).sqrt();
        }
    }
    (j3, jp)
}

fn kron(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a.kronecker(b)
}

fn to_complex(m: &DMatrix<f64>) -> DMatrix<Complex64> {
    m.map(|x| Complex64::new(x, 0.0))
}

impl DenseShell {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let tj = (n - 1) as i32;
        let (j3, jp) = ladder(tj);
        let jm = jp.transpose();
        let id = DMatrix::<f64>::identity(n, n);
        // first factor M, second factor N; product index = i1 * n + i2
        let m3 = kron(&j3, &id);
        let mp = kron(&jp, &id);
        let mm = kron(&jm, &id);
        let n3 = kron(&id, &j3);
        let np = kron(&id, &jp);
        let nm = kron(&id, &jm);

        let i = Complex64::new(0.0, 1.0);
        let x = |p: &DMatrix<f64>, m: &DMatrix<f64>| to_complex(&((p + m) * 0.5));
        let y = |p: &DMatrix<f64>, m: &DMatrix<f64>| to_complex(&((p - m) * 0.5)) * (-i);
        let mx = x(&mp, &mm);
        let my = y(&mp, &mm);
        let nx = x(&np, &nm);
        let ny = y(&np, &nm);
        let mz = to_complex(&m3);
        let nz = to_complex(&n3);

        let l_ops = [&mx + &nx, &my + &ny, &mz + &nz];
        let a_ops = [&mx - &nx, &my - &ny, &mz - &nz];

        let l3 = &m3 + &n3;
        let lp = &mp + &np;
        let lm = &mm + &nm;
        let l2 = &l3 * &l3 + (&lp * &lm + &lm * &lp) * 0.5;

        let eig = SymmetricEigen::new(l2.clone());
        let ls = eig
            .eigenvalues
            .iter()
            .map(|&lam| (((1.0 + 4.0 * lam).max(0.0).sqrt() - 1.0) / 2.0).round() as usize)
            .collect();
        DenseShell {
            n,
            tj,
            vectors: eig.eigenvectors,
            ls,
            l_ops,
            a_ops,
            l2,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Product-basis index of `(m1, m2)` given as twice-values.
    pub fn index(&self, tm1: i32, tm2: i32) -> usize {
        let i1 = ((tm1 + self.tj) / 2) as usize;
        let i2 = ((tm2 + self.tj) / 2) as usize;
        i1 * self.n + i2
    }

    /// `exp(-i E_l t)` applied through the `L^2` spectral decomposition.
    /// `energy_by_l[l]` supplies `E_l` for `l = 0..n`.
    pub fn evolve(&self, psi: &[Complex64], energy_by_l: &[f64], t: f64) -> Vec<Complex64> {
        let d = self.n * self.n;
        assert_eq!(psi.len(), d);
        let re = DVector::from_iterator(d, psi.iter().map(|c| c.re));
        let im = DVector::from_iterator(d, psi.iter().map(|c| c.im));
        let vt = self.vectors.transpose();
        let cre = &vt * re;
        let cim = &vt * im;
        let mut out_re = DVector::<f64>::zeros(d);
        let mut out_im = DVector::<f64>::zeros(d);
        let mut rot_re = DVector::<f64>::zeros(d);
        let mut rot_im = DVector::<f64>::zeros(d);
        for k in 0..d {
            let ph = Complex64::from_polar(1.0, -energy_by_l[self.ls[k]] * t);
            let c = Complex64::new(cre[k], cim[k]) * ph;
            rot_re[k] = c.re;
            rot_im[k] = c.im;
        }
        out_re += &self.vectors * rot_re;
        out_im += &self.vectors * rot_im;
        (0..d).map(|k| Complex64::new(out_re[k], out_im[k])).collect()
    }

    pub fn observables(&self, psi: &[Complex64]) -> DenseObservables {
        let d = self.n * self.n;
        let v = DVector::from_column_slice(psi);
        let expect = |op: &DMatrix<Complex64>| -> f64 { v.dotc(&(op * &v)).re };
        let l = [expect(&self.l_ops[0]), expect(&self.l_ops[1]), expect(&self.l_ops[2])];
        let a = [expect(&self.a_ops[0]), expect(&self.a_ops[1]), expect(&self.a_ops[2])];
        let l2c = to_complex(&self.l2);
        let l2 = expect(&l2c);
        let l3sq = &self.l_ops[2] * &self.l_ops[2];
        let l3_var = expect(&l3sq) - l[2] * l[2];
        let norm = (0..d).map(|k| psi[k].norm_sqr()).sum();
        DenseObservables {
            l,
            a,
            l2,
            l3_var,
            norm,
        }
    }
}
