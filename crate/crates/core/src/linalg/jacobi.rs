//! Cyclic Jacobi eigenvalue iteration for complex Hermitian matrices.
//!
//! Each rotation first removes the phase of `a_pq` with a diagonal unitary,
//! then applies the classical real rotation that annihilates it.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative stopping threshold on the off-diagonal Frobenius norm.
pub(crate) const OFF_DIAGONAL_TOL: f64 = 1e-13;

/// Sweep cap before reporting non-convergence.
pub(crate) const MAX_SWEEPS: usize = 100;

fn off_diagonal_norm(n: usize, a: &[Complex64]) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Unsorted eigenvalues of the Hermitian matrix stored row-major in `a`.
pub(crate) fn eigenvalues(n: usize, a: &[Complex64]) -> Result<Vec<f64>> {
    let mut a = a.to_vec();
    let scale = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let target = OFF_DIAGONAL_TOL * scale;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(n, &a) <= target {
            return Ok((0..n).map(|i| a[i * n + i].re).collect());
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                rotate(n, &mut a, p, q);
            }
        }
    }

    let residual = off_diagonal_norm(n, &a);
    if residual <= target {
        return Ok((0..n).map(|i| a[i * n + i].re).collect());
    }
    Err(Error::NoConvergence {
        sweeps: MAX_SWEEPS,
        residual,
    })
}

/// Annihilates `a[p][q]` (and `a[q][p]`) with a unitary similarity.
fn rotate(n: usize, a: &mut [Complex64], p: usize, q: usize) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.is_finite() {
        let sign = if theta < 0.0 { -1.0 } else { 1.0 };
        sign / (theta.abs() + theta.hypot(1.0))
    } else {
        0.0
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    let e_minus = phase.conj();

    // Columns: A ← A U with U = D J, D = diag(.., 1, .., e^{-iφ}, ..).
    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q] * e_minus;
        a[k * n + p] = akp * c - akq * s;
        a[k * n + q] = akp * s + akq * c;
    }
    // Rows: A ← U† A.
    for k in 0..n {
        let bpk = a[p * n + k];
        let bqk = a[q * n + k] * phase;
        a[p * n + k] = bpk * c - bqk * s;
        a[q * n + k] = bpk * s + bqk * c;
    }

    a[p * n + p] = Complex64::new(app - t * r, 0.0);
    a[q * n + q] = Complex64::new(aqq + t * r, 0.0);
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
}
