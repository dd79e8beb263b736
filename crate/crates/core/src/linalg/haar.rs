//! Seeded random matrices.
//!
//! All randomness in the crate comes from ChaCha20 (`rand_chacha::ChaCha20Rng`)
//! seeded through `SeedableRng::seed_from_u64`. Other implementations can
//! reproduce the distributions (not the streams) by sampling the same way:
//! complex Gaussian entries with independent `N(0, 1/2)` real and imaginary
//! parts, Householder QR, then the phases of `diag(R)` moved into `Q`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use super::{HermitianMatrix, UnitaryMatrix};

pub type SeededRng = ChaCha20Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha20Rng::seed_from_u64(seed)
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Haar-distributed element of U(n), deterministic in `seed`.
pub fn haar_unitary(n: usize, seed: u64) -> UnitaryMatrix {
    haar_unitary_with(n, &mut seeded_rng(seed))
}

/// Haar-distributed element of U(n) drawn from `rng`.
pub fn haar_unitary_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> UnitaryMatrix {
    assert!(n > 0, "U(0) is not supported");
    loop {
        let a: Vec<Complex64> = (0..n * n).map(|_| complex_gaussian(rng)).collect();
        if let Some(q) = haar_from_gaussian(n, a) {
            return q;
        }
    }
}

/// Householder QR of `a` with phase correction; `None` only on a
/// measure-zero rank deficiency.
fn haar_from_gaussian(n: usize, mut a: Vec<Complex64>) -> Option<UnitaryMatrix> {
    let zero = Complex64::new(0.0, 0.0);
    let mut q = vec![zero; n * n];
    for i in 0..n {
        q[i * n + i] = Complex64::new(1.0, 0.0);
    }

    for k in 0..n {
        let norm = (k..n).map(|i| a[i * n + k].norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return None;
        }
        let x0 = a[k * n + k];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm;
        let mut v: Vec<Complex64> = (k..n).map(|i| a[i * n + k]).collect();
        v[0] -= alpha;
        let vv: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vv == 0.0 {
            continue;
        }

        // a ← H a on rows k.., H = I − 2 v v† / (v† v)
        for j in k..n {
            let w: Complex64 = v
                .iter()
                .enumerate()
                .map(|(i, vi)| vi.conj() * a[(k + i) * n + j])
                .sum();
            let f = w * (2.0 / vv);
            for (i, vi) in v.iter().enumerate() {
                a[(k + i) * n + j] -= vi * f;
            }
        }
        // q ← q H
        for r in 0..n {
            let w: Complex64 = v
                .iter()
                .enumerate()
                .map(|(i, vi)| q[r * n + k + i] * vi)
                .sum();
            let f = w * (2.0 / vv);
            for (i, vi) in v.iter().enumerate() {
                q[r * n + k + i] -= f * vi.conj();
            }
        }
    }

    for k in 0..n {
        let rkk = a[k * n + k];
        if rkk.norm() == 0.0 {
            return None;
        }
        let ph = rkk / rkk.norm();
        for r in 0..n {
            q[r * n + k] *= ph;
        }
    }
    UnitaryMatrix::from_flat(n, q).ok()
}

/// Gaussian unitary ensemble sample: off-diagonal entries complex
/// `N(0, 1/2)`, diagonal entries real `N(0, 1)`.
pub fn random_hermitian_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> HermitianMatrix {
    assert!(n > 0, "matrix dimension must be positive");
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        let d: f64 = rng.sample(StandardNormal);
        entries[i * n + i] = Complex64::new(d, 0.0);
        for j in (i + 1)..n {
            let z = complex_gaussian(rng);
            entries[i * n + j] = z;
            entries[j * n + i] = z.conj();
        }
    }
    HermitianMatrix::symmetrized(n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_case_is_unit_modulus() {
        for seed in 0..20 {
            let u = haar_unitary(1, seed);
            assert!((u.get(0, 0).norm() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        assert_eq!(haar_unitary(3, 42), haar_unitary(3, 42));
        assert_ne!(haar_unitary(3, 42), haar_unitary(3, 43));
    }

    #[test]
    fn second_moment_at_n2() {
        // Every unitary row has unit norm, so the mean of |u_ij|² is 1/n.
        let mut rng = seeded_rng(2024);
        let samples = 10_000;
        let mut sum = 0.0;
        for _ in 0..samples {
            let u = haar_unitary_with(2, &mut rng);
            sum += u.entries().iter().map(|z| z.norm_sqr()).sum::<f64>() / 4.0;
        }
        let mean = sum / samples as f64;
        assert!((mean - 0.5).abs() <= 0.02, "mean {mean}");
    }

    #[test]
    fn fourth_moment_at_n2() {
        // For Haar U(2), |u_11|² is uniform on [0, 1], so E|u_11|⁴ = 1/3.
        // A QR without phase correction fails this.
        let mut rng = seeded_rng(7);
        let samples = 10_000;
        let mut sum = 0.0;
        let mut phase_sum = Complex64::new(0.0, 0.0);
        for _ in 0..samples {
            let u = haar_unitary_with(2, &mut rng);
            sum += u.get(0, 0).norm_sqr().powi(2);
            phase_sum += u.get(0, 0);
        }
        let m4 = sum / samples as f64;
        assert!((m4 - 1.0 / 3.0).abs() <= 0.02, "E|u11|^4 = {m4}");
        // E[u_11] = 0 for Haar measure.
        assert!((phase_sum / samples as f64).norm() <= 0.03);
    }

    #[test]
    fn larger_sizes_are_unitary() {
        for n in [3, 8, 20] {
            let u = haar_unitary(n, n as u64);
            assert_eq!(u.n(), n);
        }
    }
}
