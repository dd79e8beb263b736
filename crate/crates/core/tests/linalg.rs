mod common;

use gcq_core::linalg::{
    coadjoint, corner, eigenvalues_desc, haar_unitary, haar_unitary_with, random_hermitian_with,
    seeded_rng, sweep, HermitianMatrix,
};
use proptest::prelude::*;

use common::max_abs_diff;

fn conjugated_diag(d: &[f64], seed: u64) -> HermitianMatrix {
    let g = haar_unitary(d.len(), seed);
    coadjoint(&g, &HermitianMatrix::diag(d)).unwrap()
}

#[test]
fn conjugation_oracle_5_0_minus3() {
    for seed in 0..50 {
        let x = conjugated_diag(&[5.0, 0.0, -3.0], seed);
        let ev = eigenvalues_desc(&x).unwrap();
        assert!(max_abs_diff(ev.values(), &[5.0, 0.0, -3.0]) <= 1e-9);
    }
}

#[test]
fn cauchy_interlacing_on_1000_matrices() {
    let mut rng = seeded_rng(100);
    for i in 0..1000 {
        let n = 1 + i % 6;
        let x = random_hermitian_with(n, &mut rng);
        for j in 0..n.saturating_sub(1) {
            let upper = eigenvalues_desc(&corner(&x, j).unwrap()).unwrap();
            let lower = eigenvalues_desc(&corner(&x, j + 1).unwrap()).unwrap();
            let (u, l) = (upper.values(), lower.values());
            for k in 0..l.len() {
                assert!(u[k] + 1e-8 >= l[k], "n={n} j={j} k={k}");
                assert!(l[k] + 1e-8 >= u[k + 1], "n={n} j={j} k={k}");
            }
        }
    }
}

#[test]
fn large_matrices_converge() {
    let mut rng = seeded_rng(64);
    for n in [16, 32, 64] {
        let x = random_hermitian_with(n, &mut rng);
        let ev = eigenvalues_desc(&x).unwrap();
        assert_eq!(ev.len(), n);
        let scale = x.frobenius_norm().max(1.0);
        assert!((ev.values().iter().sum::<f64>() - x.trace()).abs() <= 1e-9 * scale);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sweep_is_idempotent(n in 1usize..=6, seed in any::<u64>()) {
        let x = random_hermitian_with(n, &mut seeded_rng(seed));
        let once = sweep(&x).unwrap();
        let twice = sweep(&once).unwrap();
        let diff = once
            .entries()
            .iter()
            .zip(twice.entries())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        prop_assert!(diff <= 1e-9);
    }

    #[test]
    fn sweep_is_conjugation_invariant(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let x = random_hermitian_with(n, &mut rng);
        let g = haar_unitary_with(n, &mut rng);
        let a = sweep(&x).unwrap();
        let b = sweep(&coadjoint(&g, &x).unwrap()).unwrap();
        let diff = a
            .entries()
            .iter()
            .zip(b.entries())
            .map(|(p, q)| (p - q).norm())
            .fold(0.0, f64::max);
        prop_assert!(diff <= 1e-9);
    }

    #[test]
    fn negation_reverses_spectrum(n in 1usize..=8, seed in any::<u64>()) {
        let x = random_hermitian_with(n, &mut seeded_rng(seed));
        let s = eigenvalues_desc(&x).unwrap();
        let t = eigenvalues_desc(&-&x).unwrap();
        let flipped: Vec<f64> = s.values().iter().rev().map(|v| -v).collect();
        prop_assert!(max_abs_diff(&flipped, t.values()) <= 1e-10);
    }

    #[test]
    fn trace_is_preserved(n in 1usize..=8, seed in any::<u64>(), scale in 0.01f64..100.0) {
        let x = random_hermitian_with(n, &mut seeded_rng(seed));
        let x = HermitianMatrix::from_flat(n, x.entries().iter().map(|z| z * scale).collect()).unwrap();
        let sum: f64 = eigenvalues_desc(&x).unwrap().values().iter().sum();
        prop_assert!((sum - x.trace()).abs() <= 1e-9 * x.frobenius_norm().max(1.0));
    }

    #[test]
    fn coadjoint_preserves_spectrum(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let x = random_hermitian_with(n, &mut rng);
        let g = haar_unitary_with(n, &mut rng);
        let a = eigenvalues_desc(&x).unwrap();
        let b = eigenvalues_desc(&coadjoint(&g, &x).unwrap()).unwrap();
        prop_assert!(max_abs_diff(a.values(), b.values()) <= 1e-9);
    }

    #[test]
    fn spectra_are_sorted(n in 1usize..=8, seed in any::<u64>()) {
        let x = random_hermitian_with(n, &mut seeded_rng(seed));
        let s = eigenvalues_desc(&x).unwrap();
        prop_assert!(s.values().windows(2).all(|w| w[0] >= w[1]));
    }
}
