#![allow(dead_code)]

use gcq_core::gc::CotangentPoint;
use gcq_core::linalg::{haar_unitary_with, random_hermitian_with, SeededRng};

pub fn random_point(n: usize, rng: &mut SeededRng) -> CotangentPoint {
    let g = haar_unitary_with(n, rng);
    let xi = random_hermitian_with(n, rng);
    CotangentPoint::new(g, xi).unwrap()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
