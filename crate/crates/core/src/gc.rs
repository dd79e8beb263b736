//! The Gelfand–Cetlin map on Hermitian matrices and the double
//! Gelfand–Cetlin system on `T*U(n) ≅ U(n) × 𝔲(n)*`.
//!
//! A GC vector lists the sorted spectra of the bottom-right corners,
//! largest corner first:
//! `(λ_01, …, λ_0n, λ_11, …, λ_1(n−1), …, λ_(n−1)1)`.
//! That flattening is also the serialized order.

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{coadjoint, corner, eigenvalues_desc, HermitianMatrix, UnitaryMatrix};

/// `b = n(n+1)/2`, the length of a GC vector.
pub const fn gc_len(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Offset of row `j` inside a flattened GC vector of size `n`.
pub const fn row_offset(n: usize, j: usize) -> usize {
    // Σ_{i<j} (n − i)
    j * n - j * j.saturating_sub(1) / 2
}

#[derive(Debug, Clone, PartialEq)]
pub struct GCVector {
    n: usize,
    values: Vec<f64>,
}

impl GCVector {
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n must be positive"));
        }
        if values.len() != gc_len(n) {
            return Err(Error::domain(format!(
                "GC vector for n = {n} has {} entries, got {}",
                gc_len(n),
                values.len()
            )));
        }
        Ok(GCVector { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(λ_j1, …, λ_j(n−j))`.
    pub fn row(&self, j: usize) -> &[f64] {
        let start = row_offset(self.n, j);
        &self.values[start..start + (self.n - j)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        (0..self.n).map(move |j| self.row(j))
    }

    /// Largest amount by which a row-monotonicity or interlacing inequality
    /// fails; `0.0` when all hold.
    pub fn interlacing_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for j in 0..self.n {
            let row = self.row(j);
            for w in row.windows(2) {
                worst = worst.max(w[1] - w[0]);
            }
            if j + 1 < self.n {
                let below = self.row(j + 1);
                for (k, &y) in below.iter().enumerate() {
                    worst = worst.max(y - row[k]);
                    worst = worst.max(row[k + 1] - y);
                }
            }
        }
        worst
    }

    /// Strict row chains and strict down-column chains
    /// `λ_0k > λ_1k > ⋯ > λ_(n−k)k`, each gap larger than `tol`.
    pub fn is_strongly_regular(&self, tol: f64) -> bool {
        let rows_strict = self
            .rows()
            .all(|row| row.windows(2).all(|w| w[0] - w[1] > tol));
        let columns_strict = (0..self.n).all(|k| {
            (0..self.n - k)
                .map(|j| self.row(j)[k])
                .collect::<Vec<_>>()
                .windows(2)
                .all(|w| w[0] - w[1] > tol)
        });
        rows_strict && columns_strict
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("GC vectors always serialize")
    }
}

impl Serialize for GCVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.values.len()))?;
        for v in &self.values {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

/// A point `(g, ξ)` of `T*U(n)` in the left trivialization.
#[derive(Debug, Clone, PartialEq)]
pub struct CotangentPoint {
    g: UnitaryMatrix,
    xi: HermitianMatrix,
}

impl CotangentPoint {
    pub fn new(g: UnitaryMatrix, xi: HermitianMatrix) -> Result<Self> {
        if g.n() != xi.n() {
            return Err(Error::domain(format!(
                "g is {0}×{0} but ξ is {1}×{1}",
                g.n(),
                xi.n()
            )));
        }
        Ok(CotangentPoint { g, xi })
    }

    pub fn n(&self) -> usize {
        self.xi.n()
    }

    pub fn g(&self) -> &UnitaryMatrix {
        &self.g
    }

    pub fn xi(&self) -> &HermitianMatrix {
        &self.xi
    }
}

/// Image of a cotangent point under `(λ, λ) ∘ φ`.
#[derive(Debug, Clone, PartialEq)]
pub struct DoubleGCVector {
    pub first: GCVector,
    pub second: GCVector,
}

impl DoubleGCVector {
    pub fn new(first: GCVector, second: GCVector) -> Result<Self> {
        if first.n() != second.n() {
            return Err(Error::domain("halves of a double GC vector differ in n"));
        }
        Ok(DoubleGCVector { first, second })
    }

    pub fn n(&self) -> usize {
        self.first.n()
    }

    /// Length-`2b` vector, second half appended to the first.
    pub fn flatten(&self) -> Vec<f64> {
        let mut out = self.first.values().to_vec();
        out.extend_from_slice(self.second.values());
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("GC vectors always serialize")
    }
}

impl Serialize for DoubleGCVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let flat = self.flatten();
        let mut seq = serializer.serialize_seq(Some(flat.len()))?;
        for v in &flat {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

/// `row(j)` = sorted spectrum of the bottom-right `(n−j) × (n−j)` corner.
pub fn gc_map(xi: &HermitianMatrix) -> Result<GCVector> {
    let n = xi.n();
    let mut values = Vec::with_capacity(gc_len(n));
    for j in 0..n {
        let c = corner(xi, j)?;
        values.extend(eigenvalues_desc(&c)?.into_vec());
    }
    GCVector::new(n, values)
}

/// Default gap tolerance for strong regularity, `1e−9 · max(1, ‖ξ‖_F)`.
pub fn default_sreg_tol(xi: &HermitianMatrix) -> f64 {
    1e-9 * xi.frobenius_norm().max(1.0)
}

pub fn is_strongly_regular(xi: &HermitianMatrix, tol: f64) -> Result<bool> {
    Ok(gc_map(xi)?.is_strongly_regular(tol))
}

/// `(g, ξ) ↦ (g ξ g†, −ξ)`.
pub fn moment_map(p: &CotangentPoint) -> Result<(HermitianMatrix, HermitianMatrix)> {
    Ok((coadjoint(&p.g, &p.xi)?, -&p.xi))
}

pub fn double_gc(p: &CotangentPoint) -> Result<DoubleGCVector> {
    let (phi1, phi2) = moment_map(p)?;
    DoubleGCVector::new(gc_map(&phi1)?, gc_map(&phi2)?)
}

/// Membership in the annihilator of the diagonal circle-torus directions:
/// `second.row(0)[k] + first.row(0)[n−1−k] ≈ 0` for every `k`.
pub fn in_b(v: &DoubleGCVector, tol: f64) -> bool {
    let n = v.n();
    let top = v.first.row(0);
    let dual_top = v.second.row(0);
    (0..n).all(|k| (dual_top[k] + top[n - 1 - k]).abs() <= tol)
}

/// Both moment-map components strongly regular at gap tolerance `tol`.
pub fn is_sreg_point(p: &CotangentPoint, tol: f64) -> Result<bool> {
    let v = double_gc(p)?;
    Ok(v.first.is_strongly_regular(tol) && v.second.is_strongly_regular(tol))
}
