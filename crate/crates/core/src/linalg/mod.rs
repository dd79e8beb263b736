//! Dense complex linear algebra at the sizes this crate cares about (n ≤ 64).
//!
//! Points of 𝔲(n)* are stored as Hermitian matrices, group elements as
//! unitary matrices. Everything here is an immutable value type.

mod haar;
mod jacobi;
mod json;

use std::ops::Neg;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use haar::{haar_unitary, haar_unitary_with, random_hermitian_with, seeded_rng, SeededRng};
pub use json::MatrixDoc;

/// Maximum entrywise deviation from Hermitian symmetry accepted on input,
/// scaled by `max(1, max |entry|)`.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Maximum entrywise deviation of `U†U` from the identity.
pub const UNITARY_TOL: f64 = 1e-10;

/// A Hermitian `n × n` matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

/// A unitary `n × n` matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

/// Real eigenvalues in non-increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    /// Sorts `values` into non-increasing order.
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_square(n: usize, len: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("matrix dimension must be positive"));
    }
    if len != n * n {
        return Err(Error::domain(format!(
            "expected {} entries for a {n}×{n} matrix, got {len}",
            n * n
        )));
    }
    Ok(())
}

fn check_finite(entries: &[Complex64]) -> Result<()> {
    if entries.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::domain("matrix entries must be finite"))
    }
}

fn flatten_rows(n: usize, rows: Vec<Vec<Complex64>>) -> Result<Vec<Complex64>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::domain(format!(
            "entries do not form a {n}×{n} array"
        )));
    }
    Ok(rows.into_iter().flatten().collect())
}

pub(crate) fn matmul(n: usize, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

pub(crate) fn adjoint(n: usize, a: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j].conj();
        }
    }
    out
}

impl HermitianMatrix {
    /// Builds a Hermitian matrix from rows, validating symmetry and then
    /// replacing the entries by `(X + X†)/2`.
    pub fn new(n: usize, rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let entries = flatten_rows(n, rows)?;
        Self::from_flat(n, entries)
    }

    /// Row-major variant of [`HermitianMatrix::new`].
    pub fn from_flat(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        check_square(n, entries.len())?;
        check_finite(&entries)?;
        let scale = entries.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                let d = (entries[i * n + j] - entries[j * n + i].conj()).norm();
                worst = worst.max(d);
            }
        }
        if worst > HERMITIAN_TOL * scale {
            return Err(Error::domain(format!(
                "matrix is not Hermitian (max deviation {worst:e})"
            )));
        }
        Ok(Self::symmetrized(n, entries))
    }

    /// Real symmetric input given as rows of reals.
    pub fn from_real(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::new(n, rows)
    }

    /// `diag(d_1, …, d_n)`.
    pub fn diag(d: &[f64]) -> Self {
        let n = d.len();
        assert!(n > 0, "diag of an empty list");
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for (i, &x) in d.iter().enumerate() {
            assert!(x.is_finite(), "diag entries must be finite");
            entries[i * n + i] = Complex64::new(x, 0.0);
        }
        HermitianMatrix { n, entries }
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "matrix dimension must be positive");
        HermitianMatrix {
            n,
            entries: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    /// Forces exact Hermitian symmetry on already-validated data.
    pub(crate) fn symmetrized(n: usize, mut entries: Vec<Complex64>) -> Self {
        for i in 0..n {
            entries[i * n + i].im = 0.0;
            for j in (i + 1)..n {
                let avg = (entries[i * n + j] + entries[j * n + i].conj()) * 0.5;
                entries[i * n + j] = avg;
                entries[j * n + i] = avg.conj();
            }
        }
        HermitianMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.entries[i * self.n + i].re).sum()
    }

    /// Bottom-right `(n−j) × (n−j)` principal submatrix.
    pub fn corner(&self, j: usize) -> Result<Self> {
        corner(self, j)
    }

    pub fn eigenvalues_desc(&self) -> Result<Spectrum> {
        eigenvalues_desc(self)
    }
}

impl Neg for &HermitianMatrix {
    type Output = HermitianMatrix;

    fn neg(self) -> HermitianMatrix {
        HermitianMatrix {
            n: self.n,
            entries: self.entries.iter().map(|z| -z).collect(),
        }
    }
}

impl Neg for HermitianMatrix {
    type Output = HermitianMatrix;

    fn neg(self) -> HermitianMatrix {
        -&self
    }
}

impl UnitaryMatrix {
    /// Validates `‖U†U − I‖_max ≤ 1e−10`.
    pub fn new(n: usize, rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let entries = flatten_rows(n, rows)?;
        Self::from_flat(n, entries)
    }

    pub fn from_flat(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        check_square(n, entries.len())?;
        check_finite(&entries)?;
        let gram = matmul(n, &adjoint(n, &entries), &entries);
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((gram[i * n + j] - target).norm());
            }
        }
        if worst > UNITARY_TOL {
            return Err(Error::domain(format!(
                "matrix is not unitary (‖U†U − I‖_max = {worst:e})"
            )));
        }
        Ok(UnitaryMatrix { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "matrix dimension must be positive");
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            entries[i * n + i] = Complex64::new(1.0, 0.0);
        }
        UnitaryMatrix { n, entries }
    }

    /// Permutation matrix with `P e_j = e_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        check_square(n, n * n)?;
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::domain("not a permutation"));
            }
            seen[p] = true;
        }
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for (j, &i) in perm.iter().enumerate() {
            entries[i * n + j] = Complex64::new(1.0, 0.0);
        }
        Ok(UnitaryMatrix { n, entries })
    }

    /// `diag(e^{iθ_1}, …, e^{iθ_n})`.
    pub fn phases(thetas: &[f64]) -> Self {
        let n = thetas.len();
        assert!(n > 0, "matrix dimension must be positive");
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for (i, &t) in thetas.iter().enumerate() {
            entries[i * n + i] = Complex64::from_polar(1.0, t);
        }
        UnitaryMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn adjoint(&self) -> UnitaryMatrix {
        UnitaryMatrix {
            n: self.n,
            entries: adjoint(self.n, &self.entries),
        }
    }

    /// Group product `self · other`.
    pub fn mul(&self, other: &UnitaryMatrix) -> Result<UnitaryMatrix> {
        if self.n != other.n {
            return Err(Error::domain("dimension mismatch in product"));
        }
        Ok(UnitaryMatrix {
            n: self.n,
            entries: matmul(self.n, &self.entries, &other.entries),
        })
    }
}

/// Bottom-right `(n−j) × (n−j)` principal submatrix of `xi`, for `0 ≤ j ≤ n−1`.
pub fn corner(xi: &HermitianMatrix, j: usize) -> Result<HermitianMatrix> {
    let n = xi.n;
    if j >= n {
        return Err(Error::domain(format!(
            "corner index {j} out of range for n = {n}"
        )));
    }
    let m = n - j;
    let mut entries = Vec::with_capacity(m * m);
    for r in j..n {
        entries.extend_from_slice(&xi.entries[r * n + j..(r + 1) * n]);
    }
    Ok(HermitianMatrix { n: m, entries })
}

/// All eigenvalues of `xi`, sorted non-increasing.
///
/// Sizes 1 and 2 use closed forms. Larger matrices go through cyclic
/// complex Jacobi rotations.
pub fn eigenvalues_desc(xi: &HermitianMatrix) -> Result<Spectrum> {
    let n = xi.n;
    let values = match n {
        1 => vec![xi.entries[0].re],
        2 => {
            let a = xi.entries[0].re;
            let d = xi.entries[3].re;
            let b = xi.entries[1].norm();
            let mid = 0.5 * (a + d);
            let rad = (0.5 * (a - d)).hypot(b);
            vec![mid + rad, mid - rad]
        }
        _ => jacobi::eigenvalues(n, &xi.entries)?,
    };
    Ok(Spectrum::new(values))
}

/// The sweeping map: the diagonal matrix of the sorted spectrum, i.e. the
/// unique point of the orbit through `xi` in the closed positive chamber.
pub fn sweep(xi: &HermitianMatrix) -> Result<HermitianMatrix> {
    let spectrum = eigenvalues_desc(xi)?;
    Ok(HermitianMatrix::diag(spectrum.values()))
}

/// Coadjoint action `g ξ g†`.
pub fn coadjoint(g: &UnitaryMatrix, xi: &HermitianMatrix) -> Result<HermitianMatrix> {
    if g.n != xi.n {
        return Err(Error::domain(format!(
            "dimension mismatch: g is {}×{}, ξ is {}×{}",
            g.n, g.n, xi.n, xi.n
        )));
    }
    let n = g.n;
    let left = matmul(n, &g.entries, &xi.entries);
    let out = matmul(n, &left, &adjoint(n, &g.entries));
    Ok(HermitianMatrix::symmetrized(n, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn corner_of_diagonal() {
        let x = HermitianMatrix::diag(&[3.0, 2.0, 1.0]);
        assert_eq!(corner(&x, 0).unwrap(), x);
        assert_eq!(corner(&x, 1).unwrap(), HermitianMatrix::diag(&[2.0, 1.0]));
        assert_eq!(corner(&x, 2).unwrap(), HermitianMatrix::diag(&[1.0]));
        assert!(matches!(corner(&x, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn corner_is_bit_equal_slice() {
        let mut rng = seeded_rng(11);
        let x = random_hermitian_with(4, &mut rng);
        let c2 = corner(&x, 2).unwrap();
        assert_eq!(c2.n(), 2);
        for r in 0..2 {
            for s in 0..2 {
                assert_eq!(c2.get(r, s), x.get(r + 2, s + 2));
            }
        }
    }

    #[test]
    fn rejects_non_hermitian_and_non_finite() {
        let bad = vec![
            vec![c(1.0, 0.0), c(2.0, 0.0)],
            vec![c(3.0, 0.0), c(1.0, 0.0)],
        ];
        assert!(HermitianMatrix::new(2, bad).is_err());
        let nan = vec![vec![c(f64::NAN, 0.0)]];
        assert!(HermitianMatrix::new(1, nan).is_err());
        let ragged = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0)]];
        assert!(HermitianMatrix::new(2, ragged).is_err());
    }

    #[test]
    fn construction_symmetrizes() {
        let rows = vec![
            vec![c(1.0, 1e-14), c(2.0, 1.0)],
            vec![c(2.0, -1.0 + 1e-13), c(0.5, 0.0)],
        ];
        let x = HermitianMatrix::new(2, rows).unwrap();
        assert_eq!(x.get(0, 0).im, 0.0);
        assert_eq!(x.get(0, 1), x.get(1, 0).conj());
    }

    #[test]
    fn eigenvalues_closed_forms() {
        let d = HermitianMatrix::diag(&[1.0, 4.0, 2.0]);
        assert_eq!(eigenvalues_desc(&d).unwrap().values(), &[4.0, 2.0, 1.0]);
        let swap = HermitianMatrix::from_real(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(eigenvalues_desc(&swap).unwrap().values(), &[1.0, -1.0]);
        let x = HermitianMatrix::new(1, vec![vec![c(-2.5, 0.0)]]).unwrap();
        assert_eq!(eigenvalues_desc(&x).unwrap().values(), &[-2.5]);
    }

    #[test]
    fn sweep_examples() {
        let x = HermitianMatrix::diag(&[1.0, 3.0]);
        assert_eq!(sweep(&x).unwrap(), HermitianMatrix::diag(&[3.0, 1.0]));
        let y = HermitianMatrix::from_real(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert_eq!(sweep(&y).unwrap(), HermitianMatrix::diag(&[3.0, 1.0]));
    }

    #[test]
    fn coadjoint_identity_and_swap() {
        let mut rng = seeded_rng(3);
        let x = random_hermitian_with(3, &mut rng);
        assert_eq!(coadjoint(&UnitaryMatrix::identity(3), &x).unwrap(), x);

        let p = UnitaryMatrix::permutation(&[1, 0]).unwrap();
        let d = HermitianMatrix::diag(&[7.0, -2.0]);
        assert_eq!(
            coadjoint(&p, &d).unwrap(),
            HermitianMatrix::diag(&[-2.0, 7.0])
        );

        let g = haar_unitary(2, 0);
        assert!(matches!(coadjoint(&g, &x), Err(Error::Domain(_))));
    }

    #[test]
    fn unitary_validation() {
        let not_unitary = vec![vec![c(2.0, 0.0)]];
        assert!(UnitaryMatrix::new(1, not_unitary).is_err());
        assert!(UnitaryMatrix::permutation(&[0, 0]).is_err());
        let ph = UnitaryMatrix::phases(&[0.3, -1.2]);
        assert!(UnitaryMatrix::from_flat(2, ph.entries().to_vec()).is_ok());
    }

    #[test]
    fn negation_flips_spectrum() {
        let mut rng = seeded_rng(5);
        let x = random_hermitian_with(5, &mut rng);
        let s = eigenvalues_desc(&x).unwrap();
        let t = eigenvalues_desc(&-&x).unwrap();
        for (a, b) in s.values().iter().zip(t.values().iter().rev()) {
            assert!((a + b).abs() <= 1e-10);
        }
    }
}
