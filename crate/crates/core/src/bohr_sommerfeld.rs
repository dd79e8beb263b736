//! Bohr–Sommerfeld points of the double Gelfand–Cetlin system.
//!
//! A vector `(α_1, …, α_2b)` of integers is a Bohr–Sommerfeld point when
//! its first `n` entries form a dominant weight `α`, the entries
//! `b+1 … b+n` are `α* = (−α_n, …, −α_1)`, and the two sub-top blocks are
//! integral points of `GC_α` and `GC_{α*}`. The strict variant asks for a
//! strictly decreasing `α` and interior points; the closure variant allows
//! equalities throughout.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gc::{gc_len, DoubleGCVector};
use crate::polytope::{
    count_integral_points, count_interior_points, dominant_weights,
    enumerate_integral_points_capped, enumerate_interior_points_capped, interlaces, DominantWeight,
    GCPattern, DEFAULT_CAP,
};

/// Distance to the nearest integer accepted when rounding a float GC vector.
pub const LATTICE_ROUNDING_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BSVariant {
    /// Image of the strongly regular locus: strict weight, interior patterns.
    StrictRegular,
    /// Image of all of `T*U(n)`: closed polytopes.
    Closure,
}

impl BSVariant {
    fn strict(self) -> bool {
        matches!(self, BSVariant::StrictRegular)
    }
}

impl FromStr for BSVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(BSVariant::StrictRegular),
            "closure" => Ok(BSVariant::Closure),
            other => Err(Error::Parse(format!(
                "unknown variant {other:?} (expected strict or closure)"
            ))),
        }
    }
}

impl fmt::Display for BSVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BSVariant::StrictRegular => "strict",
            BSVariant::Closure => "closure",
        })
    }
}

/// Recovers `n` from a vector length `2b = n(n+1)`.
pub fn infer_n(len: usize) -> Result<usize> {
    let mut n = 1;
    while n * (n + 1) < len {
        n += 1;
    }
    if len == 0 || n * (n + 1) != len {
        return Err(Error::domain(format!(
            "length {len} is not of the form n(n+1)"
        )));
    }
    Ok(n)
}

/// Does `lower` (sub-top rows, flattened) complete `top` to a pattern?
fn completes(top: &[i64], lower: &[i64], strict: bool) -> bool {
    let mut upper = top;
    let mut rest = lower;
    for len in (1..top.len()).rev() {
        let (row, tail) = rest.split_at(len);
        if !interlaces(upper, row, strict) {
            return false;
        }
        upper = row;
        rest = tail;
    }
    true
}

pub fn is_bs_point(v: &[i64], variant: BSVariant) -> Result<bool> {
    let n = infer_n(v.len())?;
    let b = gc_len(n);
    let strict = variant.strict();

    let weight = &v[..n];
    let monotone = weight
        .windows(2)
        .all(|w| if strict { w[0] > w[1] } else { w[0] >= w[1] });
    if !monotone {
        return Ok(false);
    }
    if (0..n).any(|j| v[b + j] != -v[n - 1 - j]) {
        return Ok(false);
    }
    Ok(completes(weight, &v[n..b], strict) && completes(&v[b..b + n], &v[b + n..], strict))
}

/// A validated (closure-variant) Bohr–Sommerfeld point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BSPoint {
    n: usize,
    values: Vec<i64>,
}

impl BSPoint {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let n = infer_n(values.len())?;
        if !is_bs_point(&values, BSVariant::Closure)? {
            return Err(Error::domain(format!(
                "{values:?} is not a Bohr–Sommerfeld point"
            )));
        }
        Ok(BSPoint { n, values })
    }

    /// Assembles `(α, pattern over α, pattern over α*)`.
    pub fn from_triple(
        weight: &DominantWeight,
        pattern: &GCPattern,
        dual_pattern: &GCPattern,
    ) -> Result<Self> {
        if &pattern.weight() != weight {
            return Err(Error::domain("pattern top row differs from the weight"));
        }
        if dual_pattern.weight() != weight.dual() {
            return Err(Error::domain("dual pattern top row differs from α*"));
        }
        let mut values = pattern.flatten();
        values.extend(dual_pattern.flatten());
        Ok(BSPoint {
            n: weight.n(),
            values,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    fn b(&self) -> usize {
        gc_len(self.n)
    }

    pub fn weight(&self) -> DominantWeight {
        DominantWeight::new(self.values[..self.n].to_vec()).expect("validated on construction")
    }

    pub fn dual_weight(&self) -> DominantWeight {
        let b = self.b();
        DominantWeight::new(self.values[b..b + self.n].to_vec()).expect("validated on construction")
    }

    pub fn pattern(&self) -> &[i64] {
        &self.values[self.n..self.b()]
    }

    pub fn dual_pattern(&self) -> &[i64] {
        &self.values[self.b() + self.n..]
    }

    /// `(α, P, α*, Q) ↦ (α*, Q, α, P)`, an involution of each BS set.
    pub fn dual(&self) -> BSPoint {
        let b = self.b();
        let mut values = self.values[b..].to_vec();
        values.extend_from_slice(&self.values[..b]);
        BSPoint { n: self.n, values }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.values).expect("integer arrays always serialize")
    }
}

/// Splits a point into its weight and its two patterns.
pub fn to_triple(p: &BSPoint) -> Result<(DominantWeight, GCPattern, GCPattern)> {
    let weight = p.weight();
    let pattern = GCPattern::from_parts(&weight, p.pattern())?;
    let dual = GCPattern::from_parts(&p.dual_weight(), p.dual_pattern())?;
    Ok((weight, pattern, dual))
}

/// Rounds each entry to the nearest integer when it is within `tol` of
/// one; otherwise a domain error.
pub fn round_to_lattice(v: &DoubleGCVector, tol: f64) -> Result<Vec<i64>> {
    v.flatten()
        .into_iter()
        .map(|x| {
            let r = x.round();
            if (x - r).abs() <= tol && r.abs() < i64::MAX as f64 {
                Ok(r as i64)
            } else {
                Err(Error::domain(format!(
                    "{x} is not within {tol:e} of an integer"
                )))
            }
        })
        .collect()
}

fn weights_for(n: usize, bound: i64, variant: BSVariant) -> Vec<DominantWeight> {
    dominant_weights(n, bound, variant.strict())
}

fn count_for(alpha: &DominantWeight, variant: BSVariant) -> BigUint {
    match variant {
        BSVariant::StrictRegular => count_interior_points(alpha),
        BSVariant::Closure => count_integral_points(alpha),
    }
}

fn check_args(n: usize, bound: i64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    if bound < 0 {
        return Err(Error::domain("weight bound must be non-negative"));
    }
    Ok(())
}

/// Number of BS points whose weight entries satisfy `|α_i| ≤ bound`.
pub fn count_bs_points(n: usize, bound: i64, variant: BSVariant) -> Result<BigUint> {
    check_args(n, bound)?;
    Ok(weights_for(n, bound, variant)
        .par_iter()
        .map(|alpha| count_for(alpha, variant) * count_for(&alpha.dual(), variant))
        .reduce(BigUint::zero, |a, b| a + b))
}

pub fn enumerate_bs_points(n: usize, bound: i64, variant: BSVariant) -> Result<Vec<BSPoint>> {
    enumerate_bs_points_capped(n, bound, variant, DEFAULT_CAP)
}

/// All BS points in the weight box: weights lexicographically descending,
/// then patterns, then dual patterns, each lexicographic.
pub fn enumerate_bs_points_capped(
    n: usize,
    bound: i64,
    variant: BSVariant,
    cap: u64,
) -> Result<Vec<BSPoint>> {
    let total = count_bs_points(n, bound, variant)?;
    if total.to_u64().is_none_or(|t| t > cap) {
        return Err(Error::Capacity {
            count: total.to_string(),
            cap,
        });
    }
    let enumerate = |alpha: &DominantWeight| match variant {
        BSVariant::StrictRegular => enumerate_interior_points_capped(alpha, cap),
        BSVariant::Closure => enumerate_integral_points_capped(alpha, cap),
    };
    let blocks = weights_for(n, bound, variant)
        .par_iter()
        .map(|alpha| -> Result<Vec<BSPoint>> {
            let pats = enumerate(alpha)?;
            let duals = enumerate(&alpha.dual())?;
            let mut out = Vec::with_capacity(pats.len() * duals.len());
            for p in &pats {
                for q in &duals {
                    out.push(BSPoint::from_triple(alpha, p, q)?);
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(blocks.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use BSVariant::{Closure, StrictRegular};

    #[test]
    fn infer_sizes() {
        assert_eq!(infer_n(2).unwrap(), 1);
        assert_eq!(infer_n(6).unwrap(), 2);
        assert_eq!(infer_n(12).unwrap(), 3);
        for bad in [0, 1, 3, 5, 7, 11] {
            assert!(matches!(infer_n(bad), Err(Error::Domain(_))));
        }
        assert!(is_bs_point(&[1, 2, 3], Closure).is_err());
    }

    #[test]
    fn u1_points() {
        for k in -20..=20 {
            assert!(is_bs_point(&[k, -k], Closure).unwrap());
            assert!(is_bs_point(&[k, -k], StrictRegular).unwrap());
            assert!(!is_bs_point(&[k, -k + 1], Closure).unwrap());
        }
    }

    #[test]
    fn n2_examples() {
        let v = [1, 0, 0, 0, -1, 0];
        assert!(is_bs_point(&v, Closure).unwrap());
        assert!(!is_bs_point(&v, StrictRegular).unwrap());

        // dual pattern 1 is outside (−2, 0)
        let v = [2, 0, 1, 0, -2, 1];
        assert!(!is_bs_point(&v, Closure).unwrap());
        assert!(!is_bs_point(&v, StrictRegular).unwrap());
        let v = [2, 0, 1, 0, -2, -1];
        assert!(is_bs_point(&v, Closure).unwrap());
        assert!(is_bs_point(&v, StrictRegular).unwrap());

        assert!(!is_bs_point(&[0, 1, 0, -1, 0, 0], Closure).unwrap());
    }

    #[test]
    fn pairing_is_required() {
        assert!(!is_bs_point(&[1, 0, 0, 0, 1, 0], Closure).unwrap());
    }

    #[test]
    fn enumerate_u1() {
        let pts = enumerate_bs_points(1, 2, Closure).unwrap();
        let got: Vec<_> = pts.iter().map(|p| p.values().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![2, -2],
                vec![1, -1],
                vec![0, 0],
                vec![-1, 1],
                vec![-2, 2]
            ]
        );
        assert_eq!(enumerate_bs_points(1, 2, StrictRegular).unwrap(), pts);
    }

    #[test]
    fn n2_counts() {
        assert_eq!(enumerate_bs_points(2, 1, Closure).unwrap().len(), 20);
        assert_eq!(count_bs_points(2, 1, Closure).unwrap(), 20u32.into());
        assert_eq!(count_bs_points(2, 0, Closure).unwrap(), 1u32.into());
        // Brute-force fixture: only (1, −1, 0, 1, −1, 0).
        let strict = enumerate_bs_points(2, 1, StrictRegular).unwrap();
        assert_eq!(strict.len(), 1);
        assert_eq!(strict[0].values(), &[1, -1, 0, 1, -1, 0]);
        assert_eq!(count_bs_points(2, 1, StrictRegular).unwrap(), 1u32.into());
    }

    #[test]
    fn u1_count_formula() {
        for bound in 0..=12 {
            let expected = BigUint::from((2 * bound + 1) as u64);
            assert_eq!(count_bs_points(1, bound, Closure).unwrap(), expected);
            assert_eq!(count_bs_points(1, bound, StrictRegular).unwrap(), expected);
        }
    }

    #[test]
    fn triples() {
        let p = BSPoint::new(vec![3, -3]).unwrap();
        let (w, a, b) = to_triple(&p).unwrap();
        assert_eq!(w.entries(), &[3]);
        assert_eq!(a.rows(), &[vec![3]]);
        assert_eq!(b.rows(), &[vec![-3]]);

        let p = BSPoint::new(vec![1, 0, 0, 0, -1, 0]).unwrap();
        let (w, a, b) = to_triple(&p).unwrap();
        assert_eq!(w.entries(), &[1, 0]);
        assert_eq!(a.rows(), &[vec![1, 0], vec![0]]);
        assert_eq!(b.rows(), &[vec![0, -1], vec![0]]);
        assert_eq!(BSPoint::from_triple(&w, &a, &b).unwrap(), p);

        assert!(matches!(
            BSPoint::new(vec![1, 0, 2, 0, -1, 0]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn triple_round_trip_on_enumeration() {
        for p in enumerate_bs_points(2, 1, Closure).unwrap() {
            let (w, a, b) = to_triple(&p).unwrap();
            assert_eq!(BSPoint::from_triple(&w, &a, &b).unwrap(), p);
        }
    }

    #[test]
    fn from_triple_checks_weights() {
        let w = DominantWeight::new(vec![1, 0]).unwrap();
        let a = GCPattern::new(vec![vec![1, 0], vec![1]]).unwrap();
        assert!(BSPoint::from_triple(&w, &a, &a).is_err());
    }

    #[test]
    fn capacity() {
        let err = enumerate_bs_points_capped(2, 1, Closure, 19).unwrap_err();
        assert!(matches!(err, Error::Capacity { cap: 19, .. }));
        assert!(enumerate_bs_points(0, 1, Closure).is_err());
        assert!(count_bs_points(2, -1, Closure).is_err());
    }

    #[test]
    fn rounding_adapter() {
        use crate::gc::GCVector;
        let first = GCVector::new(1, vec![3.0 + 1e-9]).unwrap();
        let second = GCVector::new(1, vec![-3.0 - 2e-7]).unwrap();
        let v = DoubleGCVector::new(first, second).unwrap();
        assert_eq!(
            round_to_lattice(&v, LATTICE_ROUNDING_TOL).unwrap(),
            vec![3, -3]
        );
        let off = DoubleGCVector::new(
            GCVector::new(1, vec![0.5]).unwrap(),
            GCVector::new(1, vec![-0.5]).unwrap(),
        )
        .unwrap();
        assert!(round_to_lattice(&off, LATTICE_ROUNDING_TOL).is_err());
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("strict".parse::<BSVariant>().unwrap(), StrictRegular);
        assert_eq!("closure".parse::<BSVariant>().unwrap(), Closure);
        assert!("open".parse::<BSVariant>().is_err());
        assert_eq!(Closure.to_string(), "closure");
    }
}
