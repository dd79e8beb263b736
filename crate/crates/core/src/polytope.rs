//! Gelfand–Cetlin polytopes `GC_α` and their lattice points.
//!
//! A point of `GC_α` is the list of sub-top rows of a triangular array whose
//! top row is `α` and whose consecutive rows interlace:
//! `rows[j][k] ≥ rows[j+1][k] ≥ rows[j][k+1]`. The interior is where every
//! one of those inequalities is strict.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on materialized enumerations.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// A dominant integral weight of U(n): a non-increasing integer vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(alpha: Vec<i64>) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::domain("weight must have at least one entry"));
        }
        if alpha.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "weight {alpha:?} is not non-increasing"
            )));
        }
        Ok(DominantWeight(alpha))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Strictly decreasing entries.
    pub fn is_regular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// `α* = (−α_n, …, −α_1)`, the highest weight of the dual module.
    pub fn dual(&self) -> DominantWeight {
        DominantWeight(self.0.iter().rev().map(|a| -a).collect())
    }

    /// `α + c·(1, …, 1)`.
    pub fn shifted(&self, c: i64) -> DominantWeight {
        DominantWeight(self.0.iter().map(|a| a + c).collect())
    }
}

impl std::str::FromStr for DominantWeight {
    type Err = Error;

    /// Parses `"a1,a2,…"`.
    fn from_str(s: &str) -> Result<Self> {
        let alpha = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad weight entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DominantWeight::new(alpha)
    }
}

pub fn dual_weight(alpha: &DominantWeight) -> DominantWeight {
    alpha.dual()
}

/// An integral Gelfand–Cetlin pattern: rows of lengths `n, n−1, …, 1`,
/// interlacing, with row 0 the weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GCPattern {
    rows: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct PatternDoc {
    alpha: Vec<i64>,
    rows: Vec<Vec<i64>>,
}

impl GCPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::domain("pattern must have at least one row"));
        }
        for (j, row) in rows.iter().enumerate() {
            if row.len() != n - j {
                return Err(Error::domain(format!(
                    "row {j} has length {}, expected {}",
                    row.len(),
                    n - j
                )));
            }
        }
        DominantWeight::new(rows[0].clone())?;
        if !rows.windows(2).all(|w| interlaces(&w[0], &w[1], false)) {
            return Err(Error::domain("pattern rows do not interlace"));
        }
        Ok(GCPattern { rows })
    }

    /// Top row plus the flattened sub-top rows.
    pub fn from_parts(alpha: &DominantWeight, lower: &[i64]) -> Result<Self> {
        let n = alpha.n();
        if lower.len() != n * (n - 1) / 2 {
            return Err(Error::domain(format!(
                "expected {} sub-top entries for n = {n}, got {}",
                n * (n - 1) / 2,
                lower.len()
            )));
        }
        let mut rows = vec![alpha.entries().to_vec()];
        let mut rest = lower;
        for len in (1..n).rev() {
            let (head, tail) = rest.split_at(len);
            rows.push(head.to_vec());
            rest = tail;
        }
        GCPattern::new(rows)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn weight(&self) -> DominantWeight {
        DominantWeight(self.rows[0].clone())
    }

    /// Sub-top rows flattened row by row: the point of `GC_α`.
    pub fn lower(&self) -> Vec<i64> {
        self.rows[1..].iter().flatten().copied().collect()
    }

    /// All rows flattened, top row first.
    pub fn flatten(&self) -> Vec<i64> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `{"alpha": [...], "rows": [[...], ...]}` with `rows[0] = alpha`.
    pub fn to_json(&self) -> String {
        let doc = PatternDoc {
            alpha: self.rows[0].clone(),
            rows: self.rows.clone(),
        };
        serde_json::to_string(&doc).expect("patterns always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PatternDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.rows.first() != Some(&doc.alpha) {
            return Err(Error::Parse("rows[0] must equal alpha".into()));
        }
        GCPattern::new(doc.rows)
    }
}

/// An exact point of `ℝ^{n(n−1)/2}`, sub-top rows flattened.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalPoint(Vec<BigRational>);

impl RationalPoint {
    pub fn new(values: Vec<BigRational>) -> Self {
        RationalPoint(values)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        RationalPoint(
            values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    /// Exact binary expansion of each float; rejects NaN and infinities.
    pub fn from_f64_exact(values: &[f64]) -> Result<Self> {
        values
            .iter()
            .map(|&v| {
                BigRational::from_float(v)
                    .ok_or_else(|| Error::domain(format!("{v} has no exact rational value")))
            })
            .collect::<Result<Vec<_>>>()
            .map(RationalPoint)
    }

    pub fn values(&self) -> &[BigRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `upper[k] ≥ lower[k] ≥ upper[k+1]` for all `k` (strict when asked).
pub(crate) fn interlaces<T: PartialOrd>(upper: &[T], lower: &[T], strict: bool) -> bool {
    debug_assert_eq!(upper.len(), lower.len() + 1);
    lower.iter().enumerate().all(|(k, y)| {
        if strict {
            upper[k] > *y && *y > upper[k + 1]
        } else {
            upper[k] >= *y && *y >= upper[k + 1]
        }
    })
}

fn rational_rows(alpha: &DominantWeight, p: &RationalPoint) -> Result<Vec<Vec<BigRational>>> {
    let n = alpha.n();
    if p.len() != n * (n - 1) / 2 {
        return Err(Error::domain(format!(
            "point has {} coordinates, GC_α for n = {n} lives in dimension {}",
            p.len(),
            n * (n - 1) / 2
        )));
    }
    let mut rows = vec![alpha
        .entries()
        .iter()
        .map(|&a| BigRational::from_integer(a.into()))
        .collect::<Vec<_>>()];
    let mut rest = p.values();
    for len in (1..n).rev() {
        let (head, tail) = rest.split_at(len);
        rows.push(head.to_vec());
        rest = tail;
    }
    Ok(rows)
}

/// `p ∈ GC_α`, decided exactly.
pub fn contains(alpha: &DominantWeight, p: &RationalPoint) -> Result<bool> {
    let rows = rational_rows(alpha, p)?;
    Ok(rows.windows(2).all(|w| interlaces(&w[0], &w[1], false)))
}

/// `p ∈ interior(GC_α)`: every interlacing inequality strict.
pub fn contains_interior(alpha: &DominantWeight, p: &RationalPoint) -> Result<bool> {
    let rows = rational_rows(alpha, p)?;
    Ok(rows.windows(2).all(|w| interlaces(&w[0], &w[1], true)))
}

/// Membership in `GC_α` with every inequality relaxed by `slack ≥ 0`:
/// `rows[j][k] + slack ≥ rows[j+1][k] ≥ rows[j][k+1] − slack`.
pub fn contains_with_slack(
    alpha: &DominantWeight,
    p: &RationalPoint,
    slack: &BigRational,
) -> Result<bool> {
    if slack < &BigRational::zero() {
        return Err(Error::domain("slack must be non-negative"));
    }
    let rows = rational_rows(alpha, p)?;
    Ok(rows.windows(2).all(|w| {
        let (upper, lower) = (&w[0], &w[1]);
        lower
            .iter()
            .enumerate()
            .all(|(k, y)| &(&upper[k] + slack) >= y && y + slack >= upper[k + 1])
    }))
}

/// Rows interlacing below `upper`, in lexicographic order.
fn lower_rows(upper: &[i64], strict: bool) -> Vec<Vec<i64>> {
    let m = upper.len() - 1;
    let bounds: Vec<(i64, i64)> = (0..m)
        .map(|k| {
            if strict {
                (upper[k + 1] + 1, upper[k] - 1)
            } else {
                (upper[k + 1], upper[k])
            }
        })
        .collect();
    if bounds.iter().any(|(lo, hi)| lo > hi) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    loop {
        out.push(cur.clone());
        // odometer, last coordinate fastest
        let mut k = m;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < bounds[k].1 {
                cur[k] += 1;
                for (c, b) in cur[k + 1..].iter_mut().zip(&bounds[k + 1..]) {
                    *c = b.0;
                }
                break;
            }
        }
    }
}

fn count_points(alpha: &DominantWeight, strict: bool) -> BigUint {
    // Row-by-row DP: multiplicity of each reachable row.
    let mut layer: BTreeMap<Vec<i64>, BigUint> = BTreeMap::new();
    layer.insert(alpha.entries().to_vec(), BigUint::one());
    for _ in 1..alpha.n() {
        let mut next: BTreeMap<Vec<i64>, BigUint> = BTreeMap::new();
        for (row, mult) in &layer {
            for lower in lower_rows(row, strict) {
                *next.entry(lower).or_insert_with(BigUint::zero) += mult;
            }
        }
        layer = next;
    }
    layer.values().sum()
}

/// Number of integral points of `GC_α`, computed without materializing them.
pub fn count_integral_points(alpha: &DominantWeight) -> BigUint {
    count_points(alpha, false)
}

/// Number of integral points in the interior of `GC_α`.
pub fn count_interior_points(alpha: &DominantWeight) -> BigUint {
    count_points(alpha, true)
}

fn enumerate_points(alpha: &DominantWeight, strict: bool, cap: u64) -> Result<Vec<GCPattern>> {
    let count = count_points(alpha, strict);
    let fits = count.to_u64().filter(|&c| c <= cap);
    let Some(expected) = fits else {
        return Err(Error::Capacity {
            count: count.to_string(),
            cap,
        });
    };
    let mut out = Vec::with_capacity(expected as usize);
    let mut rows = vec![alpha.entries().to_vec()];
    extend(&mut rows, alpha.n(), strict, &mut out);
    debug_assert_eq!(out.len() as u64, expected);
    Ok(out)
}

fn extend(rows: &mut Vec<Vec<i64>>, n: usize, strict: bool, out: &mut Vec<GCPattern>) {
    if rows.len() == n {
        out.push(GCPattern { rows: rows.clone() });
        return;
    }
    let last = rows.last().expect("at least the top row").clone();
    for lower in lower_rows(&last, strict) {
        rows.push(lower);
        extend(rows, n, strict, out);
        rows.pop();
    }
}

/// All integral GC patterns with top row `α`, lexicographic in the
/// flattened rows. Fails with a capacity error above [`DEFAULT_CAP`].
pub fn enumerate_integral_points(alpha: &DominantWeight) -> Result<Vec<GCPattern>> {
    enumerate_points(alpha, false, DEFAULT_CAP)
}

pub fn enumerate_integral_points_capped(
    alpha: &DominantWeight,
    cap: u64,
) -> Result<Vec<GCPattern>> {
    enumerate_points(alpha, false, cap)
}

/// Patterns whose sub-top rows lie in the interior of `GC_α`.
pub fn enumerate_interior_points_capped(
    alpha: &DominantWeight,
    cap: u64,
) -> Result<Vec<GCPattern>> {
    enumerate_points(alpha, true, cap)
}

/// `dim V_α = ∏_{i<j} (α_i − α_j + j − i)/(j − i)`.
pub fn weyl_dim(alpha: &DominantWeight) -> BigUint {
    let a = alpha.entries();
    let n = a.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = (j - i) as i64;
            num *= BigInt::from(a[i] - a[j] + gap);
            den *= BigInt::from(gap);
        }
    }
    (num / den)
        .to_biguint()
        .expect("dominant weights give positive dimensions")
}

/// Dominant weights with every entry in `[−bound, bound]`, lexicographically
/// descending. With `regular`, only strictly decreasing ones.
pub fn dominant_weights(n: usize, bound: i64, regular: bool) -> Vec<DominantWeight> {
    fn go(n: usize, bound: i64, regular: bool, cur: &mut Vec<i64>, out: &mut Vec<DominantWeight>) {
        if cur.len() == n {
            out.push(DominantWeight(cur.clone()));
            return;
        }
        let top = match cur.last() {
            Some(&prev) if regular => (prev - 1).min(bound),
            Some(&prev) => prev.min(bound),
            None => bound,
        };
        let mut v = top;
        while v >= -bound {
            cur.push(v);
            go(n, bound, regular, cur, out);
            cur.pop();
            v -= 1;
        }
    }
    let mut out = Vec::new();
    if n > 0 && bound >= 0 {
        go(n, bound, regular, &mut Vec::with_capacity(n), &mut out);
    }
    out
}
