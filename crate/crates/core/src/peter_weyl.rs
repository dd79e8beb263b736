//! Truncated Peter–Weyl check.
//!
//! For every dominant weight in the box `|α_i| ≤ N` the report records
//! `dim V_α` from the Weyl formula next to the lattice-point counts of
//! `GC_α` and `GC_{α*}`. The closure Bohr–Sommerfeld count over the same
//! box must equal `Σ_α (#GC_α)(#GC_{α*})` and `Σ_α dim V_α · dim V_α*`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bohr_sommerfeld::{count_bs_points, BSVariant};
use crate::error::{Error, Result};
use crate::polytope::{
    count_integral_points, dominant_weights, weyl_dim, DominantWeight, DEFAULT_CAP,
};

#[derive(Debug, Clone, PartialEq)]
pub struct PWRow {
    pub alpha: DominantWeight,
    pub dim: BigUint,
    pub dim_dual: BigUint,
    pub gc: BigUint,
    pub gc_dual: BigUint,
    pub contribution: BigUint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PWReport {
    pub n: usize,
    pub bound: i64,
    pub rows: Vec<PWRow>,
    /// Closure BS points in the box.
    pub total_bs: BigUint,
    /// `Σ gc · gc_dual`.
    pub total_sum: BigUint,
    /// `Σ dim · dim_dual`.
    pub total_weyl: BigUint,
    pub agree: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
    Pretty,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "pretty" => Ok(TableFormat::Pretty),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// Number of non-increasing length-`n` sequences over `2·bound + 1` values.
fn weight_box_size(n: usize, bound: i64) -> BigUint {
    let m = BigUint::from((2 * bound + 1) as u64);
    // C(m + n − 1, n)
    let mut acc = BigUint::from(1u32);
    for i in 0..n {
        acc = acc * (&m + BigUint::from(i)) / BigUint::from(i + 1);
    }
    acc
}

pub fn pw_check(n: usize, bound: i64) -> Result<PWReport> {
    pw_check_capped(n, bound, DEFAULT_CAP)
}

pub fn pw_check_capped(n: usize, bound: i64, cap: u64) -> Result<PWReport> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    if bound < 0 {
        return Err(Error::domain("weight bound must be non-negative"));
    }
    let size = weight_box_size(n, bound);
    if size.to_u64().is_none_or(|s| s > cap) {
        return Err(Error::Capacity {
            count: size.to_string(),
            cap,
        });
    }

    let rows: Vec<PWRow> = dominant_weights(n, bound, false)
        .into_par_iter()
        .map(|alpha| {
            let dual = alpha.dual();
            let gc = count_integral_points(&alpha);
            let gc_dual = count_integral_points(&dual);
            PWRow {
                dim: weyl_dim(&alpha),
                dim_dual: weyl_dim(&dual),
                contribution: &gc * &gc_dual,
                gc,
                gc_dual,
                alpha,
            }
        })
        .collect();

    let total_bs = count_bs_points(n, bound, BSVariant::Closure)?;
    let total_sum = rows
        .iter()
        .fold(BigUint::zero(), |acc, r| acc + &r.contribution);
    let total_weyl = rows
        .iter()
        .fold(BigUint::zero(), |acc, r| acc + &r.dim * &r.dim_dual);
    let rows_agree = rows
        .iter()
        .all(|r| r.gc == r.dim && r.gc_dual == r.dim_dual);
    let agree = rows_agree && total_bs == total_sum && total_sum == total_weyl;

    Ok(PWReport {
        n,
        bound,
        rows,
        total_bs,
        total_sum,
        total_weyl,
        agree,
    })
}

fn big_json(x: &BigUint) -> Value {
    match x.to_u64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn alpha_plain(alpha: &DominantWeight) -> String {
    alpha
        .entries()
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn alpha_tuple(alpha: &DominantWeight) -> String {
    let inner = alpha
        .entries()
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("({inner})")
}

/// Renders a report. Output is a pure function of the report.
pub fn pw_table(report: &PWReport, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut out = String::from("alpha,dim,dim_dual,gc,gc_dual,contribution\n");
            for r in &report.rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    alpha_plain(&r.alpha),
                    r.dim,
                    r.dim_dual,
                    r.gc,
                    r.gc_dual,
                    r.contribution
                )
                .unwrap();
            }
            out
        }
        TableFormat::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "alpha": r.alpha.entries(),
                        "dim": big_json(&r.dim),
                        "dim_dual": big_json(&r.dim_dual),
                        "gc": big_json(&r.gc),
                        "gc_dual": big_json(&r.gc_dual),
                        "contribution": big_json(&r.contribution),
                    })
                })
                .collect();
            let doc = json!({
                "n": report.n,
                "max": report.bound,
                "rows": rows,
                "total_bs": big_json(&report.total_bs),
                "total_sum": big_json(&report.total_sum),
                "total_weyl": big_json(&report.total_weyl),
                "agree": report.agree,
            });
            let mut s = serde_json::to_string(&doc).expect("report always serializes");
            s.push('\n');
            s
        }
        TableFormat::Pretty => {
            let header = ["alpha", "dim", "dim*", "gc", "gc*", "contribution"];
            let cells: Vec<[String; 6]> = report
                .rows
                .iter()
                .map(|r| {
                    [
                        alpha_tuple(&r.alpha),
                        r.dim.to_string(),
                        r.dim_dual.to_string(),
                        r.gc.to_string(),
                        r.gc_dual.to_string(),
                        r.contribution.to_string(),
                    ]
                })
                .collect();
            let mut widths = header.map(str::len);
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let mut out = String::new();
            writeln!(
                out,
                "U({}) weights with |alpha_i| <= {}: {} rows",
                report.n,
                report.bound,
                report.rows.len()
            )
            .unwrap();
            let line = |cols: Vec<&str>| {
                cols.iter()
                    .zip(widths.iter())
                    .map(|(c, w)| format!("{c:<w$}", w = *w))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(header.to_vec())).unwrap();
            for row in &cells {
                writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
            }
            writeln!(out, "total BS points (closure): {}", report.total_bs).unwrap();
            writeln!(out, "sum of contributions:      {}", report.total_sum).unwrap();
            writeln!(out, "sum of dim V * dim V*:     {}", report.total_weyl).unwrap();
            writeln!(out, "{}", if report.agree { "AGREE" } else { "MISMATCH" }).unwrap();
            out
        }
    }
}
