//! Seeded invariant batch over random cotangent points.

use std::fmt::Write as _;

use gcq_core::gc::{double_gc, gc_map, in_b, CotangentPoint, DoubleGCVector, GCVector};
use gcq_core::linalg::{haar_unitary_with, random_hermitian_with, seeded_rng};
use gcq_core::Error;
use serde_json::json;

use crate::{Config, Format, Outcome};

const INJECTED_OFFSET: f64 = 1e-3;

#[derive(Default)]
struct Tally {
    name: &'static str,
    passed: usize,
    worst: f64,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            ..Default::default()
        }
    }

    fn record(&mut self, defect: f64, tol: f64) {
        self.worst = self.worst.max(defect);
        if defect <= tol {
            self.passed += 1;
        }
    }
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn perturb(v: DoubleGCVector) -> Result<DoubleGCVector, Error> {
    let mut values = v.second.values().to_vec();
    values[0] += INJECTED_OFFSET;
    DoubleGCVector::new(v.first, GCVector::new(v.second.n(), values)?)
}

pub fn run(n: usize, count: usize, inject: bool, config: &Config) -> Result<Outcome, Error> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let tol = config.tol;
    let mut rng = seeded_rng(config.seed);
    let mut tallies = [
        Tally::new("perp_pairing"),
        Tally::new("in_b"),
        Tally::new("interlacing"),
        Tally::new("top_row_invariance"),
    ];

    for _ in 0..count {
        let g = haar_unitary_with(n, &mut rng);
        let xi = random_hermitian_with(n, &mut rng);
        let point = CotangentPoint::new(g, xi)?;
        let mut v = double_gc(&point)?;
        if inject {
            v = perturb(v)?;
        }
        let dual_top: Vec<f64> = v.first.row(0).iter().rev().map(|x| -x).collect();
        tallies[0].record(max_diff(v.second.row(0), &dual_top), tol);
        let b_defect = if in_b(&v, tol) { 0.0 } else { f64::INFINITY };
        tallies[1].record(b_defect, tol);
        let interlace = v
            .first
            .interlacing_defect()
            .max(v.second.interlacing_defect());
        tallies[2].record(interlace, tol);
        let plain = gc_map(point.xi())?;
        tallies[3].record(max_diff(plain.row(0), v.first.row(0)), tol);
    }

    let violations: usize = tallies.iter().map(|t| count - t.passed).sum();
    let ok = violations == 0;
    let text = match config.format {
        Format::Pretty => {
            let mut out = format!(
                "sample n={n} count={count} seed={} tol={tol:e}{}\n",
                config.seed,
                if inject { " (asymmetry injected)" } else { "" }
            );
            for t in &tallies {
                writeln!(
                    out,
                    "{:<20} {}/{} pass  max_defect={:.3e}",
                    t.name, t.passed, count, t.worst
                )
                .unwrap();
            }
            writeln!(
                out,
                "{} ({violations} violations)",
                if ok { "PASS" } else { "FAIL" }
            )
            .unwrap();
            out
        }
        Format::Csv => {
            let mut out = String::from("invariant,passed,total,max_defect\n");
            for t in &tallies {
                writeln!(out, "{},{},{},{:e}", t.name, t.passed, count, t.worst).unwrap();
            }
            out
        }
        Format::Json => {
            let rows: Vec<_> = tallies
                .iter()
                .map(|t| {
                    json!({
                        "invariant": t.name,
                        "passed": t.passed,
                        "total": count,
                        "max_defect": if t.worst.is_finite() { json!(t.worst) } else { json!(null) },
                    })
                })
                .collect();
            format!(
                "{}\n",
                json!({
                    "n": n,
                    "count": count,
                    "seed": config.seed,
                    "injected": inject,
                    "invariants": rows,
                    "violations": violations,
                })
            )
        }
    };
    Ok(Outcome { text, ok })
}
