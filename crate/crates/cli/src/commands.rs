use std::fmt::Write as _;
use std::path::Path;

use gcq_core::bohr_sommerfeld::{enumerate_bs_points_capped, BSPoint, BSVariant};
use gcq_core::linalg::{sweep as sweep_matrix, HermitianMatrix};
use gcq_core::peter_weyl::{pw_check_capped, pw_table, TableFormat};
use gcq_core::polytope::{count_integral_points, weyl_dim, DominantWeight};
use gcq_core::{gc_map as gc_vector, Error};
use serde_json::json;

use crate::{Config, Format, Outcome};

fn read_matrix(path: &Path) -> Result<HermitianMatrix, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    HermitianMatrix::from_json(&text)
}

/// Shortest round-trip decimal, with `-0` printed as `0`.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn render_reals(values: &[f64], format: Format) -> String {
    let text: Vec<String> = values.iter().map(|&v| fmt_real(v)).collect();
    match format {
        Format::Pretty => text.join(" "),
        Format::Csv => text.join(","),
        Format::Json => format!("[{}]", text.join(",")),
    }
}

pub fn gc_map(path: &Path, config: &Config) -> Result<Outcome, Error> {
    let xi = read_matrix(path)?;
    let v = gc_vector(&xi)?;
    Ok(Outcome {
        text: render_reals(v.values(), config.format) + "\n",
        ok: true,
    })
}

pub fn sweep(path: &Path, config: &Config) -> Result<Outcome, Error> {
    let xi = read_matrix(path)?;
    let swept = sweep_matrix(&xi)?;
    let text = match config.format {
        Format::Json => swept.to_json(),
        Format::Csv | Format::Pretty => {
            let diag: Vec<f64> = (0..swept.n()).map(|i| swept.get(i, i).re).collect();
            render_reals(&diag, config.format)
        }
    };
    Ok(Outcome {
        text: text + "\n",
        ok: true,
    })
}

fn bs_line(p: &BSPoint, format: Format) -> String {
    match format {
        Format::Json => p.to_json(),
        Format::Pretty => join(p.values(), " "),
        Format::Csv => format!(
            "{},{},{}",
            join(p.weight().entries(), " "),
            join(p.pattern(), " "),
            join(p.dual_pattern(), " ")
        ),
    }
}

pub fn bs(n: usize, max: i64, variant: BSVariant, config: &Config) -> Result<Outcome, Error> {
    let points = enumerate_bs_points_capped(n, max, variant, config.cap)?;
    let mut text = String::new();
    if config.format == Format::Csv {
        text.push_str("weight,pattern,dual_pattern\n");
    }
    for p in &points {
        text.push_str(&bs_line(p, config.format));
        text.push('\n');
    }
    match config.format {
        Format::Json => writeln!(text, "{}", json!({ "count": points.len() })).unwrap(),
        Format::Csv | Format::Pretty => writeln!(text, "# count={}", points.len()).unwrap(),
    }
    Ok(Outcome { text, ok: true })
}

pub fn pw(n: usize, max: i64, config: &Config) -> Result<Outcome, Error> {
    let report = pw_check_capped(n, max, config.cap)?;
    let format = match config.format {
        Format::Json => TableFormat::Json,
        Format::Csv => TableFormat::Csv,
        Format::Pretty => TableFormat::Pretty,
    };
    Ok(Outcome {
        text: pw_table(&report, format),
        ok: report.agree,
    })
}

pub fn dim(weight: &str, config: &Config) -> Result<Outcome, Error> {
    let alpha: DominantWeight = weight.parse()?;
    let weyl = weyl_dim(&alpha);
    let count = count_integral_points(&alpha);
    let agree = weyl == count;
    let verdict = if agree { "AGREE" } else { "MISMATCH" };
    let text = match config.format {
        Format::Pretty => format!("{weyl} {count} {verdict}\n"),
        Format::Csv => format!("weyl_dim,gc_count,verdict\n{weyl},{count},{verdict}\n"),
        Format::Json => format!(
            "{}\n",
            json!({
                "weight": alpha.entries(),
                "weyl_dim": weyl.to_string(),
                "gc_count": count.to_string(),
                "agree": agree,
            })
        ),
    };
    Ok(Outcome { text, ok: agree })
}
