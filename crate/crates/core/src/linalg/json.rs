//! JSON matrix format: `{"n": int, "entries": [[[re, im], ...], ...]}`, row-major.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{HermitianMatrix, UnitaryMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub n: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixDoc {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        if doc.entries.len() != doc.n || doc.entries.iter().any(|r| r.len() != doc.n) {
            return Err(Error::Parse(format!(
                "entries must be an {n}×{n} array",
                n = doc.n
            )));
        }
        if doc
            .entries
            .iter()
            .flatten()
            .flatten()
            .any(|x| !x.is_finite())
        {
            return Err(Error::Parse("entries must be finite".into()));
        }
        Ok(doc)
    }

    fn rows(&self) -> Vec<Vec<Complex64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
            .collect()
    }

    fn from_rows(n: usize, rows: Vec<Vec<Complex64>>) -> Self {
        MatrixDoc {
            n,
            entries: rows
                .into_iter()
                .map(|r| r.into_iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix documents always serialize")
    }
}

impl HermitianMatrix {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc = MatrixDoc::parse(text)?;
        HermitianMatrix::new(doc.n, doc.rows())
    }

    pub fn to_doc(&self) -> MatrixDoc {
        MatrixDoc::from_rows(self.n(), self.rows())
    }

    pub fn to_json(&self) -> String {
        self.to_doc().to_json()
    }
}

impl UnitaryMatrix {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc = MatrixDoc::parse(text)?;
        UnitaryMatrix::new(doc.n, doc.rows())
    }

    pub fn to_json(&self) -> String {
        MatrixDoc::from_rows(self.n(), self.rows()).to_json()
    }
}
