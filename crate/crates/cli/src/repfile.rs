//! On-disk representation files.

use serde::{Deserialize, Serialize};

use braidrep_core::braid::BraidRep;
use braidrep_core::field::{parse_field, Field, FieldTag, RatFunc, Rational};
use braidrep_core::linalg::Matrix;

use crate::CliError;

/// `{ "n", "dimension", "field": "Q" | "Q(t)", "generators" }`, with every
/// scalar stored as a string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub n: usize,
    pub dimension: usize,
    pub field: String,
    /// `C_1..C_{n-1}`, row-major.
    pub generators: Vec<Vec<Vec<String>>>,
}

/// A representation over whichever field the file names.
#[derive(Debug, Clone)]
pub enum AnyRep {
    Q(BraidRep<Rational>),
    Qt(BraidRep<RatFunc>),
}

impl AnyRep {
    pub fn to_file(&self) -> RepFile {
        match self {
            AnyRep::Q(rep) => RepFile::from_rep(rep),
            AnyRep::Qt(rep) => RepFile::from_rep(rep),
        }
    }
}

impl RepFile {
    pub fn from_rep<F: Field>(rep: &BraidRep<F>) -> RepFile {
        let generators = rep
            .generators()
            .iter()
            .map(|m| {
                (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
            })
            .collect();
        RepFile { n: rep.n(), dimension: rep.dim(), field: F::TAG.file_name().to_string(), generators }
    }

    /// Key-sorted JSON, one matrix row per line, with a trailing newline.
    pub fn to_json(&self) -> String {
        let str_json = |v: &str| serde_json::to_string(v).expect("plain data");
        let mats: Vec<String> = self
            .generators
            .iter()
            .map(|m| {
                let rows: Vec<String> = m
                    .iter()
                    .map(|row| format!("      {}", serde_json::to_string(row).expect("plain data")))
                    .collect();
                format!("    [\n{}\n    ]", rows.join(",\n"))
            })
            .collect();
        format!(
            "{{\n  \"dimension\": {},\n  \"field\": {},\n  \"generators\": [\n{}\n  ],\n  \"n\": {}\n}}\n",
            self.dimension,
            str_json(&self.field),
            mats.join(",\n"),
            self.n
        )
    }

    pub fn from_json(text: &str) -> Result<RepFile, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::InvalidRep(format!("malformed file: {e}")))
    }

    /// Parse scalars and check shapes. Relations are not checked here.
    pub fn to_rep(&self) -> Result<AnyRep, CliError> {
        match FieldTag::from_file_name(&self.field) {
            Some(FieldTag::Rational) => self.build::<Rational>().map(AnyRep::Q),
            Some(FieldTag::RatFunc) => self.build::<RatFunc>().map(AnyRep::Qt),
            None => Err(CliError::InvalidRep(format!("unknown field `{}` (expected Q or Q(t))", self.field))),
        }
    }

    fn build<F: Field>(&self) -> Result<BraidRep<F>, CliError> {
        let bad = |msg: String| CliError::InvalidRep(msg);
        let r = self.dimension;
        let mut gens = Vec::with_capacity(self.generators.len());
        for (g, rows) in self.generators.iter().enumerate() {
            if rows.len() != r || rows.iter().any(|row| row.len() != r) {
                return Err(bad(format!("generator {} is not {r}x{r}", g + 1)));
            }
            let mut entries = Vec::with_capacity(r * r);
            for (i, row) in rows.iter().enumerate() {
                for (j, s) in row.iter().enumerate() {
                    let v = parse_field::<F>(s)
                        .map_err(|e| bad(format!("generator {} entry ({i}, {j}): {e}", g + 1)))?;
                    entries.push(v);
                }
            }
            gens.push(Matrix::from_vec(r, r, entries));
        }
        BraidRep::new(self.n, gens).map_err(|e| bad(e.to_string()))
    }
}
