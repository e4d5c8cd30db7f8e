//! Plain-text matrix files.
//!
//! ```text
//! # optional comments
//! field gf 2
//! 1 1 0
//! 0 1 1
//! ```
//!
//! The header is `field q` or `field gf <p>`. Every other non-empty,
//! non-comment line is one row of whitespace-separated scalars; all rows have
//! the same length and there is at least one.

use crate::error::{Error, Result};
use crate::field::{parse_scalar, Field, FieldSpec};
use crate::matrix::Matrix;
use crate::vector::Vector;

/// A parsed file whose entries have not yet been interpreted as scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFile {
    pub spec: FieldSpec,
    pub rows: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `field` header".into()))?;
        let spec = header
            .strip_prefix("field")
            .filter(|rest| rest.starts_with(char::is_whitespace))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "line {line_no}: expected `field q` or `field gf <p>`"
                ))
            })?
            .trim()
            .parse::<FieldSpec>()
            .map_err(|e| Error::Parse(format!("line {line_no}: {}", e.message())))?;
        let mut rows: Vec<Vec<String>> = Vec::new();
        for (line_no, line) in lines {
            let row: Vec<String> = line.split_whitespace().map(str::to_owned).collect();
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Parse(format!(
                        "line {line_no}: row has {} entries, expected {}",
                        row.len(),
                        first.len()
                    )));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse("no rows".into()));
        }
        Ok(MatrixFile { spec, rows })
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    /// Interprets the entries under the declared field.
    pub fn to_matrix<F: Field>(&self) -> Result<Matrix<F>> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|t| parse_scalar::<F>(t, &self.spec)).collect())
            .collect::<Result<Vec<Vec<F>>>>()?;
        Matrix::from_rows(self.spec, rows)
    }

    /// The rows as vectors (generators, for subspace commands).
    pub fn to_vectors<F: Field>(&self) -> Result<Vec<Vector<F>>> {
        Ok(self.to_matrix::<F>()?.rows())
    }
}

/// Parses one whitespace-separated row.
pub fn parse_row<F: Field>(text: &str, spec: FieldSpec) -> Result<Vector<F>> {
    let entries = text
        .split_whitespace()
        .map(|t| parse_scalar::<F>(t, &spec))
        .collect::<Result<Vec<F>>>()?;
    if entries.is_empty() {
        return Err(Error::Parse("empty row".into()));
    }
    Vector::new(spec, entries)
}

/// Rows in file body syntax, one per line, each line newline-terminated.
pub fn render_rows<F: Field>(rows: &[Vector<F>]) -> String {
    rows.iter().map(|r| format!("{r}\n")).collect()
}

/// A complete file: header then rows.
pub fn render_file<F: Field>(spec: FieldSpec, rows: &[Vector<F>]) -> String {
    format!("field {spec}\n{}", render_rows(rows))
}
