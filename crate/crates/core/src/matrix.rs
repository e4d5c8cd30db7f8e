//! Matrices over an exact field, viewed as maps F^m → F^n.
//!
//! A is always n rows by m columns. Row space and nullspace live in F^m and
//! are •-complements of each other; the column space lives in F^n. RREF and
//! RCEF are not computed by elimination: the nonzero rows of RREF(A) are the
//! lime basis of the row space, which makes uniqueness immediate.

use std::fmt;

use crate::duality::complement;
use crate::error::{domain, usage, Result};
use crate::field::{Field, FieldSpec};
use crate::subspace::{span_red_basis, Subspace};
use crate::vector::Vector;

/// Dense n×m matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// A = B·G with rank(B) = rank(G) = r = rank(A).
#[derive(Clone, PartialEq, Eq)]
pub struct FullRankFactors<F> {
    pub b: Matrix<F>,
    pub g: Matrix<F>,
    pub rank: usize,
}

impl<F: Field> Matrix<F> {
    pub fn from_rows(spec: FieldSpec, rows: Vec<Vec<F>>) -> Result<Self> {
        if !F::supports(&spec) {
            return usage(format!("scalar type cannot represent field {spec}"));
        }
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if n == 0 || m == 0 {
            return usage("matrices need at least one row and one column");
        }
        if rows.iter().any(|r| r.len() != m) {
            return usage("rows have different lengths");
        }
        let data: Vec<F> = rows.into_iter().flatten().map(|e| e.bind(&spec)).collect();
        if let Some(bad) = data.iter().find(|e| e.spec_of() != Some(spec)) {
            return usage(format!("entry {bad:?} does not belong to {spec}"));
        }
        Ok(Matrix {
            spec,
            rows: n,
            cols: m,
            data,
        })
    }

    pub fn from_int_rows(spec: FieldSpec, rows: &[&[i64]]) -> Result<Self> {
        if !F::supports(&spec) {
            return usage(format!("scalar type cannot represent field {spec}"));
        }
        Self::from_rows(
            spec,
            rows.iter()
                .map(|r| r.iter().map(|&v| F::from_i64(v, &spec)).collect())
                .collect(),
        )
    }

    /// Stacks vectors as rows.
    pub fn from_row_vectors(rows: &[Vector<F>]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return usage("matrices need at least one row");
        };
        for r in rows {
            first.check_compatible(r)?;
        }
        Ok(Matrix {
            spec: first.spec(),
            rows: rows.len(),
            cols: first.len(),
            data: rows
                .iter()
                .flat_map(|r| r.entries().iter().cloned())
                .collect(),
        })
    }

    /// Places vectors side by side as columns.
    pub fn from_column_vectors(cols: &[Vector<F>]) -> Result<Self> {
        Ok(Self::from_row_vectors(cols)?.transpose())
    }

    pub fn zeros(spec: FieldSpec, n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1, "matrix dimensions must be positive");
        Matrix {
            spec,
            rows: n,
            cols: m,
            data: vec![F::zero().bind(&spec); n * m],
        }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        let mut a = Self::zeros(spec, n, n);
        for i in 0..n {
            a.data[i * n + i] = F::one().bind(&spec);
        }
        a
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry at row `i`, column `j`, both 1-based.
    pub fn at(&self, i: usize, j: usize) -> &F {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    /// Row R_i as a vector in F^m.
    pub fn row(&self, i: usize) -> Vector<F> {
        assert!((1..=self.rows).contains(&i), "row {i} out of range");
        let start = (i - 1) * self.cols;
        Vector::from_raw(self.spec, self.data[start..start + self.cols].to_vec())
    }

    /// Column C_j as a vector in F^n.
    pub fn column(&self, j: usize) -> Vector<F> {
        assert!((1..=self.cols).contains(&j), "column {j} out of range");
        Vector::from_raw(
            self.spec,
            (0..self.rows)
                .map(|i| self.data[i * self.cols + j - 1].clone())
                .collect(),
        )
    }

    pub fn rows(&self) -> Vec<Vector<F>> {
        (1..=self.rows).map(|i| self.row(i)).collect()
    }

    pub fn columns(&self) -> Vec<Vector<F>> {
        (1..=self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.data[i * self.cols + j].clone());
            }
        }
        Matrix {
            spec: self.spec,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.spec != rhs.spec {
            return usage(format!("field mismatch: {} vs {}", self.spec, rhs.spec));
        }
        if self.cols != rhs.rows {
            return usage(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            ));
        }
        let mut out = Self::zeros(self.spec, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        let slot = &mut out.data[i * rhs.cols + j];
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    fn check_input(&self, x: &Vector<F>) -> Result<()> {
        if x.spec() != self.spec {
            return usage(format!("field mismatch: {} vs {}", self.spec, x.spec()));
        }
        if x.len() != self.cols {
            return usage(format!(
                "expected a vector of length {}, got {}",
                self.cols,
                x.len()
            ));
        }
        Ok(())
    }

    /// A·X with the i-th entry computed as R_i • X.
    pub fn apply_row_centric(&self, x: &Vector<F>) -> Result<Vector<F>> {
        self.check_input(x)?;
        let out = (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(x.entries())
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
                    .bind(&self.spec)
            })
            .collect();
        Ok(Vector::from_raw(self.spec, out))
    }

    /// A·X computed as Σ_j X(j)·C_j.
    pub fn apply_column_centric(&self, x: &Vector<F>) -> Result<Vector<F>> {
        self.check_input(x)?;
        let mut out = Vector::zero(self.spec, self.rows);
        for (j, c) in x.entries().iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &self.column(j + 1));
            }
        }
        Ok(out)
    }

    /// Span of the rows, inside F^m.
    pub fn row_space(&self) -> Subspace<F> {
        span_red_basis(self.spec, self.cols, &self.rows()).expect("rows are well-formed")
    }

    /// Span of the columns, inside F^n.
    pub fn column_space(&self) -> Subspace<F> {
        span_red_basis(self.spec, self.rows, &self.columns()).expect("columns are well-formed")
    }

    /// {X : A·X = 0}, obtained as the complement of the row space.
    pub fn nullspace(&self) -> Subspace<F> {
        complement(&self.row_space())
    }

    pub fn rank(&self) -> usize {
        self.row_space().dimension()
    }

    pub fn nullity(&self) -> usize {
        self.nullspace().dimension()
    }

    /// Square with full rank.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Lime indices of the row space; those columns form a basis of the
    /// column space.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.row_space().lime_basis().indices().to_vec()
    }

    /// Indices i for which C_i is a combination of C_1, ..., C_{i-1}: the red
    /// indices of the nullspace.
    pub fn dependent_columns(&self) -> Vec<usize> {
        self.nullspace().red_indices().to_vec()
    }

    /// Same set as [`Self::dependent_columns`], found by testing each column
    /// for membership in the span of the columns before it.
    pub fn dependent_columns_by_prefix(&self) -> Vec<usize> {
        let mut prefix = Subspace::zero(self.spec, self.rows);
        let mut out = Vec::new();
        for (j, c) in self.columns().into_iter().enumerate() {
            if !prefix.absorb(c) {
                out.push(j + 1);
            }
        }
        out
    }

    /// Reduced row echelon form: the lime basis of the row space as rows,
    /// then zero rows.
    pub fn rref(&self) -> Self {
        let lime = self.row_space().lime_basis();
        let mut out = Self::zeros(self.spec, self.rows, self.cols);
        for (i, v) in lime.vectors().iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].clone_from_slice(v.entries());
        }
        out
    }

    /// Reduced column echelon form, RREF(Aᵀ)ᵀ.
    pub fn rcef(&self) -> Self {
        self.transpose().rref().transpose()
    }

    fn select_rows(&self, idx: &[usize]) -> Vec<Vector<F>> {
        idx.iter().map(|&i| self.row(i)).collect()
    }

    fn select_columns(&self, idx: &[usize]) -> Vec<Vector<F>> {
        idx.iter().map(|&j| self.column(j)).collect()
    }

    /// B has the lime basis of the column space as columns; G holds the rows
    /// of A at the lime indices of the column space.
    pub fn full_rank_factorization(&self) -> Result<FullRankFactors<F>> {
        let lime = self.column_space().lime_basis();
        if lime.is_empty() {
            return domain("the zero matrix has no full rank factorization");
        }
        Ok(FullRankFactors {
            b: Self::from_column_vectors(lime.vectors())?,
            g: Self::from_row_vectors(&self.select_rows(lime.indices()))?,
            rank: lime.len(),
        })
    }

    /// Returns (RCEF(A), S) with A = RCEF(A)·S. The first r rows of S are the
    /// rows of A at the lime indices of the column space; the rest are zero,
    /// or with `complete` the standard basis vectors that make S invertible.
    pub fn rcef_factorization(&self, complete: bool) -> Result<(Self, Self)> {
        let lime = self.column_space().lime_basis();
        if lime.is_empty() {
            return domain("the zero matrix has no RCEF factorization");
        }
        let selected = self.select_rows(lime.indices());
        let s = if complete {
            extend_rows_to_invertible(&selected)?
        } else {
            pad_rows(&selected, self.cols)?
        };
        Ok((self.rcef(), s))
    }

    /// Returns (T, RREF(A)) with A = T·RREF(A). The first r columns of T are
    /// the pivot columns of A; the rest are zero, or with `complete` the
    /// standard basis vectors that make T invertible.
    pub fn rref_factorization(&self, complete: bool) -> Result<(Self, Self)> {
        let pivots = self.pivot_columns();
        if pivots.is_empty() {
            return domain("the zero matrix has no RREF factorization");
        }
        let selected = self.select_columns(&pivots);
        let t = if complete {
            extend_rows_to_invertible(&selected)?.transpose()
        } else {
            pad_rows(&selected, self.rows)?.transpose()
        };
        Ok((t, self.rref()))
    }

    /// Row operation R_a ↔ R_b (1-based).
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data
                .swap((a - 1) * self.cols + j, (b - 1) * self.cols + j);
        }
    }

    /// Row operation R_i ← c·R_i. `c` must be nonzero to preserve the row space.
    pub fn scale_row(&mut self, i: usize, c: &F) {
        for e in &mut self.data[(i - 1) * self.cols..i * self.cols] {
            *e = e.clone() * c.clone();
        }
    }

    /// Row operation R_target ← R_target + c·R_source.
    pub fn add_row_multiple(&mut self, target: usize, source: usize, c: &F) {
        assert_ne!(target, source, "row operation needs two distinct rows");
        for j in 0..self.cols {
            let s = self.data[(source - 1) * self.cols + j].clone();
            let t = &mut self.data[(target - 1) * self.cols + j];
            *t = t.clone() + c.clone() * s;
        }
    }
}

/// Stacks `rows` and pads with zero rows up to `total` rows.
fn pad_rows<F: Field>(rows: &[Vector<F>], total: usize) -> Result<Matrix<F>> {
    let first = &rows[0];
    let mut all = rows.to_vec();
    all.resize(total, Vector::zero(first.spec(), first.len()));
    Matrix::from_row_vectors(&all)
}

/// Completes independent rows in F^m to an invertible m×m matrix by appending
/// E_j for each non-lime index j of their span, in increasing order.
pub fn extend_rows_to_invertible<F: Field>(rows: &[Vector<F>]) -> Result<Matrix<F>> {
    let Some(first) = rows.first() else {
        return usage("need at least one row to extend");
    };
    let (spec, m) = (first.spec(), first.len());
    let span = span_red_basis(spec, m, rows)?;
    if span.dimension() != rows.len() {
        return domain("rows are linearly dependent");
    }
    let lime = span.lime_basis();
    let mut all = rows.to_vec();
    all.extend(
        (1..=m)
            .filter(|&j| !lime.is_lime(j))
            .map(|j| Vector::standard(spec, m, j)),
    );
    Matrix::from_row_vectors(&all)
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}, {:?})", self.spec, self.rows())
    }
}

impl<F: Field> fmt::Debug for FullRankFactors<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FullRankFactors")
            .field("b", &self.b)
            .field("g", &self.g)
            .field("rank", &self.rank)
            .finish()
    }
}

/// One whitespace-separated row per line.
impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}
