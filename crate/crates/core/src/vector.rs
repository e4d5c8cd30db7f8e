//! Tuples in F^n with 1-based positions.

use std::fmt;

use crate::error::{usage, Result};
use crate::field::{Field, FieldSpec};

/// An element of F^n. Positions run from 1 to n at the public surface.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector<F> {
    spec: FieldSpec,
    entries: Vec<F>,
}

impl<F: Field> Vector<F> {
    /// Builds a vector, checking that every entry belongs to `spec`.
    pub fn new(spec: FieldSpec, entries: Vec<F>) -> Result<Self> {
        if !F::supports(&spec) {
            return usage(format!("scalar type cannot represent field {spec}"));
        }
        if entries.is_empty() {
            return usage("vectors need at least one entry");
        }
        let entries: Vec<F> = entries.into_iter().map(|e| e.bind(&spec)).collect();
        if let Some(bad) = entries.iter().find(|e| e.spec_of() != Some(spec)) {
            return usage(format!("entry {bad:?} does not belong to {spec}"));
        }
        Ok(Vector { spec, entries })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(spec: FieldSpec, values: &[i64]) -> Result<Self> {
        if !F::supports(&spec) {
            return usage(format!("scalar type cannot represent field {spec}"));
        }
        Self::new(
            spec,
            values.iter().map(|&v| F::from_i64(v, &spec)).collect(),
        )
    }

    pub fn zero(spec: FieldSpec, n: usize) -> Self {
        assert!(n >= 1, "ambient dimension must be positive");
        Vector {
            spec,
            entries: vec![F::zero().bind(&spec); n],
        }
    }

    /// The standard basis vector E_k of F^n.
    pub fn standard(spec: FieldSpec, n: usize, k: usize) -> Self {
        assert!((1..=n).contains(&k), "position {k} outside 1..={n}");
        let mut v = Self::zero(spec, n);
        v.entries[k - 1] = F::one().bind(&spec);
        v
    }

    pub(crate) fn from_raw(spec: FieldSpec, entries: Vec<F>) -> Self {
        Vector { spec, entries }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<F> {
        self.entries
    }

    /// The entry X(pos), 1-based.
    pub fn at(&self, pos: usize) -> &F {
        &self.entries[pos - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Position of the last nonzero entry; `None` for the zero vector.
    pub fn terminating_index(&self) -> Option<usize> {
        self.entries
            .iter()
            .rposition(|e| !e.is_zero())
            .map(|p| p + 1)
    }

    /// Position of the first nonzero entry; `None` for the zero vector.
    pub fn originating_index(&self) -> Option<usize> {
        self.entries
            .iter()
            .position(|e| !e.is_zero())
            .map(|p| p + 1)
    }

    /// Usage error unless `other` has the same field and length.
    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.spec != other.spec {
            return usage(format!("field mismatch: {} vs {}", self.spec, other.spec));
        }
        if self.len() != other.len() {
            return usage(format!(
                "length mismatch: {} vs {}",
                self.len(),
                other.len()
            ));
        }
        Ok(())
    }

    pub fn scaled(&self, c: &F) -> Self {
        Vector {
            spec: self.spec,
            entries: self.entries.iter().map(|e| e.clone() * c.clone()).collect(),
        }
    }

    pub fn scale_in_place(&mut self, c: &F) {
        for e in &mut self.entries {
            *e = e.clone() * c.clone();
        }
    }

    /// `self -= c * other`. Lengths must agree.
    pub fn sub_scaled(&mut self, c: &F, other: &Self) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a = a.clone() - c.clone() * b.clone();
            }
        }
    }

    /// `self += c * other`. Lengths must agree.
    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        self.sub_scaled(&-c.clone(), other);
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&F::one(), other);
        out
    }

    /// Drops the last entry. `None` when only one entry is left.
    pub fn truncated(&self) -> Option<Self> {
        (self.len() > 1).then(|| Vector {
            spec: self.spec,
            entries: self.entries[..self.len() - 1].to_vec(),
        })
    }
}

impl<F: Field> fmt::Debug for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Whitespace-separated entries, the row syntax of the matrix file format.
impl<F: Field> fmt::Display for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Gf};
    use num_traits::One;

    type V3 = Vector<Gf<3>>;

    #[test]
    fn index_examples() {
        let v = V3::from_ints(Gf::<3>::SPEC, &[0, 1, 0, 2]).unwrap();
        assert_eq!(v.terminating_index(), Some(4));
        assert_eq!(v.originating_index(), Some(2));
        let z = V3::zero(Gf::<3>::SPEC, 3);
        assert_eq!(z.terminating_index(), None);
        assert_eq!(z.originating_index(), None);
        for k in 1..=5 {
            let e = V3::standard(Gf::<3>::SPEC, 5, k);
            assert_eq!(e.terminating_index(), Some(k));
            assert_eq!(e.originating_index(), Some(k));
        }
    }

    #[test]
    fn construction_checks() {
        let gf5 = FieldSpec::Prime(5);
        assert!(Vector::<Fp>::new(gf5, vec![]).is_err());
        assert!(Vector::<Fp>::new(gf5, vec![Fp::new(1, 7)]).is_err());
        assert!(Vector::<Gf<3>>::from_ints(gf5, &[1]).is_err());
        let v = Vector::<Fp>::new(gf5, vec![Fp::one(), Fp::new(3, 5)]).unwrap();
        assert_eq!(v.at(1).modulus(), Some(5));
        let w = Vector::<Fp>::from_ints(FieldSpec::Prime(7), &[1, 2]).unwrap();
        assert!(v.check_compatible(&w).is_err());
    }

    #[test]
    fn display_is_row_syntax() {
        let v = V3::from_ints(Gf::<3>::SPEC, &[0, -1, 4]).unwrap();
        assert_eq!(v.to_string(), "0 2 1");
        assert_eq!(format!("{v:?}"), "(0,2,1)");
    }
}
