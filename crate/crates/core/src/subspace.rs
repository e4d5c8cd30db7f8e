//! Subspaces of F^n in canonical form.
//!
//! A position `i` is *red* for a subspace W when some element of W terminates
//! (has its last nonzero entry) at `i`, and *lime* when some element originates
//! (has its first nonzero entry) there. For each red index `i` there is exactly
//! one element of W that terminates with a 1 at `i` and vanishes at every other
//! red position; these red-basic elements, listed by index, form the red basis.
//! Two subspaces are equal exactly when their red bases are, so [`Subspace`]
//! stores nothing else. The lime basis is the left-handed mirror and is
//! computed on demand.

use std::fmt;

use crate::error::{domain, usage, Result};
use crate::field::{Field, FieldSpec};
use crate::vector::Vector;

/// A subspace of F^n held as its red basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    spec: FieldSpec,
    ambient: usize,
    red_indices: Vec<usize>,
    basis: Vec<Vector<F>>,
}

/// The canonical lime basis of a subspace.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LimeBasis<F> {
    spec: FieldSpec,
    ambient: usize,
    lime_indices: Vec<usize>,
    vectors: Vec<Vector<F>>,
}

fn check_generators<F: Field>(spec: FieldSpec, n: usize, vs: &[Vector<F>]) -> Result<()> {
    if n == 0 {
        return usage("ambient dimension must be positive");
    }
    for v in vs {
        if v.spec() != spec {
            return usage(format!("vector over {} in a space over {spec}", v.spec()));
        }
        if v.len() != n {
            return usage(format!("vector of length {} in F^{n}", v.len()));
        }
    }
    Ok(())
}

/// Canonical red basis of the span of `generators` inside F^n.
///
/// Generators are absorbed one at a time: each is reduced against the current
/// basis at the red positions, scaled to terminate with 1, and then used to
/// clear its new red position from the existing basic elements. Zero vectors
/// and dependent generators leave the basis untouched.
pub fn span_red_basis<F: Field>(
    spec: FieldSpec,
    n: usize,
    generators: &[Vector<F>],
) -> Result<Subspace<F>> {
    if !F::supports(&spec) {
        return usage(format!("scalar type cannot represent field {spec}"));
    }
    check_generators(spec, n, generators)?;
    let mut w = Subspace::zero(spec, n);
    for g in generators {
        w.absorb(g.clone());
    }
    Ok(w)
}

impl<F: Field> Subspace<F> {
    /// The trivial subspace {O_n}.
    pub fn zero(spec: FieldSpec, n: usize) -> Self {
        assert!(n >= 1, "ambient dimension must be positive");
        Subspace {
            spec,
            ambient: n,
            red_indices: Vec::new(),
            basis: Vec::new(),
        }
    }

    /// F^n itself.
    pub fn full(spec: FieldSpec, n: usize) -> Self {
        Subspace {
            spec,
            ambient: n,
            red_indices: (1..=n).collect(),
            basis: (1..=n).map(|k| Vector::standard(spec, n, k)).collect(),
        }
    }

    /// Span of `generators`; shorthand for [`span_red_basis`].
    pub fn span(spec: FieldSpec, n: usize, generators: &[Vector<F>]) -> Result<Self> {
        span_red_basis(spec, n, generators)
    }

    /// Assembles a subspace from a basis already in canonical red form.
    pub(crate) fn from_canonical(
        spec: FieldSpec,
        ambient: usize,
        red_indices: Vec<usize>,
        basis: Vec<Vector<F>>,
    ) -> Self {
        let w = Subspace {
            spec,
            ambient,
            red_indices,
            basis,
        };
        debug_assert!(w.is_canonical(), "non-canonical red basis");
        w
    }

    /// Adds `g` to the spanning set. Returns whether the dimension grew.
    pub(crate) fn absorb(&mut self, mut g: Vector<F>) -> bool {
        for (i, w) in self.red_indices.iter().zip(&self.basis) {
            let c = g.at(*i).clone();
            g.sub_scaled(&c, w);
        }
        let Some(t) = g.terminating_index() else {
            return false;
        };
        let lead = g.at(t).inv().expect("terminating entry is nonzero");
        g.scale_in_place(&lead);
        // Only basic elements terminating past t can be nonzero at t.
        let slot = self.red_indices.partition_point(|&i| i < t);
        for w in &mut self.basis[slot..] {
            let c = w.at(t).clone();
            w.sub_scaled(&c, &g);
        }
        self.red_indices.insert(slot, t);
        self.basis.insert(slot, g);
        true
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    /// n, for a subspace of F^n.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Red indices in increasing order (1-based).
    pub fn red_indices(&self) -> &[usize] {
        &self.red_indices
    }

    /// Red-basic elements, ordered as [`Self::red_indices`].
    pub fn red_basis(&self) -> &[Vector<F>] {
        &self.basis
    }

    /// The red-basic element for red index `i`, if `i` is red.
    pub fn red_basic(&self, i: usize) -> Option<&Vector<F>> {
        self.red_indices
            .binary_search(&i)
            .ok()
            .map(|slot| &self.basis[slot])
    }

    pub fn is_red(&self, i: usize) -> bool {
        self.red_indices.binary_search(&i).is_ok()
    }

    /// Number of red positions, which is the dimension.
    pub fn dimension(&self) -> usize {
        self.red_indices.len()
    }

    pub fn is_zero(&self) -> bool {
        self.red_indices.is_empty()
    }

    fn check_vector(&self, x: &Vector<F>) -> Result<()> {
        check_generators(self.spec, self.ambient, std::slice::from_ref(x))
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.spec != other.spec || self.ambient != other.ambient {
            return usage(format!(
                "subspaces of different spaces: {}^{} vs {}^{}",
                self.spec, self.ambient, other.spec, other.ambient
            ));
        }
        Ok(())
    }

    /// The unique member with entries `a` at the red positions.
    pub fn element_from_red_entries(&self, a: &[F]) -> Result<Vector<F>> {
        if a.len() != self.dimension() {
            return usage(format!(
                "expected {} coefficients, got {}",
                self.dimension(),
                a.len()
            ));
        }
        let mut x = Vector::zero(self.spec, self.ambient);
        for (c, w) in a.iter().zip(&self.basis) {
            x.add_scaled(c, w);
        }
        Ok(x)
    }

    /// Membership: X lies in W iff X equals the combination of red-basic
    /// elements weighted by X's own red entries.
    pub fn contains(&self, x: &Vector<F>) -> Result<bool> {
        self.check_vector(x)?;
        let red: Vec<F> = self.red_indices.iter().map(|&i| x.at(i).clone()).collect();
        Ok(self.element_from_red_entries(&red)? == *x)
    }

    /// Coordinates of `x` in the red basis: its entries at the red positions.
    pub fn coordinates(&self, x: &Vector<F>) -> Result<Vec<F>> {
        if !self.contains(x)? {
            return domain(format!("{x:?} is not in the subspace"));
        }
        Ok(self.red_indices.iter().map(|&i| x.at(i).clone()).collect())
    }

    /// W ≤ V.
    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check_same_space(other)?;
        for w in &self.basis {
            if !other.contains(w)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Set equality, which for canonical forms is identity of red bases.
    pub fn same_as(&self, other: &Self) -> Result<bool> {
        self.check_same_space(other)?;
        Ok(self == other)
    }

    /// Canonical lime basis, built by absorbing the red basis with
    /// [`LimeBasis::append`].
    pub fn lime_basis(&self) -> LimeBasis<F> {
        let mut lb = LimeBasis::empty(self.spec, self.ambient);
        for w in &self.basis {
            lb.absorb(w.clone());
        }
        lb
    }

    /// Whether the stored basis satisfies the red canonical-form conditions.
    pub fn is_canonical(&self) -> bool {
        self.red_indices.len() == self.basis.len()
            && self.red_indices.windows(2).all(|w| w[0] < w[1])
            && self.red_indices.iter().zip(&self.basis).all(|(&i, w)| {
                w.len() == self.ambient
                    && w.spec() == self.spec
                    && w.terminating_index() == Some(i)
                    && w.at(i).is_one()
                    && self
                        .red_indices
                        .iter()
                        .all(|&j| j == i || w.at(j).is_zero())
            })
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace({}^{}, red {:?}, basis {:?})",
            self.spec, self.ambient, self.red_indices, self.basis
        )
    }
}

impl<F: Field> LimeBasis<F> {
    pub fn empty(spec: FieldSpec, n: usize) -> Self {
        LimeBasis {
            spec,
            ambient: n,
            lime_indices: Vec::new(),
            vectors: Vec::new(),
        }
    }

    pub(crate) fn from_canonical(
        spec: FieldSpec,
        ambient: usize,
        lime_indices: Vec<usize>,
        vectors: Vec<Vector<F>>,
    ) -> Self {
        let lb = LimeBasis {
            spec,
            ambient,
            lime_indices,
            vectors,
        };
        debug_assert!(lb.is_canonical(), "non-canonical lime basis");
        lb
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Lime indices in increasing order (1-based).
    pub fn indices(&self) -> &[usize] {
        &self.lime_indices
    }

    pub fn vectors(&self) -> &[Vector<F>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.lime_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lime_indices.is_empty()
    }

    pub fn is_lime(&self, i: usize) -> bool {
        self.lime_indices.binary_search(&i).is_ok()
    }

    pub fn lime_basic(&self, i: usize) -> Option<&Vector<F>> {
        self.lime_indices
            .binary_search(&i)
            .ok()
            .map(|slot| &self.vectors[slot])
    }

    /// The subspace these vectors span.
    pub fn span(&self) -> Subspace<F> {
        let mut w = Subspace::zero(self.spec, self.ambient);
        for v in &self.vectors {
            w.absorb(v.clone());
        }
        w
    }

    /// Lime basis of span(self ∪ {y}). Unchanged when `y` is already spanned;
    /// otherwise exactly one lime index is gained.
    pub fn append(&self, y: &Vector<F>) -> Result<Self> {
        check_generators(self.spec, self.ambient, std::slice::from_ref(y))?;
        let mut out = self.clone();
        out.absorb(y.clone());
        Ok(out)
    }

    /// In-place form of [`Self::append`]; returns whether a lime index was
    /// gained.
    pub(crate) fn absorb(&mut self, mut y: Vector<F>) -> bool {
        // Walk the leading entry of y off the existing lime positions.
        let lead = loop {
            let Some(o) = y.originating_index() else {
                return false;
            };
            match self.lime_indices.binary_search(&o) {
                Ok(slot) => {
                    let c = y.at(o).clone();
                    y.sub_scaled(&c, &self.vectors[slot]);
                }
                Err(_) => break o,
            }
        };
        let s = y.at(lead).inv().expect("originating entry is nonzero");
        y.scale_in_place(&s);
        let slot = self.lime_indices.partition_point(|&i| i < lead);
        // Remaining lime entries of y sit past `lead`.
        for (i, l) in self.lime_indices[slot..].iter().zip(&self.vectors[slot..]) {
            let c = y.at(*i).clone();
            y.sub_scaled(&c, l);
        }
        for l in &mut self.vectors[..slot] {
            let c = l.at(lead).clone();
            l.sub_scaled(&c, &y);
        }
        self.lime_indices.insert(slot, lead);
        self.vectors.insert(slot, y);
        true
    }

    pub fn is_canonical(&self) -> bool {
        self.lime_indices.len() == self.vectors.len()
            && self.lime_indices.windows(2).all(|w| w[0] < w[1])
            && self.lime_indices.iter().zip(&self.vectors).all(|(&i, v)| {
                v.len() == self.ambient
                    && v.spec() == self.spec
                    && v.originating_index() == Some(i)
                    && v.at(i).is_one()
                    && self
                        .lime_indices
                        .iter()
                        .all(|&j| j == i || v.at(j).is_zero())
            })
    }
}

impl<F: Field> fmt::Debug for LimeBasis<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LimeBasis({}^{}, lime {:?}, vectors {:?})",
            self.spec, self.ambient, self.lime_indices, self.vectors
        )
    }
}

/// Lime basis of span(basis ∪ {y}).
pub fn append_lime<F: Field>(basis: &LimeBasis<F>, y: &Vector<F>) -> Result<LimeBasis<F>> {
    basis.append(y)
}

/// Whether `list` is a coordinate system (basis) of `w`: it spans `w`, starts
/// with a nonzero vector, and no element is a combination of its
/// predecessors. Checked by growing the span one element at a time and
/// requiring the dimension to rise at every step.
pub fn is_coordinate_system<F: Field>(list: &[Vector<F>], w: &Subspace<F>) -> Result<bool> {
    check_generators(w.spec(), w.ambient(), list)?;
    let mut acc = Subspace::zero(w.spec(), w.ambient());
    for v in list {
        if !acc.absorb(v.clone()) {
            return Ok(false);
        }
    }
    Ok(acc == *w)
}
