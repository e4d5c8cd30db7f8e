//! Orthogonal complements under the standard bilinear form X•Y = Σ X(p)Y(p).
//!
//! No linear system is solved here. The non-red indices of W are exactly the
//! lime indices of W•, and the lime-basic element of W• at a non-red index
//! `o` can be written down from the red basis of W: put 1 at `o` and
//! `-W_i(o)` at every red index `i > o`. The mirrored statement (non-lime
//! indices of W are the red indices of W•) gives the red basis of W•, which is
//! how [`complement`] produces canonical output directly.

use crate::error::Result;
use crate::field::Field;
use crate::subspace::{LimeBasis, Subspace};
use crate::vector::Vector;

/// Standard symmetric bilinear form.
pub fn dot<F: Field>(x: &Vector<F>, y: &Vector<F>) -> Result<F> {
    x.check_compatible(y)?;
    Ok(x.entries()
        .iter()
        .zip(y.entries())
        .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        .bind(&x.spec()))
}

/// Lime basis of W•, read off the red basis of W.
pub fn lime_of_complement_from_red<F: Field>(w: &Subspace<F>) -> LimeBasis<F> {
    let (spec, n) = (w.spec(), w.ambient());
    let mut indices = Vec::with_capacity(n - w.dimension());
    let mut vectors = Vec::with_capacity(n - w.dimension());
    for o in (1..=n).filter(|&o| !w.is_red(o)) {
        let mut z = vec![F::zero().bind(&spec); n];
        z[o - 1] = F::one().bind(&spec);
        for (&i, basic) in w.red_indices().iter().zip(w.red_basis()) {
            if i > o {
                z[i - 1] = -basic.at(o).clone();
            }
        }
        indices.push(o);
        vectors.push(Vector::from_raw(spec, z));
    }
    LimeBasis::from_canonical(spec, n, indices, vectors)
}

/// Red basis of W•, read off the lime basis of W.
pub fn red_of_complement_from_lime<F: Field>(w: &Subspace<F>) -> Subspace<F> {
    let (spec, n) = (w.spec(), w.ambient());
    let lime = w.lime_basis();
    let mut indices = Vec::with_capacity(n - lime.len());
    let mut vectors = Vec::with_capacity(n - lime.len());
    for o in (1..=n).filter(|&o| !lime.is_lime(o)) {
        let mut z = vec![F::zero().bind(&spec); n];
        z[o - 1] = F::one().bind(&spec);
        for (&i, basic) in lime.indices().iter().zip(lime.vectors()) {
            if i < o {
                z[i - 1] = -basic.at(o).clone();
            }
        }
        indices.push(o);
        vectors.push(Vector::from_raw(spec, z));
    }
    Subspace::from_canonical(spec, n, indices, vectors)
}

/// W• = {X : X•Y = 0 for all Y in W}, in canonical red form.
pub fn complement<F: Field>(w: &Subspace<F>) -> Subspace<F> {
    red_of_complement_from_lime(w)
}
