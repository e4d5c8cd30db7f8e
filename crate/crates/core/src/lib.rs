//! Exact linear algebra over Q and GF(p) built on canonical red/lime bases.
//!
//! A subspace W of F^n is stored as its red basis: for every position where
//! some element of W terminates, the unique element terminating there with a 1
//! and vanishing at the other such positions. From that one form the crate
//! derives membership and coordinates, dimension, orthogonal complements by
//! read-off, rank and nullity, RREF/RCEF and the full-rank factorizations, and
//! the ρ/λ/β/ν signature of a subspace. The [`oracle`] module rechecks all of
//! it by brute force over small finite fields.
//!
//! All types are generic over [`Field`]; the aliases below cover the common
//! instantiations.

pub mod duality;
pub mod error;
pub mod field;
pub mod format;
pub mod matrix;
pub mod oracle;
pub mod signature;
pub mod subspace;
pub mod vector;

pub use duality::{complement, dot, lime_of_complement_from_red, red_of_complement_from_lime};
pub use error::{Error, Result};
pub use field::{
    parse_scalar, scalar_arith, scalar_inv, ArithOp, Field, FieldSpec, FiniteField, Fp, Gf,
    Rational,
};
pub use format::MatrixFile;
pub use matrix::{extend_rows_to_invertible, FullRankFactors, Matrix};
pub use signature::{
    is_feasible, permute_presenting_positions, signature, sub_terminal_index, synthesize,
    truncate_right, Mark, Permutation, Signature,
};
pub use subspace::{append_lime, is_coordinate_system, span_red_basis, LimeBasis, Subspace};
pub use vector::Vector;

pub type Gf2 = Gf<2>;
pub type Gf3 = Gf<3>;
pub type Gf5 = Gf<5>;

pub type RationalVector = Vector<Rational>;
pub type RationalMatrix = Matrix<Rational>;
pub type RationalSubspace = Subspace<Rational>;

pub type Gf2Vector = Vector<Gf2>;
pub type Gf2Matrix = Matrix<Gf2>;
pub type Gf2Subspace = Subspace<Gf2>;

pub type FpVector = Vector<Fp>;
pub type FpMatrix = Matrix<Fp>;
pub type FpSubspace = Subspace<Fp>;
