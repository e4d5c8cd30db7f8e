//! Per-position classification of a subspace by red and lime status.
//!
//! Each position of a subspace W of F^n is marked
//!
//! | mark | text | red | lime |
//! |------|------|-----|------|
//! | ρ    | `r`  | yes | no   |
//! | λ    | `l`  | no  | yes  |
//! | β    | `b`  | yes | yes  |
//! | ν    | `n`  | no  | no   |
//!
//! A mark string is realized by some subspace exactly when it has as many λ as
//! ρ and every λ has strictly more ρ than λ to its right; that is, λ and ρ
//! pair up like matched parentheses. [`synthesize`] builds a witness by
//! pairing them with a stack.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, usage, Error, Result};
use crate::field::{Field, FieldSpec};
use crate::subspace::{span_red_basis, Subspace};
use crate::vector::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    /// Red only.
    Rho,
    /// Lime only.
    Lambda,
    /// Both red and lime.
    Beta,
    /// Neither.
    Nu,
}

impl Mark {
    pub const ALL: [Mark; 4] = [Mark::Rho, Mark::Lambda, Mark::Beta, Mark::Nu];

    pub fn from_status(red: bool, lime: bool) -> Self {
        match (red, lime) {
            (true, true) => Mark::Beta,
            (true, false) => Mark::Rho,
            (false, true) => Mark::Lambda,
            (false, false) => Mark::Nu,
        }
    }

    pub fn is_red(self) -> bool {
        matches!(self, Mark::Rho | Mark::Beta)
    }

    pub fn is_lime(self) -> bool {
        matches!(self, Mark::Lambda | Mark::Beta)
    }

    pub fn letter(self) -> char {
        match self {
            Mark::Rho => 'r',
            Mark::Lambda => 'l',
            Mark::Beta => 'b',
            Mark::Nu => 'n',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'r' => Mark::Rho,
            'l' => Mark::Lambda,
            'b' => Mark::Beta,
            'n' => Mark::Nu,
            _ => return None,
        })
    }
}

/// A string of marks, one per position. Any string is representable;
/// whether a subspace realizes it is [`is_feasible`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<Mark>);

impl Signature {
    pub fn new(marks: Vec<Mark>) -> Self {
        Signature(marks)
    }

    pub fn marks(&self) -> &[Mark] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Mark at a 1-based position.
    pub fn at(&self, pos: usize) -> Mark {
        self.0[pos - 1]
    }

    pub fn count(&self, mark: Mark) -> usize {
        self.0.iter().filter(|&&m| m == mark).count()
    }

    /// Every mark string of length `n`, in lexicographic order of [`Mark`].
    pub fn all_of_length(n: usize) -> impl Iterator<Item = Signature> {
        let total = 4usize.pow(n as u32);
        (0..total).map(move |mut code| {
            let mut marks = vec![Mark::Rho; n];
            for slot in marks.iter_mut().rev() {
                *slot = Mark::ALL[code % 4];
                code /= 4;
            }
            Signature(marks)
        })
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.0 {
            write!(f, "{}", m.letter())?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Parse("empty signature".into()));
        }
        s.chars()
            .map(|c| {
                Mark::from_letter(c)
                    .ok_or_else(|| Error::Parse(format!("invalid mark `{c}`, expected r/l/b/n")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Signature)
    }
}

/// A bijection of {1..n}, stored as the image of each position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// `images[p-1]` is where position `p` goes.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if !(1..=n).contains(&i) || std::mem::replace(&mut seen[i - 1], true) {
                return usage(format!("{images:?} is not a permutation of 1..={n}"));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, pos: usize) -> usize {
        self.0[pos - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Moves the entry at position p to position image(p).
    pub fn apply<F: Field>(&self, v: &Vector<F>) -> Result<Vector<F>> {
        if v.len() != self.len() {
            return usage("permutation and vector lengths differ");
        }
        let mut out = v.entries().to_vec();
        for (p, e) in v.entries().iter().enumerate() {
            out[self.0[p] - 1] = e.clone();
        }
        Vector::new(v.spec(), out)
    }
}

/// Position of the second-to-last nonzero entry, or 0 when there are fewer
/// than two nonzero entries.
pub fn sub_terminal_index<F: Field>(v: &Vector<F>) -> usize {
    v.entries()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, e)| !e.is_zero())
        .nth(1)
        .map_or(0, |(p, _)| p + 1)
}

pub fn signature<F: Field>(w: &Subspace<F>) -> Signature {
    let lime = w.lime_basis();
    Signature(
        (1..=w.ambient())
            .map(|p| Mark::from_status(w.is_red(p), lime.is_lime(p)))
            .collect(),
    )
}

/// Drops the last coordinate of every element of W, giving a subspace of
/// F^{n-1}.
pub fn truncate_right<F: Field>(w: &Subspace<F>) -> Result<Subspace<F>> {
    if w.ambient() <= 1 {
        return usage("cannot truncate F^1");
    }
    let truncated: Vec<Vector<F>> = w
        .red_basis()
        .iter()
        .map(|v| v.truncated().expect("ambient exceeds one"))
        .collect();
    span_red_basis(w.spec(), w.ambient() - 1, &truncated)
}

/// Equal numbers of λ and ρ, and strictly more ρ than λ to the right of
/// every λ.
pub fn is_feasible(sig: &Signature) -> bool {
    // Scan right to left keeping #ρ - #λ over the suffix seen so far.
    let mut surplus: i64 = 0;
    for &m in sig.marks().iter().rev() {
        match m {
            Mark::Lambda => {
                if surplus <= 0 {
                    return false;
                }
                surplus -= 1;
            }
            Mark::Rho => surplus += 1,
            Mark::Beta | Mark::Nu => {}
        }
    }
    surplus == 0
}

/// The coefficient pattern used by [`synthesize`]: entry `p` is `Some(k)` when
/// position `p` carries free variable `k`, `None` for the constant 0.
pub fn coefficient_pattern(sig: &Signature) -> Result<Vec<Option<usize>>> {
    if !is_feasible(sig) {
        return domain(format!("signature `{sig}` is not realizable"));
    }
    let mut pattern = vec![None; sig.len()];
    let mut open: Vec<usize> = Vec::new();
    let mut next = 0;
    for (p, &m) in sig.marks().iter().enumerate() {
        match m {
            Mark::Nu => {}
            Mark::Beta => {
                pattern[p] = Some(next);
                next += 1;
            }
            Mark::Lambda => {
                pattern[p] = Some(next);
                open.push(next);
                next += 1;
            }
            Mark::Rho => {
                let var = open.pop().expect("feasible signatures are balanced");
                pattern[p] = Some(var);
            }
        }
    }
    Ok(pattern)
}

/// Generators of the subspace described by a coefficient pattern: one
/// indicator vector per variable.
pub fn pattern_generators<F: Field>(
    spec: FieldSpec,
    pattern: &[Option<usize>],
) -> Result<Vec<Vector<F>>> {
    let vars = pattern.iter().flatten().max().map_or(0, |&k| k + 1);
    (0..vars)
        .map(|k| {
            let entries = pattern
                .iter()
                .map(|slot| {
                    if *slot == Some(k) {
                        F::one().bind(&spec)
                    } else {
                        F::zero().bind(&spec)
                    }
                })
                .collect();
            Vector::new(spec, entries)
        })
        .collect()
}

/// A subspace whose signature is `sig`. ν positions are constant zero, each
/// β position gets its own variable, and each λ shares a variable with the
/// ρ that closes it under stack matching.
pub fn synthesize<F: Field>(sig: &Signature, spec: FieldSpec) -> Result<Subspace<F>> {
    if sig.is_empty() {
        return usage("signature must have at least one position");
    }
    let pattern = coefficient_pattern(sig)?;
    let gens = pattern_generators(spec, &pattern)?;
    span_red_basis(spec, sig.len(), &gens)
}

/// Moves `positions` to the end (keeping relative order inside both blocks)
/// and returns the permutation with the image of W. Requires W restricted to
/// those positions to be all of F^k, in which case the last k positions are
/// red in the image.
pub fn permute_presenting_positions<F: Field>(
    w: &Subspace<F>,
    positions: &[usize],
) -> Result<(Permutation, Subspace<F>)> {
    let n = w.ambient();
    let mut chosen = positions.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    if chosen.len() != positions.len() || chosen.iter().any(|&p| !(1..=n).contains(&p)) {
        return usage(format!(
            "positions {positions:?} must be distinct and within 1..={n}"
        ));
    }
    let k = chosen.len();
    if k == 0 {
        return usage("at least one position is required");
    }
    let restricted: Vec<Vector<F>> = w
        .red_basis()
        .iter()
        .map(|v| Vector::new(w.spec(), chosen.iter().map(|&p| v.at(p).clone()).collect()))
        .collect::<Result<_>>()?;
    if span_red_basis(w.spec(), k, &restricted)?.dimension() != k {
        return domain(format!(
            "the subspace does not present as F^{k} on {chosen:?}"
        ));
    }
    let mut images = vec![0; n];
    let rest = (1..=n).filter(|p| chosen.binary_search(p).is_err());
    for (slot, p) in rest.chain(chosen.iter().copied()).enumerate() {
        images[p - 1] = slot + 1;
    }
    let perm = Permutation::new(images)?;
    let moved: Vec<Vector<F>> = w
        .red_basis()
        .iter()
        .map(|v| perm.apply(v))
        .collect::<Result<_>>()?;
    let image = span_red_basis(w.spec(), n, &moved)?;
    Ok((perm, image))
}
