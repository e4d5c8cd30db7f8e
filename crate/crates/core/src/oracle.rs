//! Brute-force ground truth over finite fields.
//!
//! Everything here works straight from definitions: spans are enumerated
//! element by element, red and lime indices are read off the enumerated
//! members, complements are found by filtering all of F^n, and row reduction
//! is classical Gauss-Jordan. None of it goes through the canonical-basis
//! machinery it is meant to check, except that [`enumerate_subspaces`] hands
//! out its results in canonical form.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, FiniteField};
use crate::matrix::Matrix;
use crate::signature::{sub_terminal_index, Mark, Signature};
use crate::subspace::{span_red_basis, Subspace};
use crate::vector::Vector;

/// Cap on the number of vectors (or subspaces) an enumeration may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(1_000_000)
    }
}

impl Budget {
    fn check(self, needed: u128, what: &str) -> Result<()> {
        if needed > self.0 as u128 {
            return Err(Error::Resource(format!(
                "{what} needs {needed} items, budget is {}",
                self.0
            )));
        }
        Ok(())
    }
}

fn field_order(spec: &FieldSpec) -> Result<u64> {
    spec.order()
        .ok_or_else(|| Error::Usage("enumeration needs a finite field".into()))
}

fn check_vectors<F: Field>(spec: FieldSpec, n: usize, vs: &[Vector<F>]) -> Result<()> {
    if n == 0 {
        return Err(Error::Usage("ambient dimension must be positive".into()));
    }
    match vs.iter().find(|v| v.spec() != spec || v.len() != n) {
        Some(v) => Err(Error::Usage(format!("{v:?} is not in {spec}^{n}"))),
        None => Ok(()),
    }
}

/// Every linear combination of `generators`.
pub fn enumerate_span<F: FiniteField>(
    spec: FieldSpec,
    n: usize,
    generators: &[Vector<F>],
    budget: Budget,
) -> Result<HashSet<Vector<F>>> {
    let p = field_order(&spec)?;
    check_vectors(spec, n, generators)?;
    let scalars = F::elements(&spec);
    let mut members: HashSet<Vector<F>> = HashSet::new();
    members.insert(Vector::zero(spec, n));
    for g in generators {
        if members.contains(g) {
            continue;
        }
        budget.check(members.len() as u128 * p as u128, "span enumeration")?;
        let mut next = HashSet::with_capacity(members.len() * p as usize);
        for m in &members {
            for c in &scalars {
                let mut v = m.clone();
                v.add_scaled(c, g);
                next.insert(v);
            }
        }
        members = next;
    }
    Ok(members)
}

/// Red set, lime set and signature of span(generators), read off its members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteIndices {
    pub red: BTreeSet<usize>,
    pub lime: BTreeSet<usize>,
    pub signature: Signature,
}

pub fn brute_indices<F: FiniteField>(
    spec: FieldSpec,
    n: usize,
    generators: &[Vector<F>],
    budget: Budget,
) -> Result<BruteIndices> {
    let members = enumerate_span(spec, n, generators, budget)?;
    let red: BTreeSet<usize> = members
        .iter()
        .filter_map(|v| v.terminating_index())
        .collect();
    let lime: BTreeSet<usize> = members
        .iter()
        .filter_map(|v| v.originating_index())
        .collect();
    let signature = Signature::new(
        (1..=n)
            .map(|p| Mark::from_status(red.contains(&p), lime.contains(&p)))
            .collect(),
    );
    Ok(BruteIndices {
        red,
        lime,
        signature,
    })
}

/// All of F^n, in lexicographic order of entries.
pub fn all_vectors<F: FiniteField>(
    spec: FieldSpec,
    n: usize,
    budget: Budget,
) -> Result<Vec<Vector<F>>> {
    let p = field_order(&spec)?;
    budget.check((p as u128).saturating_pow(n as u32), "listing F^n")?;
    let scalars = F::elements(&spec);
    let total = (p as usize).pow(n as u32);
    Ok((0..total)
        .map(|mut code| {
            let mut entries = vec![scalars[0].clone(); n];
            for slot in entries.iter_mut().rev() {
                *slot = scalars[code % p as usize].clone();
                code /= p as usize;
            }
            Vector::from_raw(spec, entries)
        })
        .collect())
}

/// {X in F^n : X•g = 0 for every generator g}, by filtering all of F^n.
pub fn brute_complement<F: FiniteField>(
    spec: FieldSpec,
    n: usize,
    generators: &[Vector<F>],
    budget: Budget,
) -> Result<HashSet<Vector<F>>> {
    check_vectors(spec, n, generators)?;
    let dot = |x: &Vector<F>, y: &Vector<F>| {
        x.entries()
            .iter()
            .zip(y.entries())
            .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    };
    Ok(all_vectors(spec, n, budget)?
        .into_iter()
        .filter(|x| generators.iter().all(|g| dot(x, g).is_zero()))
        .collect())
}

/// Number of k-dimensional subspaces of GF(q)^n, by the product formula.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// Total number of subspaces of GF(q)^n.
pub fn subspace_count(n: u32, q: u64) -> u128 {
    (0..=n).map(|k| gaussian_binomial(n, k, q)).sum()
}

/// Every subspace of GF(p)^n exactly once.
///
/// Walks the RREF shapes: for each set of pivot columns, the entries of each
/// pivot row to the right of its pivot and outside pivot columns are free.
/// Each filling is emitted as the span of its rows.
pub fn enumerate_subspaces<F: FiniteField>(
    spec: FieldSpec,
    n: usize,
    budget: Budget,
) -> Result<impl Iterator<Item = Subspace<F>>> {
    let p = field_order(&spec)?;
    if n == 0 || n >= usize::BITS as usize {
        return Err(Error::Usage(format!("unsupported ambient dimension {n}")));
    }
    let mut shapes = Vec::new();
    let mut total: u128 = 0;
    for mask in 0u64..(1 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&c| mask & (1 << c) != 0).collect();
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| {
                let pivots = &pivots;
                (c + 1..n)
                    .filter(move |j| !pivots.contains(j))
                    .map(move |j| (r, j))
            })
            .collect();
        total += (p as u128).saturating_pow(free.len() as u32);
        budget.check(total, "subspace enumeration")?;
        shapes.push((pivots, free));
    }
    let scalars = F::elements(&spec);
    Ok(shapes.into_iter().flat_map(move |(pivots, free)| {
        let scalars = scalars.clone();
        let fillings = (p as usize).pow(free.len() as u32);
        (0..fillings).map(move |mut code| {
            let mut rows: Vec<Vec<F>> = pivots
                .iter()
                .map(|&c| {
                    let mut row = vec![F::zero().bind(&spec); n];
                    row[c] = F::one().bind(&spec);
                    row
                })
                .collect();
            for &(r, j) in &free {
                rows[r][j] = scalars[code % p as usize].clone();
                code /= p as usize;
            }
            let gens: Vec<Vector<F>> = rows
                .into_iter()
                .map(|r| Vector::from_raw(spec, r))
                .collect();
            span_red_basis(spec, n, &gens).expect("rows are well-formed")
        })
    }))
}

/// Classical Gauss-Jordan: pick the first nonzero entry in the column as the
/// pivot, swap it up, scale to 1, and clear the column above and below.
#[allow(clippy::needless_range_loop)]
pub fn textbook_rref<F: Field>(a: &Matrix<F>) -> Matrix<F> {
    let spec = a.spec();
    let (n, m) = (a.nrows(), a.ncols());
    let mut rows: Vec<Vec<F>> = a.rows().into_iter().map(Vector::into_entries).collect();
    let mut pivot_row = 0;
    for col in 0..m {
        if pivot_row == n {
            break;
        }
        let Some(found) = (pivot_row..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let s = rows[pivot_row][col].inv().expect("pivot is nonzero");
        for e in &mut rows[pivot_row] {
            *e = e.clone() * s.clone();
        }
        for r in 0..n {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let c = rows[r][col].clone();
            for j in 0..m {
                let sub = c.clone() * rows[pivot_row][j].clone();
                rows[r][j] = rows[r][j].clone() - sub;
            }
        }
        pivot_row += 1;
    }
    Matrix::from_rows(spec, rows).expect("shape is unchanged")
}

/// For each red index i of span(generators), the set of sub-terminal indices
/// of members terminating at i.
pub fn brute_sub_terminal_sets<F: FiniteField>(
    spec: FieldSpec,
    n: usize,
    generators: &[Vector<F>],
    budget: Budget,
) -> Result<BTreeMap<usize, BTreeSet<usize>>> {
    let mut out: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for v in enumerate_span(spec, n, generators, budget)? {
        if let Some(t) = v.terminating_index() {
            out.entry(t).or_default().insert(sub_terminal_index(&v));
        }
    }
    Ok(out)
}

/// Definition-level basis test: every member of span(target) is hit by
/// exactly one coefficient tuple over `list`, and nothing else is hit.
pub fn brute_is_coordinate_system<F: FiniteField>(
    spec: FieldSpec,
    n: usize,
    list: &[Vector<F>],
    target: &[Vector<F>],
    budget: Budget,
) -> Result<bool> {
    check_vectors(spec, n, list)?;
    let p = field_order(&spec)?;
    let members = enumerate_span(spec, n, target, budget)?;
    budget.check(
        (p as u128).saturating_pow(list.len() as u32),
        "coefficient tuples",
    )?;
    let scalars = F::elements(&spec);
    let mut hits: HashSet<Vector<F>> = HashSet::new();
    for mut code in 0..(p as usize).pow(list.len() as u32) {
        let mut v = Vector::zero(spec, n);
        for g in list {
            v.add_scaled(&scalars[code % p as usize], g);
            code /= p as usize;
        }
        if !members.contains(&v) || !hits.insert(v) {
            return Ok(false);
        }
    }
    Ok(hits.len() == members.len())
}
