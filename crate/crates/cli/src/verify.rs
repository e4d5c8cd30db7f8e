//! The `verify` subcommand: library results against oracles and theorems on
//! one input file.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use redlime::oracle::{
    brute_complement, brute_indices, brute_sub_terminal_sets, enumerate_span, textbook_rref, Budget,
};
use redlime::{
    complement, dot, is_feasible, signature, synthesize, truncate_right, Error, Field, Fp, Mark,
    Matrix, MatrixFile, Result, Signature, Subspace, Vector,
};

enum Status {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Default)]
pub struct Report {
    lines: Vec<(&'static str, Status)>,
}

impl Report {
    fn record(&mut self, name: &'static str, outcome: Result<Option<String>>) {
        let status = match outcome {
            Ok(None) => Status::Pass,
            Ok(Some(why)) => Status::Fail(why),
            Err(Error::Resource(why)) => Status::Skip(why),
            Err(e) => Status::Fail(e.to_string()),
        };
        self.lines.push((name, status));
    }

    pub fn all_passed(&self) -> bool {
        !self.lines.iter().any(|(_, s)| matches!(s, Status::Fail(_)))
    }

    pub fn render(&self, seed: u64) -> String {
        let mut out = format!("seed: {seed}\n");
        let (mut pass, mut fail, mut skip) = (0, 0, 0);
        for (name, status) in &self.lines {
            match status {
                Status::Pass => {
                    pass += 1;
                    writeln!(out, "PASS {name}").unwrap();
                }
                Status::Fail(why) => {
                    fail += 1;
                    writeln!(out, "FAIL {name}: {why}").unwrap();
                }
                Status::Skip(why) => {
                    skip += 1;
                    writeln!(out, "SKIP {name}: {why}").unwrap();
                }
            }
        }
        writeln!(out, "summary: {pass} passed, {fail} failed, {skip} skipped").unwrap();
        out
    }
}

/// `None` when `ok`, otherwise the message.
fn expect(ok: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(msg)
}

fn index_set(indices: &[usize]) -> BTreeSet<usize> {
    indices.iter().copied().collect()
}

/// Checks that need no enumeration, for any field.
pub fn common<F: Field>(file: &MatrixFile, seed: u64) -> Result<Report> {
    let a: Matrix<F> = file.to_matrix()?;
    let w = a.row_space();
    let mut report = Report::default();
    report.record("canonical form", Ok(canonical_form(&a, &w)));
    report.record("rank theory", Ok(rank_theory(&a)));
    report.record("rref against textbook reduction", Ok(rref_oracle(&a)));
    report.record("duality", duality(&w));
    report.record("factorizations", factorizations(&a));
    report.record("signature", signature_checks(&w));
    report.record("truncation", truncation(&w));
    report.record("random members", random_members(&a, &w, seed));
    Ok(report)
}

fn canonical_form<F: Field>(a: &Matrix<F>, w: &Subspace<F>) -> Option<String> {
    let lime = w.lime_basis();
    if !w.is_canonical() || !lime.is_canonical() {
        return Some("basis is not in canonical form".into());
    }
    if lime.len() != w.dimension() {
        return Some(format!(
            "{} lime vs {} red indices",
            lime.len(),
            w.dimension()
        ));
    }
    if lime.span() != *w {
        return Some("lime basis spans a different subspace".into());
    }
    a.rows()
        .iter()
        .find(|r| !w.contains(r).unwrap_or(false))
        .map(|r| format!("generator {r:?} missing from the span"))
}

fn rank_theory<F: Field>(a: &Matrix<F>) -> Option<String> {
    let r = a.rank();
    if r != a.transpose().rank() {
        return Some("rank(A) differs from rank(Aᵀ)".into());
    }
    if r + a.nullity() != a.ncols() {
        return Some("rank + nullity differs from the column count".into());
    }
    let (via_null, via_prefix) = (a.dependent_columns(), a.dependent_columns_by_prefix());
    expect(via_null == via_prefix, || {
        format!("dependent columns {via_null:?} vs {via_prefix:?}")
    })
}

fn rref_oracle<F: Field>(a: &Matrix<F>) -> Option<String> {
    let (rref, textbook) = (a.rref(), textbook_rref(a));
    if rref != textbook {
        return Some(format!("rref\n{rref}\ntextbook\n{textbook}"));
    }
    if rref.rref() != rref || rref.row_space() != a.row_space() {
        return Some("rref is not idempotent or changes the row space".into());
    }
    expect(a.rcef() == a.transpose().rref().transpose(), || {
        "rcef differs from transposed rref".into()
    })
}

fn duality<F: Field>(w: &Subspace<F>) -> Result<Option<String>> {
    let n = w.ambient();
    let perp = complement(w);
    let all: BTreeSet<usize> = (1..=n).collect();
    if index_set(perp.lime_basis().indices()) != &all - &index_set(w.red_indices()) {
        return Ok(Some(
            "lime indices of the complement are not the non-red indices".into(),
        ));
    }
    if index_set(perp.red_indices()) != &all - &index_set(w.lime_basis().indices()) {
        return Ok(Some(
            "red indices of the complement are not the non-lime indices".into(),
        ));
    }
    if w.dimension() + perp.dimension() != n || complement(&perp) != *w {
        return Ok(Some("dimension count or double complement fails".into()));
    }
    for z in perp.red_basis() {
        for b in w.red_basis() {
            if !dot(z, b)?.is_zero() {
                return Ok(Some(format!("{z:?} is not orthogonal to {b:?}")));
            }
        }
    }
    Ok(None)
}

fn factorizations<F: Field>(a: &Matrix<F>) -> Result<Option<String>> {
    if a.is_zero() {
        return Err(Error::Resource(
            "the zero matrix has no factorizations".into(),
        ));
    }
    let r = a.rank();
    let f = a.full_rank_factorization()?;
    if f.b.mul(&f.g)? != *a || f.b.rank() != r || f.g.rank() != r {
        return Ok(Some("full rank factorization".into()));
    }
    for complete in [false, true] {
        let (c, s) = a.rcef_factorization(complete)?;
        if c.mul(&s)? != *a || (complete && !s.is_invertible()) {
            return Ok(Some(format!("rcef factorization (complete = {complete})")));
        }
        let (t, rr) = a.rref_factorization(complete)?;
        if t.mul(&rr)? != *a || (complete && !t.is_invertible()) {
            return Ok(Some(format!("rref factorization (complete = {complete})")));
        }
    }
    Ok(None)
}

fn signature_checks<F: Field>(w: &Subspace<F>) -> Result<Option<String>> {
    let sig = signature(w);
    let n = w.ambient();
    if sig.at(1) == Mark::Rho || sig.at(n) == Mark::Lambda {
        return Ok(Some(format!("{sig} violates the end-position exclusions")));
    }
    let beta = sig.count(Mark::Beta);
    if beta + sig.count(Mark::Rho) != w.dimension()
        || beta + sig.count(Mark::Lambda) != w.dimension()
    {
        return Ok(Some(format!("{sig} has the wrong mark counts")));
    }
    if !is_feasible(&sig) {
        return Ok(Some(format!("{sig} is realized but judged infeasible")));
    }
    let witness: Subspace<F> = synthesize(&sig, w.spec())?;
    Ok(expect(signature(&witness) == sig, || {
        format!("synthesized witness has signature {}", signature(&witness))
    }))
}

/// Case analysis for dropping the last position.
pub fn truncation_consistent(before: &Signature, after: &Signature) -> bool {
    let n = before.len();
    let head = &before.marks()[..n - 1];
    match before.at(n) {
        Mark::Beta | Mark::Nu => after.marks() == head,
        Mark::Rho => {
            let changes: Vec<(Mark, Mark)> = head
                .iter()
                .zip(after.marks())
                .filter(|(x, y)| x != y)
                .map(|(x, y)| (*x, *y))
                .collect();
            matches!(
                changes.as_slice(),
                [(Mark::Nu, Mark::Rho)] | [(Mark::Lambda, Mark::Beta)]
            )
        }
        Mark::Lambda => false,
    }
}

fn truncation<F: Field>(w: &Subspace<F>) -> Result<Option<String>> {
    if w.ambient() < 2 {
        return Err(Error::Resource("nothing to truncate in F^1".into()));
    }
    let (before, after) = (signature(w), signature(&truncate_right(w)?));
    Ok(expect(truncation_consistent(&before, &after), || {
        format!("{before} truncates to {after}")
    }))
}

fn random_members<F: Field>(a: &Matrix<F>, w: &Subspace<F>, seed: u64) -> Result<Option<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = a.spec();
    let small = |rng: &mut ChaCha8Rng| F::from_i64(rng.gen_range(-3..=3), &spec);
    let rows = a.rows();
    for _ in 0..100 {
        let mut x = Vector::zero(spec, a.ncols());
        for r in &rows {
            x.add_scaled(&small(&mut rng), r);
        }
        let coords = w.coordinates(&x)?;
        if w.element_from_red_entries(&coords)? != x {
            return Ok(Some(format!("coordinates of {x:?} do not rebuild it")));
        }
    }
    let mut b = a.clone();
    let n = b.nrows();
    for _ in 0..100 {
        let i = rng.gen_range(1..=n);
        match rng.gen_range(0..3) {
            0 => b.swap_rows(i, rng.gen_range(1..=n)),
            1 => {
                let mut c = small(&mut rng);
                if c.is_zero() {
                    c = F::one().bind(&spec);
                }
                b.scale_row(i, &c);
            }
            _ => {
                let j = rng.gen_range(1..=n);
                if j != i {
                    b.add_row_multiple(i, j, &small(&mut rng));
                }
            }
        }
    }
    Ok(expect(b.rref() == a.rref(), || {
        "rref changed under row operations".into()
    }))
}

/// Enumeration-based checks, for prime fields.
pub fn finite(file: &MatrixFile, report: &mut Report) -> Result<()> {
    let a: Matrix<Fp> = file.to_matrix()?;
    let (spec, n) = (file.spec, a.ncols());
    let w = a.row_space();
    let gens = a.rows();
    let budget = Budget::default();

    report.record(
        "brute-force indices",
        brute_indices(spec, n, &gens, budget).map(|b| {
            expect(
                b.red == index_set(w.red_indices())
                    && b.lime == index_set(w.lime_basis().indices())
                    && b.signature == signature(&w),
                || format!("oracle found red {:?}, lime {:?}", b.red, b.lime),
            )
        }),
    );
    report.record(
        "brute-force complement",
        brute_complement(spec, n, &gens, budget).and_then(|brute| {
            let fast = enumerate_span(spec, n, complement(&w).red_basis(), budget)?;
            Ok(expect(brute == fast, || {
                format!(
                    "oracle complement has {} members, read-off {}",
                    brute.len(),
                    fast.len()
                )
            }))
        }),
    );
    report.record(
        "sub-terminal structure",
        brute_sub_terminal_sets(spec, n, &gens, budget).map(|sets| {
            let reds = index_set(w.red_indices());
            for (&i, found) in &sets {
                let j = redlime::sub_terminal_index(w.red_basic(i).expect("i is red"));
                let mut expected: BTreeSet<usize> =
                    reds.iter().copied().filter(|&k| k > j && k < i).collect();
                expected.insert(j);
                if *found != expected {
                    return Some(format!(
                        "at red index {i}: {found:?}, expected {expected:?}"
                    ));
                }
            }
            None
        }),
    );
    Ok(())
}
