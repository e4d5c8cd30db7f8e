#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use redlime::{Field, FieldSpec, Gf, Matrix, Rational, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random scalars with a bias towards zero so that random spans are not
/// always everything.
pub trait RandomScalar: Field {
    fn random(rng: &mut ChaCha8Rng, spec: &FieldSpec) -> Self;
}

impl<const P: u64> RandomScalar for Gf<P> {
    fn random(rng: &mut ChaCha8Rng, _spec: &FieldSpec) -> Self {
        if rng.gen_bool(0.3) {
            Gf::new(0)
        } else {
            Gf::new(rng.gen_range(0..P as i64))
        }
    }
}

impl RandomScalar for redlime::Fp {
    fn random(rng: &mut ChaCha8Rng, spec: &FieldSpec) -> Self {
        let p = spec.order().unwrap() as i64;
        if rng.gen_bool(0.3) {
            redlime::Fp::new(0, p as u64)
        } else {
            redlime::Fp::new(rng.gen_range(0..p), p as u64)
        }
    }
}

impl RandomScalar for Rational {
    fn random(rng: &mut ChaCha8Rng, _spec: &FieldSpec) -> Self {
        if rng.gen_bool(0.3) {
            return Rational::from_integer(0.into());
        }
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = rng.gen_range(1..=4);
        Rational::new(num.into(), den.into())
    }
}

pub fn random_vector<F: RandomScalar>(
    rng: &mut ChaCha8Rng,
    spec: FieldSpec,
    n: usize,
) -> Vector<F> {
    Vector::new(spec, (0..n).map(|_| F::random(rng, &spec)).collect()).unwrap()
}

pub fn random_nonzero<F: RandomScalar>(rng: &mut ChaCha8Rng, spec: &FieldSpec) -> F {
    loop {
        let x = F::random(rng, spec);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_matrix<F: RandomScalar>(
    rng: &mut ChaCha8Rng,
    spec: FieldSpec,
    n: usize,
    m: usize,
) -> Matrix<F> {
    Matrix::from_rows(
        spec,
        (0..n)
            .map(|_| (0..m).map(|_| F::random(rng, &spec)).collect())
            .collect(),
    )
    .unwrap()
}

/// Random matrix of a chosen rank (at most), built as a product of random
/// n×r and r×m factors.
pub fn random_low_rank<F: RandomScalar>(
    rng: &mut ChaCha8Rng,
    spec: FieldSpec,
    n: usize,
    m: usize,
    r: usize,
) -> Matrix<F> {
    let a: Matrix<F> = random_matrix(rng, spec, n, r.max(1));
    let b: Matrix<F> = random_matrix(rng, spec, r.max(1), m);
    a.mul(&b).unwrap()
}

/// A random sequence of row swaps, nonzero scalings and row additions.
pub fn scramble_rows<F: RandomScalar>(rng: &mut ChaCha8Rng, a: &mut Matrix<F>, steps: usize) {
    let n = a.nrows();
    let spec = a.spec();
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 => {
                let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
                a.swap_rows(i, j);
            }
            1 => {
                let c = random_nonzero::<F>(rng, &spec);
                a.scale_row(rng.gen_range(1..=n), &c);
            }
            _ if n > 1 => {
                let i = rng.gen_range(1..=n);
                let j = loop {
                    let j = rng.gen_range(1..=n);
                    if j != i {
                        break j;
                    }
                };
                let c = F::random(rng, &spec);
                a.add_row_multiple(i, j, &c);
            }
            _ => {}
        }
    }
}

/// Every n×m matrix over GF(2).
pub fn all_gf2_matrices(n: usize, m: usize) -> impl Iterator<Item = Matrix<Gf<2>>> {
    (0u32..1 << (n * m)).map(move |bits| {
        Matrix::from_rows(
            Gf::<2>::SPEC,
            (0..n)
                .map(|i| {
                    (0..m)
                        .map(|j| Gf::new(((bits >> (i * m + j)) & 1) as i64))
                        .collect()
                })
                .collect(),
        )
        .unwrap()
    })
}

/// Shapes up to 3×4.
pub fn small_shapes() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for m in 1..=4 {
            out.push((n, m));
        }
    }
    out
}
