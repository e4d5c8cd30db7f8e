//! Exact scalar arithmetic over the rationals and prime fields.
//!
//! Every algorithm in this crate is generic over [`Field`], which layers the
//! few operations linear algebra needs (inverses, parsing, field identity) on
//! top of [`num_traits::Num`]. Three implementations ship:
//!
//! - [`BigRational`] for Q, with arbitrary precision so nothing overflows;
//! - [`Gf<P>`] for a prime fixed at compile time (`Gf<2>`, `Gf<3>`, ...);
//! - [`Fp`] for a prime chosen at run time, as the CLI needs.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};

use crate::error::{domain, parse, usage, Error, Result};

/// Exact rationals with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// Moduli are kept below 2^32 so that products of residues fit in `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

/// Which field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Validated prime field. Primality is checked by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_MODULUS {
            return domain(format!("modulus {p} is too large (limit {MAX_MODULUS})"));
        }
        if !is_prime(p) {
            return domain(format!("modulus {p} is not prime"));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Number of elements, or `None` for Q.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "gf {p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q` or `gf <p>`.
    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        match words.as_slice() {
            ["q"] => Ok(FieldSpec::Rationals),
            ["gf", p] => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid modulus `{p}`")))?;
                FieldSpec::prime(p).map_err(|e| Error::Parse(e.message().to_owned()))
            }
            _ => parse(format!("invalid field `{s}`, expected `q` or `gf <p>`")),
        }
    }
}

pub const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field usable by every routine in the crate.
pub trait Field:
    Num + Neg<Output = Self> + Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Whether values of this type can represent `spec`.
    fn supports(spec: &FieldSpec) -> bool;

    /// The field this value belongs to, if it is pinned to one.
    fn spec_of(&self) -> Option<FieldSpec>;

    /// Image of an integer.
    fn from_integer(value: &BigInt, spec: &FieldSpec) -> Self;

    /// Parses one scalar token. See [`parse_scalar`].
    fn parse_token(token: &str, spec: &FieldSpec) -> Result<Self>;

    /// Multiplicative inverse.
    fn inv(&self) -> Result<Self>;

    /// Pins a free-floating constant (such as `Self::one()`) to `spec`.
    fn bind(self, _spec: &FieldSpec) -> Self {
        self
    }

    fn from_i64(value: i64, spec: &FieldSpec) -> Self {
        Self::from_integer(&BigInt::from(value), spec)
    }
}

/// A field whose elements can be listed.
pub trait FiniteField: Field {
    fn elements(spec: &FieldSpec) -> Vec<Self>;
}

/// Parses `token` as an element of `spec`.
///
/// Integers are `-?[0-9]+`; over Q fractions `-?[0-9]+/[1-9][0-9]*` are also
/// accepted. Prime fields reduce any integer and reject fractions.
pub fn parse_scalar<F: Field>(token: &str, spec: &FieldSpec) -> Result<F> {
    if !F::supports(spec) {
        return usage(format!("scalar type cannot represent field {spec}"));
    }
    F::parse_token(token, spec)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic: operands must share a field and division by
/// zero is a domain error rather than a panic.
pub fn scalar_arith<F: Field>(op: ArithOp, a: &F, b: &F) -> Result<F> {
    if let (Some(fa), Some(fb)) = (a.spec_of(), b.spec_of()) {
        if fa != fb {
            return usage(format!("operands live in different fields ({fa} and {fb})"));
        }
    }
    Ok(match op {
        ArithOp::Add => a.clone() + b.clone(),
        ArithOp::Sub => a.clone() - b.clone(),
        ArithOp::Mul => a.clone() * b.clone(),
        ArithOp::Div => a.clone() * b.inv()?,
    })
}

pub fn scalar_inv<F: Field>(a: &F) -> Result<F> {
    a.inv()
}

fn parse_integer(token: &str) -> Result<BigInt> {
    let digits = token.strip_prefix('-').unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return parse(format!("malformed integer `{token}`"));
    }
    BigInt::from_str(token).map_err(|_| Error::Parse(format!("malformed integer `{token}`")))
}

fn reduce(value: &BigInt, p: u64) -> u64 {
    value
        .mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(p as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i128) as u64
}

// ---------------------------------------------------------------------------
// Q

impl Field for BigRational {
    fn supports(spec: &FieldSpec) -> bool {
        matches!(spec, FieldSpec::Rationals)
    }

    fn spec_of(&self) -> Option<FieldSpec> {
        Some(FieldSpec::Rationals)
    }

    fn from_integer(value: &BigInt, _spec: &FieldSpec) -> Self {
        BigRational::from_integer(value.clone())
    }

    fn parse_token(token: &str, _spec: &FieldSpec) -> Result<Self> {
        match token.split_once('/') {
            None => Ok(BigRational::from_integer(parse_integer(token)?)),
            Some((num, den)) => {
                let numer = parse_integer(num)?;
                if den.is_empty()
                    || den.starts_with('0')
                    || !den.bytes().all(|b| b.is_ascii_digit())
                {
                    return parse(format!("malformed denominator in `{token}`"));
                }
                let denom = parse_integer(den)?;
                Ok(BigRational::new(numer, denom))
            }
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return domain("division by zero");
        }
        Ok(self.recip())
    }
}

// ---------------------------------------------------------------------------
// GF(P), P fixed at compile time

/// Residue modulo the compile-time prime `P`, kept in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf<const P: u64>(u64);

impl<const P: u64> Gf<P> {
    const VALID: () = assert!(
        is_prime(P) && P <= MAX_MODULUS,
        "Gf<P> needs a prime P < 2^32"
    );

    pub const SPEC: FieldSpec = FieldSpec::Prime(P);

    pub fn new(value: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        Gf(value.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Gf<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Gf((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Gf<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Gf((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Gf<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Gf(self.0 * rhs.0 % P)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<const P: u64> Div for Gf<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in GF(p)")
    }
}

impl<const P: u64> Rem for Gf<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "remainder by zero in GF(p)");
        Gf(0)
    }
}

impl<const P: u64> Neg for Gf<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Gf((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Gf<P> {
    fn zero() -> Self {
        Gf(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Gf<P> {
    fn one() -> Self {
        Gf(1 % P)
    }
}

impl<const P: u64> Num for Gf<P> {
    type FromStrRadixErr = Error;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self> {
        let v = BigInt::from_str_radix(s, radix)
            .map_err(|_| Error::Parse(format!("malformed integer `{s}`")))?;
        Ok(Gf(reduce(&v, P)))
    }
}

impl<const P: u64> Field for Gf<P> {
    fn supports(spec: &FieldSpec) -> bool {
        *spec == FieldSpec::Prime(P)
    }

    fn spec_of(&self) -> Option<FieldSpec> {
        Some(FieldSpec::Prime(P))
    }

    fn from_integer(value: &BigInt, _spec: &FieldSpec) -> Self {
        Gf(reduce(value, P))
    }

    fn parse_token(token: &str, _spec: &FieldSpec) -> Result<Self> {
        if token.contains('/') {
            return parse(format!(
                "fractions are not accepted over GF({P}): `{token}`"
            ));
        }
        Ok(Gf(reduce(&parse_integer(token)?, P)))
    }

    fn inv(&self) -> Result<Self> {
        if self.0 == 0 {
            return domain("division by zero");
        }
        Ok(Gf(inverse_mod(self.0, P)))
    }
}

impl<const P: u64> FiniteField for Gf<P> {
    fn elements(_spec: &FieldSpec) -> Vec<Self> {
        (0..P).map(Gf).collect()
    }
}

// ---------------------------------------------------------------------------
// GF(p), p chosen at run time

/// Residue modulo a prime chosen at run time.
///
/// The modulus travels with the value. `Fp::zero()` and `Fp::one()` have no
/// modulus to draw on, so they produce unbound integer constants that adopt the
/// modulus of whatever bound value they meet. Vectors and matrices bind all of
/// their entries on construction.
#[derive(Clone, Copy)]
pub struct Fp {
    value: i64,
    // 0 marks an unbound integer constant.
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 0 && modulus <= MAX_MODULUS);
        Fp {
            value: value.rem_euclid(modulus as i64),
            modulus,
        }
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    /// `None` for an unbound constant.
    pub fn modulus(&self) -> Option<u64> {
        (self.modulus != 0).then_some(self.modulus)
    }

    fn joint_modulus(self, other: Self) -> u64 {
        match (self.modulus, other.modulus) {
            (0, m) | (m, 0) => m,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing GF({a}) and GF({b}) values"),
        }
    }

    fn residue(self, m: u64) -> u64 {
        self.value.rem_euclid(m as i64) as u64
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            0 => write!(f, "{}", self.value),
            m => write!(f, "{} (mod {m})", self.value),
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        match (self.modulus, other.modulus) {
            (0, 0) => self.value == other.value,
            (0, m) | (m, 0) => self.residue(m) == other.residue(m),
            (a, b) => a == b && self.value == other.value,
        }
    }
}

impl Eq for Fp {}

impl Hash for Fp {
    // Bound values hash by residue; unbound constants are transient and only
    // ever 0 or 1 in practice, which agree with their residues.
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl Add for Fp {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        match self.joint_modulus(rhs) {
            0 => Fp {
                value: self.value.checked_add(rhs.value).expect("overflow"),
                modulus: 0,
            },
            m => Fp {
                value: ((self.residue(m) + rhs.residue(m)) % m) as i64,
                modulus: m,
            },
        }
    }
}

impl Sub for Fp {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Self;
    fn neg(self) -> Self {
        match self.modulus {
            0 => Fp {
                value: -self.value,
                modulus: 0,
            },
            m => Fp {
                value: ((m - self.residue(m)) % m) as i64,
                modulus: m,
            },
        }
    }
}

impl Mul for Fp {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        match self.joint_modulus(rhs) {
            0 => Fp {
                value: self.value.checked_mul(rhs.value).expect("overflow"),
                modulus: 0,
            },
            m => Fp {
                value: (self.residue(m) * rhs.residue(m) % m) as i64,
                modulus: m,
            },
        }
    }
}

impl Div for Fp {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        match self.joint_modulus(rhs) {
            0 => {
                assert!(
                    rhs.value != 0 && self.value % rhs.value == 0,
                    "inexact division of unbound constants"
                );
                Fp {
                    value: self.value / rhs.value,
                    modulus: 0,
                }
            }
            m => {
                Fp::new(self.residue(m) as i64, m)
                    * Fp::new(rhs.residue(m) as i64, m)
                        .inv()
                        .expect("division by zero in GF(p)")
            }
        }
    }
}

impl Rem for Fp {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "remainder by zero in GF(p)");
        Fp {
            value: 0,
            modulus: self.joint_modulus(rhs),
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }
    fn is_zero(&self) -> bool {
        match self.modulus {
            0 => self.value == 0,
            m => self.residue(m) == 0,
        }
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
}

impl Num for Fp {
    type FromStrRadixErr = Error;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self> {
        let v = BigInt::from_str_radix(s, radix)
            .map_err(|_| Error::Parse(format!("malformed integer `{s}`")))?;
        let value = v
            .to_i64()
            .ok_or_else(|| Error::Parse(format!("unbound constant `{s}` out of range")))?;
        Ok(Fp { value, modulus: 0 })
    }
}

impl Field for Fp {
    fn supports(spec: &FieldSpec) -> bool {
        matches!(spec, FieldSpec::Prime(_))
    }

    fn spec_of(&self) -> Option<FieldSpec> {
        self.modulus().map(FieldSpec::Prime)
    }

    fn from_integer(value: &BigInt, spec: &FieldSpec) -> Self {
        let FieldSpec::Prime(p) = *spec else {
            panic!("Fp cannot represent {spec}");
        };
        Fp {
            value: reduce(value, p) as i64,
            modulus: p,
        }
    }

    fn parse_token(token: &str, spec: &FieldSpec) -> Result<Self> {
        if token.contains('/') {
            return parse(format!("fractions are not accepted over {spec}: `{token}`"));
        }
        Ok(Self::from_integer(&parse_integer(token)?, spec))
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return domain("division by zero");
        }
        match self.modulus {
            0 if self.value.abs() == 1 => Ok(*self),
            0 => domain("cannot invert an unbound constant"),
            m => Ok(Fp {
                value: inverse_mod(self.residue(m), m) as i64,
                modulus: m,
            }),
        }
    }

    fn bind(self, spec: &FieldSpec) -> Self {
        match (self.modulus, spec) {
            (0, FieldSpec::Prime(p)) => Fp::new(self.value, *p),
            _ => self,
        }
    }
}

impl FiniteField for Fp {
    fn elements(spec: &FieldSpec) -> Vec<Self> {
        let FieldSpec::Prime(p) = *spec else {
            panic!("Fp cannot represent {spec}");
        };
        (0..p as i64).map(|v| Fp::new(v, p)).collect()
    }
}
