//! Exact scalars: the rationals and prime fields of odd characteristic.
//!
//! Every quantity computed by this crate is a [`FieldElement`]. An element
//! carries its [`FieldSpec`], so a rational can never be silently combined
//! with a residue. The arithmetic operators panic on mixed fields; the
//! geometric API checks field agreement once at its entry points and
//! reports [`crate::Error::MixedFields`] instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Largest modulus accepted for a prime field.
pub const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("malformed literal {0:?}")]
    MalformedLiteral(String),
    #[error("zero denominator in literal {0:?}")]
    ZeroDenominator(String),
    #[error("invalid field: {0}")]
    InvalidFieldSpec(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// The kind of field, as exposed to callers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

/// A validated field descriptor. Prime moduli are odd primes no larger
/// than [`MAX_PRIME`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec(FieldKind);

impl FieldSpec {
    pub const fn rational() -> Self {
        FieldSpec(FieldKind::Rational)
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p == 2 {
            return Err(FieldError::InvalidFieldSpec(
                "characteristic 2 is not supported".into(),
            ));
        }
        if p > MAX_PRIME {
            return Err(FieldError::InvalidFieldSpec(format!(
                "modulus {p} exceeds {MAX_PRIME}"
            )));
        }
        if !is_prime(p) {
            return Err(FieldError::InvalidFieldSpec(format!("{p} is not prime")));
        }
        Ok(FieldSpec(FieldKind::Prime(p)))
    }

    pub fn kind(self) -> FieldKind {
        self.0
    }

    pub fn modulus(self) -> Option<u64> {
        match self.0 {
            FieldKind::Rational => None,
            FieldKind::Prime(p) => Some(p),
        }
    }

    pub fn zero(self) -> FieldElement {
        self.int(0)
    }

    pub fn one(self) -> FieldElement {
        self.int(1)
    }

    /// Embeds an integer into the field.
    pub fn int(self, n: i64) -> FieldElement {
        match self.0 {
            FieldKind::Rational => FieldElement::Rational(BigRational::from_integer(n.into())),
            FieldKind::Prime(p) => FieldElement::Residue {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// The fraction `numer / denom` in this field.
    pub fn ratio(self, numer: i64, denom: i64) -> Result<FieldElement, FieldError> {
        self.int(numer).checked_div(&self.int(denom))
    }

    /// Parses an element literal: `[-]digits(/digits)?` over Q, `[-]digits`
    /// over F_p.
    pub fn parse(self, text: &str) -> Result<FieldElement, FieldError> {
        FieldElement::parse(text, self)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            FieldKind::Rational => f.write_str("Q"),
            FieldKind::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    /// Accepts `Q` or `F_<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "Q" {
            return Ok(FieldSpec::rational());
        }
        let digits = s
            .strip_prefix("F_")
            .ok_or_else(|| FieldError::InvalidFieldSpec(format!("unknown field {s:?}")))?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(FieldError::InvalidFieldSpec(format!("unknown field {s:?}")));
        }
        let p: u64 = digits
            .parse()
            .map_err(|_| FieldError::InvalidFieldSpec(format!("modulus out of range in {s:?}")))?;
        FieldSpec::prime(p)
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact element of Q or F_p, always in canonical form. Elements are
/// built through [`FieldSpec`] or arithmetic, never directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    #[non_exhaustive]
    Rational(BigRational),
    #[non_exhaustive]
    Residue { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::rational(),
            FieldElement::Residue { modulus, .. } => FieldSpec(FieldKind::Prime(*modulus)),
        }
    }

    pub fn same_field(&self, other: &FieldElement) -> bool {
        self.spec() == other.spec()
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Residue { value, .. } => *value == 1,
        }
    }

    pub fn parse(text: &str, spec: FieldSpec) -> Result<FieldElement, FieldError> {
        let malformed = || FieldError::MalformedLiteral(text.to_string());
        let body = text.strip_prefix('-').unwrap_or(text);
        let negative = body.len() != text.len();
        let (num_digits, den_digits) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let all_digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(num_digits) || !den_digits.is_none_or(all_digits) {
            return Err(malformed());
        }
        let mut numer: BigInt = num_digits.parse().map_err(|_| malformed())?;
        if negative {
            numer = -numer;
        }
        match spec.kind() {
            FieldKind::Rational => {
                let denom: BigInt = match den_digits {
                    Some(d) => d.parse().map_err(|_| malformed())?,
                    None => BigInt::one(),
                };
                if denom.is_zero() {
                    return Err(FieldError::ZeroDenominator(text.to_string()));
                }
                Ok(FieldElement::Rational(BigRational::new(numer, denom)))
            }
            FieldKind::Prime(p) => {
                if den_digits.is_some() {
                    return Err(malformed());
                }
                let value = numer
                    .mod_floor(&BigInt::from(p))
                    .to_u64()
                    .expect("residue below modulus");
                Ok(FieldElement::Residue { value, modulus: p })
            }
        }
    }

    /// Multiplicative inverse.
    pub fn invert(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Residue { value, modulus } => FieldElement::Residue {
                value: inverse_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self * &rhs.invert()?)
    }

    pub fn square(&self) -> FieldElement {
        self * self
    }

    pub fn pow(&self, mut exp: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.spec().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = base.square();
            exp >>= 1;
        }
        acc
    }

    /// `k * self` for a small integer `k`.
    pub fn times(&self, k: i64) -> FieldElement {
        self * &self.spec().int(k)
    }

    /// Literal in the interchange grammar: `n` or `n/d` over Q, the
    /// canonical residue over F_p.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// `Σ xᵢ·yᵢ` in `spec`, with a single reduction over Q.
    pub fn sum_of_products<'a>(
        spec: FieldSpec,
        terms: impl IntoIterator<Item = (&'a FieldElement, &'a FieldElement)>,
    ) -> FieldElement {
        match spec.kind() {
            FieldKind::Rational => {
                let (mut num, mut den) = (BigInt::zero(), BigInt::one());
                for (x, y) in terms {
                    let (FieldElement::Rational(x), FieldElement::Rational(y)) = (x, y) else {
                        panic!("mixed fields in arithmetic: {} and {}", x.spec(), y.spec());
                    };
                    let n = x.numer() * y.numer();
                    let d = x.denom() * y.denom();
                    if d == den {
                        num += n;
                    } else if d.is_one() {
                        num += n * &den;
                    } else {
                        num = num * &d + n * &den;
                        den *= d;
                    }
                }
                FieldElement::Rational(BigRational::new(num, den))
            }
            FieldKind::Prime(p) => {
                let mut acc = 0u128;
                for (x, y) in terms {
                    match (x, y) {
                        (
                            FieldElement::Residue { value: a, modulus: q },
                            FieldElement::Residue { value: b, modulus: r },
                        ) if *q == p && *r == p => {
                            acc = (acc + *a as u128 * *b as u128) % p as u128;
                        }
                        _ => panic!("mixed fields in arithmetic: {} and {}", x.spec(), y.spec()),
                    }
                }
                FieldElement::Residue { value: acc as u64, modulus: p }
            }
        }
    }

    fn combine(
        &self,
        rhs: &FieldElement,
        rat: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        res: impl FnOnce(u64, u64, u64) -> u64,
    ) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(rat(a, b))
            }
            (
                FieldElement::Residue { value: a, modulus: p },
                FieldElement::Residue { value: b, modulus: q },
            ) if p == q => FieldElement::Residue {
                value: res(*a, *b, *p),
                modulus: *p,
            },
            _ => panic!(
                "mixed fields in arithmetic: {} and {}",
                self.spec(),
                rhs.spec()
            ),
        }
    }
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "modulus is prime");
    old_s.rem_euclid(p as i128) as u64
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            FieldElement::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            FieldElement::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

// Knuth's reduced-operand forms: gcds are taken of cofactors, never of a
// full product.
fn rat_add(a: &BigRational, c: &BigInt, b: &BigRational) -> BigRational {
    let (n1, d1, d2) = (a.numer(), a.denom(), b.denom());
    let g = d1.gcd(d2);
    if g.is_one() {
        return BigRational::new_raw(n1 * d2 + c * d1, d1 * d2);
    }
    let t = n1 * (d2 / &g) + c * (d1 / &g);
    if t.is_zero() {
        return BigRational::zero();
    }
    let g2 = t.gcd(&g);
    BigRational::new_raw(t / &g2, (d1 / &g) * (d2 / g2))
}

fn rat_mul(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_zero() || b.is_zero() {
        return BigRational::zero();
    }
    let g1 = a.numer().gcd(b.denom());
    let g2 = b.numer().gcd(a.denom());
    BigRational::new_raw(
        (a.numer() / &g1) * (b.numer() / &g2),
        (a.denom() / &g2) * (b.denom() / &g1),
    )
}

impl Add<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.combine(rhs, |a, b| rat_add(a, b.numer(), b), |a, b, p| ((a as u128 + b as u128) % p as u128) as u64)
    }
}

impl Sub<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.combine(rhs, |a, b| rat_add(a, &-b.numer(), b), |a, b, p| ((a as u128 + p as u128 - b as u128) % p as u128) as u64)
    }
}

impl Mul<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.combine(rhs, rat_mul, |a, b, p| ((a as u128 * b as u128) % p as u128) as u64)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::Residue { value, modulus } => FieldElement::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement { (&self).$method(&rhs) }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement { (&self).$method(rhs) }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
