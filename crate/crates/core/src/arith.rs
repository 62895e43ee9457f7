//! Exact scalar arithmetic.
//!
//! Two concrete fields implement [`Field`]: the rationals ([`Rat`]) and the
//! quadratic extensions Q(√d) ([`QuadExt`]). Everything above this module is
//! generic over [`Field`], so the same transform code runs over Q and over
//! Q(√5) without any floating point.
//!
//! Text form: rationals as `p/q` or `p`, quadratic elements as
//! `a+b*sqrt(d)`. The scalar parser also accepts parenthesised sums and
//! integer division, e.g. `(1+sqrt(5))/2`, and rejects decimal literals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Operations shared by the exact scalar fields.
///
/// The operator impls are total for [`Rat`]. For [`QuadExt`] they panic when
/// the two operands live in different extensions; use [`Field::try_add`] and
/// [`Field::try_mul`] (or the free functions [`field_add`], [`field_mul`])
/// when that has not been established by construction.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn try_add(&self, rhs: &Self) -> Result<Self>;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn inv(&self) -> Result<Self>;

    /// Parse the scalar text form, accepting only elements of `field`.
    fn parse_in(text: &str, field: FieldSpec) -> Result<Self>;

    /// The rational value, when the element lies in Q.
    fn as_rat(&self) -> Option<Rat>;

    fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_rat(Rat::from_int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(&rhs.inv()?)
    }

    /// `self^exp`, with `0^0 = 1`.
    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

pub fn field_add<F: Field>(a: &F, b: &F) -> Result<F> {
    a.try_add(b)
}

pub fn field_mul<F: Field>(a: &F, b: &F) -> Result<F> {
    a.try_mul(b)
}

pub fn field_neg<F: Field>(a: &F) -> F {
    -a.clone()
}

pub fn field_inv<F: Field>(a: &F) -> Result<F> {
    a.inv()
}

/// True iff `a` has a multiplicative inverse, i.e. `a != 0`.
pub fn is_invertible<F: Field>(a: &F) -> bool {
    !a.is_zero()
}

/// Which field a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    /// Q(√d) for a square-free `d > 1`.
    Quadratic(u64),
}

impl FieldSpec {
    pub fn quadratic(d: u64) -> Result<Self> {
        if is_square_free(d) && d > 1 {
            Ok(FieldSpec::Quadratic(d))
        } else {
            Err(Error::InvalidRadicand(d))
        }
    }

    pub fn radicand(self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Quadratic(d) => Some(d),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("Q"),
            FieldSpec::Quadratic(d) => write!(f, "Q(sqrt {d})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `Q(sqrt 5)`, `Q(sqrt(5))` and `Q(sqrt5)`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "Q" {
            return Ok(FieldSpec::Rational);
        }
        let inner = compact
            .strip_prefix("Q(sqrt")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, format!("unknown field `{s}`")))?;
        let inner = inner
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(inner);
        let d: u64 = inner
            .parse()
            .map_err(|_| Error::parse(0, format!("bad radicand in `{s}`")))?;
        FieldSpec::quadratic(d)
    }
}

fn is_square_free(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

fn perfect_sqrt(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

// ---- Rat ----

/// Arbitrary-precision rational number in lowest terms with positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(numer.into(), denom)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Re-reduce to lowest terms. A no-op for every value this type hands
    /// out; exposed so the canonical-form property can be tested.
    pub fn normalized(&self) -> Rat {
        Rat(BigRational::new(self.numer().clone(), self.denom().clone()))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_int(n)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rat::parse_in(s, FieldSpec::Rational)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        Rat(&self.0 + &rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        Rat(&self.0 - &rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        Rat(&self.0 * &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }

    fn one() -> Self {
        Rat(BigRational::one())
    }

    fn from_rat(r: Rat) -> Self {
        r
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn try_add(&self, rhs: &Self) -> Result<Self> {
        Ok(self + rhs)
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self * rhs)
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rat(self.0.recip()))
        }
    }

    fn parse_in(text: &str, field: FieldSpec) -> Result<Self> {
        let q = QuadExt::parse_in(text, field)?;
        q.as_rat().ok_or_else(|| {
            Error::parse(
                0,
                format!("`{text}` is irrational; select a quadratic field"),
            )
        })
    }

    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
}

// ---- QuadExt ----

/// Element `a + b·√d` of the quadratic field Q(√d).
///
/// Rational elements (`b = 0`) carry no radicand and combine with elements of
/// any extension; two irrational elements combine only when their radicands
/// agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rat,
    b: Rat,
    d: Option<u64>,
}

impl QuadExt {
    pub fn new(a: Rat, b: Rat, d: u64) -> Result<Self> {
        FieldSpec::quadratic(d)?;
        Ok(Self::normalize(a, b, Some(d)))
    }

    pub fn rational(a: Rat) -> Self {
        QuadExt {
            a,
            b: Rat::zero(),
            d: None,
        }
    }

    /// `√d`.
    pub fn sqrt(d: u64) -> Result<Self> {
        QuadExt::new(Rat::zero(), Rat::one(), d)
    }

    fn normalize(a: Rat, b: Rat, d: Option<u64>) -> Self {
        if b.is_zero() {
            QuadExt { a, b, d: None }
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    /// The radicand, or `None` for a rational element.
    pub fn radicand(&self) -> Option<u64> {
        self.d
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rat {
        let d = Rat::from_int(self.d.unwrap_or(0));
        &self.a * &self.a - &d * &(&self.b * &self.b)
    }

    fn common_radicand(&self, rhs: &Self) -> Result<Option<u64>> {
        match (self.d, rhs.d) {
            (None, d) | (d, None) => Ok(d),
            (Some(l), Some(r)) if l == r => Ok(Some(l)),
            (Some(left), Some(right)) => Err(Error::FieldMismatch { left, right }),
        }
    }

    fn in_field(&self, field: FieldSpec) -> bool {
        match self.d {
            None => true,
            Some(d) => field == FieldSpec::Quadratic(d),
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.d else {
            return write!(f, "{}", self.a);
        };
        let root = |f: &mut fmt::Formatter<'_>, b: &Rat| {
            if b.is_one() {
                write!(f, "sqrt({d})")
            } else {
                write!(f, "{b}*sqrt({d})")
            }
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                f.write_str("-")?;
            }
            root(f, &self.b.abs())
        } else {
            write!(f, "{}", self.a)?;
            f.write_str(if self.b.is_negative() { "-" } else { "+" })?;
            root(f, &self.b.abs())
        }
    }
}

impl FromStr for QuadExt {
    type Err = Error;

    /// Parses with whatever radicand the text names.
    fn from_str(s: &str) -> Result<Self> {
        ScalarParser::new(s).parse()
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        self.try_add(&rhs).expect("quadratic field mismatch")
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        self.try_add(&-rhs).expect("quadratic field mismatch")
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        self.try_mul(&rhs).expect("quadratic field mismatch")
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Field for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rat::zero())
    }

    fn one() -> Self {
        QuadExt::rational(Rat::one())
    }

    fn from_rat(r: Rat) -> Self {
        QuadExt::rational(r)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn try_add(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_radicand(rhs)?;
        Ok(Self::normalize(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_radicand(rhs)?;
        let dr = Rat::from_int(d.unwrap_or(0));
        let a = &self.a * &rhs.a + &dr * &(&self.b * &rhs.b);
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Self::normalize(a, b, d))
    }

    fn inv(&self) -> Result<Self> {
        // d is not a square, so the norm vanishes only at zero
        let n = self.norm().inv()?;
        Ok(Self::normalize(&self.a * &n, -(&self.b * &n), self.d))
    }

    fn parse_in(text: &str, field: FieldSpec) -> Result<Self> {
        let q: QuadExt = text.parse()?;
        if q.in_field(field) {
            Ok(q)
        } else {
            Err(Error::parse(
                0,
                format!("`{text}` is not an element of {field}"),
            ))
        }
    }

    fn as_rat(&self) -> Option<Rat> {
        self.d.is_none().then(|| self.a.clone())
    }
}

/// Recursive-descent evaluator for scalar literals.
///
/// ```text
/// expr   := ["+"|"-"] term (("+"|"-") term)*
/// term   := factor (("*"|"/") factor)*
/// factor := integer | "sqrt(" integer ")" | "(" expr ")" | "-" factor
/// ```
struct ScalarParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> ScalarParser<'a> {
    fn new(src: &'a str) -> Self {
        ScalarParser { src, pos: 0 }
    }

    fn parse(mut self) -> Result<QuadExt> {
        self.skip_ws();
        if self.pos == self.src.len() {
            return Err(Error::parse(0, "empty scalar"));
        }
        let v = self.expr()?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(v)
    }

    fn err(&self, msg: &str) -> Error {
        Error::parse(self.pos, msg)
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<QuadExt> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            let at = self.pos;
            if self.eat('+') {
                let t = self.term()?;
                acc = acc.try_add(&t).map_err(|e| e.offset(at))?;
            } else if self.eat('-') {
                let t = self.term()?;
                acc = acc.try_add(&-t).map_err(|e| e.offset(at))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QuadExt> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                let at = self.pos;
                let f = self.factor()?;
                acc = acc.try_mul(&f).map_err(|e| e.offset(at))?;
            } else if self.eat('/') {
                let at = self.pos;
                let f = self.factor()?;
                acc = acc
                    .div(&f)
                    .map_err(|_| Error::parse(at, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<QuadExt> {
        self.skip_ws();
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(v)
            }
            Some('s') => {
                if !self.src[self.pos..].starts_with("sqrt") {
                    return Err(self.err("expected `sqrt`"));
                }
                self.pos += 4;
                if !self.eat('(') {
                    return Err(self.err("expected `(` after sqrt"));
                }
                self.skip_ws();
                let at = self.pos;
                let n = self.integer()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                let n = n.to_u64().ok_or_else(|| {
                    Error::parse(at, "radicand must be a small nonnegative integer")
                })?;
                match perfect_sqrt(n) {
                    Some(r) => Ok(QuadExt::rational(Rat::from_int(r))),
                    None => QuadExt::sqrt(n)
                        .map_err(|_| Error::parse(at, format!("radicand {n} is not square-free"))),
                }
            }
            Some(c) if c.is_ascii_digit() => Ok(QuadExt::rational(Rat::from_int(self.integer()?))),
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        if self.peek() == Some('.') {
            return Err(self.err("decimal literals are not accepted"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    fn q5(a: Rat, b: Rat) -> QuadExt {
        QuadExt::new(a, b, 5).unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(field_add(&r(1, 2), &r(1, 3)).unwrap(), r(5, 6));
    }

    #[test]
    fn conjugate_product() {
        let x = q5(r(1, 1), r(1, 1));
        let y = q5(r(1, 1), r(-1, 1));
        assert_eq!(field_mul(&x, &y).unwrap(), QuadExt::from_int(-4));
    }

    #[test]
    fn quadratic_inverse() {
        let x = q5(r(1, 1), r(1, 1));
        let inv = field_inv(&x).unwrap();
        assert_eq!(inv, q5(r(-1, 4), r(1, 4)));
        assert!((x * inv).is_one());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Rat::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(QuadExt::zero().inv(), Err(Error::DivisionByZero));
        assert!(Rat::new(1, 0).is_err());
    }

    #[test]
    fn mixed_radicands_rejected() {
        let a = QuadExt::sqrt(5).unwrap();
        let b = QuadExt::sqrt(2).unwrap();
        assert_eq!(
            a.try_add(&b),
            Err(Error::FieldMismatch { left: 5, right: 2 })
        );
        assert!(a.try_mul(&b).is_err());
        // rationals combine with anything
        assert!(a.try_add(&QuadExt::from_int(3)).is_ok());
    }

    #[test]
    fn radicand_validation() {
        assert!(QuadExt::sqrt(4).is_err());
        assert!(QuadExt::sqrt(12).is_err());
        assert!(QuadExt::sqrt(1).is_err());
        assert!(QuadExt::sqrt(0).is_err());
        assert!(QuadExt::sqrt(30).is_ok());
    }

    #[test]
    fn invertibility() {
        assert!(!is_invertible(&Rat::zero()));
        assert!(is_invertible(&r(7, 3)));
        assert!(!is_invertible(
            &QuadExt::new(Rat::zero(), Rat::zero(), 5).unwrap()
        ));
    }

    #[test]
    fn rational_text_form() {
        assert_eq!("3/6".parse::<Rat>().unwrap(), r(1, 2));
        assert_eq!("-7".parse::<Rat>().unwrap(), r(-7, 1));
        assert_eq!(r(-4, 6).to_string(), "-2/3");
        assert!("1.5".parse::<Rat>().is_err());
        assert!("sqrt(5)".parse::<Rat>().is_err());
        assert!("".parse::<Rat>().is_err());
        assert!("1/0".parse::<Rat>().is_err());
    }

    #[test]
    fn quadratic_text_form() {
        let phi: QuadExt = "(1+sqrt(5))/2".parse().unwrap();
        assert_eq!(phi, q5(r(1, 2), r(1, 2)));
        assert_eq!(phi.to_string(), "1/2+1/2*sqrt(5)");
        assert_eq!("1/2+1/2*sqrt(5)".parse::<QuadExt>().unwrap(), phi);
        assert_eq!((-phi.clone()).to_string(), "-1/2-1/2*sqrt(5)");
        assert_eq!(QuadExt::sqrt(5).unwrap().to_string(), "sqrt(5)");
        assert_eq!((-QuadExt::sqrt(5).unwrap()).to_string(), "-sqrt(5)");
        assert_eq!("sqrt(4)".parse::<QuadExt>().unwrap(), QuadExt::from_int(2));
        assert!("sqrt(8)".parse::<QuadExt>().is_err());
        assert!("sqrt(5)+sqrt(2)".parse::<QuadExt>().is_err());
    }

    #[test]
    fn field_restricted_parsing() {
        let q5 = FieldSpec::quadratic(5).unwrap();
        assert!(QuadExt::parse_in("1+1*sqrt(5)", FieldSpec::Rational).is_err());
        assert!(QuadExt::parse_in("1+1*sqrt(5)", q5).is_ok());
        assert!(QuadExt::parse_in("sqrt(2)", q5).is_err());
        assert!(QuadExt::parse_in("-1/2", q5).is_ok());
    }

    #[test]
    fn field_spec_text() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert_eq!(
            "Q(sqrt 5)".parse::<FieldSpec>().unwrap(),
            FieldSpec::Quadratic(5)
        );
        assert_eq!(
            "Q(sqrt(5))".parse::<FieldSpec>().unwrap(),
            FieldSpec::Quadratic(5)
        );
        assert!("Q(sqrt 9)".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Quadratic(5).to_string(), "Q(sqrt 5)");
    }

    #[test]
    fn pow_conventions() {
        assert_eq!(Rat::zero().pow(0), Rat::one());
        assert_eq!(r(2, 3).pow(3), r(8, 27));
    }

    fn rat() -> impl Strategy<Value = Rat> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| r(n, d))
    }

    fn quad() -> impl Strategy<Value = QuadExt> {
        (rat(), rat()).prop_map(|(a, b)| QuadExt::new(a, b, 5).unwrap())
    }

    proptest! {
        #[test]
        fn rat_field_axioms(a in rat(), b in rat(), c in rat()) {
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
            if !a.is_zero() {
                prop_assert!((a.clone() * a.inv().unwrap()).is_one());
            }
            prop_assert_eq!(a.normalized(), a);
        }

        #[test]
        fn quad_field_axioms(a in quad(), b in quad(), c in quad()) {
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
            if !a.is_zero() {
                prop_assert!((a.clone() * a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn norm_is_multiplicative(a in quad(), b in quad()) {
            prop_assert_eq!((a.clone() * b.clone()).norm(), &a.norm() * &b.norm());
        }

        #[test]
        fn display_parse_round_trip(a in quad()) {
            prop_assert_eq!(a.to_string().parse::<QuadExt>().unwrap(), a);
        }
    }
}
