//! Dense univariate polynomials over a [`Field`], stored lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::arith::{Field, FieldSpec, Rat};
use crate::combinat::pascal;
use crate::error::{Error, Result};

/// Polynomial in `t`; `coeffs[i]` is the coefficient of `t^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// `c·t^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Poly::monomial(F::one(), 1)
    }

    /// `t − c`.
    pub fn linear_root(c: F) -> Self {
        Poly::new(vec![-c, F::one()])
    }

    /// Build from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| F::from_int(c)).collect())
    }

    /// `Π (t − z)` over the given zeros.
    pub fn from_roots(zeros: &[F]) -> Self {
        zeros.iter().fold(Poly::constant(F::one()), |acc, z| {
            acc * Poly::linear_root(z.clone())
        })
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Field::is_one)
    }

    pub fn make_monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?.inv()?;
        Ok(self.scale(&lead))
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// `t^k · self`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `self / t^k` when `t^k` divides `self`.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Reflected polynomial `t^r · p(1/t)`.
    pub fn reflect(&self, r: usize) -> Result<Self> {
        if let Some(degree) = self.degree().filter(|&d| d > r) {
            return Err(Error::DegreeBound { bound: r, degree });
        }
        Ok(Poly::new((0..=r).map(|i| self.coeff(r - i)).collect()))
    }

    /// The polynomial `q(t) = p(t − y)`, by binomial expansion.
    pub fn shift_argument(&self, y: &F) -> Self {
        let Some(deg) = self.degree() else {
            return Poly::zero();
        };
        let rows = pascal(deg);
        let neg_y: Vec<F> = std::iter::successors(Some(F::one()), |p| Some(p.clone() * -y.clone()))
            .take(deg + 1)
            .collect();
        let coeffs = (0..=deg)
            .map(|k| {
                (k..=deg).fold(F::zero(), |acc, i| {
                    acc + self.coeffs[i].clone()
                        * F::from_int(rows[i][k].clone())
                        * neg_y[i - k].clone()
                })
            })
            .collect();
        Poly::new(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, t0: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * t0.clone() + c.clone())
    }

    /// Parse the text form, e.g. `t^2 - t - 1`, `3/2*t + 1` or
    /// `(1/2+1/2*sqrt(5))*t`.
    pub fn parse_in(text: &str, field: FieldSpec) -> Result<Self> {
        PolyParser {
            src: text,
            pos: 0,
            field,
        }
        .parse()
    }
}

impl std::str::FromStr for Poly<Rat> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Poly::parse_in(s, FieldSpec::Rational)
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Poly<F>) -> Poly<F> {
        self + (-rhs)
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            // rational coefficients carry their sign into the joiner;
            // irrational ones are parenthesised
            let (negative, body) = match c.as_rat() {
                Some(q) if q.is_negative() => (true, q.abs().to_string()),
                Some(q) => (false, q.to_string()),
                None => (false, format!("({c})")),
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = body == "1";
            match k {
                0 => f.write_str(&body)?,
                _ => {
                    if !unit {
                        write!(f, "{body}*")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

struct PolyParser<'a> {
    src: &'a str,
    pos: usize,
    field: FieldSpec,
}

impl PolyParser<'_> {
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

    fn err(&self, msg: &str) -> Error {
        Error::parse(self.pos, msg)
    }

    fn parse<F: Field>(mut self) -> Result<Poly<F>> {
        let mut acc = Poly::zero();
        let mut negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        loop {
            let term = self.term::<F>()?;
            acc = acc + if negative { -term } else { term };
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
            self.pos += 1;
        }
    }

    fn term<F: Field>(&mut self) -> Result<Poly<F>> {
        self.skip_ws();
        let coeff = match self.peek() {
            Some('(') => Some(self.paren_scalar()?),
            Some(c) if c.is_ascii_digit() => Some(F::from_rat(self.rational()?)),
            Some('t') => None,
            _ => return Err(self.err("expected a term")),
        };
        let has_star = self.eat('*');
        self.skip_ws();
        if self.peek() != Some('t') {
            if has_star {
                return Err(self.err("expected `t` after `*`"));
            }
            return Ok(Poly::constant(coeff.expect("coefficient parsed")));
        }
        self.pos += 1;
        let power = if self.eat('^') {
            self.skip_ws();
            self.unsigned()?
        } else {
            1
        };
        Ok(Poly::monomial(coeff.unwrap_or_else(F::one), power))
    }

    fn paren_scalar<F: Field>(&mut self) -> Result<F> {
        let start = self.pos + 1;
        let mut depth = 0usize;
        for (i, c) in self.src[self.pos..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        let end = self.pos + i;
                        self.pos = end + 1;
                        return F::parse_in(&self.src[start..end], self.field)
                            .map_err(|e| e.offset(start));
                    }
                }
                _ => {}
            }
        }
        Err(self.err("unbalanced parentheses"))
    }

    fn rational(&mut self) -> Result<Rat> {
        let num = self.digits()?;
        // `/` followed by a digit is a fraction bar
        let save = self.pos;
        if self.eat('/') {
            self.skip_ws();
            if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                let den = self.digits()?;
                return Rat::new(num, den).map_err(|_| self.err("zero denominator"));
            }
            self.pos = save;
        }
        Ok(Rat::from_int(num))
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.peek() == Some('.') {
            return Err(self.err("decimal literals are not accepted"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "expected an integer"))
    }

    fn unsigned(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.peek() == Some('.') {
            return Err(self.err("decimal literals are not accepted"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "expected an integer"))
    }
}
