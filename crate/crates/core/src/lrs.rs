//! Linear recurrent sequences in their two equivalent forms: recurrence plus
//! initial conditions ([`Lrs`]) and rational generating function
//! ([`GenFun`]).

use serde::{Deserialize, Serialize};

use crate::arith::{Field, FieldSpec};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// A sequence `a_0, a_1, …` with monic characteristic polynomial
/// `f(t) = t^r − Σ_{i=1}^r h_i t^{r−i}` and initial terms `s_0 … s_{r−1}`;
/// every later term satisfies `a_n = Σ h_i a_{n−i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lrs<F: Field> {
    char_poly: Poly<F>,
    init: Vec<F>,
}

impl<F: Field> Lrs<F> {
    pub fn new(char_poly: Poly<F>, init: Vec<F>) -> Result<Self> {
        let r = match char_poly.degree() {
            Some(r) if r >= 1 && char_poly.is_monic() => r,
            _ => return Err(Error::NotMonic),
        };
        if init.len() != r {
            return Err(Error::InitLength {
                expected: r,
                got: init.len(),
            });
        }
        Ok(Lrs { char_poly, init })
    }

    /// The impulse sequence of `char_poly`: initial terms `(0, …, 0, 1)`.
    pub fn impulse(char_poly: Poly<F>) -> Result<Self> {
        let r = char_poly.degree().ok_or(Error::NotMonic)?;
        let mut init = vec![F::zero(); r];
        if let Some(last) = init.last_mut() {
            *last = F::one();
        }
        Lrs::new(char_poly, init)
    }

    /// `u = (1, 0, 0, …)` with characteristic polynomial `t`.
    pub fn startsequence() -> Self {
        Lrs {
            char_poly: Poly::t(),
            init: vec![F::one()],
        }
    }

    pub fn char_poly(&self) -> &Poly<F> {
        &self.char_poly
    }

    pub fn init(&self) -> &[F] {
        &self.init
    }

    pub fn order(&self) -> usize {
        self.init.len()
    }

    /// `h_1 … h_r`.
    pub fn recurrence_coeffs(&self) -> Vec<F> {
        let r = self.order();
        (1..=r).map(|i| -self.char_poly.coeff(r - i)).collect()
    }

    pub fn is_impulse(&self) -> bool {
        let (last, rest) = self.init.split_last().expect("order >= 1");
        last.is_one() && rest.iter().all(Field::is_zero)
    }

    /// First `count` terms.
    pub fn terms(&self, count: usize) -> Vec<F> {
        let h = self.recurrence_coeffs();
        let mut out: Vec<F> = self.init.iter().take(count).cloned().collect();
        while out.len() < count {
            let n = out.len();
            let next = h.iter().enumerate().fold(F::zero(), |acc, (i, hi)| {
                acc + hi.clone() * out[n - 1 - i].clone()
            });
            out.push(next);
        }
        out
    }

    /// Numerator `u(t)` of the generating function:
    /// `u_0 = s_0`, `u_i = s_i − Σ_{j=1}^i h_j s_{i−j}`.
    pub fn numerator(&self) -> Poly<F> {
        let h = self.recurrence_coeffs();
        let s = &self.init;
        let coeffs = (0..self.order())
            .map(|i| {
                (1..=i).fold(s[i].clone(), |acc, j| {
                    acc - h[j - 1].clone() * s[i - j].clone()
                })
            })
            .collect();
        Poly::new(coeffs)
    }

    /// `u(t) / f^R(t)`.
    pub fn genfun(&self) -> GenFun<F> {
        GenFun {
            num: self.numerator(),
            den: self
                .char_poly
                .reflect(self.order())
                .expect("degree equals order"),
        }
    }
}

/// Rational generating function `num(t) / den(t)` with `den(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFun<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> GenFun<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if !den.coeff(0).is_one() {
            return Err(Error::InvalidDenominator);
        }
        Ok(GenFun { num, den })
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    /// First `count` coefficients of the power series, by long division.
    pub fn series(&self, count: usize) -> Vec<F> {
        let mut out: Vec<F> = Vec::with_capacity(count);
        for n in 0..count {
            // den(0) = 1, so a_n = num_n − Σ_{j≥1} den_j a_{n−j}
            let v = (1..=n.min(self.den.degree().unwrap_or(0)))
                .fold(self.num.coeff(n), |acc, j| {
                    acc - self.den.coeff(j) * out[n - j].clone()
                });
            out.push(v);
        }
        out
    }
}

pub fn series<F: Field>(g: &GenFun<F>, count: usize) -> Vec<F> {
    g.series(count)
}

/// A sequence that is recurrent from some index on: the `head` terms come
/// first, then the terms of `tail`.
///
/// `validity` is the length of `head`: the recurrence of `tail.char_poly()`
/// holds for every `n ≥ validity + order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventualLrs<F: Field> {
    pub head: Vec<F>,
    pub tail: Lrs<F>,
}

impl<F: Field> EventualLrs<F> {
    pub fn validity(&self) -> usize {
        self.head.len()
    }

    pub fn char_poly(&self) -> &Poly<F> {
        self.tail.char_poly()
    }

    pub fn terms(&self, count: usize) -> Vec<F> {
        let mut out: Vec<F> = self.head.iter().take(count).cloned().collect();
        let rest = count - out.len();
        out.extend(self.tail.terms(rest));
        out
    }
}

/// Recover a recurrence from a generating function.
///
/// The characteristic polynomial is the reflection of the denominator (made
/// monic; `t` when the denominator is constant). When the numerator's degree
/// reaches the denominator's, the recurrence only holds from index
/// `n0 = deg(num) − deg(den) + 1` onward.
pub fn recurrence_from_genfun<F: Field>(g: &GenFun<F>) -> Result<EventualLrs<F>> {
    let den_deg = g.den.degree().ok_or(Error::DivisionByZero)?;
    let r = den_deg.max(1);
    let char_poly = g.den.reflect(r)?.make_monic()?;
    let n0 = match g.num.degree() {
        Some(d) if d + 1 > r => d + 1 - r,
        _ => 0,
    };
    let terms = g.series(n0 + r);
    let tail = Lrs::new(char_poly, terms[n0..].to_vec())?;
    Ok(EventualLrs {
        head: terms[..n0].to_vec(),
        tail,
    })
}

/// Smallest recurrence found by [`minimal_recurrence`]: `poly` annihilates
/// the prefix from index `validity` on, i.e. the recurrence equation holds
/// for every `n ≥ validity + deg(poly)` inside the prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalRecurrence<F: Field> {
    pub poly: Poly<F>,
    pub validity: usize,
}

/// Smallest-degree monic recurrence annihilating `prefix`, allowing a
/// validity index `n0 ≤ degree`.
///
/// Degree `e` is only tried while the prefix has at least `2e + 2` terms, and
/// each candidate `(e, n0)` must be overdetermined by at least one equation.
pub fn minimal_recurrence<F: Field>(prefix: &[F]) -> Result<MinimalRecurrence<F>> {
    let len = prefix.len();
    let mut e = 1;
    while 2 * e + 2 <= len {
        let max_n0 = e.min(len - 2 * e - 1);
        for n0 in 0..=max_n0 {
            // unknowns c_1..c_e with a_n = Σ c_i a_{n−i} for n in n0+e..len
            let rows: Vec<Vec<F>> = (n0 + e..len)
                .map(|n| {
                    let mut row: Vec<F> = (1..=e).map(|i| prefix[n - i].clone()).collect();
                    row.push(prefix[n].clone());
                    row
                })
                .collect();
            if let Some(c) = solve_consistent(rows, e) {
                let mut coeffs: Vec<F> = c.into_iter().rev().map(|v| -v).collect();
                coeffs.push(F::one());
                return Ok(MinimalRecurrence {
                    poly: Poly::new(coeffs),
                    validity: n0,
                });
            }
        }
        e += 1;
    }
    Err(Error::InsufficientData(format!(
        "no recurrence of degree <= {} fits {len} terms",
        len.saturating_sub(2) / 2
    )))
}

/// Gaussian elimination on an augmented system; returns a solution (free
/// variables set to zero) if the system is consistent.
fn solve_consistent<F: Field>(mut rows: Vec<Vec<F>>, unknowns: usize) -> Option<Vec<F>> {
    let mut pivots = Vec::new();
    let mut row_at = 0;
    for col in 0..unknowns {
        let Some(p) = (row_at..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row_at, p);
        let inv = rows[row_at][col].inv().expect("nonzero pivot");
        for v in rows[row_at].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = rows[row_at].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != row_at && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = v.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivots.push(col);
        row_at += 1;
    }
    if rows[row_at..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut sol = vec![F::zero(); unknowns];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = rows[i][unknowns].clone();
    }
    Some(sol)
}

/// JSON form of an [`Lrs`]:
/// `{"char_poly": "t^2 - t - 1", "init": ["0", "1"], "field": "Q"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrsDoc {
    pub char_poly: String,
    pub init: Vec<String>,
    pub field: String,
}

impl LrsDoc {
    pub fn from_lrs<F: Field>(s: &Lrs<F>, field: FieldSpec) -> Self {
        LrsDoc {
            char_poly: s.char_poly.to_string(),
            init: s.init.iter().map(ToString::to_string).collect(),
            field: field.to_string(),
        }
    }

    pub fn field(&self) -> Result<FieldSpec> {
        self.field.parse()
    }

    pub fn to_lrs<F: Field>(&self) -> Result<Lrs<F>> {
        let field = self.field()?;
        let char_poly = Poly::parse_in(&self.char_poly, field)?;
        let init = self
            .init
            .iter()
            .map(|s| F::parse_in(s, field))
            .collect::<Result<Vec<F>>>()?;
        Lrs::new(char_poly, init)
    }
}

/// JSON form of a [`GenFun`]: `{"num": "t", "den": "1 - t - t^2"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenFunDoc {
    pub num: String,
    pub den: String,
}

impl GenFunDoc {
    pub fn from_genfun<F: Field>(g: &GenFun<F>) -> Self {
        GenFunDoc {
            num: g.num.to_string(),
            den: g.den.to_string(),
        }
    }

    pub fn to_genfun<F: Field>(&self, field: FieldSpec) -> Result<GenFun<F>> {
        GenFun::new(
            Poly::parse_in(&self.num, field)?,
            Poly::parse_in(&self.den, field)?,
        )
    }
}
