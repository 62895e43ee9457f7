//! The shift operators σ and ρ and the interpolated Invert `I^(x)` and
//! Binomial `L^(y)` operators, both on raw sequence prefixes and on
//! [`Lrs`] values, where they act on the characteristic polynomial in closed
//! form.

use std::fmt;

use crate::arith::Field;
use crate::combinat::pascal;
use crate::lrs::{GenFun, Lrs};
use crate::poly::Poly;

/// One operator application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorStep<F> {
    /// `σ(a) = (a_1, a_2, …)`.
    Sigma,
    /// `ρ(a) = (0, a_0, a_1, …)`.
    Rho,
    /// `I^(x)`.
    Invert(F),
    /// `L^(y)`.
    Binomial(F),
}

impl<F: Field> OperatorStep<F> {
    pub fn name(&self) -> &'static str {
        match self {
            OperatorStep::Sigma => "sigma",
            OperatorStep::Rho => "rho",
            OperatorStep::Invert(_) => "I",
            OperatorStep::Binomial(_) => "L",
        }
    }

    pub fn param(&self) -> Option<&F> {
        match self {
            OperatorStep::Invert(x) | OperatorStep::Binomial(x) => Some(x),
            _ => None,
        }
    }

    /// The step that undoes this one on impulse sequences.
    pub fn inverse(&self) -> Self {
        match self {
            OperatorStep::Sigma => OperatorStep::Rho,
            OperatorStep::Rho => OperatorStep::Sigma,
            OperatorStep::Invert(x) => OperatorStep::Invert(-x.clone()),
            OperatorStep::Binomial(y) => OperatorStep::Binomial(-y.clone()),
        }
    }

    pub fn apply_stream(&self, a: &[F]) -> Vec<F> {
        match self {
            OperatorStep::Sigma => sigma_stream(a),
            OperatorStep::Rho => rho_stream(a),
            OperatorStep::Invert(x) => invert_stream(a, x),
            OperatorStep::Binomial(y) => binomial_stream(a, y),
        }
    }

    pub fn apply_lrs(&self, s: &Lrs<F>) -> Lrs<F> {
        match self {
            OperatorStep::Sigma => sigma_lrs(s),
            OperatorStep::Rho => rho_lrs(s),
            OperatorStep::Invert(x) => invert_lrs_same_order(s, x),
            OperatorStep::Binomial(y) => binomial_lrs(s, y),
        }
    }
}

impl<F: Field> fmt::Display for OperatorStep<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param() {
            Some(p) => write!(f, "{}({p})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

/// `c_n = Σ_{i=0}^n binom(n, i) y^{n−i} a_i`; same length as the input.
pub fn binomial_stream<F: Field>(a: &[F], y: &F) -> Vec<F> {
    if a.is_empty() {
        return Vec::new();
    }
    let n_max = a.len() - 1;
    let rows = pascal(n_max);
    let y_pow: Vec<F> = (0..=n_max as u64).map(|k| y.pow(k)).collect();
    (0..=n_max)
        .map(|n| {
            (0..=n).fold(F::zero(), |acc, i| {
                acc + F::from_int(rows[n][i].clone()) * y_pow[n - i].clone() * a[i].clone()
            })
        })
        .collect()
}

/// `b_0 = a_0`, `b_n = a_n + x Σ_{j=0}^{n−1} a_{n−1−j} b_j`; same length as
/// the input.
pub fn invert_stream<F: Field>(a: &[F], x: &F) -> Vec<F> {
    let mut b: Vec<F> = Vec::with_capacity(a.len());
    for n in 0..a.len() {
        let conv = (0..n).fold(F::zero(), |acc, j| {
            acc + a[n - 1 - j].clone() * b[j].clone()
        });
        b.push(a[n].clone() + x.clone() * conv);
    }
    b
}

/// Drops the first term.
pub fn sigma_stream<F: Field>(a: &[F]) -> Vec<F> {
    a.iter().skip(1).cloned().collect()
}

/// Prepends a zero; the output is one term longer.
pub fn rho_stream<F: Field>(a: &[F]) -> Vec<F> {
    std::iter::once(F::zero())
        .chain(a.iter().cloned())
        .collect()
}

/// Characteristic polynomial of `L^(y)(a)` from the closed-form coefficients
/// `p_k = Σ_{i=0}^k binom(r−i, k−i) c_i (−y)^{k−i}`, where `c_i` is the
/// coefficient of `t^{r−i}` in `f`.
pub fn binomial_char_poly<F: Field>(f: &Poly<F>, y: &F) -> Poly<F> {
    let Some(r) = f.degree() else {
        return Poly::zero();
    };
    let rows = pascal(r);
    let neg_y: Vec<F> = (0..=r as u64).map(|k| (-y.clone()).pow(k)).collect();
    let c = |i: usize| f.coeff(r - i);
    let mut coeffs = vec![F::zero(); r + 1];
    for k in 0..=r {
        coeffs[r - k] = (0..=k).fold(F::zero(), |acc, i| {
            acc + F::from_int(rows[r - i][k - i].clone()) * c(i) * neg_y[k - i].clone()
        });
    }
    Poly::new(coeffs)
}

/// `L^(y)` on a recurrent sequence: characteristic polynomial `f(t − y)`,
/// initial terms transformed directly.
pub fn binomial_lrs<F: Field>(s: &Lrs<F>, y: &F) -> Lrs<F> {
    let char_poly = binomial_char_poly(s.char_poly(), y);
    debug_assert_eq!(char_poly, s.char_poly().shift_argument(y));
    let init = binomial_stream(&s.terms(s.order()), y);
    Lrs::new(char_poly, init).expect("shift preserves degree and monicity")
}

/// `I^(x)` on a recurrent sequence, as the generating function
/// `u(t) / (f^R(t) − x·t·u(t))`.
///
/// The denominator may lose degree (see [`degree_reduction_param`]); pass the
/// result to [`crate::lrs::recurrence_from_genfun`] for the reduced
/// recurrence and its validity index.
pub fn invert_lrs<F: Field>(s: &Lrs<F>, x: &F) -> GenFun<F> {
    let u = s.numerator();
    let den = s.genfun().den().clone() - (u.shift_up(1).scale(x));
    GenFun::new(u, den).expect("constant term stays 1")
}

/// Order-`r` characteristic polynomial `(f^R − x t u)^R` of `I^(x)(a)`, with
/// coefficients `H_1 = h_1 + x s_0` and
/// `H_{i+1} = h_{i+1} + x s_i − x Σ_{j=1}^i h_j s_{i−j}`.
///
/// When `H_r = 0` the polynomial has a zero root rather than a lower degree.
pub fn invert_char_poly<F: Field>(s: &Lrs<F>, x: &F) -> Poly<F> {
    let h = s.recurrence_coeffs();
    let init = s.init();
    let r = s.order();
    let big_h: Vec<F> = (0..r)
        .map(|i| {
            let conv = (1..=i).fold(F::zero(), |acc, j| {
                acc + h[j - 1].clone() * init[i - j].clone()
            });
            h[i].clone() + x.clone() * init[i].clone() - x.clone() * conv
        })
        .collect();
    let mut coeffs: Vec<F> = big_h.into_iter().rev().map(|v| -v).collect();
    coeffs.push(F::one());
    Poly::new(coeffs)
}

/// `I^(x)` keeping the order: characteristic polynomial from
/// [`invert_char_poly`], initial terms by the convolution recurrence.
pub fn invert_lrs_same_order<F: Field>(s: &Lrs<F>, x: &F) -> Lrs<F> {
    let init = invert_stream(&s.terms(s.order()), x);
    Lrs::new(invert_char_poly(s, x), init).expect("monic of the same degree")
}

/// The parameter `x = −h_r / u_{r−1}` that annihilates the top coefficient of
/// `f^R − x t u`; `None` when `u_{r−1}` is not invertible.
pub fn degree_reduction_param<F: Field>(s: &Lrs<F>) -> Option<F> {
    let r = s.order();
    let u_top = s.numerator().coeff(r - 1);
    let h_r = s.recurrence_coeffs().pop().expect("order >= 1");
    u_top.inv().ok().map(|inv| -(h_r * inv))
}

/// `σ` on a recurrent sequence.
///
/// With a zero root the characteristic polynomial is divided by `t`;
/// otherwise it is kept and the initial window slides by one.
pub fn sigma_lrs<F: Field>(s: &Lrs<F>) -> Lrs<F> {
    let r = s.order();
    let f = s.char_poly();
    if f.coeff(0).is_zero() {
        if r == 1 {
            // (s_0, 0, 0, …) shifts to the zero sequence
            return Lrs::new(Poly::t(), vec![F::zero()]).expect("t is monic");
        }
        let reduced = f.shift_down(1).expect("zero constant term");
        return Lrs::new(reduced, s.init()[1..].to_vec()).expect("monic of degree r - 1");
    }
    Lrs::new(f.clone(), s.terms(r + 1)[1..].to_vec()).expect("same polynomial")
}

/// `ρ` on a recurrent sequence: multiplies the characteristic polynomial by
/// `t` and prepends a zero to the initial terms.
pub fn rho_lrs<F: Field>(s: &Lrs<F>) -> Lrs<F> {
    let init = rho_stream(s.init());
    Lrs::new(s.char_poly().shift_up(1), init).expect("monic of degree r + 1")
}

/// `L^(z)` on the characteristic polynomial of an impulse sequence:
/// `f(t − z)`.
pub fn impulse_binomial_polytransform<F: Field>(f: &Poly<F>, z: &F) -> Poly<F> {
    f.shift_argument(z)
}

/// `I^(z)` on the characteristic polynomial of an impulse sequence:
/// `f(t) − z`.
pub fn impulse_invert_polytransform<F: Field>(f: &Poly<F>, z: &F) -> Poly<F> {
    f.clone() - Poly::constant(z.clone())
}
