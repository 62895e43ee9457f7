//! Identity generators built on the operators: the binomial anti-mean
//! transform, the r-bonacci ladder, one-click deconstruction of polynomial
//! sequences, and polygonal/pyramidal numbers.

use crate::arith::{Field, Rat};
use crate::combinat::{finite_differences, pascal, BellTable};
use crate::error::{Error, Result};
use crate::lrs::Lrs;
use crate::operators::{binomial_stream, invert_stream, rho_stream};
use crate::poly::Poly;

/// The order-2 sequence `W(s_0, s_1, h, k)` with characteristic polynomial
/// `t^2 − h t + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order2Spec<F> {
    pub s0: F,
    pub s1: F,
    pub h: F,
    pub k: F,
}

impl<F: Field> Order2Spec<F> {
    pub fn new(s0: F, s1: F, h: F, k: F) -> Self {
        Order2Spec { s0, s1, h, k }
    }

    pub fn lrs(&self) -> Lrs<F> {
        let f = Poly::new(vec![self.k.clone(), -self.h.clone(), F::one()]);
        Lrs::new(f, vec![self.s0.clone(), self.s1.clone()]).expect("monic quadratic")
    }

    /// `Δ = h² − 4k`.
    pub fn discriminant(&self) -> F {
        self.h.clone() * self.h.clone() - F::from_int(4) * self.k.clone()
    }

    /// `δ = 2 s_1 − s_0 h`.
    pub fn delta(&self) -> F {
        F::from_int(2) * self.s1.clone() - self.s0.clone() * self.h.clone()
    }

    /// The parameter `−h/2` of the anti-mean transform.
    pub fn anti_mean_param(&self) -> F {
        -(self.h.clone() * half())
    }
}

fn half<F: Field>() -> F {
    F::from_rat(Rat::new(1, 2).expect("nonzero"))
}

/// Closed form of `C = L^{(−h/2)}(W)`:
/// `C_n = Δ^{⌊n/2⌋} / 2^n · δ^{n mod 2} · s_0^{1 − n mod 2}`.
pub fn anti_mean<F: Field>(w: &Order2Spec<F>, count: usize) -> Vec<F> {
    let disc = w.discriminant();
    let delta = w.delta();
    let half: F = half();
    (0..count as u64)
        .map(|n| {
            let odd = n % 2 == 1;
            let tail = if odd { delta.clone() } else { w.s0.clone() };
            disc.pow(n / 2) * half.pow(n) * tail
        })
        .collect()
}

/// `Σ_{i=0}^{2n} binom(2n, i) (−1/2)^{2n−i} F_i`, which vanishes for every n.
pub fn fib_antimean_identity(n: usize) -> Rat {
    let m = 2 * n;
    let fib = rbonacci::<Rat>(2, m + 1);
    let row = &pascal(m)[m];
    let minus_half = -Rat::new(1, 2).expect("nonzero");
    (0..=m).fold(Rat::zero(), |acc, i| {
        acc + Rat::from_int(row[i].clone()) * minus_half.pow((m - i) as u64) * fib[i].clone()
    })
}

/// `t^r − t^{r−1} − … − 1`.
pub fn rbonacci_poly<F: Field>(r: usize) -> Poly<F> {
    let mut coeffs = vec![-F::one(); r];
    coeffs.push(F::one());
    Poly::new(coeffs)
}

/// First `count` r-bonacci numbers: the impulse sequence of
/// `t^r − t^{r−1} − … − 1`. `r = 1` gives `(1, 1, 1, …)`.
pub fn rbonacci<F: Field>(r: usize, count: usize) -> Vec<F> {
    assert!(r >= 1, "r-bonacci order must be at least 1");
    Lrs::impulse(rbonacci_poly(r))
        .expect("monic of degree r")
        .terms(count)
}

/// Checks `I(u) = F^(1)` and `I(ρ(F^(r))) = F^(r+1)` for `r = 1..=r_max`
/// over `count` terms.
pub fn rbonacci_ladder_check(r_max: usize, count: usize) -> bool {
    let start: Vec<Rat> = Lrs::startsequence().terms(count);
    if invert_stream(&start, &Rat::one()) != rbonacci::<Rat>(1, count) {
        return false;
    }
    (1..=r_max).all(|r| rbonacci_ladder_step(r, count))
}

/// `I(ρ(F^(r))) = F^(r+1)` over `count` terms.
pub fn rbonacci_ladder_step(r: usize, count: usize) -> bool {
    let lower: Vec<Rat> = rbonacci(r, count);
    let shifted = &rho_stream(&lower)[..count];
    invert_stream(shifted, &Rat::one()) == rbonacci::<Rat>(r + 1, count)
}

/// `F^(r+1)_m = B_{m+1}(0, F^(r)_0, …, F^(r)_{m−1})` for all `m ≤ n`.
pub fn rbonacci_bell_check(r: usize, n: usize) -> bool {
    let lower: Vec<Rat> = rbonacci(r, n + 1);
    let args = rho_stream(&lower);
    let Ok(table) = BellTable::new(&args, n + 1) else {
        return false;
    };
    let upper: Vec<Rat> = rbonacci(r + 1, n + 1);
    (0..=n).all(|m| table.complete(m + 1) == upper[m])
}

/// Cross-order relation between r-bonacci numbers, obtained from the
/// convolution form of `F^(r) = I(ρ(F^(r−1)))`:
/// `F^(r)_{n+1} = F^(r−1)_n + Σ_{j=0}^{n−1} F^(r)_j F^(r−1)_{n−1−j}`,
/// checked for `n < count − 1`.
pub fn rbonacci_cross_order_check(r: usize, count: usize) -> bool {
    assert!(r >= 2, "cross-order relation needs r >= 2");
    let upper: Vec<Rat> = rbonacci(r, count);
    let lower: Vec<Rat> = rbonacci(r - 1, count);
    (0..count.saturating_sub(1)).all(|n| {
        let conv = (0..n).fold(Rat::zero(), |acc, j| {
            acc + upper[j].clone() * lower[n - 1 - j].clone()
        });
        upper[n + 1] == lower[n].clone() + conv
    })
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "polygonal q must be >= 2, got {q}"
        )));
    }
    Ok(())
}

/// `P^(2)_q(n) = ((q−2) n² + (4−q) n) / 2`.
pub fn polygonal<F: Field>(q: u64, n: u64) -> Result<F> {
    check_q(q)?;
    let (q, n) = (q as i64, n as i64);
    let twice = (q - 2) * n * n + (4 - q) * n;
    Ok(F::from_rat(Rat::new(twice, 2)?))
}

/// `P^(d)_q(n)`: `d = 1` is `(0, 1, q−1, 2q−3, …)`, `d = 2` the polygonal
/// numbers, and each higher dimension the partial sums of the one below.
pub fn pyramidal<F: Field>(q: u64, d: u32, n: u64) -> Result<F> {
    Ok(pyramidal_terms(q, d, n as usize + 1)?
        .pop()
        .expect("n + 1 terms"))
}

pub fn pyramidal_terms<F: Field>(q: u64, d: u32, count: usize) -> Result<Vec<F>> {
    check_q(q)?;
    if d == 0 {
        return Err(Error::InvalidParameter("dimension must be >= 1".into()));
    }
    let mut seq: Vec<F> = if d == 1 {
        (0..count as i64)
            .map(|n| match n {
                0 => F::zero(),
                _ => F::from_int(1 + (q as i64 - 2) * (n - 1)),
            })
            .collect()
    } else {
        (0..count as u64)
            .map(|n| polygonal(q, n))
            .collect::<Result<_>>()?
    };
    for _ in 2..d {
        let mut running = F::zero();
        for v in seq.iter_mut() {
            running = running + v.clone();
            *v = running.clone();
        }
    }
    Ok(seq)
}

/// `L^(1)((0, 1, q−2, 0, …)) = (P_q(n))_{n≥0}` and
/// `L^(1)((1, q−1, q−2, 0, …)) = (P_q(n))_{n≥1}` over `count` terms.
pub fn polygonal_identities_check(q: u64, count: usize) -> Result<bool> {
    check_q(q)?;
    let q_i = q as i64;
    let pad = |head: [i64; 3]| -> Vec<Rat> {
        (0..count)
            .map(|i| Rat::from(head.get(i).copied().unwrap_or(0)))
            .collect()
    };
    let values: Vec<Rat> = (0..=count as u64)
        .map(|n| polygonal(q, n))
        .collect::<Result<_>>()?;
    let from_zero = binomial_stream(&pad([0, 1, q_i - 2]), &Rat::one());
    let from_one = binomial_stream(&pad([1, q_i - 1, q_i - 2]), &Rat::one());
    Ok(from_zero[..] == values[..count] && from_one[..] == values[1..=count])
}

/// One-click deconstruction of a polynomial sequence `f(0), f(1), …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneClick<F: Field> {
    pub values: Vec<F>,
    /// `L^(−1)` of the values.
    pub deconstructed: Vec<F>,
    /// `Δ^n f(0)` from the difference table.
    pub differences: Vec<F>,
}

impl<F: Field> OneClick<F> {
    /// Both routes agree and `L^(1)` of the differences restores the values.
    pub fn holds(&self) -> bool {
        self.deconstructed == self.differences
            && binomial_stream(&self.differences, &F::one()) == self.values
    }
}

pub fn one_click<F: Field>(f: &Poly<F>, count: usize) -> OneClick<F> {
    let values: Vec<F> = (0..count as i64).map(|n| f.eval(&F::from_int(n))).collect();
    let deconstructed = binomial_stream(&values, &-F::one());
    let differences = match count {
        0 => Vec::new(),
        _ => finite_differences(&values, count - 1).expect("count values"),
    };
    OneClick {
        values,
        deconstructed,
        differences,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lrs::minimal_recurrence;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from(x)).collect()
    }

    fn rq(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    fn w(s0: i64, s1: i64, h: i64, k: i64) -> Order2Spec<Rat> {
        Order2Spec::new(Rat::from(s0), Rat::from(s1), Rat::from(h), Rat::from(k))
    }

    #[test]
    fn anti_mean_examples() {
        let fib = w(0, 1, 1, -1);
        let c = anti_mean(&fib, 12);
        assert_eq!(c[1], Rat::new(1, 2).unwrap() * fib.delta());
        assert_eq!(c[1], Rat::from(1));
        assert!(c.iter().step_by(2).all(Field::is_zero));
        assert_eq!(
            c,
            binomial_stream(&fib.lrs().terms(12), &fib.anti_mean_param())
        );

        let degenerate = w(1, 0, 0, 0);
        assert_eq!(anti_mean(&degenerate, 5), ints(&[1, 0, 0, 0, 0]));

        let double_root = w(2, 1, 2, 1);
        assert_eq!(double_root.discriminant(), Rat::zero());
        assert_eq!(double_root.delta(), Rat::from(-2));
        assert_eq!(anti_mean(&double_root, 5), ints(&[2, -1, 0, 0, 0]));
        assert_eq!(
            binomial_stream(&double_root.lrs().terms(5), &Rat::from(-1)),
            ints(&[2, -1, 0, 0, 0])
        );
    }

    #[test]
    fn fib_antimean_examples() {
        assert!(fib_antimean_identity(0).is_zero());
        // (1/4)·0 + 2·(−1/2)·1 + 1·1
        assert!(fib_antimean_identity(1).is_zero());
        for n in 0..=10 {
            assert!(fib_antimean_identity(n).is_zero(), "n={n}");
        }
    }

    #[test]
    fn rbonacci_examples() {
        assert_eq!(rbonacci::<Rat>(2, 8), ints(&[0, 1, 1, 2, 3, 5, 8, 13]));
        assert_eq!(rbonacci::<Rat>(3, 8), ints(&[0, 0, 1, 1, 2, 4, 7, 13]));
        assert_eq!(rbonacci::<Rat>(4, 8), ints(&[0, 0, 0, 1, 1, 2, 4, 8]));
        assert_eq!(rbonacci::<Rat>(1, 5), ints(&[1; 5]));
        assert!(rbonacci_ladder_check(6, 30));
    }

    #[test]
    fn rbonacci_bell_examples() {
        assert!(rbonacci_bell_check(2, 10));
        assert!(rbonacci_bell_check(2, 0));
        assert!(rbonacci_bell_check(4, 12));
    }

    #[test]
    fn cross_order_relation() {
        for r in 2..=6 {
            assert!(rbonacci_cross_order_check(r, 25), "r={r}");
        }
        // F^(2)_4 = 3 from F^(1) = (1, 1, 1, …)
        let f2: Vec<Rat> = rbonacci(2, 5);
        let f1: Vec<Rat> = rbonacci(1, 5);
        let n = 3;
        let conv = (0..n).fold(Rat::zero(), |acc, j| {
            acc + f2[j].clone() * f1[n - 1 - j].clone()
        });
        assert_eq!(f1[n].clone() + conv, Rat::from(3));
    }

    #[test]
    fn polygonal_examples() {
        let tri: Vec<Rat> = (0..6).map(|n| polygonal(3, n).unwrap()).collect();
        assert_eq!(tri, ints(&[0, 1, 3, 6, 10, 15]));
        let sq: Vec<Rat> = (0..5).map(|n| polygonal(4, n).unwrap()).collect();
        assert_eq!(sq, ints(&[0, 1, 4, 9, 16]));
        assert_eq!(
            pyramidal_terms::<Rat>(3, 3, 5).unwrap(),
            ints(&[0, 1, 4, 10, 20])
        );
        assert_eq!(pyramidal::<Rat>(3, 2, 4).unwrap(), Rat::from(10));
        assert_eq!(
            pyramidal_terms::<Rat>(5, 1, 4).unwrap(),
            ints(&[0, 1, 4, 7])
        );
        assert!(polygonal::<Rat>(1, 3).is_err());
        assert!(pyramidal::<Rat>(3, 0, 3).is_err());
    }

    #[test]
    fn pyramidal_recurrence() {
        for q in 2..=6 {
            for d in 2..=5u32 {
                let terms: Vec<Rat> = pyramidal_terms(q, d, 4 * (d as usize + 2)).unwrap();
                let m = minimal_recurrence(&terms).unwrap();
                let deg = m.poly.degree().unwrap();
                let one_minus = Poly::<Rat>::from_ints(&[-1, 1]);
                let target =
                    (0..=d).fold(Poly::constant(Rat::one()), |acc, _| acc * one_minus.clone());
                // a divisor of (t-1)^{d+1} is (t-1)^deg
                let divisor =
                    (0..deg).fold(Poly::constant(Rat::one()), |acc, _| acc * one_minus.clone());
                assert_eq!(m.poly, divisor, "q={q} d={d}");
                assert!(deg <= target.degree().unwrap());
            }
        }
    }

    #[test]
    fn polygonal_identities() {
        for q in [2, 5, 8] {
            assert!(polygonal_identities_check(q, 20).unwrap(), "q={q}");
        }
        assert!(polygonal_identities_check(0, 20).is_err());
    }

    #[test]
    fn one_click_examples() {
        for q in 2..=10i64 {
            let f = Poly::new(vec![Rat::zero(), rq(4 - q, 2), rq(q - 2, 2)]);
            let oc = one_click(&f, 8);
            assert_eq!(oc.deconstructed, ints(&[0, 1, q - 2, 0, 0, 0, 0, 0]));
            assert!(oc.holds());
        }
        let c = one_click(&Poly::constant(Rat::from(7)), 5);
        assert_eq!(c.deconstructed, ints(&[7, 0, 0, 0, 0]));
        assert!(c.holds());
        let cube = one_click(&Poly::monomial(Rat::one(), 3), 8);
        assert_eq!(cube.differences, ints(&[0, 1, 6, 6, 0, 0, 0, 0]));
        assert!(cube.holds());
    }
}
