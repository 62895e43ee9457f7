//! Stirling numbers, the binomial-moment coefficients `c_s(m, α, y)` and
//! `Q(m)`, ordinary Bell polynomials, figurate numbers and finite
//! differences.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::operators::invert_stream;
use crate::poly::Poly;

/// Rows `0..=n` of Pascal's triangle.
pub fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::one(); i + 1];
        for k in 1..i {
            row[k] = &rows[i - 1][k - 1] + &rows[i - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// `binom(n, k)`, zero when `k > n` or `n < 0`.
pub fn binomial(n: i64, k: u64) -> BigInt {
    if n < 0 || k > n as u64 {
        return BigInt::zero();
    }
    let n = n as u64;
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Triangles of Stirling numbers of the second kind `{s, k}` and unsigned
/// Stirling numbers of the first kind `[k, h]`, up to a fixed size.
#[derive(Debug, Clone)]
pub struct StirlingTables {
    second: Vec<Vec<BigInt>>,
    first_unsigned: Vec<Vec<BigInt>>,
}

impl StirlingTables {
    pub fn new(max: usize) -> Self {
        let mut second = vec![vec![BigInt::zero(); max + 1]; max + 1];
        let mut first_unsigned = second.clone();
        second[0][0] = BigInt::one();
        first_unsigned[0][0] = BigInt::one();
        for n in 1..=max {
            for k in 1..=n {
                second[n][k] = BigInt::from(k) * &second[n - 1][k] + &second[n - 1][k - 1];
                first_unsigned[n][k] =
                    BigInt::from(n - 1) * &first_unsigned[n - 1][k] + &first_unsigned[n - 1][k - 1];
            }
        }
        StirlingTables {
            second,
            first_unsigned,
        }
    }

    pub fn max(&self) -> usize {
        self.second.len() - 1
    }

    fn check(&self, n: usize, k: usize) -> Result<()> {
        if k > n || n > self.max() {
            Err(Error::OutOfRange(format!(
                "Stirling index ({n}, {k}) outside 0 <= k <= n <= {}",
                self.max()
            )))
        } else {
            Ok(())
        }
    }

    /// `{s, k}`.
    pub fn second(&self, s: usize, k: usize) -> Result<&BigInt> {
        self.check(s, k)?;
        Ok(&self.second[s][k])
    }

    /// `[k, h]`, unsigned.
    pub fn first_unsigned(&self, k: usize, h: usize) -> Result<&BigInt> {
        self.check(k, h)?;
        Ok(&self.first_unsigned[k][h])
    }
}

pub fn stirling2(s: usize, k: usize) -> Result<BigInt> {
    StirlingTables::new(s).second(s, k).cloned()
}

pub fn stirling1_unsigned(k: usize, h: usize) -> Result<BigInt> {
    StirlingTables::new(k).first_unsigned(k, h).cloned()
}

/// Coefficients (lowest power first) of the falling factorial `m(m-1)…(m-k+1)`
/// as a polynomial in `m`, via signed Stirling numbers of the first kind.
pub fn falling_factorial_coeffs(k: usize) -> Vec<BigInt> {
    let st = StirlingTables::new(k);
    (0..=k)
        .map(|h| {
            let v = st.first_unsigned[k][h].clone();
            if (k - h).is_multiple_of(2) {
                v
            } else {
                -v
            }
        })
        .collect()
}

/// `y / (α + y)`, rejecting the pole.
fn moment_ratio<F: Field>(alpha: &F, y: &F) -> Result<F> {
    let denom = alpha.clone() + y.clone();
    if denom.is_zero() {
        return Err(Error::Pole);
    }
    y.div(&denom)
}

/// `c_s(m, α, y)` as a polynomial in `m`:
/// `Σ_h (Σ_{k=h}^s {s,k} [k,h] (−1)^{k−h} (y/(α+y))^k) m^h`.
pub fn c_poly<F: Field>(s: usize, alpha: &F, y: &F) -> Result<Poly<F>> {
    let ratio = moment_ratio(alpha, y)?;
    let st = StirlingTables::new(s);
    Ok(c_poly_with(&st, s, &ratio))
}

fn c_poly_with<F: Field>(st: &StirlingTables, s: usize, ratio: &F) -> Poly<F> {
    let powers: Vec<F> = (0..=s as u64).map(|k| ratio.pow(k)).collect();
    let coeffs = (0..=s)
        .map(|h| {
            (h..=s).fold(F::zero(), |acc, k| {
                let mut c = st.second[s][k].clone() * &st.first_unsigned[k][h];
                if (k - h) % 2 == 1 {
                    c = -c;
                }
                acc + F::from_int(c) * powers[k].clone()
            })
        })
        .collect();
    Poly::new(coeffs)
}

/// `c_s(m, α, y)` evaluated at an integer `m`.
pub fn c_coeff<F: Field>(s: usize, m: u64, alpha: &F, y: &F) -> Result<F> {
    Ok(c_poly(s, alpha, y)?.eval(&F::from_int(m)))
}

/// The polynomial `Q` with `Σ_i binom(m,i) y^i α^{m−i} P(i) = (α+y)^m Q(m)`.
pub fn q_poly<F: Field>(p: &Poly<F>, alpha: &F, y: &F) -> Result<Poly<F>> {
    let ratio = moment_ratio(alpha, y)?;
    let deg = p.degree().unwrap_or(0);
    let st = StirlingTables::new(deg);
    Ok(p.coeffs()
        .iter()
        .enumerate()
        .fold(Poly::zero(), |acc, (i, x)| {
            acc + c_poly_with(&st, i, &ratio).scale(x)
        }))
}

/// Partial and complete ordinary Bell polynomials evaluated at a concrete
/// argument `t = (t_1, t_2, …)`.
///
/// Row `k` is the truncated power series `(Σ_{n≥1} t_n z^n)^k`, so
/// `partial(n, k)` is `B_{n,k}(t)`.
#[derive(Debug, Clone)]
pub struct BellTable<F> {
    partial: Vec<Vec<F>>,
}

impl<F: Field> BellTable<F> {
    /// `t[0]` is `t_1`. Needs at least `n_max` entries.
    pub fn new(t: &[F], n_max: usize) -> Result<Self> {
        if t.len() < n_max {
            return Err(Error::InsufficientData(format!(
                "Bell table of order {n_max} needs {n_max} arguments, got {}",
                t.len()
            )));
        }
        let mut partial = Vec::with_capacity(n_max + 1);
        let mut row = vec![F::zero(); n_max + 1];
        row[0] = F::one();
        partial.push(row);
        for k in 1..=n_max {
            let prev = &partial[k - 1];
            let mut row = vec![F::zero(); n_max + 1];
            for n in k..=n_max {
                // [z^n] prev·T = Σ_{j≥1} t_j [z^{n−j}] prev
                row[n] = (1..=n - (k - 1)).fold(F::zero(), |acc, j| {
                    acc + t[j - 1].clone() * prev[n - j].clone()
                });
            }
            partial.push(row);
        }
        Ok(BellTable { partial })
    }

    pub fn n_max(&self) -> usize {
        self.partial.len() - 1
    }

    /// `B_{n,k}(t)`; zero when `k > n`.
    pub fn partial(&self, n: usize, k: usize) -> F {
        self.partial
            .get(k)
            .and_then(|row| row.get(n))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    /// `B_n(t) = Σ_{k=1}^n B_{n,k}(t)`.
    pub fn complete(&self, n: usize) -> F {
        (1..=n).fold(F::zero(), |acc, k| acc + self.partial(n, k))
    }
}

pub fn bell_partial<F: Field>(t: &[F], n: usize, k: usize) -> Result<F> {
    Ok(BellTable::new(t, n)?.partial(n, k))
}

pub fn bell_complete<F: Field>(t: &[F], n: usize) -> Result<F> {
    Ok(BellTable::new(t, n)?.complete(n))
}

/// Checks `I(a)_n = B_{n+1}(a_0, a_1, …)`; `a` needs `n + 1` terms.
pub fn bell_of_invert_check<F: Field>(a: &[F], n: usize) -> bool {
    if a.len() < n + 1 {
        return false;
    }
    let b = invert_stream(&a[..=n], &F::one());
    match bell_complete(a, n + 1) {
        Ok(bell) => b[n] == bell,
        Err(_) => false,
    }
}

/// Figurate number `T^{(k)}_h = binom(h+k−2, k−1)`.
pub fn figurate(k: u64, h: u64) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "figurate order k must be >= 1".into(),
        ));
    }
    // binom(-1, 0) would be 1 under the generalized convention; T^(1)_0 = 0
    Ok(binomial(h as i64 + k as i64 - 2, k - 1))
}

/// `T^{(k)}_0 … T^{(k)}_{count−1}` by iterated partial sums starting from
/// `(0, 1, 1, 1, …)`.
pub fn figurate_partial_sums(k: u64, count: usize) -> Result<Vec<BigInt>> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "figurate order k must be >= 1".into(),
        ));
    }
    let mut seq: Vec<BigInt> = (0..count)
        .map(|h| {
            if h == 0 {
                BigInt::zero()
            } else {
                BigInt::one()
            }
        })
        .collect();
    for _ in 1..k {
        let mut running = BigInt::zero();
        for v in seq.iter_mut() {
            running += &*v;
            *v = running.clone();
        }
    }
    Ok(seq)
}

/// `Δ^order f(m)` for every `m` the window allows.
pub fn forward_difference<F: Field>(values: &[F], order: usize) -> Result<Vec<F>> {
    if values.len() <= order {
        return Err(Error::InsufficientData(format!(
            "difference of order {order} needs more than {order} values"
        )));
    }
    let mut row = values.to_vec();
    for _ in 0..order {
        row = row
            .windows(2)
            .map(|w| w[1].clone() - w[0].clone())
            .collect();
    }
    Ok(row)
}

/// Column zero of the difference table: `Δ^0 f(0), …, Δ^order f(0)`.
pub fn finite_differences<F: Field>(values: &[F], order: usize) -> Result<Vec<F>> {
    if values.len() <= order {
        return Err(Error::InsufficientData(format!(
            "difference of order {order} needs more than {order} values"
        )));
    }
    let mut row = values[..=order].to_vec();
    let mut column = Vec::with_capacity(order + 1);
    for _ in 0..=order {
        column.push(row[0].clone());
        row = row
            .windows(2)
            .map(|w| w[1].clone() - w[0].clone())
            .collect();
    }
    Ok(column)
}

/// Coordinates of a polynomial function in the basis `binom(n, i)`:
/// `Δ^i f(0)` for `i = 0..=deg f`.
pub fn binomial_basis<F: Field>(f: &Poly<F>) -> Vec<F> {
    let Some(deg) = f.degree() else {
        return vec![F::zero()];
    };
    let values: Vec<F> = (0..=deg as i64).map(|n| f.eval(&F::from_int(n))).collect();
    finite_differences(&values, deg).expect("deg + 1 values")
}

/// `Σ_i diffs[i] · binom(n, i)`.
pub fn from_binomial_basis<F: Field>(diffs: &[F], n: u64) -> F {
    diffs.iter().enumerate().fold(F::zero(), |acc, (i, d)| {
        acc + d.clone() * F::from_int(binomial(n as i64, i as u64))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;
    use proptest::prelude::*;

    fn r(n: i64) -> Rat {
        Rat::from(n)
    }

    fn rq(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(4, 2).unwrap(), BigInt::from(7));
        assert_eq!(stirling1_unsigned(4, 2).unwrap(), BigInt::from(11));
        for s in 0..10 {
            assert_eq!(stirling2(s, s).unwrap(), BigInt::one());
            assert_eq!(stirling1_unsigned(s, s).unwrap(), BigInt::one());
        }
        assert_eq!(stirling2(5, 0).unwrap(), BigInt::zero());
        assert!(stirling2(2, 3).is_err());
        assert!(stirling1_unsigned(2, 3).is_err());
    }

    #[test]
    fn falling_factorial_expansion() {
        for k in 0..=8usize {
            let poly = Poly::<Rat>::new(
                falling_factorial_coeffs(k)
                    .into_iter()
                    .map(Rat::from)
                    .collect(),
            );
            for m in 0..=12i64 {
                let direct = (0..k as i64).fold(r(1), |acc, j| acc * r(m - j));
                assert_eq!(poly.eval(&r(m)), direct, "k={k} m={m}");
            }
        }
    }

    #[test]
    fn c_coeff_examples() {
        let (a, y) = (rq(3, 2), rq(-2, 5));
        let c1 = c_poly(1, &a, &y).unwrap();
        let ratio = y.clone() * (a.clone() + y.clone()).inv().unwrap();
        assert_eq!(c1, Poly::monomial(ratio, 1));
        assert_eq!(c_poly(0, &a, &y).unwrap(), Poly::constant(r(1)));
        // Σ_i binom(3,i) i^2 = 24 = 2^3 · 3
        assert_eq!(c_coeff(2, 3, &r(1), &r(1)).unwrap(), r(3));
        assert_eq!(c_coeff(2, 3, &r(1), &r(-1)), Err(Error::Pole));
    }

    #[test]
    fn q_poly_examples() {
        let one = Poly::constant(r(1));
        assert_eq!(q_poly(&one, &rq(2, 3), &rq(5, 7)).unwrap(), one);
        let t = Poly::<Rat>::t();
        assert_eq!(
            q_poly(&t, &r(1), &r(1)).unwrap(),
            Poly::monomial(rq(1, 2), 1)
        );
        let t2 = Poly::monomial(r(1), 2);
        assert_eq!(q_poly(&t2, &r(1), &r(1)).unwrap().eval(&r(3)), r(3));
        assert_eq!(q_poly(&t2, &r(2), &r(-2)), Err(Error::Pole));
    }

    #[test]
    fn bell_examples() {
        let ones = vec![r(1); 6];
        assert_eq!(bell_complete(&ones, 4).unwrap(), r(8));
        let t = vec![r(3), r(-2), r(5)];
        for n in 0..=3 {
            assert_eq!(bell_partial(&t, n, n).unwrap(), r(3).pow(n as u64));
        }
        assert!(bell_complete(&t, 4).is_err());
        assert_eq!(bell_partial(&t, 2, 3).unwrap(), r(0));
    }

    /// Sum over compositions of `n`: each ordered composition
    /// `n = i_1 + … + i_k` contributes `t_{i_1}⋯t_{i_k}`.
    fn bell_by_compositions(t: &[Rat], n: usize, parts: Option<usize>) -> Rat {
        fn go(t: &[Rat], rest: usize, used: usize, parts: Option<usize>, acc: Rat) -> Rat {
            if rest == 0 {
                return match parts {
                    Some(k) if k != used => r(0),
                    _ => acc,
                };
            }
            (1..=rest).fold(r(0), |sum, first| {
                sum + go(
                    t,
                    rest - first,
                    used + 1,
                    parts,
                    acc.clone() * t[first - 1].clone(),
                )
            })
        }
        if n == 0 {
            return match parts {
                Some(0) => r(1),
                _ => r(0),
            };
        }
        go(t, n, 0, parts, r(1))
    }

    #[test]
    fn bell_matches_composition_oracle() {
        let t: Vec<Rat> = [2, -1, 3, 0, 5, -4, 1].iter().map(|&v| r(v)).collect();
        let table = BellTable::new(&t, 7).unwrap();
        for n in 0..=7 {
            for k in 0..=n {
                assert_eq!(table.partial(n, k), bell_by_compositions(&t, n, Some(k)));
            }
            assert_eq!(table.complete(n), bell_by_compositions(&t, n, None));
        }
    }

    #[test]
    fn bell_invert_link() {
        let ones = vec![r(1); 12];
        for n in 0..=10 {
            assert!(bell_of_invert_check(&ones, n));
        }
        let fib: Vec<Rat> = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
            .iter()
            .map(|&v| r(v))
            .collect();
        for n in 0..=10 {
            assert!(bell_of_invert_check(&fib, n));
        }
        assert!(!bell_of_invert_check(&fib, 11));
    }

    #[test]
    fn figurate_values() {
        let tri: Vec<BigInt> = (0..6).map(|h| figurate(3, h).unwrap()).collect();
        assert_eq!(tri, [0, 1, 3, 6, 10, 15].map(BigInt::from));
        let first: Vec<BigInt> = (0..6).map(|h| figurate(1, h).unwrap()).collect();
        assert_eq!(first, [0, 1, 1, 1, 1, 1].map(BigInt::from));
        for k in 1..=6u64 {
            let sums = figurate_partial_sums(k, 21).unwrap();
            for h in 0..=20u64 {
                assert_eq!(figurate(k, h).unwrap(), sums[h as usize], "k={k} h={h}");
            }
        }
        assert!(figurate(0, 3).is_err());
    }

    #[test]
    fn finite_difference_examples() {
        let sq: Vec<Rat> = [0, 1, 4, 9].iter().map(|&v| r(v)).collect();
        assert_eq!(
            finite_differences(&sq, 3).unwrap(),
            vec![r(0), r(1), r(2), r(0)]
        );
        assert!(finite_differences(&sq, 4).is_err());
        for q in 2..=10i64 {
            // P_q(n) = ((q-2) n^2 + (4-q) n) / 2
            let f = Poly::new(vec![r(0), rq(4 - q, 2), rq(q - 2, 2)]);
            let mut coords = binomial_basis(&f);
            coords.resize(3, r(0));
            assert_eq!(coords, vec![r(0), r(1), r(q - 2)]);
        }
        let cube = Poly::new(vec![r(-2), rq(1, 3), r(0), r(7)]);
        let diffs = binomial_basis(&cube);
        for n in 0..=15u64 {
            assert_eq!(from_binomial_basis(&diffs, n), cube.eval(&r(n as i64)));
        }
    }

    fn rat() -> impl Strategy<Value = Rat> {
        (-9i64..10, 1i64..5).prop_map(|(n, d)| rq(n, d))
    }

    proptest! {
        #[test]
        fn difference_annihilates_polynomials(coeffs in prop::collection::vec(rat(), 1..5)) {
            let f = Poly::new(coeffs);
            let d = f.degree().unwrap_or(0);
            let values: Vec<Rat> = (0..20).map(|n| f.eval(&r(n))).collect();
            let row = forward_difference(&values, d + 1).unwrap();
            prop_assert!(row.iter().all(|v| v.is_zero()));
        }
    }
}
