//! Closed forms, recurrences and generating functions for the number of
//! strong independent sets in uniform hyperpaths, plus the hyperstar
//! polynomial and the skeleton counting formulas.
//!
//! Notation: `p(n, k, ell)` counts size-`k` sets in `P_{n,ell}` and
//! `q(n, k, ell)` counts them in `Q_{n,ell}` (first vertex removed).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::enumerate::SubblockCounts;
use crate::error::{invalid, Result};
use crate::polyseq::{series_coefficients, IntPoly};

/// Binomial coefficient on all integers: zero when `b < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// `base^exp` with `0^0 = 1`.
fn ipow(base: i64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

fn as_i64(n: usize) -> i64 {
    i64::try_from(n).expect("parameter fits in i64")
}

fn check_ell(ell: usize, min: usize) -> Result<()> {
    if ell < min {
        return Err(invalid(format!("ell must be at least {min}, got {ell}")));
    }
    Ok(())
}

/// Hyperpath counting parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathParams {
    pub n: usize,
    pub ell: usize,
    pub k: usize,
}

impl PathParams {
    pub fn new(n: usize, ell: usize, k: usize) -> Result<Self> {
        check_ell(ell, 2)?;
        Ok(PathParams { n, ell, k })
    }

    pub fn closed_form(&self) -> BigInt {
        closed_form_pknl(self.n, self.k, self.ell).expect("validated")
    }
}

/// `p(n, k, ell)` from the boundary rows and, for `n, k >= 2`, the sum
/// `(ell-1)^2 * sum_j (ell-2)^(k-j-2) C(k-2, j) C(n-j, k)`.
pub fn closed_form_pknl(n: usize, k: usize, ell: usize) -> Result<BigInt> {
    check_ell(ell, 2)?;
    let l = as_i64(ell);
    let value = match (n, k) {
        (_, 0) => BigInt::one(),
        (0, _) => BigInt::zero(),
        (_, 1) => BigInt::from(as_i64(n) * l - (as_i64(n) - 1)),
        (1, _) => BigInt::zero(),
        _ => {
            let sum: BigInt = (0..=k - 2)
                .map(|j| {
                    ipow(l - 2, k - j - 2)
                        * binomial(as_i64(k) - 2, as_i64(j))
                        * binomial(as_i64(n) - as_i64(j), as_i64(k))
                })
                .sum();
            ipow(l - 1, 2) * sum
        }
    };
    Ok(value)
}

/// `C(n - k + 2, k)`: independent sets of size `k` in the graph path with
/// `n` edges.
pub fn closed_form_path2(n: usize, k: usize) -> BigInt {
    binomial(as_i64(n) - as_i64(k) + 2, as_i64(k))
}

/// `(p(n, k, ell), q(n, k, ell))` from the coupled recurrences
/// `p_n^k = p_{n-1}^k + (ell-1) q_{n-1}^{k-1}` and
/// `q_n^k = p_{n-1}^k + (ell-2) q_{n-1}^{k-1}`, valid for `n, k >= 2`.
pub fn pq_coupled(n: usize, k: usize, ell: usize) -> Result<(BigInt, BigInt)> {
    check_ell(ell, 3)?;
    let table = pq_table(n, k, ell);
    Ok(table[n][k].clone())
}

fn pq_table(nmax: usize, kmax: usize, ell: usize) -> Vec<Vec<(BigInt, BigInt)>> {
    let l = as_i64(ell);
    let mut t = vec![vec![(BigInt::zero(), BigInt::zero()); kmax + 1]; nmax + 1];
    for n in 0..=nmax {
        for k in 0..=kmax {
            t[n][k] = match (n, k) {
                (_, 0) => (BigInt::one(), BigInt::one()),
                (0, _) => (BigInt::zero(), BigInt::zero()),
                (1, 1) => (BigInt::from(l), BigInt::from(l - 1)),
                (1, _) => (BigInt::zero(), BigInt::zero()),
                (_, 1) => {
                    let nn = as_i64(n);
                    (BigInt::from(nn * l - (nn - 1)), BigInt::from(nn * l - nn))
                }
                _ => {
                    let (p_prev, _) = &t[n - 1][k];
                    let (_, q_prev) = &t[n - 1][k - 1];
                    (
                        p_prev + BigInt::from(l - 1) * q_prev,
                        p_prev + BigInt::from(l - 2) * q_prev,
                    )
                }
            };
        }
    }
    t
}

/// `p(n, k, ell)` from `p_n^k = p_{n-1}^k + p_{n-2}^{k-1} + (ell-2) p_{n-1}^{k-1}`
/// for `n >= 3`, seeded with the rows `n = 0, 1, 2`.
pub fn pknl_via_fib_rec(n: usize, k: usize, ell: usize) -> Result<BigInt> {
    check_ell(ell, 2)?;
    Ok(fib_table(n, k, ell)[n][k].clone())
}

fn fib_table(nmax: usize, kmax: usize, ell: usize) -> Vec<Vec<BigInt>> {
    let l = as_i64(ell);
    let seed = |n: usize, k: usize| -> BigInt {
        let row: [i64; 3] = match n {
            0 => [1, 0, 0],
            1 => [1, l, 0],
            _ => [1, 2 * l - 1, (l - 1) * (l - 1)],
        };
        row.get(k).copied().map_or_else(BigInt::zero, BigInt::from)
    };
    let mut t = vec![vec![BigInt::zero(); kmax + 1]; nmax + 1];
    for n in 0..=nmax {
        for k in 0..=kmax {
            t[n][k] = if n <= 2 || k == 0 {
                seed(n.min(2), k)
            } else {
                &t[n - 1][k] + &t[n - 2][k - 1] + BigInt::from(l - 2) * &t[n - 1][k - 1]
            };
        }
    }
    t
}

/// `P_{n,ell}(x)` from `P_n = (1 + (ell-2)x) P_{n-1} + x P_{n-2}` for `n >= 3`.
pub fn path_poly(n: usize, ell: usize) -> Result<IntPoly> {
    check_ell(ell, 2)?;
    let l = as_i64(ell);
    let mut polys = vec![
        IntPoly::one(),
        IntPoly::linear(1, l),
        IntPoly::from_i64s(&[1, 2 * l - 1, (l - 1) * (l - 1)]),
    ];
    let step = IntPoly::linear(1, l - 2);
    let x = IntPoly::linear(0, 1);
    for m in 3..=n {
        let next = &(&step * &polys[m - 1]) + &(&x * &polys[m - 2]);
        polys.push(next);
    }
    polys.truncate(n + 1);
    Ok(polys.swap_remove(n))
}

/// `Q_{n,ell}(x)` from the coupled polynomial recurrences
/// `P_n = P_{n-1} + (ell-1) x Q_{n-1}`, `Q_n = P_{n-1} + (ell-2) x Q_{n-1}`.
pub fn q_poly(n: usize, ell: usize) -> Result<IntPoly> {
    check_ell(ell, 3)?;
    if n < 1 {
        return Err(invalid("Q_{n,ell} needs n >= 1"));
    }
    Ok(coupled_polys(n, ell).1)
}

/// `(P_{n,ell}, Q_{n,ell})` by the coupled recurrences.
pub fn coupled_polys(n: usize, ell: usize) -> (IntPoly, IntPoly) {
    let l = as_i64(ell);
    if n == 0 {
        return (IntPoly::one(), IntPoly::one());
    }
    let mut p = IntPoly::linear(1, l);
    let mut q = IntPoly::linear(1, l - 1);
    let xp = IntPoly::linear(0, l - 1);
    let xq = IntPoly::linear(0, l - 2);
    for _ in 2..=n {
        let np = &p + &(&xp * &q);
        let nq = &p + &(&xq * &q);
        p = np;
        q = nq;
    }
    (p, q)
}

/// Coefficients `0..=terms` of `(ell-1)^2 x^k (ell-2+x)^(k-2) / (1-x)^(k+1)`,
/// the generating function of column `k` of the hyperpath table.
pub fn gf_pknl(k: usize, ell: usize, terms: usize) -> Result<Vec<BigInt>> {
    if k < 2 {
        return Err(invalid(format!(
            "the column generating function needs k >= 2, got {k}"
        )));
    }
    check_ell(ell, 3)?;
    let l = as_i64(ell);
    let num = IntPoly::linear(l - 2, 1)
        .pow(u32::try_from(k - 2).expect("k fits in u32"))
        .shift(k)
        .scale(&BigInt::from((l - 1) * (l - 1)));
    let den = IntPoly::linear(1, -1).pow(u32::try_from(k + 1).expect("k fits in u32"));
    series_coefficients(&num, &den, terms)
}

/// `x + prod_i (1 + (s_i - 1) x)`: the independence polynomial of the
/// linear hyperstar with edge sizes `sizes`.
pub fn hyperstar_poly(sizes: &[usize]) -> Result<IntPoly> {
    if sizes.is_empty() {
        return Err(invalid("a hyperstar needs at least one edge"));
    }
    if let Some(&s) = sizes.iter().find(|&&s| s < 2) {
        return Err(invalid(format!("edge sizes must be at least 2, got {s}")));
    }
    let prod = sizes.iter().fold(IntPoly::one(), |acc, &s| {
        &acc * &IntPoly::linear(1, as_i64(s) - 1)
    });
    Ok(&prod + &IntPoly::linear(0, 1))
}

fn check_block(n: usize, k: usize, ell: usize, j: usize) -> Result<()> {
    if n < 2 || k < 2 {
        return Err(invalid("block counts need n >= 2 and k >= 2"));
    }
    check_ell(ell, 3)?;
    if j > k - 2 {
        return Err(invalid(format!(
            "forced count j must lie in [0, {}], got {j}",
            k - 2
        )));
    }
    Ok(())
}

/// Size-`k` sets of `P_{n,ell}` with exactly `j` forced vertices:
/// `(ell-1)^2 (ell-2)^(k-2-j) C(k-2, j) C(n-j, k)`.
pub fn block_count(n: usize, k: usize, ell: usize, j: usize) -> Result<BigInt> {
    check_block(n, k, ell, j)?;
    let l = as_i64(ell);
    let (n, k, ji) = (as_i64(n), as_i64(k), as_i64(j));
    Ok(ipow(l - 1, 2)
        * ipow(l - 2, (k - 2 - ji) as usize)
        * binomial(k - 2, ji)
        * binomial(n - ji, k))
}

/// `A = (ell-1) (ell-2)^(k-2-j) C(k-2, k-2-j)`, the choices common to all
/// four sub-blocks (first edge, free middle edges, forced positions).
pub fn common_factor(k: usize, ell: usize, j: usize) -> BigInt {
    let l = as_i64(ell);
    let free = as_i64(k) - 2 - as_i64(j);
    BigInt::from(l - 1) * ipow(l - 2, free as usize) * binomial(as_i64(k) - 2, free)
}

/// Sub-block sizes of bucket `j`, keyed by the lengths of the last two
/// unmarked runs.
pub fn subblock_counts(n: usize, k: usize, ell: usize, j: usize) -> Result<SubblockCounts> {
    check_block(n, k, ell, j)?;
    let a = common_factor(k, ell, j);
    let l = as_i64(ell);
    let m = as_i64(n) - as_i64(j) - 2;
    let k = as_i64(k);
    Ok(SubblockCounts {
        zero_positive: &a * BigInt::from(l - 2) * binomial(m, k - 1),
        zero_zero: &a * BigInt::from(l - 1) * binomial(m, k - 2),
        positive_positive: &a * BigInt::from(l - 1) * binomial(m, k),
        positive_zero: &a * BigInt::from(l) * binomial(m, k - 1),
    })
}

/// Solutions of `x_1 + ... + x_t = m` in nonnegative integers where `s`
/// designated variables are at least one and `r` designated variables are
/// zero: `C(t - r - 1 + m - s, t - r - 1)`. When every variable is pinned to
/// zero the only candidate is the all-zero solution.
pub fn stars_and_bars(t: usize, m: usize, s: usize, r: usize) -> Result<BigInt> {
    if t < 1 {
        return Err(invalid("stars and bars needs at least one variable"));
    }
    if s + r > t {
        return Err(invalid(format!("s + r = {} exceeds t = {t}", s + r)));
    }
    if r == t {
        return Ok(BigInt::from(u8::from(m == 0)));
    }
    let free = as_i64(t) - as_i64(r) - 1;
    Ok(binomial(free + as_i64(m) - as_i64(s), free))
}

/// Rows `n = 0..=nmax` of the table `p(n, k, ell)`, each of length
/// `nmax + 1` (zeros past the largest set).
pub fn pknl_table(ell: usize, nmax: usize) -> Result<Vec<Vec<BigInt>>> {
    check_ell(ell, 2)?;
    (0..=nmax)
        .map(|n| (0..=nmax).map(|k| closed_form_pknl(n, k, ell)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::count_strong;
    use crate::hypergraph::{hyperstar, uniform_hyperpath};
    use crate::polyseq::is_real_rooted;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_pknl(6, 4, 3).unwrap(), BigInt::from(104));
        for n in 1..10 {
            for ell in 2..7 {
                assert_eq!(
                    closed_form_pknl(n, 1, ell).unwrap(),
                    BigInt::from(n * ell - (n - 1))
                );
            }
        }
        assert_eq!(closed_form_pknl(5, 2, 2).unwrap(), BigInt::from(10));
        assert_eq!(closed_form_pknl(3, 3, 5).unwrap(), BigInt::from(16 * 3));
        assert!(closed_form_pknl(3, 1, 1).is_err());
    }

    #[test]
    fn graph_path_counts() {
        assert_eq!(closed_form_path2(2, 1), BigInt::from(3));
        assert_eq!(closed_form_path2(4, 2), BigInt::from(6));
        assert_eq!(closed_form_path2(3, 0), BigInt::from(1));
        for n in 2..12 {
            for k in 0..=n + 1 {
                assert_eq!(closed_form_path2(n, k), closed_form_pknl(n, k, 2).unwrap());
            }
        }
        // Brute force on the 5-vertex path.
        let p = uniform_hyperpath(4, 2).unwrap();
        assert_eq!(count_strong(&p).unwrap().get(2), BigInt::from(6));
    }

    #[test]
    fn coupled_examples() {
        assert_eq!(pq_coupled(1, 1, 3).unwrap(), (3.into(), 2.into()));
        assert_eq!(pq_coupled(5, 3, 3).unwrap().0, BigInt::from(56));
        assert_eq!(pq_coupled(6, 6, 3).unwrap().0, BigInt::from(4));
        assert!(pq_coupled(3, 2, 2).is_err());
    }

    #[test]
    fn coupled_q_matches_brute_force() {
        use crate::hypergraph::q_hyperpath;
        for ell in 3..=5 {
            for n in 1..=6 {
                let counts = count_strong(&q_hyperpath(n, ell).unwrap()).unwrap();
                for k in 0..=n {
                    assert_eq!(
                        pq_coupled(n, k, ell).unwrap().1,
                        counts.get(k),
                        "n={n} k={k} ell={ell}"
                    );
                }
                let q = q_poly(n, ell).unwrap();
                assert_eq!(q.coeffs(), counts.counts());
            }
        }
    }

    #[test]
    fn fib_rec_examples() {
        assert_eq!(pknl_via_fib_rec(3, 2, 3).unwrap(), BigInt::from(12));
        assert_eq!(pknl_via_fib_rec(4, 4, 3).unwrap(), BigInt::from(4));
        for n in 0..=12 {
            for k in 0..=n {
                for ell in 2..=6 {
                    assert_eq!(
                        pknl_via_fib_rec(n, k, ell).unwrap(),
                        closed_form_pknl(n, k, ell).unwrap(),
                        "n={n} k={k} ell={ell}"
                    );
                }
            }
        }
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(path_poly(2, 3).unwrap(), IntPoly::from_i64s(&[1, 5, 4]));
        assert_eq!(q_poly(1, 4).unwrap(), IntPoly::from_i64s(&[1, 3]));
        assert_eq!(path_poly(0, 5).unwrap(), IntPoly::one());
        assert!(q_poly(0, 4).is_err());
    }

    #[test]
    fn polynomial_identities() {
        let x = IntPoly::linear(0, 1);
        for ell in 2..=6 {
            let l = ell as i64;
            for n in 3..=15 {
                let lhs = path_poly(n, ell).unwrap();
                let rhs = &(&IntPoly::linear(1, l - 2) * &path_poly(n - 1, ell).unwrap())
                    + &(&x * &path_poly(n - 2, ell).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        for ell in 3..=5 {
            let l = ell as i64;
            for n in 2..=12 {
                let rhs = &path_poly(n - 1, ell).unwrap()
                    + &(&IntPoly::linear(0, l - 1) * &q_poly(n - 1, ell).unwrap());
                assert_eq!(path_poly(n, ell).unwrap(), rhs);
                assert_eq!(coupled_polys(n, ell).0, path_poly(n, ell).unwrap());
                for k in 0..=n {
                    let (p, q) = pq_coupled(n, k, ell).unwrap();
                    assert_eq!(path_poly(n, ell).unwrap().coeff(k), p);
                    assert_eq!(q_poly(n, ell).unwrap().coeff(k), q);
                }
            }
        }
    }

    #[test]
    fn generating_function_columns() {
        assert_eq!(gf_pknl(2, 3, 6).unwrap(), ints(&[0, 0, 4, 12, 24, 40, 60]));
        assert_eq!(gf_pknl(3, 3, 6).unwrap(), ints(&[0, 0, 0, 4, 20, 56, 120]));
        assert_eq!(gf_pknl(2, 4, 4).unwrap(), ints(&[0, 0, 9, 27, 54]));
        assert!(gf_pknl(1, 3, 4).is_err());
        assert!(gf_pknl(2, 2, 4).is_err());
    }

    #[test]
    fn hyperstar_examples() {
        assert_eq!(
            hyperstar_poly(&[2, 2, 2]).unwrap(),
            IntPoly::from_i64s(&[1, 4, 3, 1])
        );
        assert_eq!(hyperstar_poly(&[3]).unwrap(), IntPoly::from_i64s(&[1, 3]));
        let s34 = hyperstar_poly(&[3, 4]).unwrap();
        assert_eq!(s34, IntPoly::from_i64s(&[1, 6, 6]));
        assert_eq!(
            s34,
            count_strong(&hyperstar(&[3, 4]).unwrap())
                .unwrap()
                .into_poly()
        );
        assert!(hyperstar_poly(&[1]).is_err());
        assert!(hyperstar_poly(&[]).is_err());
    }

    #[test]
    fn block_examples() {
        assert_eq!(block_count(4, 2, 3, 0).unwrap(), BigInt::from(24));
        assert!(block_count(4, 3, 3, 2).is_err());
        for ell in 3..=5 {
            for n in 2..=8 {
                for k in 2..=8 {
                    let sum: BigInt = (0..=k - 2)
                        .map(|j| block_count(n, k, ell, j).unwrap())
                        .sum();
                    assert_eq!(sum, closed_form_pknl(n, k, ell).unwrap());
                    for j in 0..=k - 2 {
                        assert_eq!(
                            subblock_counts(n, k, ell, j).unwrap().total(),
                            block_count(n, k, ell, j).unwrap(),
                            "n={n} k={k} ell={ell} j={j}"
                        );
                    }
                }
            }
        }
        let sub = subblock_counts(4, 2, 3, 0).unwrap();
        assert_eq!(sub.zero_positive, BigInt::from(4));
        assert_eq!(sub.zero_zero, BigInt::from(4));
        assert_eq!(sub.positive_positive, BigInt::from(4));
        assert_eq!(sub.positive_zero, BigInt::from(12));
    }

    /// Counts constrained compositions by listing them.
    fn list_compositions(t: usize, m: usize, s: usize, r: usize) -> usize {
        fn go(t: usize, m: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if acc.len() == t {
                if acc.iter().sum::<usize>() == m {
                    out.push(acc.clone());
                }
                return;
            }
            for v in 0..=m {
                acc.push(v);
                go(t, m, acc, out);
                acc.pop();
            }
        }
        let mut all = Vec::new();
        go(t, m, &mut Vec::new(), &mut all);
        // The first s variables are >= 1, the next r are 0.
        all.iter()
            .filter(|x| x[..s].iter().all(|&v| v >= 1) && x[s..s + r].iter().all(|&v| v == 0))
            .count()
    }

    #[test]
    fn stars_and_bars_matches_listing() {
        assert_eq!(stars_and_bars(3, 2, 0, 0).unwrap(), BigInt::from(6));
        assert_eq!(stars_and_bars(3, 2, 2, 0).unwrap(), BigInt::from(1));
        assert_eq!(stars_and_bars(4, 0, 0, 4).unwrap(), BigInt::from(1));
        assert_eq!(stars_and_bars(4, 1, 0, 4).unwrap(), BigInt::zero());
        for t in 1..=4 {
            for m in 0..=4 {
                for s in 0..=t {
                    for r in 0..=t - s {
                        assert_eq!(
                            stars_and_bars(t, m, s, r).unwrap(),
                            BigInt::from(list_compositions(t, m, s, r)),
                            "t={t} m={m} s={s} r={r}"
                        );
                    }
                }
            }
        }
        assert!(stars_and_bars(0, 1, 0, 0).is_err());
        assert!(stars_and_bars(2, 1, 2, 1).is_err());
    }

    #[test]
    fn divisibility_by_ell_minus_one_squared() {
        for ell in 3..=8usize {
            let d = BigInt::from((ell - 1) * (ell - 1));
            for n in 2..=12 {
                for k in 2..=12 {
                    assert!((closed_form_pknl(n, k, ell).unwrap() % &d).is_zero());
                }
            }
        }
    }

    #[test]
    fn hyperpaths_are_real_rooted() {
        for ell in 2..=6 {
            for n in 0..=10 {
                assert!(is_real_rooted(&path_poly(n, ell).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn table_for_ell_three() {
        let t = pknl_table(3, 6).unwrap();
        assert_eq!(t[6], ints(&[1, 13, 60, 120, 104, 36, 4]));
        assert_eq!(t[0], ints(&[1, 0, 0, 0, 0, 0, 0]));
        let t4 = pknl_table(4, 3).unwrap();
        assert_eq!(t4[2][..3], ints(&[1, 7, 9])[..]);
    }
}
