//! Cross-validation suites behind `hyperseq verify`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use anyhow::{bail, Context, Result};
use hyperseq::combcert::{
    comb_c1_explicit, comb_poly, default_sample_xs, verify_factorization_polys, AttachedPolys,
    FactorizationForm,
};
use hyperseq::formulas::{
    block_count, closed_form_pknl, gf_pknl, path_poly, pknl_via_fib_rec, pq_coupled,
    subblock_counts,
};
use hyperseq::hypergraph::{hypercomb, uniform_hyperpath};
use hyperseq::polyseq::is_log_concave;
use hyperseq::Enumerator;
use num_bigint::BigInt;

use crate::args::{Form, Suite, VerifyArgs};

#[derive(Debug, Default)]
pub struct SuiteReport {
    pub name: &'static str,
    pub instances: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect_eq(&mut self, what: impl FnOnce() -> String, got: &BigInt, want: &BigInt) {
        self.instances += 1;
        if got != want {
            self.failures
                .push(format!("{}: got {got}, expected {want}", what()));
        }
    }

    pub fn render(&self) -> String {
        const SHOWN: usize = 20;
        let mut out = format!(
            "{}: {} ({} instances, {} skipped over the enumeration limit)\n",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.instances,
            self.skipped
        );
        for f in self.failures.iter().take(SHOWN) {
            let _ = writeln!(out, "  {f}");
        }
        if self.failures.len() > SHOWN {
            let _ = writeln!(out, "  ... and {} more", self.failures.len() - SHOWN);
        }
        out
    }
}

/// Parses `a..b` or `a..=b` (both inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let parse = |t: &str| -> Result<usize> {
        t.trim()
            .parse()
            .with_context(|| format!("bad range bound {t:?}"))
    };
    let range = match s.split_once("..") {
        Some((a, b)) => parse(a)?..=parse(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let v = parse(s)?;
            v..=v
        }
    };
    if range.is_empty() {
        bail!("empty range {s:?}");
    }
    Ok(range)
}

pub fn run(args: &VerifyArgs, e: &Enumerator) -> Result<SuiteReport> {
    let n_range = |default: RangeInclusive<usize>| -> Result<RangeInclusive<usize>> {
        args.n.as_deref().map_or(Ok(default), parse_range)
    };
    let ells = |default: &[usize]| args.ell.clone().unwrap_or_else(|| default.to_vec());
    match args.suite {
        Suite::Pknl => pknl(args.nmax.unwrap_or(8), args.ellmax.unwrap_or(5), e),
        Suite::Blocks => blocks(n_range(2..=7)?, &ells(&[3, 4]), e),
        Suite::Bijection => bijection(n_range(3..=7)?, &ells(&[3, 4]), e),
        Suite::Comb => comb(n_range(0..=4)?, &ells(&[3, 4, 5]), e),
        Suite::Factorization => {
            let form = match args.form {
                Form::Printed => FactorizationForm::Printed,
                Form::Chebyshev => FactorizationForm::Chebyshev,
            };
            factorization(n_range(2..=8)?, &ells(&[3, 4, 5]), form, args.tol)
        }
    }
}

/// Closed form, Fibonacci-type recurrence, polynomial recurrence, coupled
/// recurrence, column generating function and brute force, entry by entry.
#[allow(clippy::needless_range_loop)]
pub fn pknl(nmax: usize, ellmax: usize, e: &Enumerator) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("pknl");
    for ell in 2..=ellmax {
        let columns: Vec<Vec<BigInt>> = if ell >= 3 {
            (2..=nmax + 1)
                .map(|k| gf_pknl(k, ell, nmax))
                .collect::<hyperseq::Result<_>>()?
        } else {
            Vec::new()
        };
        for n in 0..=nmax {
            let poly = path_poly(n, ell)?;
            let h = uniform_hyperpath(n, ell)?;
            let brute = if h.n_vertices() <= e.limit() {
                Some(e.count_strong(&h)?)
            } else {
                r.skipped += 1;
                None
            };
            for k in 0..=n + 1 {
                let closed = closed_form_pknl(n, k, ell)?;
                let at = || format!("n={n} k={k} ell={ell}");
                r.expect_eq(
                    || format!("{} fib-rec", at()),
                    &pknl_via_fib_rec(n, k, ell)?,
                    &closed,
                );
                r.expect_eq(|| format!("{} path_poly", at()), &poly.coeff(k), &closed);
                if let Some(b) = &brute {
                    r.expect_eq(|| format!("{} brute force", at()), &b.get(k), &closed);
                }
                if ell >= 3 {
                    r.expect_eq(
                        || format!("{} coupled", at()),
                        &pq_coupled(n, k, ell)?.0,
                        &closed,
                    );
                    if k >= 2 {
                        r.expect_eq(|| format!("{} gf", at()), &columns[k - 2][n], &closed);
                    }
                }
            }
        }
    }
    Ok(r)
}

pub fn blocks(ns: RangeInclusive<usize>, ells: &[usize], e: &Enumerator) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("blocks");
    for &ell in ells {
        for n in ns.clone().filter(|&n| n >= 2) {
            if uniform_hyperpath(n, ell)?.n_vertices() > e.limit() {
                r.skipped += 1;
                continue;
            }
            for k in 2..=n {
                let census = e.skeleton_census(n, ell, k)?;
                r.expect_eq(
                    || format!("n={n} k={k} ell={ell} total"),
                    &census.total(),
                    &closed_form_pknl(n, k, ell)?,
                );
                if let Some(j) = census.forced_values().find(|&j| j > k - 2) {
                    r.failures.push(format!(
                        "n={n} k={k} ell={ell}: impossible forced count {j}"
                    ));
                }
                for j in 0..=k - 2 {
                    let at = || format!("n={n} k={k} ell={ell} j={j}");
                    r.expect_eq(
                        || format!("{} bucket", at()),
                        &census.bucket(j),
                        &block_count(n, k, ell, j)?,
                    );
                    let got = census.subblocks(j);
                    let want = subblock_counts(n, k, ell, j)?;
                    let pairs = [
                        ("(0,>0)", &got.zero_positive, &want.zero_positive),
                        ("(0,0)", &got.zero_zero, &want.zero_zero),
                        ("(>0,>0)", &got.positive_positive, &want.positive_positive),
                        ("(>0,0)", &got.positive_zero, &want.positive_zero),
                    ];
                    for (label, g, w) in pairs {
                        r.expect_eq(|| format!("{} sub-block {label}", at()), g, w);
                    }
                }
            }
        }
    }
    Ok(r)
}

pub fn bijection(ns: RangeInclusive<usize>, ells: &[usize], e: &Enumerator) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("bijection");
    for &ell in ells {
        for n in ns.clone().filter(|&n| n >= 3) {
            if uniform_hyperpath(n, ell)?.n_vertices() > e.limit() {
                r.skipped += 1;
                continue;
            }
            for k in 1..=n {
                let parts = e.bijection_classify(n, ell, k)?;
                let at = |c: &str| format!("n={n} k={k} ell={ell} class {c}");
                r.expect_eq(|| at("A"), &parts.a, &closed_form_pknl(n - 2, k - 1, ell)?);
                r.expect_eq(|| at("B"), &parts.b, &closed_form_pknl(n - 1, k, ell)?);
                r.expect_eq(
                    || at("C+D"),
                    &parts.c_or_d,
                    &(BigInt::from(ell - 2) * closed_form_pknl(n - 1, k - 1, ell)?),
                );
            }
        }
    }
    Ok(r)
}

pub fn comb(ns: RangeInclusive<usize>, ells: &[usize], e: &Enumerator) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("comb");
    for &ell in ells {
        r.instances += 1;
        if comb_poly(1, ell)? != comb_c1_explicit(ell) {
            r.failures
                .push(format!("ell={ell}: C_1 differs from its explicit form"));
        }
        for n in ns.clone() {
            let poly = comb_poly(n, ell)?;
            r.instances += 1;
            if let Some(i) = is_log_concave(poly.coeffs()).first_violation {
                r.failures
                    .push(format!("n={n} ell={ell}: not log-concave at index {i}"));
            }
            let h = hypercomb(n, ell)?;
            if h.n_vertices() > e.limit() {
                r.skipped += 1;
                continue;
            }
            r.instances += 1;
            let brute = e.count_strong(&h)?.into_poly();
            if brute != poly {
                r.failures.push(format!(
                    "n={n} ell={ell}: recurrence {poly} but brute force {brute}"
                ));
            }
        }
    }
    Ok(r)
}

pub fn factorization(
    ns: RangeInclusive<usize>,
    ells: &[usize],
    form: FactorizationForm,
    tol: f64,
) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("factorization");
    let xs = default_sample_xs();
    for &ell in ells {
        let polys = AttachedPolys::hypercomb(ell)?;
        for n in ns.clone().filter(|&n| n >= 2) {
            let check = verify_factorization_polys(&polys, n, &xs, tol, form)?;
            r.instances += 1;
            if !check.ok {
                let worst = check
                    .samples
                    .iter()
                    .max_by(|a, b| a.relative_error.total_cmp(&b.relative_error))
                    .expect("nonempty samples");
                r.failures.push(format!(
                    "n={n} ell={ell}: relative error {:.3e} at x={} (lhs {}, rhs {})",
                    worst.relative_error, worst.x, worst.lhs, worst.rhs
                ));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..7").unwrap(), 3..=7);
        assert_eq!(parse_range("3..=7").unwrap(), 3..=7);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("7..3").is_err());
        assert!(parse_range("a..3").is_err());
    }
}
