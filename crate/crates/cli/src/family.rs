use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use hyperseq::combcert::{comb_poly, AttachedPolys};
use hyperseq::formulas::{closed_form_pknl, gf_pknl, hyperstar_poly, path_poly, q_poly};
use hyperseq::hypergraph::{
    attached_d, attached_h, hypercomb, hyperstar, linear_hyperpath, q_hyperpath, roller_coaster,
    uniform_hyperpath,
};
use hyperseq::{AttachedFamily, Enumerator, Hypergraph, IntPoly};
use num_bigint::BigInt;
use num_traits::One;

use crate::args::{Family, FamilyParams, Method, Source};

/// Reads a file, or stdin for `-`.
pub fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    serde_json::from_str(text).context("parsing hypergraph JSON")
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: Family) -> Result<T> {
    v.ok_or_else(|| anyhow!("{} needs --{flag}", family_name(family)))
}

pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::Path => "path",
        Family::Upath => "upath",
        Family::Qpath => "qpath",
        Family::Star => "star",
        Family::Comb => "comb",
        Family::Attached => "attached",
        Family::Rollercoaster => "rollercoaster",
    }
}

fn sizes(p: &FamilyParams, family: Family) -> Result<&[usize]> {
    p.sizes
        .as_deref()
        .ok_or_else(|| anyhow!("{} needs --sizes", family_name(family)))
}

pub fn attached_family(p: &FamilyParams) -> Result<AttachedFamily> {
    let path = p.g.as_ref().ok_or_else(|| anyhow!("attached needs --g"))?;
    let g = parse_hypergraph(&read_input(&path.to_string_lossy())?)?;
    let v = need(p.v, "v", Family::Attached)?;
    let ell = need(p.ell, "ell", Family::Attached)?;
    Ok(AttachedFamily::new(g, v, ell)?)
}

pub fn build(family: Family, p: &FamilyParams) -> Result<Hypergraph> {
    let h = match family {
        Family::Path => linear_hyperpath(sizes(p, family)?)?,
        Family::Upath => uniform_hyperpath(need(p.n, "n", family)?, need(p.ell, "ell", family)?)?,
        Family::Qpath => q_hyperpath(need(p.n, "n", family)?, need(p.ell, "ell", family)?)?,
        Family::Star => hyperstar(sizes(p, family)?)?,
        Family::Comb => hypercomb(need(p.n, "n", family)?, need(p.ell, "ell", family)?)?,
        Family::Attached => {
            let fam = attached_family(p)?;
            let n = need(p.n, "n", family)?;
            if p.aux {
                attached_d(&fam, n)?
            } else {
                attached_h(&fam, n)?
            }
        }
        Family::Rollercoaster => roller_coaster(),
    };
    Ok(h)
}

/// Methods that apply to a source, in the order `--all-methods` reports them.
pub fn applicable(source: &Source) -> Vec<Method> {
    let family = match source.family {
        Some(f) => f,
        None => return vec![Method::Brute],
    };
    let ell = source.params.ell.unwrap_or(0);
    match family {
        Family::Upath if ell >= 3 => vec![
            Method::Brute,
            Method::Recurrence,
            Method::Closed,
            Method::Gf,
        ],
        Family::Upath => vec![Method::Brute, Method::Recurrence, Method::Closed],
        Family::Qpath | Family::Comb | Family::Attached => vec![Method::Brute, Method::Recurrence],
        Family::Star => vec![Method::Brute, Method::Closed],
        Family::Path | Family::Rollercoaster => vec![Method::Brute],
    }
}

/// The cheapest exact method for a source.
pub fn default_method(source: &Source) -> Method {
    let methods = applicable(source);
    [Method::Recurrence, Method::Closed]
        .into_iter()
        .find(|m| methods.contains(m))
        .unwrap_or(Method::Brute)
}

pub fn method_name(m: Method) -> &'static str {
    match m {
        Method::Brute => "brute",
        Method::Recurrence => "recurrence",
        Method::Closed => "closed",
        Method::Gf => "gf",
    }
}

pub fn source_hypergraph(source: &Source) -> Result<Hypergraph> {
    match (&source.file, source.family) {
        (Some(path), _) => parse_hypergraph(&read_input(path)?),
        (None, Some(f)) => build(f, &source.params),
        (None, None) => bail!("give --file or --family"),
    }
}

/// Computes the independence polynomial of `source` with `method`.
pub fn polynomial(source: &Source, method: Method, e: &Enumerator) -> Result<IntPoly> {
    if !applicable(source).contains(&method) {
        let what = source.family.map_or("a hypergraph file", family_name);
        bail!("method {} does not apply to {what}", method_name(method));
    }
    if method == Method::Brute {
        return Ok(e.count_strong(&source_hypergraph(source)?)?.into_poly());
    }
    let family = source.family.expect("formula methods need a family");
    let p = &source.params;
    let poly = match (family, method) {
        (Family::Upath, Method::Recurrence) => {
            path_poly(need(p.n, "n", family)?, need(p.ell, "ell", family)?)?
        }
        (Family::Upath, Method::Closed) => {
            let (n, ell) = (need(p.n, "n", family)?, need(p.ell, "ell", family)?);
            let coeffs = (0..=n + 1)
                .map(|k| closed_form_pknl(n, k, ell))
                .collect::<hyperseq::Result<Vec<_>>>()?;
            IntPoly::new(coeffs)
        }
        (Family::Upath, Method::Gf) => {
            let (n, ell) = (need(p.n, "n", family)?, need(p.ell, "ell", family)?);
            gf_path_poly(n, ell)?
        }
        (Family::Qpath, Method::Recurrence) => {
            q_poly(need(p.n, "n", family)?, need(p.ell, "ell", family)?)?
        }
        (Family::Comb, Method::Recurrence) => {
            comb_poly(need(p.n, "n", family)?, need(p.ell, "ell", family)?)?
        }
        (Family::Attached, Method::Recurrence) => {
            let polys = AttachedPolys::from_family_with(&attached_family(p)?, e)?;
            let n = need(p.n, "n", family)?;
            if p.aux {
                polys.d(n)
            } else {
                polys.h(n)
            }
        }
        (Family::Star, Method::Closed) => hyperstar_poly(sizes(p, family)?)?,
        _ => unreachable!("filtered by applicable()"),
    };
    Ok(poly)
}

/// `P_{n,ell}` read off the column generating functions; the columns
/// `k = 0, 1` are `1` and `n (ell-1) + 1`.
fn gf_path_poly(n: usize, ell: usize) -> Result<IntPoly> {
    let mut coeffs = vec![BigInt::one()];
    if n >= 1 {
        coeffs.push(BigInt::from(n * (ell - 1) + 1));
    }
    for k in 2..=n {
        coeffs.push(gf_pknl(k, ell, n)?.swap_remove(n));
    }
    Ok(IntPoly::new(coeffs))
}
