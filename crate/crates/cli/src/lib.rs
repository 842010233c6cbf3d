//! Library side of the `hyperseq` command: argument definitions and the
//! subcommand implementations, which render into a string so they can be
//! tested without spawning a process.

pub mod args;
pub mod family;
pub mod verify;

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use hyperseq::bigjson::{self, Big};
use hyperseq::combcert::{certify, AttachedPolys, CertReport};
use hyperseq::enumerate::DEFAULT_ENUMERATION_LIMIT;
use hyperseq::formulas::pknl_table;
use hyperseq::{AttachedFamily, Enumerator, IntPoly, SequenceReport};
use num_bigint::BigInt;
use serde::Serialize;

use args::{CheckArgs, Cli, Command, Method, PolyArgs, TableArgs, TableFormat};
use family::{applicable, default_method, method_name, polynomial};

/// What a command printed and the exit code it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }

    fn verdict(stdout: String, pass: bool) -> Self {
        Output {
            stdout,
            code: if pass { 0 } else { 1 },
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let e = Enumerator::with_limit(cli.limit.unwrap_or(DEFAULT_ENUMERATION_LIMIT))?;
    match &cli.command {
        Command::Gen(a) => {
            let h = family::build(a.family, &a.params)?;
            Ok(Output::ok(serde_json::to_string(&h)? + "\n"))
        }
        Command::Poly(a) => poly(a, &e),
        Command::Check(a) => check(a, &e),
        Command::Verify(a) => {
            let report = verify::run(a, &e)?;
            Ok(Output::verdict(report.render(), report.passed()))
        }
        Command::Table(a) => table(a),
        Command::CertifyComb(a) => {
            let reports = a
                .ell
                .iter()
                .map(|&ell| Ok(certify(&AttachedPolys::hypercomb(ell)?)))
                .collect::<Result<Vec<_>>>()?;
            certify_output(&reports)
        }
        Command::Certify(a) => {
            let g = family::parse_hypergraph(&family::read_input(&a.g)?)?;
            let fam = AttachedFamily::new(g, a.v, a.ell)?;
            let report = certify(&AttachedPolys::from_family_with(&fam, &e)?);
            certify_output(&[report])
        }
    }
}

fn join(coeffs: &[BigInt]) -> String {
    coeffs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn poly(a: &PolyArgs, e: &Enumerator) -> Result<Output> {
    if !a.all_methods {
        let method = a.method.unwrap_or_else(|| default_method(&a.source));
        let p = polynomial(&a.source, method, e)?;
        return Ok(Output::ok(join(p.coeffs()) + "\n"));
    }
    let mut out = String::new();
    let mut results: Vec<IntPoly> = Vec::new();
    for m in applicable(&a.source) {
        match polynomial(&a.source, m, e) {
            Ok(p) => {
                let _ = writeln!(out, "{}: {}", method_name(m), join(p.coeffs()));
                results.push(p);
            }
            Err(err) if m == Method::Brute => {
                let _ = writeln!(out, "brute: skipped ({err})");
            }
            Err(err) => return Err(err),
        }
    }
    let agree = results.windows(2).all(|w| w[0] == w[1]);
    let _ = writeln!(out, "agree: {agree}");
    Ok(Output::verdict(out, agree))
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    #[serde(serialize_with = "bigjson::serialize_slice")]
    sequence: &'a [BigInt],
    #[serde(flatten)]
    report: &'a SequenceReport,
    requested: Vec<&'static str>,
    pass: bool,
}

fn parse_sequence(items: &[String]) -> Result<Vec<BigInt>> {
    let seq = items
        .iter()
        .map(|s| {
            let v: BigInt = s
                .trim()
                .parse()
                .with_context(|| format!("malformed sequence entry {s:?}"))?;
            if v < BigInt::from(0) {
                bail!("sequence entries must be nonnegative, got {v}");
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    if seq.is_empty() {
        bail!("empty sequence");
    }
    Ok(seq)
}

fn check(a: &CheckArgs, e: &Enumerator) -> Result<Output> {
    let seq = match &a.seq {
        Some(items) => parse_sequence(items)?,
        None => {
            let method = a.method.unwrap_or_else(|| default_method(&a.source));
            polynomial(&a.source, method, e)?.into_coeffs()
        }
    };
    let report = SequenceReport::analyze(&seq);
    let all = !(a.unimodal || a.logconcave || a.newton || a.realrooted);
    let checks = [
        ("unimodal", a.unimodal, report.unimodal),
        ("logconcave", a.logconcave, report.log_concave),
        ("newton", a.newton, report.newton),
        ("realrooted", a.realrooted, report.real_rooted),
    ];
    let requested: Vec<&'static str> = checks.iter().filter(|c| all || c.1).map(|c| c.0).collect();
    let pass = checks.iter().filter(|c| all || c.1).all(|c| c.2);
    let out = CheckOutput {
        sequence: &seq,
        report: &report,
        requested,
        pass,
    };
    Ok(Output::verdict(
        serde_json::to_string_pretty(&out)? + "\n",
        pass,
    ))
}

fn table(a: &TableArgs) -> Result<Output> {
    let rows = pknl_table(a.ell, a.nmax)?;
    let text = match a.format {
        TableFormat::Csv => {
            let mut out = String::from("n");
            for k in 0..=a.nmax {
                let _ = write!(out, ",{k}");
            }
            out.push('\n');
            for (n, row) in rows.iter().enumerate() {
                let _ = writeln!(out, "{n},{}", join(row));
            }
            out
        }
        TableFormat::Json => {
            #[derive(Serialize)]
            struct Table {
                ell: usize,
                nmax: usize,
                rows: Vec<Vec<Big>>,
            }
            let t = Table {
                ell: a.ell,
                nmax: a.nmax,
                rows: rows
                    .into_iter()
                    .map(|r| r.into_iter().map(Big).collect())
                    .collect(),
            };
            serde_json::to_string(&t)? + "\n"
        }
    };
    Ok(Output::ok(text))
}

fn certify_output(reports: &[CertReport]) -> Result<Output> {
    let pass = reports.iter().all(|r| r.overall);
    let text = match reports {
        [one] => serde_json::to_string_pretty(one)?,
        many => serde_json::to_string_pretty(many)?,
    };
    Ok(Output::verdict(text + "\n", pass))
}
