use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact independent-set sequences of hyperpaths, hyperstars and hypercombs.
#[derive(Debug, Parser)]
#[command(name = "hyperseq", version, about)]
pub struct Cli {
    /// Largest hypergraph, in vertices, that brute force will enumerate (at most 64).
    #[arg(long, global = true, env = "HYPERSEQ_ENUM_LIMIT")]
    pub limit: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a hypergraph as JSON.
    Gen(GenArgs),
    /// Print the independence polynomial, coefficients low to high.
    Poly(PolyArgs),
    /// Report unimodality, log-concavity, Newton and real-rootedness verdicts.
    Check(CheckArgs),
    /// Run a cross-validation suite.
    Verify(VerifyArgs),
    /// Print the table of p(n, k, ell).
    Table(TableArgs),
    /// Run the log-concavity certificate on hypercombs.
    CertifyComb(CertifyCombArgs),
    /// Run the log-concavity certificate on an attached family read from JSON.
    Certify(CertifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Linear hyperpath with edge sizes --sizes.
    Path,
    /// Uniform hyperpath P(n, ell).
    Upath,
    /// P(n, ell) with its first vertex deleted.
    Qpath,
    /// Linear hyperstar with edge sizes --sizes.
    Star,
    /// Hypercomb C(n, ell).
    Comb,
    /// Gadget from --g glued along a uniform hyperpath (--aux for the D family).
    Attached,
    /// The 16-vertex non-unimodal example.
    Rollercoaster,
}

#[derive(Debug, Clone, Default, Args)]
pub struct FamilyParams {
    /// Number of spine edges.
    #[arg(long)]
    pub n: Option<usize>,
    /// Uniform edge size.
    #[arg(long)]
    pub ell: Option<usize>,
    /// Comma-separated edge sizes.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    /// Gadget hypergraph JSON for the attached family.
    #[arg(long)]
    pub g: Option<PathBuf>,
    /// Distinguished vertex of the gadget.
    #[arg(long)]
    pub v: Option<usize>,
    /// Build D(n, ell) instead of H(n, ell).
    #[arg(long)]
    pub aux: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[command(flatten)]
    pub params: FamilyParams,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Recurrence,
    Closed,
    Gf,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Hypergraph JSON file, or - for stdin.
    #[arg(long, conflicts_with = "family")]
    pub file: Option<String>,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[command(flatten)]
    pub params: FamilyParams,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[command(flatten)]
    pub source: Source,
    /// How to compute the polynomial; defaults to the cheapest exact method.
    #[arg(long, value_enum, conflicts_with = "all_methods")]
    pub method: Option<Method>,
    /// Compute with every applicable method and cross-check.
    #[arg(long)]
    pub all_methods: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Comma-separated nonnegative integers.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["file", "family"])]
    pub seq: Option<Vec<String>>,
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    #[arg(long)]
    pub unimodal: bool,
    #[arg(long)]
    pub logconcave: bool,
    #[arg(long)]
    pub newton: bool,
    #[arg(long)]
    pub realrooted: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Pknl,
    Blocks,
    Bijection,
    Comb,
    Factorization,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Printed,
    Chebyshev,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Largest n (pknl suite).
    #[arg(long)]
    pub nmax: Option<usize>,
    /// Largest ell (pknl suite).
    #[arg(long)]
    pub ellmax: Option<usize>,
    /// Range of n, as `a..b` (inclusive) or a single value.
    #[arg(long)]
    pub n: Option<String>,
    /// Comma-separated ell values.
    #[arg(long, value_delimiter = ',')]
    pub ell: Option<Vec<usize>>,
    /// Product form checked by the factorization suite.
    #[arg(long, value_enum, default_value = "printed")]
    pub form: Form,
    /// Relative tolerance of the factorization suite.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub ell: usize,
    #[arg(long)]
    pub nmax: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct CertifyCombArgs {
    /// Comma-separated edge sizes; one report per value.
    #[arg(long, value_delimiter = ',', required = true)]
    pub ell: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// Gadget hypergraph JSON, or - for stdin.
    #[arg(long)]
    pub g: String,
    #[arg(long)]
    pub v: usize,
    #[arg(long)]
    pub ell: usize,
}
