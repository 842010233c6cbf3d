//! Independence polynomials of the attached-gadget families `H_{n,ell}`,
//! `D_{n,ell}` and the hypercombs `C_{n,ell}`, the six-polynomial
//! log-concavity certificate, and a numerical check of the product
//! factorization of `H_{n,ell}`.
//!
//! With `a = G1 (1 + (ell-2) x)` and `b = x G1 G2` the family satisfies
//! `H_n = a H_{n-1} + b H_{n-2}` for `n >= 2`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::enumerate::Enumerator;
use crate::error::{invalid, Result};
use crate::hypergraph::AttachedFamily;
use crate::polyseq::{is_log_concave, logconcave_for_all_y, IntPoly, LinYPoly};

/// Independence polynomials of the gadget `G`, of `G - v` (edges through
/// `v` shrink), and of `G` with `v`, its edges and their vertices removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTriple {
    pub g0: IntPoly,
    pub g1: IntPoly,
    pub g2: IntPoly,
}

impl GTriple {
    /// The triple of a single edge of size `ell`: `(1 + ell x, 1 + (ell-1) x, 1)`.
    pub fn single_edge(ell: usize) -> Self {
        let l = ell as i64;
        GTriple {
            g0: IntPoly::linear(1, l),
            g1: IntPoly::linear(1, l - 1),
            g2: IntPoly::one(),
        }
    }
}

/// Builds the triple of `fam.g` by enumeration.
pub fn g_triple(fam: &AttachedFamily) -> Result<GTriple> {
    g_triple_with(fam, &Enumerator::default())
}

pub fn g_triple_with(fam: &AttachedFamily, e: &Enumerator) -> Result<GTriple> {
    let g = fam.g();
    let v = fam.distinguished();
    Ok(GTriple {
        g0: e.count_strong(g)?.into_poly(),
        g1: e.count_strong(&g.delete_vertex(v)?)?.into_poly(),
        g2: e
            .count_strong(&g.delete_closed_neighborhood(v)?)?
            .into_poly(),
    })
}

/// The recurrence data of one attached family at a fixed `ell`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachedPolys {
    triple: GTriple,
    ell: usize,
}

impl AttachedPolys {
    pub fn new(triple: GTriple, ell: usize) -> Result<Self> {
        if ell < 3 {
            return Err(invalid(format!("ell must be at least 3, got {ell}")));
        }
        Ok(AttachedPolys { triple, ell })
    }

    pub fn from_family(fam: &AttachedFamily) -> Result<Self> {
        AttachedPolys::new(g_triple(fam)?, fam.ell())
    }

    pub fn from_family_with(fam: &AttachedFamily, e: &Enumerator) -> Result<Self> {
        AttachedPolys::new(g_triple_with(fam, e)?, fam.ell())
    }

    pub fn hypercomb(ell: usize) -> Result<Self> {
        AttachedPolys::new(GTriple::single_edge(ell), ell)
    }

    pub fn triple(&self) -> &GTriple {
        &self.triple
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    fn spine_step(&self) -> IntPoly {
        IntPoly::linear(1, self.ell as i64 - 2)
    }

    /// `a = G1 (1 + (ell-2) x)`
    pub fn a(&self) -> IntPoly {
        &self.triple.g1 * &self.spine_step()
    }

    /// `b = x G1 G2`
    pub fn b(&self) -> IntPoly {
        (&self.triple.g1 * &self.triple.g2).shift(1)
    }

    pub fn h0(&self) -> IntPoly {
        self.triple.g0.clone()
    }

    /// `G0^2 - x^2 G2^2 + (ell-2) x G1^2`; the `x^2` term is plain `x^2`
    /// whenever `G2 = 1`, as for the hypercombs.
    pub fn h1(&self) -> IntPoly {
        let GTriple { g0, g1, g2 } = &self.triple;
        let g1sq = g1 * g1;
        let middle = g1sq.shift(1).scale(&BigInt::from(self.ell as i64 - 2));
        &(&(g0 * g0) - &(g2 * g2).shift(2)) + &middle
    }

    /// `H_0 ..= H_nmax`.
    pub fn h_sequence(&self, nmax: usize) -> Vec<IntPoly> {
        let (a, b) = (self.a(), self.b());
        let mut hs = vec![self.h0(), self.h1()];
        for n in 2..=nmax {
            let next = &(&a * &hs[n - 1]) + &(&b * &hs[n - 2]);
            hs.push(next);
        }
        hs.truncate(nmax + 1);
        hs
    }

    pub fn h(&self, n: usize) -> IntPoly {
        self.h_sequence(n).swap_remove(n)
    }

    /// `D_0 ..= D_nmax` from `D_n = H_{n-1} + (ell-2) x G1 D_{n-1}`.
    pub fn d_sequence(&self, nmax: usize) -> Vec<IntPoly> {
        let hs = self.h_sequence(nmax.saturating_sub(1).max(1));
        let factor = self
            .triple
            .g1
            .shift(1)
            .scale(&BigInt::from(self.ell as i64 - 2));
        let mut ds = vec![IntPoly::one()];
        for n in 1..=nmax {
            let next = &hs[n - 1] + &(&factor * &ds[n - 1]);
            ds.push(next);
        }
        ds
    }

    pub fn d(&self, n: usize) -> IntPoly {
        self.d_sequence(n).swap_remove(n)
    }
}

/// `H_{n,ell}(x)` of an attached family.
pub fn h_poly(fam: &AttachedFamily, n: usize) -> Result<IntPoly> {
    Ok(AttachedPolys::from_family(fam)?.h(n))
}

/// `D_{n,ell}(x)` of an attached family.
pub fn d_poly(fam: &AttachedFamily, n: usize) -> Result<IntPoly> {
    Ok(AttachedPolys::from_family(fam)?.d(n))
}

/// `C_{n,ell}(x)`, the hypercomb polynomial.
pub fn comb_poly(n: usize, ell: usize) -> Result<IntPoly> {
    Ok(AttachedPolys::hypercomb(ell)?.h(n))
}

/// `C_{1,ell}(x)` written out coefficient by coefficient.
pub fn comb_c1_explicit(ell: usize) -> IntPoly {
    let l = ell as i64;
    IntPoly::from_i64s(&[
        1,
        3 * l - 2,
        2 * (l - 1) * (l - 2) + (l - 1) * (l - 1) + 2 * (l - 1),
        (l - 1) * (l - 1) * (l - 2),
    ])
}

/// Verdict on one certificate polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyVerdict {
    pub name: &'static str,
    pub y_dependent: bool,
    pub log_concave: bool,
    /// First failing coefficient index.
    pub violation_index: Option<usize>,
    /// Value of `y` at which it fails, as `"p/q"`, for the y-dependent ones.
    pub violation_y: Option<String>,
}

/// Where the certificate first fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertWitness {
    /// 1-based position in the list of six polynomials.
    pub polynomial: usize,
    pub coefficient: usize,
    pub y: Option<String>,
}

/// Result of the six-polynomial certificate for one `ell`. `overall = false`
/// means "not certified", not "not log-concave".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertReport {
    pub ell: usize,
    pub verdicts: Vec<PolyVerdict>,
    pub overall: bool,
    pub witness: Option<CertWitness>,
}

/// The six certificate polynomials: `H0`, `H1`, `H2`,
/// `H1 (a^2 + 4 y b) + H0 a b`, `H1 a + H0 b`, `a^2 + 4 y b`.
pub fn certificate_polynomials(polys: &AttachedPolys) -> [(&'static str, LinYPoly); 6] {
    let (a, b) = (polys.a(), polys.b());
    let hs = polys.h_sequence(2);
    let (h0, h1, h2) = (hs[0].clone(), hs[1].clone(), hs[2].clone());
    let four_b = b.scale(&BigInt::from(4));
    let a_sq = &a * &a;
    let ab = &a * &b;
    let fixed = |p: IntPoly| LinYPoly::new(p, IntPoly::zero());
    [
        ("H0", fixed(h0.clone())),
        ("H1", fixed(h1.clone())),
        ("H2", fixed(h2)),
        (
            "H1(a^2+4yb)+H0ab",
            LinYPoly::new(&(&h1 * &a_sq) + &(&h0 * &ab), &h1 * &four_b),
        ),
        ("H1a+H0b", fixed(&(&h1 * &a) + &(&h0 * &b))),
        ("a^2+4yb", LinYPoly::new(a_sq, four_b)),
    ]
}

/// Runs the certificate on precomputed family data.
pub fn certify(polys: &AttachedPolys) -> CertReport {
    let mut verdicts = Vec::with_capacity(6);
    let mut witness = None;
    for (i, (name, q)) in certificate_polynomials(polys).into_iter().enumerate() {
        let y_dependent = !q.p1.is_zero();
        let verdict = if y_dependent {
            let v = logconcave_for_all_y(&q);
            let (index, y) = v
                .witness
                .map(|w| (Some(w.index), Some(w.y.to_string())))
                .unwrap_or((None, None));
            PolyVerdict {
                name,
                y_dependent,
                log_concave: v.holds,
                violation_index: index,
                violation_y: y,
            }
        } else {
            let lc = is_log_concave(q.p0.coeffs());
            PolyVerdict {
                name,
                y_dependent,
                log_concave: lc.log_concave,
                violation_index: lc.first_violation,
                violation_y: None,
            }
        };
        if !verdict.log_concave && witness.is_none() {
            witness = Some(CertWitness {
                polynomial: i + 1,
                coefficient: verdict.violation_index.unwrap_or(0),
                y: verdict.violation_y.clone(),
            });
        }
        verdicts.push(verdict);
    }
    CertReport {
        ell: polys.ell(),
        overall: verdicts.iter().all(|v| v.log_concave),
        verdicts,
        witness,
    }
}

/// Certifies log-concavity of every `H_{n,ell}` of the family.
pub fn certify_theorem5(fam: &AttachedFamily) -> Result<CertReport> {
    Ok(certify(&AttachedPolys::from_family(fam)?))
}

/// Which closed form of `H_n` to compare against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorizationForm {
    /// The odd/even cos^2 product form with a single leading bracket:
    /// for even `n`, `(H1 a + H0 b) prod_{s=1}^{(n-2)/2} (a^2 + 4b cos^2(s pi/n))`;
    /// for odd `n`, `(H1 (a^2 + 4b cos^2((n-1) pi/(2n))) + H0 a b)
    /// prod_{s=1}^{(n-3)/2} (a^2 + 4b cos^2(s pi/n))`.
    Printed,
    /// `H_n = H1 U_n + H0 b U_{n-1}` with the Chebyshev-type product
    /// `U_m = (a if m even) prod_{s=1}^{floor((m-1)/2)} (a^2 + 4b cos^2(s pi/m))`.
    Chebyshev,
}

/// One sample point of a factorization check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorizationSample {
    pub x: String,
    pub lhs: f64,
    pub rhs: f64,
    pub relative_error: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorizationCheck {
    pub n: usize,
    pub ell: usize,
    pub form: FactorizationForm,
    pub tolerance: f64,
    pub samples: Vec<FactorizationSample>,
    pub ok: bool,
}

/// Default sample points `1/10, 1/2, 1, 2`.
pub fn default_sample_xs() -> Vec<BigRational> {
    [(1, 10), (1, 2), (1, 1), (2, 1)]
        .iter()
        .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
        .collect()
}

pub const DEFAULT_FACTORIZATION_TOLERANCE: f64 = 1e-9;

fn cos_sq(s: usize, n: usize) -> f64 {
    let c = (s as f64 * PI / n as f64).cos();
    c * c
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Product `(a if m even) * prod_{s=1}^{floor((m-1)/2)} (a^2 + 4 b cos^2(s pi / m))`,
/// which equals `(lambda^m - mu^m) / (lambda - mu)` for the roots of
/// `t^2 = a t + b`.
fn u_product(m: usize, a: f64, b: f64) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let lead = if m % 2 == 0 { a } else { 1.0 };
    (1..=(m - 1) / 2).fold(lead, |acc, s| acc * (a * a + 4.0 * b * cos_sq(s, m)))
}

fn printed_rhs(n: usize, h0: f64, h1: f64, a: f64, b: f64) -> f64 {
    if n % 2 == 0 {
        (1..=(n - 2) / 2).fold(h1 * a + h0 * b, |acc, s| {
            acc * (a * a + 4.0 * b * cos_sq(s, n))
        })
    } else {
        let c = ((n - 1) as f64 * PI / (2 * n) as f64).cos();
        let lead = h1 * (a * a + 4.0 * b * c * c) + h0 * a * b;
        (1..=(n - 3) / 2).fold(lead, |acc, s| acc * (a * a + 4.0 * b * cos_sq(s, n)))
    }
}

/// Evaluates `H_n` exactly (converted to `f64`) and the chosen product form
/// in floating point at each sample, requiring relative agreement within
/// `tol`.
pub fn verify_factorization_polys(
    polys: &AttachedPolys,
    n: usize,
    xs: &[BigRational],
    tol: f64,
    form: FactorizationForm,
) -> Result<FactorizationCheck> {
    if n < 2 {
        return Err(invalid(format!("the factorization needs n >= 2, got {n}")));
    }
    if xs.iter().any(|x| *x <= BigRational::from_integer(0.into())) {
        return Err(invalid("sample points must be positive"));
    }
    let hs = polys.h_sequence(n);
    let (a_poly, b_poly) = (polys.a(), polys.b());
    let samples: Vec<FactorizationSample> = xs
        .iter()
        .map(|x| {
            let lhs = to_f64(&hs[n].evaluate(x));
            let h0 = to_f64(&hs[0].evaluate(x));
            let h1 = to_f64(&hs[1].evaluate(x));
            let a = to_f64(&a_poly.evaluate(x));
            let b = to_f64(&b_poly.evaluate(x));
            let rhs = match form {
                FactorizationForm::Printed => printed_rhs(n, h0, h1, a, b),
                FactorizationForm::Chebyshev => {
                    h1 * u_product(n, a, b) + h0 * b * u_product(n - 1, a, b)
                }
            };
            let relative_error = (lhs - rhs).abs() / lhs.abs().max(f64::MIN_POSITIVE);
            FactorizationSample {
                x: x.to_string(),
                lhs,
                rhs,
                relative_error,
                ok: relative_error <= tol,
            }
        })
        .collect();
    Ok(FactorizationCheck {
        n,
        ell: polys.ell(),
        form,
        tolerance: tol,
        ok: samples.iter().all(|s| s.ok),
        samples,
    })
}

/// Checks the printed product form of `H_{n,ell}` for a family.
pub fn verify_factorization(
    fam: &AttachedFamily,
    n: usize,
    xs: &[BigRational],
    tol: f64,
) -> Result<FactorizationCheck> {
    verify_factorization_polys(
        &AttachedPolys::from_family(fam)?,
        n,
        xs,
        tol,
        FactorizationForm::Printed,
    )
}
