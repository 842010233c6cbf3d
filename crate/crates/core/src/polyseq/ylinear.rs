//! Log-concavity of `p0(x) + y p1(x)` for every `y` in `[0, 1]`.
//!
//! For each interior index `i`, `c_i(y)^2 - c_{i-1}(y) c_{i+1}(y)` is a
//! quadratic `alpha y^2 + beta y + gamma` with integer coefficients. Its
//! minimum on `[0, 1]` is at an endpoint or, when `alpha > 0`, at the vertex
//! `-beta / (2 alpha)`; all three are decided exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::IntPoly;

/// `p0(x) + y * p1(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinYPoly {
    pub p0: IntPoly,
    pub p1: IntPoly,
}

impl LinYPoly {
    pub fn new(p0: IntPoly, p1: IntPoly) -> Self {
        LinYPoly { p0, p1 }
    }

    /// Length of the coefficient sequence for generic `y`.
    pub fn len(&self) -> usize {
        self.p0.coeffs().len().max(self.p1.coeffs().len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coefficients at a fixed rational `y`.
    pub fn at(&self, y: &BigRational) -> Vec<BigRational> {
        (0..self.len())
            .map(|i| {
                BigRational::from_integer(self.p0.coeff(i))
                    + y * BigRational::from_integer(self.p1.coeff(i))
            })
            .collect()
    }

    /// `(alpha, beta, gamma)` of the log-concavity gap at index `i`.
    pub fn gap_quadratic(&self, i: usize) -> (BigInt, BigInt, BigInt) {
        let (a0, a1) = (self.p0.coeff(i - 1), self.p1.coeff(i - 1));
        let (b0, b1) = (self.p0.coeff(i), self.p1.coeff(i));
        let (c0, c1) = (self.p0.coeff(i + 1), self.p1.coeff(i + 1));
        let alpha = &b1 * &b1 - &a1 * &c1;
        let beta = BigInt::from(2) * &b0 * &b1 - &a0 * &c1 - &a1 * &c0;
        let gamma = &b0 * &b0 - &a0 * &c0;
        (alpha, beta, gamma)
    }
}

/// Where a y-dependent log-concavity inequality first fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YWitness {
    pub index: usize,
    pub y: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YVerdict {
    pub holds: bool,
    pub witness: Option<YWitness>,
}

pub fn logconcave_for_all_y(q: &LinYPoly) -> YVerdict {
    for i in 1..q.len().saturating_sub(1) {
        if let Some(y) = violating_y(q.gap_quadratic(i)) {
            return YVerdict {
                holds: false,
                witness: Some(YWitness { index: i, y }),
            };
        }
    }
    YVerdict {
        holds: true,
        witness: None,
    }
}

/// A point of `[0, 1]` where `alpha y^2 + beta y + gamma < 0`, if any.
fn violating_y((alpha, beta, gamma): (BigInt, BigInt, BigInt)) -> Option<BigRational> {
    if gamma.is_negative() {
        return Some(BigRational::zero());
    }
    if (&alpha + &beta + &gamma).is_negative() {
        return Some(BigRational::from_integer(1.into()));
    }
    if alpha.is_positive() {
        // Vertex -beta/(2 alpha) lies in (0, 1) iff 0 < -beta < 2 alpha.
        let neg_beta = -&beta;
        let two_alpha = BigInt::from(2) * &alpha;
        if neg_beta.is_positive() && neg_beta < two_alpha {
            // Value at the vertex is gamma - beta^2 / (4 alpha).
            if BigInt::from(4) * &alpha * &gamma < &beta * &beta {
                return Some(BigRational::new(neg_beta, two_alpha));
            }
        }
    }
    None
}
