//! Power-series expansion of a rational function `num / den`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// First `terms + 1` coefficients of `num / den` as a power series in `x`.
///
/// Uses the recurrence `den(0) c_n = num_n - sum_{i>=1} den_i c_{n-i}`; fails
/// if `den(0) = 0` or a coefficient is not an integer.
pub fn series_coefficients(num: &IntPoly, den: &IntPoly, terms: usize) -> Result<Vec<BigInt>> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::SingularDenominator);
    }
    let den = den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(terms + 1);
    for n in 0..=terms {
        let mut acc = num.coeff(n);
        for (i, d) in den.iter().enumerate().skip(1).take(n) {
            acc -= d * &out[n - i];
        }
        let (q, r) = acc.div_rem(&d0);
        if !r.is_zero() {
            return Err(Error::NonIntegralSeries(n));
        }
        out.push(q);
    }
    Ok(out)
}
