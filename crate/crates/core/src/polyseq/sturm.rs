//! Real-rootedness via Sturm chains over the integers.
//!
//! Each remainder is a sign-preserving pseudo-remainder divided by its
//! (positive) content, so the chain has the same sign pattern as the
//! classical rational Sturm chain.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// The Sturm chain `p, p', -rem(p, p'), ...` of a nonconstant polynomial.
pub fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.primitive_part()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive_part());
    loop {
        let n = chain.len();
        let r = chain[n - 2].sign_preserving_prem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push((-r).primitive_part());
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = Ordering>) -> usize {
    let nonzero: Vec<Ordering> = signs.filter(|s| *s != Ordering::Equal).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sign_of(c: &BigInt) -> Ordering {
    if c.is_positive() {
        Ordering::Greater
    } else if c.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

fn sign_at_pos_infinity(p: &IntPoly) -> Ordering {
    p.leading().map_or(Ordering::Equal, sign_of)
}

fn sign_at_neg_infinity(p: &IntPoly) -> Ordering {
    let s = sign_at_pos_infinity(p);
    match p.degree() {
        Some(d) if d % 2 == 1 => s.reverse(),
        _ => s,
    }
}

/// Number of distinct real roots of `p`.
pub fn count_distinct_real_roots(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(p);
    let at_neg = sign_changes(chain.iter().map(sign_at_neg_infinity));
    let at_pos = sign_changes(chain.iter().map(sign_at_pos_infinity));
    Ok(at_neg - at_pos)
}

/// True iff every complex root of `p` is real, counting multiplicity.
///
/// Powers of `x` are stripped first. The squarefree part `p / gcd(p, p')`
/// must have as many distinct real roots as its degree, and the repeated
/// part `gcd(p, p')` must itself be real-rooted.
pub fn is_real_rooted(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, p) = p.strip_x_power();
    let p = p.primitive_part();
    let deg = p.degree().expect("nonzero");
    if deg <= 1 {
        return Ok(true);
    }
    let g = p.gcd(&p.derivative());
    let squarefree = p
        .div_exact(&g)
        .expect("the primitive gcd divides the polynomial");
    let sf_deg = squarefree.degree().expect("nonzero");
    if count_distinct_real_roots(&squarefree)? != sf_deg {
        return Ok(false);
    }
    if g.degree().unwrap_or(0) > 0 {
        return is_real_rooted(&g);
    }
    Ok(true)
}
