//! Unimodality, log-concavity and Newton-inequality checks on integer
//! sequences, all decided in exact integer arithmetic.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::poly::IntPoly;
use super::sturm::is_real_rooted;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogConcavity {
    pub log_concave: bool,
    /// Smallest `k` with `a_k^2 < a_{k-1} a_{k+1}`.
    pub first_violation: Option<usize>,
    pub no_internal_zeros: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Unimodality {
    pub unimodal: bool,
    /// Smallest valid mode, when unimodal.
    pub mode: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Newton {
    pub satisfied: bool,
    pub first_violation: Option<usize>,
}

pub fn is_log_concave(seq: &[BigInt]) -> LogConcavity {
    let first_violation =
        (1..seq.len().saturating_sub(1)).find(|&k| &seq[k] * &seq[k] < &seq[k - 1] * &seq[k + 1]);
    LogConcavity {
        log_concave: first_violation.is_none(),
        first_violation,
        no_internal_zeros: has_no_internal_zeros(seq),
    }
}

/// No `i < j < k` with `a_i > 0`, `a_j = 0`, `a_k > 0`.
pub fn has_no_internal_zeros(seq: &[BigInt]) -> bool {
    let positive: Vec<usize> = seq
        .iter()
        .enumerate()
        .filter(|(_, a)| a.is_positive())
        .map(|(i, _)| i)
        .collect();
    match (positive.first(), positive.last()) {
        (Some(&lo), Some(&hi)) => seq[lo..=hi].iter().all(|a| !a.is_zero()),
        _ => true,
    }
}

pub fn is_unimodal(seq: &[BigInt]) -> Unimodality {
    let Some(max) = seq.iter().max() else {
        return Unimodality {
            unimodal: true,
            mode: None,
        };
    };
    let m = seq.iter().position(|a| a == max).expect("max is present");
    let rising = seq[..=m].windows(2).all(|w| w[0] <= w[1]);
    let falling = seq[m..].windows(2).all(|w| w[0] >= w[1]);
    let unimodal = rising && falling;
    Unimodality {
        unimodal,
        mode: unimodal.then_some(m),
    }
}

/// `a_k^2 >= (1 + 1/k)(1 + 1/(n-k)) a_{k-1} a_{k+1}` for `1 <= k <= n-1`,
/// with `n = len - 1`, cleared of denominators.
pub fn satisfies_newton(seq: &[BigInt]) -> Newton {
    let n = seq.len().saturating_sub(1);
    let first_violation = (1..n).find(|&k| {
        let lhs = &seq[k] * &seq[k] * BigInt::from(k * (n - k));
        let rhs = &seq[k - 1] * &seq[k + 1] * BigInt::from((k + 1) * (n - k + 1));
        lhs < rhs
    });
    Newton {
        satisfied: first_violation.is_none(),
        first_violation,
    }
}

/// Every verdict for one sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub unimodal: bool,
    pub mode: Option<usize>,
    pub log_concave: bool,
    pub log_concave_violation: Option<usize>,
    pub no_internal_zeros: bool,
    pub newton: bool,
    pub newton_violation: Option<usize>,
    pub real_rooted: bool,
}

impl SequenceReport {
    pub fn analyze(seq: &[BigInt]) -> Self {
        let u = is_unimodal(seq);
        let lc = is_log_concave(seq);
        let nw = satisfies_newton(seq);
        let poly = IntPoly::new(seq.to_vec());
        // The zero polynomial vanishes everywhere, so it is not reported as
        // real-rooted.
        let real_rooted = !poly.is_zero() && is_real_rooted(&poly).unwrap_or(false);
        SequenceReport {
            unimodal: u.unimodal,
            mode: u.mode,
            log_concave: lc.log_concave,
            log_concave_violation: lc.first_violation,
            no_internal_zeros: lc.no_internal_zeros,
            newton: nw.satisfied,
            newton_violation: nw.first_violation,
            real_rooted,
        }
    }

    /// Checks the implication chain for a nonnegative sequence:
    /// real-rooted implies Newton implies log-concave, and log-concave with
    /// no internal zeros implies unimodal.
    pub fn is_consistent(&self) -> bool {
        (!self.real_rooted || self.newton)
            && (!self.newton || self.log_concave)
            && (!(self.log_concave && self.no_internal_zeros) || self.unimodal)
    }
}
