use crate::error::{Result, SwrError};
use crate::ring::{Rational, Scalar};
use crate::Verdict;

/// A negative (or not coefficientwise nonnegative) term found after
/// `depth` applications of the log-convexity operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcxWitness {
    pub depth: usize,
    pub index: usize,
    pub value: Scalar,
}

/// `g_i = f_{i-1} f_{i+1} - f_i^2` for every interior `i`; the result has
/// two fewer terms and is indexed from `i = 1`.
pub fn lcx_operator(seq: &[Scalar]) -> Result<Vec<Scalar>> {
    if seq.len() < 3 {
        return Err(SwrError::InsufficientTerms(format!(
            "log-convexity operator needs 3 terms, have {}",
            seq.len()
        )));
    }
    seq.windows(3).map(|w| w[0].try_mul(&w[2])?.try_sub(&w[1].try_mul(&w[1])?)).collect()
}

/// Applies the operator `depth` times and requires the input and every
/// intermediate sequence to be nonnegative.
pub fn three_x_lcx_check(seq: &[Scalar], depth: usize) -> Result<Verdict<LcxWitness>> {
    if seq.len() < 2 * depth + 1 {
        return Err(SwrError::InsufficientTerms(format!(
            "depth {depth} needs {} terms, have {}",
            2 * depth + 1,
            seq.len()
        )));
    }
    let mut cur = seq.to_vec();
    for d in 0..=depth {
        if d > 0 {
            cur = lcx_operator(&cur)?;
        }
        if let Some((i, v)) = cur.iter().enumerate().find(|(_, v)| !v.is_nonneg()) {
            // index in the original sequence's coordinates
            return Ok(Verdict::Fail(LcxWitness { depth: d, index: i + d, value: v.clone() }));
        }
    }
    Ok(Verdict::Pass)
}

/// `a_{i-1} a_{i+1} <= a_i^2` at every interior index; fails with the first
/// offending `i`.
pub fn log_concavity_check(coeffs: &[Rational]) -> Verdict<usize> {
    for i in 1..coeffs.len().saturating_sub(1) {
        if &coeffs[i - 1] * &coeffs[i + 1] > &coeffs[i] * &coeffs[i] {
            return Verdict::Fail(i);
        }
    }
    Verdict::Pass
}
