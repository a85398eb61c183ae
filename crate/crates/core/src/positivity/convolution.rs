use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use super::minors::{sm_check, MinorWitness};
use crate::error::{Result, SwrError};
use crate::ring::{rat, Rational, Scalar};
use crate::triangle::Triangle;
use crate::Verdict;

/// Sequences known to be Stieltjes moment sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnownSm {
    /// `1, 1, 1, ...`: the point mass at 1.
    Ones,
    /// `n!`
    Factorial,
    /// `2^n`
    PowersOfTwo,
    /// `C(2n, n) / (n + 1)`
    Catalan,
}

impl KnownSm {
    pub const ALL: [KnownSm; 4] = [KnownSm::Ones, KnownSm::Factorial, KnownSm::PowersOfTwo, KnownSm::Catalan];

    /// Terms with index `0..len`.
    pub fn terms(&self, len: usize) -> Vec<Rational> {
        (0..len)
            .map(|n| match self {
                KnownSm::Ones => Rational::one(),
                KnownSm::Factorial => (1..=n as i64).map(rat).product(),
                KnownSm::PowersOfTwo => Rational::from_integer(BigInt::from(1) << n),
                KnownSm::Catalan => {
                    Rational::new(binomial(BigInt::from(2 * n), BigInt::from(n)), BigInt::from(n + 1))
                }
            })
            .collect()
    }
}

impl fmt::Display for KnownSm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KnownSm::Ones => "ones",
            KnownSm::Factorial => "factorial",
            KnownSm::PowersOfTwo => "pow2",
            KnownSm::Catalan => "catalan",
        })
    }
}

impl FromStr for KnownSm {
    type Err = SwrError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ones" | "1" => Ok(KnownSm::Ones),
            "factorial" | "n!" => Ok(KnownSm::Factorial),
            "pow2" | "2^n" => Ok(KnownSm::PowersOfTwo),
            "catalan" => Ok(KnownSm::Catalan),
            _ => Err(SwrError::Parse(format!("unknown moment sequence `{s}`"))),
        }
    }
}

/// `z_n = sum_k T(n,k) x_k y_{n-k}` for every stored row `n`.
pub fn convolution(tri: &Triangle, x: &[Rational], y: &[Rational]) -> Result<Vec<Scalar>> {
    let len = tri.max_row() + 1;
    if x.len() < len || y.len() < len {
        return Err(SwrError::InsufficientTerms(format!(
            "convolution over {len} rows needs {len} terms of x and y"
        )));
    }
    (0..len)
        .map(|n| {
            tri.row(n).iter().enumerate().try_fold(tri.params().zero(), |acc, (k, t)| {
                acc.try_add(&t.scale(&(&x[k] * &y[n - k])))
            })
        })
        .collect()
}

/// Convolves two registered moment sequences through the triangle and
/// checks the `m x m` Hankel matrix of the result. The triangle must hold
/// rows `0..=2m-2`.
pub fn convolution_sm_check(tri: &Triangle, x: KnownSm, y: KnownSm, m: usize) -> Result<Verdict<MinorWitness>> {
    let need = (2 * m).saturating_sub(1);
    if tri.max_row() + 1 < need {
        return Err(SwrError::InsufficientTerms(format!(
            "Hankel order {m} needs {need} rows, triangle has {}",
            tri.max_row() + 1
        )));
    }
    let len = tri.max_row() + 1;
    let z = convolution(tri, &x.terms(len), &y.terms(len))?;
    sm_check(&z, m)
}
