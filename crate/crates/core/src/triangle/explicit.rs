//! Closed-form entries.
//!
//! For `a1 != 0`:
//! `T(n,k) = sum_{i>=k} prod_{j=1..i}(b2+b1 j) / a1^i * C(i,k) lam^(i-k)
//!           * (1/i!) sum_{j=0..i} C(i,j) (-1)^(i-j) (a2+a1 j)^n`
//!
//! For `a1 = 0`:
//! `T(n,k) = sum_{i>=k} prod_{j=1..i}(b2+b1 j) * C(n,i) C(i,k) lam^(i-k) a2^(n-i)`
//!
//! The inner alternating sum is the `i`-th finite difference of a degree-`n`
//! polynomial in `j`, so terms with `i > n` vanish and the outer sum stops
//! at `i = n`. Powers use `0^0 = 1`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::params::Params;
use crate::error::Result;
use crate::ring::{rat_pow, Rational};

fn binom(n: usize, k: usize) -> Rational {
    if k > n {
        Rational::zero()
    } else {
        Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
    }
}

fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j)))
}

/// The `i`-th summand of the closed form for `T(n,k)`; any `i >= k` is
/// allowed, including `i > n`.
pub fn explicit_entry_term(params: &Params, n: usize, k: usize, i: usize) -> Result<Rational> {
    let [a1, a2, b1, b2, lam] = params.values()?;
    if i < k {
        return Ok(Rational::zero());
    }
    let rising: Rational = (1..=i)
        .map(|j| &b2 + &b1 * Rational::from_integer(BigInt::from(j)))
        .fold(Rational::one(), |acc, x| acc * x);
    let lam_part = binom(i, k) * rat_pow(&lam, (i - k) as u32);
    if !a1.is_zero() {
        let diff: Rational = (0..=i)
            .map(|j| {
                let sign = if (i - j) % 2 == 0 { Rational::one() } else { -Rational::one() };
                let base = &a2 + &a1 * Rational::from_integer(BigInt::from(j));
                sign * binom(i, j) * rat_pow(&base, n as u32)
            })
            .fold(Rational::zero(), |acc, x| acc + x);
        Ok(rising / rat_pow(&a1, i as u32) * lam_part * diff / factorial(i))
    } else {
        if i > n {
            return Ok(Rational::zero());
        }
        Ok(rising * binom(n, i) * lam_part * rat_pow(&a2, (n - i) as u32))
    }
}

/// `T(n,k)` from the closed form. Numeric parameters only, since the branch
/// on `a1 != 0` is not decidable for a free indeterminate.
pub fn explicit_entry(params: &Params, n: usize, k: usize) -> Result<Rational> {
    params.values()?;
    if k > n {
        return Ok(Rational::zero());
    }
    (k..=n).try_fold(Rational::zero(), |acc, i| Ok(acc + explicit_entry_term(params, n, k, i)?))
}
