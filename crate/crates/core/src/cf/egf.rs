use num_traits::{One, Zero};

use crate::error::{Result, SwrError};
use crate::ring::{rat, rat_pow, PowerSeries, Rational, Scalar};
use crate::triangle::{Params, Triangle};
use crate::Verdict;

/// Which closed form of `sum_n T_n(q) t^n / n!` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EgfBranch {
    /// `e^{a2 t} [1 + b1 (q+lam)(1 - e^{a1 t}) / a1]^{-(1 + b2/b1)}`
    General,
    /// `a1 = 0`: `e^{a2 t} [1 - b1 (q+lam) t]^{-(1 + b2/b1)}`
    A1Zero,
    /// `b1 = 0`: `exp(a2 t + b2 (q+lam)(e^{a1 t} - 1) / a1)`
    B1Zero,
    /// `a1 = b1 = 0`: `exp((a2 + b2 (q+lam)) t)`
    Linear,
}

impl EgfBranch {
    pub fn select(a1: &Rational, b1: &Rational) -> EgfBranch {
        match (a1.is_zero(), b1.is_zero()) {
            (false, false) => EgfBranch::General,
            (true, false) => EgfBranch::A1Zero,
            (false, true) => EgfBranch::B1Zero,
            (true, true) => EgfBranch::Linear,
        }
    }
}

/// A row whose value at `q` disagrees with the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfMismatch {
    pub n: usize,
    pub expected: Rational,
    pub got: Rational,
}

/// The exponential generating function of the row polynomials at a
/// rational `q`, through `t^order`. Parameters must be numeric.
pub fn egf_closed_form(params: &Params, q: &Rational, order: usize) -> Result<(EgfBranch, PowerSeries)> {
    let [a1, a2, b1, b2, lam] = params.values()?;
    let shift = q + &lam;
    let branch = EgfBranch::select(&a1, &b1);
    let exp_a2 = PowerSeries::monomial_t(order, Scalar::Rat(a2.clone())).exp()?;
    let series = match branch {
        EgfBranch::General => {
            // 1 - (b1 shift / a1)(e^{a1 t} - 1)
            let c = &(&b1 * &shift) / &a1;
            let inner = PowerSeries::one(order)
                .sub(&PowerSeries::exp_minus_one(order, &Scalar::Rat(a1.clone()))?.scale(&Scalar::Rat(c))?)?;
            let alpha = -(Rational::one() + &b2 / &b1);
            exp_a2.mul(&inner.pow(&alpha)?)?
        }
        EgfBranch::A1Zero => {
            let inner = PowerSeries::new(order, vec![Scalar::one(), Scalar::Rat(-(&b1 * &shift))]);
            let alpha = -(Rational::one() + &b2 / &b1);
            exp_a2.mul(&inner.pow(&alpha)?)?
        }
        EgfBranch::B1Zero => {
            let c = &(&b2 * &shift) / &a1;
            let arg = PowerSeries::monomial_t(order, Scalar::Rat(a2.clone()))
                .add(&PowerSeries::exp_minus_one(order, &Scalar::Rat(a1.clone()))?.scale(&Scalar::Rat(c))?)?;
            arg.exp()?
        }
        EgfBranch::Linear => PowerSeries::monomial_t(order, Scalar::Rat(&a2 + &(&b2 * &shift))).exp()?,
    };
    Ok((branch, series))
}

/// `T_n(q)` from the stored entries.
fn row_value(tri: &Triangle, n: usize, q: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (k, x) in tri.row(n).iter().enumerate() {
        acc += x.to_rational()? * rat_pow(q, k as u32);
    }
    Ok(acc)
}

/// Compares `n! [t^n]` of the closed form with `T_n(q)` for every stored row.
pub fn egf_check(tri: &Triangle, q: &Rational) -> Result<Verdict<EgfMismatch>> {
    if !tri.params().is_numeric() {
        return Err(SwrError::Precondition("generating function check needs numeric parameters".into()));
    }
    let (_, series) = egf_closed_form(tri.params(), q, tri.max_row())?;
    let mut factorial = Rational::one();
    for n in 0..=tri.max_row() {
        if n > 0 {
            factorial *= rat(n as i64);
        }
        let expected = series.coeff(n).to_rational()? * &factorial;
        let got = row_value(tri, n, q)?;
        if expected != got {
            return Ok(Verdict::Fail(EgfMismatch { n, expected, got }));
        }
    }
    Ok(Verdict::Pass)
}
