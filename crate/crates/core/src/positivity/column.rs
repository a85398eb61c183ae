//! Root and stability checks on the first column `T(n,0)`, viewed as
//! polynomials in `lam` with the remaining parameters fixed.
//!
//! Since `T(n,0)` as a function of `lam` is the row polynomial of the
//! `lam = 0` triangle evaluated at `q = lam`, its roots lie in the row-root
//! interval of that triangle.

use num_traits::Zero;

use super::roots::{check_root_regime, root_interval, roots_in_interval_check, RootWitness};
use super::stability::{stability_check, turan_of, StabilityReport};
use super::upoly::UniPoly;
use crate::cf::column_zero_polynomials;
use crate::error::{Result, SwrError};
use crate::ring::{Rational, Var};
use crate::triangle::{Binding, Params};
use crate::Verdict;

/// `T(n,0)` for `n = 0..=max_row` as univariate polynomials in `lam`. Every
/// other parameter must be a rational.
pub fn column_zero_unipolys(params: &Params, max_row: usize) -> Result<Vec<UniPoly>> {
    if !params.with(Var::Lam, Binding::Value(Rational::zero())).is_numeric() {
        return Err(SwrError::Precondition("column-zero root checks need numeric a1, a2, b1, b2".into()));
    }
    column_zero_polynomials(params, max_row)
        .iter()
        .map(|s| UniPoly::from_scalar(s, Var::Lam))
        .collect()
}

/// Every `T(n,0)`, `1 <= n <= max_row`, has `n` simple real roots in `lam`,
/// inside the row-root interval of the `lam = 0` triangle (closed on the
/// boundary of the regime). Returns the first failing row with its root report.
pub fn column_zero_real_rooted_check(params: &Params, max_row: usize) -> Result<Verdict<(usize, RootWitness)>> {
    let at_zero = params.with(Var::Lam, Binding::Value(Rational::zero()));
    check_root_regime(&at_zero, false)?;
    let closed = check_root_regime(&at_zero, true).is_err();
    let (lo, hi) = root_interval(&at_zero, closed)?;
    let polys = column_zero_unipolys(params, max_row)?;
    for (n, p) in polys.iter().enumerate().skip(1) {
        if let Verdict::Fail(w) = roots_in_interval_check(p, n, &lo, &hi, true)? {
            return Ok(Verdict::Fail((n, w)));
        }
    }
    Ok(Verdict::Pass)
}

/// `T(n+1,0) T(n-1,0) - T(n,0)^2` is weakly stable in `lam` for
/// `1 <= n < max_row`.
pub fn column_zero_turan_check(params: &Params, max_row: usize) -> Result<Verdict<(usize, StabilityReport)>> {
    let polys = column_zero_unipolys(params, max_row)?;
    for n in 1..max_row {
        let report = stability_check(&turan_of(&polys[n - 1], &polys[n], &polys[n + 1]))?;
        if !report.stable {
            return Ok(Verdict::Fail((n, report)));
        }
    }
    Ok(Verdict::Pass)
}
