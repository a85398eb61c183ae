//! Jacobi continued fractions for the row polynomials and for the first
//! column, their power-series expansion, Hankel determinants and the
//! exponential generating function.

mod col0;
mod egf;
mod hankel;

pub use col0::{column_zero_polynomials, first_column_shift_check};
pub use egf::{egf_check, egf_closed_form, EgfBranch, EgfMismatch};
pub use hankel::{hankel_det_direct, hankel_det_via_cf, hankel_matrix, q_sequence};

use crate::error::{Result, SwrError};
use crate::ring::{Rational, Scalar, Var};
use crate::triangle::Params;
use crate::Verdict;

/// Coefficients of
/// `1 / (1 - s_0 t - r_1 t^2 / (1 - s_1 t - r_2 t^2 / (1 - ...)))`.
///
/// `s[n]` holds `s_n` for `n >= 0`; `r[n-1]` holds `r_n` for `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiCF {
    pub s: Vec<Scalar>,
    pub r: Vec<Scalar>,
}

impl JacobiCF {
    pub fn new(s: Vec<Scalar>, r: Vec<Scalar>) -> JacobiCF {
        JacobiCF { s, r }
    }

    /// Number of stored levels.
    pub fn horizon(&self) -> usize {
        self.s.len().min(self.r.len())
    }

    pub fn s(&self, n: usize) -> &Scalar {
        &self.s[n]
    }

    /// `r_n`, `n >= 1`.
    pub fn r(&self, n: usize) -> &Scalar {
        assert!(n >= 1, "r is indexed from 1");
        &self.r[n - 1]
    }

    /// Binds indeterminates in every coefficient.
    pub fn bind(&self, bindings: &[(Var, Rational)]) -> Result<JacobiCF> {
        let bind_all = |v: &[Scalar]| v.iter().map(|x| x.bind(bindings)).collect::<Result<Vec<_>>>();
        Ok(JacobiCF { s: bind_all(&self.s)?, r: bind_all(&self.r)? })
    }
}

/// J-fraction coefficients with `q` replaced by the given value:
/// `s_n = a2 + a1 n + [b1(2n+1) + b2](q+lam)` and
/// `r_{n+1} = [b1(n+1) + b2](q+lam)[b1(q+lam) + a1](n+1)`.
///
/// `q` may be a rational or a polynomial (typically the indeterminate `q`);
/// the parameters are lifted into its ring.
pub fn jacobi_coeffs(params: &Params, q: &Scalar, horizon: usize) -> Result<JacobiCF> {
    let ring = params.ring().union(q.ring());
    let lift = |s: &Scalar| s.extend_ring(ring);
    let (a1, a2, b1, b2, lam) = (
        lift(&params.a1)?,
        lift(&params.a2)?,
        lift(&params.b1)?,
        lift(&params.b2)?,
        lift(&params.lam)?,
    );
    let shift = q.try_add(&lam)?;
    let b1_shift_a1 = &(&b1 * &shift) + &a1;
    let mut s = Vec::with_capacity(horizon);
    let mut r = Vec::with_capacity(horizon);
    for n in 0..horizon {
        let n_s = Scalar::int(n as i64);
        let np1 = Scalar::int(n as i64 + 1);
        let s_n = &(&a2 + &(&a1 * &n_s)) + &(&(&(&b1 * &Scalar::int(2 * n as i64 + 1)) + &b2) * &shift);
        let r_next = &(&(&(&(&b1 * &np1) + &b2) * &shift) * &b1_shift_a1) * &np1;
        s.push(s_n);
        r.push(r_next);
    }
    Ok(JacobiCF { s, r })
}

/// Coefficients for `sum_n T_n(q) t^n`, polynomials in `q`.
pub fn jacobi_coeffs_rows(params: &Params, horizon: usize) -> JacobiCF {
    let ring = params.ring().with(Var::Q);
    let q = Scalar::var(ring, Var::Q).expect("q in ring");
    jacobi_coeffs(params, &q, horizon).expect("parameters lift into q ring")
}

/// Coefficients for `sum_n T(n,0) t^n`: the row coefficients with
/// `q + lam` replaced by `lam`.
pub fn jacobi_coeffs_col0(params: &Params, horizon: usize) -> JacobiCF {
    jacobi_coeffs(params, &Scalar::zero(), horizon).expect("rational q lifts")
}

/// Series coefficients `t^0..=t^order` of the J-fraction, as weighted
/// Motzkin paths returning to height zero: up steps weigh 1, a level step
/// at height `h` weighs `s_h`, a down step from `h+1` weighs `r_{h+1}`.
pub fn cf_to_series(cf: &JacobiCF, order: usize) -> Result<Vec<Scalar>> {
    if cf.horizon() < order {
        return Err(SwrError::HorizonTooShort { have: cf.horizon(), need: order });
    }
    let max_height = order / 2 + 1;
    let mut cur: Vec<Scalar> = vec![Scalar::zero(); max_height + 1];
    cur[0] = Scalar::one();
    let mut out = vec![Scalar::one()];
    for step in 1..=order {
        // heights that can still return to 0 within the remaining steps
        let reach = (order - step).min(step).min(max_height);
        let mut next = vec![Scalar::zero(); max_height + 1];
        for h in 0..=reach {
            let mut acc = Scalar::zero();
            if h >= 1 && !cur[h - 1].is_zero() {
                acc = acc.try_add(&cur[h - 1])?;
            }
            if !cur[h].is_zero() {
                acc = acc.try_add(&cf.s(h).try_mul(&cur[h])?)?;
            }
            if h < max_height && !cur[h + 1].is_zero() {
                acc = acc.try_add(&cf.r(h + 1).try_mul(&cur[h + 1])?)?;
            }
            next[h] = acc;
        }
        cur = next;
        out.push(cur[0].clone());
    }
    Ok(out)
}

/// Checks, as polynomial identities in `q` and the free parameters, that
/// with `u_n = n [a1 + b1 (q+lam)]` and `v_n = (n b1 + b1 + b2)(q+lam)` the
/// coefficients satisfy `s_n = a2 + u_n + v_n` and `r_{n+1} = u_{n+1} v_n`.
/// Returns the first failing level.
pub fn uv_decomposition_check(params: &Params, horizon: usize) -> Result<Verdict<usize>> {
    let cf = jacobi_coeffs_rows(params, horizon);
    let ring = params.ring().with(Var::Q);
    let lift = |s: &Scalar| s.extend_ring(ring);
    let (a1, a2, b1, b2, lam) =
        (lift(&params.a1)?, lift(&params.a2)?, lift(&params.b1)?, lift(&params.b2)?, lift(&params.lam)?);
    let shift = Scalar::var(ring, Var::Q)?.try_add(&lam)?;
    let u = |n: usize| &Scalar::int(n as i64) * &(&a1 + &(&b1 * &shift));
    let v = |n: usize| &(&(&b1 * &Scalar::int(n as i64 + 1)) + &b2) * &shift;
    for n in 0..horizon {
        let s_n = &(&a2 + &u(n)) + &v(n);
        let r_next = &u(n + 1) * &v(n);
        if &s_n != cf.s(n) || &r_next != cf.r(n + 1) {
            return Ok(Verdict::Fail(n));
        }
    }
    Ok(Verdict::Pass)
}
