use crate::error::{Result, SwrError};
use crate::ring::{Scalar, Var};
use crate::triangle::{build_triangle, Params};
use crate::Verdict;

/// `T(n,0)` for `n = 0..=max_row`, with `lam` left free so that each entry
/// is a polynomial in `lam` (and any other free parameters).
pub fn column_zero_polynomials(params: &Params, max_row: usize) -> Vec<Scalar> {
    let tri = build_triangle(&params.with_free_lam(), max_row);
    (0..=max_row).map(|n| tri.entry(n, 0)).collect()
}

/// Checks that substituting `lam -> lam + q` in `T(n,0)` yields the row
/// polynomial `T_n(q)`, for `n = 0..=max_row`. Returns the first failing
/// row. `lam` must be free in `params`.
pub fn first_column_shift_check(params: &Params, max_row: usize) -> Result<Verdict<usize>> {
    if matches!(params.lam, Scalar::Rat(_)) {
        return Err(SwrError::Precondition("lam must be an indeterminate".into()));
    }
    let tri = build_triangle(params, max_row);
    let ring = tri.q_ring();
    let shifted_lam = &Scalar::var(ring, Var::Lam)? + &Scalar::var(ring, Var::Q)?;
    for n in 0..=max_row {
        let col0 = tri.entry(n, 0).extend_ring(ring)?;
        let shifted = col0.substitute(Var::Lam, &shifted_lam)?;
        if shifted != tri.row_polynomial(n) {
            return Ok(Verdict::Fail(n));
        }
    }
    Ok(Verdict::Pass)
}
