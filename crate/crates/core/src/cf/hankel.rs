use super::JacobiCF;
use crate::error::{Result, SwrError};
use crate::linalg::det_bareiss;
use crate::ring::Scalar;

/// The `n x n` Hankel matrix `(seq[i + j + shift])`.
pub fn hankel_matrix(seq: &[Scalar], n: usize, shift: usize) -> Result<Vec<Vec<Scalar>>> {
    let need = if n == 0 { 0 } else { 2 * n - 1 + shift };
    if seq.len() < need {
        return Err(SwrError::InsufficientTerms(format!(
            "Hankel order {n} with shift {shift} needs {need} terms, have {}",
            seq.len()
        )));
    }
    Ok((0..n).map(|i| (0..n).map(|j| seq[i + j + shift].clone()).collect()).collect())
}

/// Hankel determinant computed from the sequence itself.
pub fn hankel_det_direct(seq: &[Scalar], n: usize, shift: usize) -> Result<Scalar> {
    det_bareiss(&hankel_matrix(seq, n, shift)?)
}

/// `Q_0 = 1`, `Q_1 = s_0`, `Q_{m+1} = s_m Q_m - r_m Q_{m-1}`, up to `Q_n`.
pub fn q_sequence(cf: &JacobiCF, n: usize) -> Result<Vec<Scalar>> {
    if cf.horizon() < n {
        return Err(SwrError::HorizonTooShort { have: cf.horizon(), need: n });
    }
    let mut q = vec![Scalar::one()];
    if n >= 1 {
        q.push(cf.s(0).clone());
    }
    for m in 1..n {
        let next = cf.s(m).try_mul(&q[m])?.try_sub(&cf.r(m).try_mul(&q[m - 1])?)?;
        q.push(next);
    }
    Ok(q)
}

/// Hankel determinant of the J-fraction series from its coefficients:
/// `prod_{k=1}^{n-1} r_k^{n-k}`, times `Q_n` for shift 1.
pub fn hankel_det_via_cf(cf: &JacobiCF, n: usize, shift: usize) -> Result<Scalar> {
    if shift > 1 {
        return Err(SwrError::Precondition(format!("shift must be 0 or 1, got {shift}")));
    }
    if cf.horizon() < n {
        return Err(SwrError::HorizonTooShort { have: cf.horizon(), need: n });
    }
    let mut det = Scalar::one();
    for k in 1..n {
        det = det.try_mul(&cf.r(k).pow((n - k) as u32))?;
    }
    if shift == 1 {
        det = det.try_mul(&q_sequence(cf, n)?[n])?;
    }
    Ok(det)
}
