//! Exact determinants over the scalar ring.

use crate::error::Result;
use crate::ring::Scalar;

/// Fraction-free Gaussian elimination with row pivoting. Every intermediate
/// division is exact in the polynomial ring.
pub fn det_bareiss(matrix: &[Vec<Scalar>]) -> Result<Scalar> {
    let n = matrix.len();
    if n == 0 {
        return Ok(Scalar::one());
    }
    let mut m: Vec<Vec<Scalar>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = Scalar::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Scalar::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].try_mul(&m[k][k])?.try_sub(&m[i][k].try_mul(&m[k][j])?)?;
                m[i][j] = num.div_exact(&prev)?;
            }
            m[i][k] = Scalar::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Laplace expansion along the first row. Factorial cost; intended as an
/// independent reference for small matrices.
pub fn det_cofactor(matrix: &[Vec<Scalar>]) -> Result<Scalar> {
    let n = matrix.len();
    if n == 0 {
        return Ok(Scalar::one());
    }
    if n == 1 {
        return Ok(matrix[0][0].clone());
    }
    let mut acc = Scalar::zero();
    for j in 0..n {
        if matrix[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = matrix[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = matrix[0][j].try_mul(&det_cofactor(&minor)?)?;
        acc = if j % 2 == 0 { acc.try_add(&term)? } else { acc.try_sub(&term)? };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Var, VarSet};

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect()
    }

    #[test]
    fn small_integer_determinants() {
        let m = ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(det_bareiss(&m).unwrap(), Scalar::int(6));
        assert_eq!(det_cofactor(&m).unwrap(), Scalar::int(6));
        let m = ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_bareiss(&m).unwrap(), Scalar::int(-1));
        let m = ints(&[&[1, 2], &[2, 4]]);
        assert!(det_bareiss(&m).unwrap().is_zero());
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = ints(&[&[0, 2, 1], &[0, 1, 5], &[3, 1, 1]]);
        assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn polynomial_determinant() {
        let ring = VarSet::of(&[Var::Q]);
        let q = Scalar::var(ring, Var::Q).unwrap();
        let m = vec![
            vec![Scalar::one(), q.clone(), &q * &q],
            vec![q.clone(), &q * &q, &(&q * &q) + &Scalar::one()],
            vec![&q * &q, &(&q * &q) * &q, Scalar::int(2)],
        ];
        assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
    }
}
