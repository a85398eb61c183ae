use num_bigint::BigInt;
use num_integer::binomial;

use super::params::Params;
use super::{EntryMismatch, Triangle};
use crate::ring::{Rational, Scalar};
use crate::Verdict;

/// Dense lower-triangular array, row `n` holding columns `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerTriangular {
    pub rows: Vec<Vec<Scalar>>,
}

impl LowerTriangular {
    pub fn entry(&self, n: usize, k: usize) -> Scalar {
        self.rows.get(n).and_then(|r| r.get(k)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Lower-triangular product `self * other`, truncated to the smaller
    /// size.
    pub fn mul(&self, other: &LowerTriangular, zero: &Scalar) -> LowerTriangular {
        let size = self.size().min(other.size());
        let rows = (0..size)
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        (k..=n).fold(zero.clone(), |acc, j| {
                            let a = self.entry(n, j);
                            if a.is_zero() {
                                acc
                            } else {
                                &acc + &(&a * &other.entry(j, k))
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        LowerTriangular { rows }
    }
}

/// `A` from `A(n,k) = (a1 k + a2) A(n-1,k) + (b1 k + b2) A(n-1,k-1)` and
/// `B(n,k) = C(n,k) lam^(n-k)`, both rows `0..=max_row`.
pub fn factor_triangles(params: &Params, max_row: usize) -> (LowerTriangular, LowerTriangular) {
    let p = params;
    let mut a_rows: Vec<Vec<Scalar>> = vec![vec![p.one()]];
    for n in 1..=max_row {
        let prev = &a_rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let k_s = Scalar::int(k as i64);
                let mut acc = p.zero();
                if k < n {
                    acc = &acc + &(&(&(&p.a1 * &k_s) + &p.a2) * &prev[k]);
                }
                if k >= 1 {
                    acc = &acc + &(&(&(&p.b1 * &k_s) + &p.b2) * &prev[k - 1]);
                }
                acc
            })
            .collect();
        a_rows.push(row);
    }
    let b_rows = (0..=max_row)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let c = Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)));
                    p.lam.pow((n - k) as u32).scale(&c)
                })
                .collect()
        })
        .collect();
    (LowerTriangular { rows: a_rows }, LowerTriangular { rows: b_rows })
}

/// Checks `T = A B` on the stored rows.
pub fn verify_factorization(tri: &Triangle) -> Verdict<EntryMismatch> {
    let (a, b) = factor_triangles(tri.params(), tri.max_row());
    let prod = a.mul(&b, &tri.params().zero());
    for n in 0..=tri.max_row() {
        for k in 0..=n {
            let expected = prod.entry(n, k);
            let got = tri.entry(n, k);
            if expected != got {
                return Verdict::Fail(EntryMismatch { n, k, expected, got });
            }
        }
    }
    Verdict::Pass
}
