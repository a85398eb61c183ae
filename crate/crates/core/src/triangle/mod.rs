//! The Stirling–Whitney–Riordan triangle: construction from the three-term
//! recurrence, the specialization registry, the closed-form entries, and
//! the production-matrix and factorization constructions.

mod explicit;
mod factor;
mod params;
mod paramspec;
mod production;
mod specialization;

use rayon::prelude::*;

pub use explicit::{explicit_entry, explicit_entry_term};
pub use factor::{factor_triangles, verify_factorization, LowerTriangular};
pub use params::{Binding, Params, PARAM_VARS};
pub use paramspec::ParamSpec;
pub use production::{production_matrix, verify_production, ProductionMatrix};
pub use specialization::{specialization_params, SpecializationId};

use crate::error::Result;
use crate::ring::{MultiPoly, Scalar, Var, VarSet};
use crate::Verdict;

/// A cell whose recomputed value disagrees with the stored or expected one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryMismatch {
    pub n: usize,
    pub k: usize,
    pub expected: Scalar,
    pub got: Scalar,
}

/// Rows `0..=max_row` of the triangle for one parameter set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    params: Params,
    rows: Vec<Vec<Scalar>>,
}

/// The three recurrence multipliers for column `k`: the weight on
/// `T(n-1,k-1)`, on `T(n-1,k)` and on `T(n-1,k+1)`.
pub(crate) fn recurrence_coeffs(p: &Params, k: usize) -> [Scalar; 3] {
    let k_s = Scalar::int(k as i64);
    let up = &(&p.b1 * &k_s) + &p.b2;
    let two_lam_b1 = &(&p.lam * &p.b1) * &Scalar::int(2);
    let level = &(&(&two_lam_b1 + &p.a1) * &k_s) + &(&p.a2 + &(&p.lam * &(&p.b1 + &p.b2)));
    let down = &(&p.lam * &(&p.a1 + &(&p.lam * &p.b1))) * &Scalar::int(k as i64 + 1);
    [up, level, down]
}

/// Applies the recurrence once: row `n` from row `n-1`.
pub(crate) fn next_row(params: &Params, coeffs: &[[Scalar; 3]], prev: &[Scalar]) -> Vec<Scalar> {
    let n = prev.len();
    (0..=n)
        .into_par_iter()
        .map(|k| {
            let [up, level, down] = &coeffs[k];
            let mut acc = params.zero();
            if k >= 1 {
                acc = &acc + &(up * &prev[k - 1]);
            }
            if k < n {
                acc = &acc + &(level * &prev[k]);
            }
            if k + 1 < n {
                acc = &acc + &(down * &prev[k + 1]);
            }
            acc
        })
        .collect()
}

impl Params {
    /// Zero in this parameter ring.
    pub fn zero(&self) -> Scalar {
        if self.ring().is_empty() {
            Scalar::zero()
        } else {
            Scalar::Poly(MultiPoly::zero(self.ring()))
        }
    }

    pub fn one(&self) -> Scalar {
        if self.ring().is_empty() {
            Scalar::one()
        } else {
            Scalar::Poly(MultiPoly::one(self.ring()))
        }
    }
}

/// Builds rows `0..=max_row` from `T(0,0) = 1` and the recurrence.
pub fn build_triangle(params: &Params, max_row: usize) -> Triangle {
    let coeffs: Vec<[Scalar; 3]> = (0..=max_row).map(|k| recurrence_coeffs(params, k)).collect();
    let mut rows = Vec::with_capacity(max_row + 1);
    rows.push(vec![params.one()]);
    for _ in 1..=max_row {
        let next = next_row(params, &coeffs, rows.last().unwrap());
        rows.push(next);
    }
    Triangle { params: params.clone(), rows }
}

impl Triangle {
    /// Reassembles a triangle from stored rows (e.g. parsed JSON). No
    /// consistency check is made; see [`verify_recurrence`].
    pub fn from_rows(params: Params, rows: Vec<Vec<Scalar>>) -> Triangle {
        Triangle { params, rows }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Scalar] {
        &self.rows[n]
    }

    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// `T(n,k)`, zero outside `0 <= k <= n`.
    pub fn entry(&self, n: usize, k: usize) -> Scalar {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(|| self.params.zero())
    }

    pub fn column(&self, k: usize) -> Vec<Scalar> {
        (0..=self.max_row()).map(|n| self.entry(n, k)).collect()
    }

    /// Ring of the row polynomials: the parameter ring plus `q`.
    pub fn q_ring(&self) -> VarSet {
        self.params.ring().with(Var::Q)
    }

    /// `T_n(q) = sum_k T(n,k) q^k`.
    pub fn row_polynomial(&self, n: usize) -> Scalar {
        row_polynomial(self, n)
    }

    /// The `(max_row+1) x (max_row+1)` lower-triangular matrix.
    pub fn as_matrix(&self) -> Vec<Vec<Scalar>> {
        let size = self.rows.len();
        (0..size).map(|n| (0..size).map(|k| self.entry(n, k)).collect()).collect()
    }

    /// Leading `size x size` block.
    pub fn truncation(&self, size: usize) -> Vec<Vec<Scalar>> {
        (0..size).map(|n| (0..size).map(|k| self.entry(n, k)).collect()).collect()
    }
}

pub fn row_polynomial(tri: &Triangle, n: usize) -> Scalar {
    let ring = tri.q_ring();
    let q = MultiPoly::var(ring, Var::Q).expect("q in ring");
    let mut acc = MultiPoly::zero(ring);
    let mut qk = MultiPoly::one(ring);
    for entry in tri.row(n) {
        let c = entry.as_poly(ring).expect("entry in parameter ring");
        acc = acc.try_add(&c.try_mul(&qk).expect("same ring")).expect("same ring");
        qk = qk.try_mul(&q).expect("same ring");
    }
    Scalar::Poly(acc)
}

/// Recomputes every row from the previous stored row and compares.
pub fn verify_recurrence(tri: &Triangle) -> Verdict<EntryMismatch> {
    let params = tri.params();
    if tri.row(0) != [params.one()] {
        return Verdict::Fail(EntryMismatch {
            n: 0,
            k: 0,
            expected: params.one(),
            got: tri.entry(0, 0),
        });
    }
    let coeffs: Vec<[Scalar; 3]> = (0..=tri.max_row()).map(|k| recurrence_coeffs(params, k)).collect();
    for n in 1..=tri.max_row() {
        let expect = next_row(params, &coeffs, tri.row(n - 1));
        let stored = tri.row(n);
        for k in 0..expect.len().max(stored.len()) {
            let e = expect.get(k).cloned().unwrap_or_else(Scalar::zero);
            let g = stored.get(k).cloned().unwrap_or_else(Scalar::zero);
            if e != g {
                return Verdict::Fail(EntryMismatch { n, k, expected: e, got: g });
            }
        }
    }
    Verdict::Pass
}

/// Checks `T_n(q) = [a2 + (b1+b2)(q+lam)] T_{n-1}(q)
///   + (q+lam)[a1 + b1(q+lam)] T'_{n-1}(q)` for `1 <= n <= max_row`.
pub fn verify_row_recurrence(tri: &Triangle) -> Result<Verdict<usize>> {
    let ring = tri.q_ring();
    let lift = |s: &Scalar| s.extend_ring(ring);
    let q = Scalar::var(ring, Var::Q)?;
    let (a1, a2, b1, b2, lam) = (
        lift(&tri.params.a1)?,
        lift(&tri.params.a2)?,
        lift(&tri.params.b1)?,
        lift(&tri.params.b2)?,
        lift(&tri.params.lam)?,
    );
    let shift = &q + &lam;
    let first = &a2 + &(&(&b1 + &b2) * &shift);
    let second = &shift * &(&a1 + &(&b1 * &shift));
    for n in 1..=tri.max_row() {
        let prev = tri.row_polynomial(n - 1);
        let rhs = &(&first * &prev) + &(&second * &prev.derivative(Var::Q));
        if rhs != tri.row_polynomial(n) {
            return Ok(Verdict::Fail(n));
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn row_ints(tri: &Triangle, n: usize) -> Vec<i64> {
        tri.row(n)
            .iter()
            .map(|s| s.to_rational().unwrap().to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn stirling_row_four() {
        let tri = build_triangle(&SpecializationId::Stirling2.params(), 4);
        assert_eq!(row_ints(&tri, 4), vec![0, 1, 7, 6, 1]);
    }

    #[test]
    fn riordan_and_falling_factorial_rows() {
        let tri = build_triangle(&SpecializationId::RiordanA049020.params(), 3);
        assert_eq!(row_ints(&tri, 2), vec![2, 3, 1]);
        assert_eq!(row_ints(&tri, 3), vec![5, 10, 6, 1]);
        let tri = build_triangle(&SpecializationId::FallingFactorialA008279.params(), 3);
        assert_eq!(row_ints(&tri, 3), vec![1, 3, 6, 6]);
    }

    #[test]
    fn row_zero_is_one() {
        for p in [Params::symbolic(), Params::ints([3, -2, 5, 7, 1])] {
            let tri = build_triangle(&p, 0);
            assert_eq!(tri.row(0), [Scalar::one()]);
            assert!(tri.row_polynomial(0).is_one());
        }
    }

    #[test]
    fn row_polynomials() {
        let tri = build_triangle(&SpecializationId::Stirling2.params(), 2);
        let ring = VarSet::of(&[Var::Q]);
        let q = Scalar::var(ring, Var::Q).unwrap();
        assert_eq!(tri.row_polynomial(2), &q + &q.pow(2));
        let tri = build_triangle(&SpecializationId::RiordanA049020.params(), 2);
        assert_eq!(tri.row_polynomial(2), &(&Scalar::int(2) + &(&Scalar::int(3) * &q)) + &q.pow(2));
    }

    #[test]
    fn symbolic_rows_satisfy_both_recurrences() {
        let tri = build_triangle(&Params::symbolic(), 8);
        assert!(verify_recurrence(&tri).is_pass());
        assert!(verify_row_recurrence(&tri).unwrap().is_pass());
        // every entry is x-positive
        assert!(tri.rows().iter().flatten().all(Scalar::is_nonneg));
    }

    #[test]
    fn tampered_entry_is_reported() {
        let tri = build_triangle(&SpecializationId::Stirling2.params(), 5);
        let mut rows = tri.rows().to_vec();
        rows[4][2] = Scalar::int(8);
        let bad = Triangle::from_rows(tri.params().clone(), rows);
        match verify_recurrence(&bad) {
            Verdict::Fail(w) => assert_eq!((w.n, w.k), (4, 2)),
            Verdict::Pass => panic!("tampering not detected"),
        }
    }

    #[test]
    fn entries_follow_bound_params() {
        let tri = build_triangle(&Params::ints([1, 1, 1, 1, 1]), 1);
        // T_1(q) = a2 + (b1+b2)(q+lam) = 3 + 2q
        assert_eq!(tri.row(1), [Scalar::int(3), Scalar::int(2)]);
        let _ = rat(0);
    }
}
