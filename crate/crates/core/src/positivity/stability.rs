use nalgebra::DMatrix;
use num_traits::{ToPrimitive, Zero};

use super::roots::row_unipoly;
use super::upoly::{sign, UniPoly};
use crate::error::{Result, SwrError};
use crate::ring::Rational;
use crate::triangle::Triangle;

/// Tolerance on the largest real part when the exact test is inconclusive.
pub const NUMERIC_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilityMethod {
    /// The zero polynomial; reported stable without a root computation.
    Vacuous,
    /// Decided by the Routh array without zero pivots.
    Exact,
    /// Decided from floating-point companion-matrix eigenvalues.
    Numeric,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilityReport {
    /// All roots in the closed left half-plane.
    pub stable: bool,
    pub method: StabilityMethod,
    /// Largest real part of a root (floating point, informational for
    /// exact verdicts). `None` when there are no roots.
    pub max_real_part: Option<f64>,
    /// Multiplicity of the root at the origin.
    pub zero_roots: usize,
}

/// First column of the Routh array, or `None` when a zero pivot appears.
pub fn routh_first_column(p: &UniPoly) -> Option<Vec<Rational>> {
    let d = p.degree()?;
    let c = |i: usize| p.coeff(i);
    let mut prev: Vec<Rational> = (0..=d).rev().step_by(2).map(c).collect();
    let mut cur: Vec<Rational> = if d >= 1 { (0..d).rev().step_by(2).map(c).collect() } else { Vec::new() };
    let mut first = vec![prev[0].clone()];
    for _ in 0..d {
        let pivot = cur.first().cloned().unwrap_or_else(Rational::zero);
        if pivot.is_zero() {
            return None;
        }
        first.push(pivot.clone());
        let get = |v: &Vec<Rational>, i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
        let len = prev.len().max(cur.len()).saturating_sub(1);
        let next: Vec<Rational> =
            (0..len).map(|j| (&pivot * get(&prev, j + 1) - &prev[0] * get(&cur, j + 1)) / &pivot).collect();
        prev = cur;
        cur = next;
    }
    Some(first)
}

/// Largest real part among the roots, from the eigenvalues of the
/// companion matrix.
pub fn numeric_max_real_part(p: &UniPoly) -> Option<f64> {
    let d = p.degree()?;
    if d == 0 {
        return None;
    }
    let monic = p.monic();
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -monic.coeff(i).to_f64().unwrap_or(f64::NAN);
    }
    m.complex_eigenvalues().iter().map(|z| z.re).reduce(f64::max)
}

/// Weak Hurwitz stability: every root in `Re <= 0`.
///
/// Roots at the origin are split off and the rest reduced to its
/// squarefree part. When the Routh array of that part has no zero pivot its
/// sign changes decide the verdict exactly; otherwise the largest real part
/// from companion-matrix eigenvalues must be at most [`NUMERIC_TOLERANCE`].
pub fn stability_check(p: &UniPoly) -> Result<StabilityReport> {
    if p.is_zero() {
        return Ok(StabilityReport { stable: true, method: StabilityMethod::Vacuous, max_real_part: None, zero_roots: 0 });
    }
    let (zero_roots, rest) = p.strip_zero_roots();
    let sf = rest.squarefree_part()?;
    let rest_max = numeric_max_real_part(&sf);
    let max_real_part = match (zero_roots > 0, rest_max) {
        (true, Some(x)) => Some(x.max(0.0)),
        (true, None) => Some(0.0),
        (false, x) => x,
    };
    if let Some(col) = routh_first_column(&sf) {
        let s0 = sign(&col[0]);
        let stable = col.iter().all(|x| sign(x) == s0);
        return Ok(StabilityReport { stable, method: StabilityMethod::Exact, max_real_part, zero_roots });
    }
    let stable = rest_max.is_some_and(|x| x <= NUMERIC_TOLERANCE);
    Ok(StabilityReport { stable, method: StabilityMethod::Numeric, max_real_part, zero_roots })
}

/// `f_{n+1} f_{n-1} - f_n^2`.
pub fn turan_of(prev: &UniPoly, cur: &UniPoly, next: &UniPoly) -> UniPoly {
    next.mul(prev).sub(&cur.mul(cur))
}

/// `T_{n+1}(q) T_{n-1}(q) - T_n(q)^2` for a numeric triangle with at least
/// `n + 1` rows.
pub fn turan_polynomial(tri: &Triangle, n: usize) -> Result<UniPoly> {
    if n == 0 {
        return Err(SwrError::Precondition("Turan polynomial needs n >= 1".into()));
    }
    if !tri.params().is_numeric() {
        return Err(SwrError::Precondition("Turan polynomial needs numeric parameters".into()));
    }
    Ok(turan_of(&row_unipoly(tri, n - 1)?, &row_unipoly(tri, n)?, &row_unipoly(tri, n + 1)?))
}
