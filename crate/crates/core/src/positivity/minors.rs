use std::collections::HashMap;

use rayon::prelude::*;

use crate::cf::hankel_matrix;
use crate::error::{Result, SwrError};
use crate::ring::Scalar;
use crate::Verdict;

/// A minor that is negative, or has a negative coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub minor: Scalar,
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0u64, |m, &i| m | (1 << i))
}

/// Every minor of order `k`, keyed by (row mask, column mask), computed by
/// expansion along the first chosen row from the order `k-1` minors.
fn next_level(
    matrix: &[Vec<Scalar>],
    prev: &HashMap<(u64, u64), Scalar>,
    row_sets: &[Vec<usize>],
    col_sets: &[Vec<usize>],
) -> Result<Vec<((u64, u64), Scalar)>> {
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> =
        row_sets.iter().flat_map(|r| col_sets.iter().map(move |c| (r, c))).collect();
    pairs
        .par_iter()
        .map(|(rows, cols)| {
            let top = rows[0];
            let rest_rows = mask(&rows[1..]);
            let cmask = mask(cols);
            let mut acc = Scalar::zero();
            for (pos, &c) in cols.iter().enumerate() {
                let x = &matrix[top][c];
                if x.is_zero() {
                    continue;
                }
                let sub = if rows.len() == 1 {
                    Scalar::one()
                } else {
                    match prev.get(&(rest_rows, cmask & !(1 << c))) {
                        Some(m) => m.clone(),
                        None => continue,
                    }
                };
                if sub.is_zero() {
                    continue;
                }
                let term = x.try_mul(&sub)?;
                acc = if pos % 2 == 0 { acc.try_add(&term)? } else { acc.try_sub(&term)? };
            }
            Ok(((mask(rows), cmask), acc))
        })
        .collect()
}

/// Checks that every minor of order at most `max_order` is nonnegative:
/// as a rational, or coefficientwise as a polynomial. Minors are visited by
/// order, then row subset, then column subset, each lexicographically; the
/// first violation is returned.
pub fn tp_check(matrix: &[Vec<Scalar>], max_order: usize) -> Result<Verdict<MinorWitness>> {
    let nrows = matrix.len();
    let ncols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != ncols) {
        return Err(SwrError::Precondition("matrix rows have unequal lengths".into()));
    }
    if max_order > nrows.min(ncols) {
        return Err(SwrError::Precondition(format!(
            "minor order {max_order} exceeds matrix dimensions {nrows}x{ncols}"
        )));
    }
    if nrows > 64 || ncols > 64 {
        return Err(SwrError::Precondition("matrix dimensions above 64 are not supported".into()));
    }
    let mut prev: HashMap<(u64, u64), Scalar> = HashMap::new();
    for k in 1..=max_order {
        let row_sets = subsets(nrows, k);
        let col_sets = subsets(ncols, k);
        let level = next_level(matrix, &prev, &row_sets, &col_sets)?;
        // `level` follows the lexicographic (rows, cols) order
        if let Some(((rm, cm), minor)) = level.iter().find(|(_, m)| !m.is_nonneg()) {
            let unpack = |m: u64| (0..64).filter(|i| m & (1 << i) != 0).collect();
            return Ok(Verdict::Fail(MinorWitness { rows: unpack(*rm), cols: unpack(*cm), minor: minor.clone() }));
        }
        prev = level.into_iter().filter(|(_, m)| !m.is_zero()).collect();
    }
    Ok(Verdict::Pass)
}

/// Total positivity of the `m x m` Hankel matrix `[seq_{i+j}]`, all orders.
pub fn sm_check(seq: &[Scalar], m: usize) -> Result<Verdict<MinorWitness>> {
    sm_check_to_order(seq, m, m)
}

/// Hankel minors of the `m x m` matrix up to order `max_order`.
pub fn sm_check_to_order(seq: &[Scalar], m: usize, max_order: usize) -> Result<Verdict<MinorWitness>> {
    let h = hankel_matrix(seq, m, 0)?;
    tp_check(&h, max_order)
}
