//! Brute-force weighted Motzkin path enumeration. Every path is generated
//! explicitly and its weight recomputed from scratch, so nothing here
//! shares structure with the recurrence or the continued-fraction
//! expansion it is used to cross-check.

use rayon::prelude::*;

use crate::cf::jacobi_coeffs;
use crate::error::{Result, SwrError};
use crate::ring::Scalar;
use crate::triangle::Params;

/// Largest path length enumerated without an explicit override.
pub const DEFAULT_GUARD: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Level,
    Down,
}

const STEPS: [Step; 3] = [Step::Up, Step::Level, Step::Down];

/// A step sequence starting at height 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotzkinPath {
    pub steps: Vec<Step>,
}

impl MotzkinPath {
    /// Heights after each step, or `None` if the path dips below zero.
    pub fn heights(&self) -> Option<Vec<usize>> {
        let mut h: usize = 0;
        let mut out = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            h = match s {
                Step::Up => h + 1,
                Step::Level => h,
                Step::Down => h.checked_sub(1)?,
            };
            out.push(h);
        }
        Some(out)
    }

    pub fn end_height(&self) -> Option<usize> {
        self.heights().map(|h| h.last().copied().unwrap_or(0))
    }
}

/// Step weights of the triangle paths, by height:
/// `u_k = b1 k + b2 + b1` (up from `k`),
/// `v_k = (2 lam b1 + a1) k + a2 + lam (b1 + b2)` (level at `k`),
/// `w_k = lam (a1 + lam b1) k` (down from `k`).
#[derive(Clone, Debug)]
pub struct PathWeights {
    params: Params,
}

impl PathWeights {
    pub fn new(params: &Params) -> PathWeights {
        PathWeights { params: params.clone() }
    }

    pub fn u(&self, k: usize) -> Scalar {
        let p = &self.params;
        &(&(&p.b1 * &Scalar::int(k as i64)) + &p.b2) + &p.b1
    }

    pub fn v(&self, k: usize) -> Scalar {
        let p = &self.params;
        let slope = &(&(&p.lam * &p.b1) * &Scalar::int(2)) + &p.a1;
        &(&(&slope * &Scalar::int(k as i64)) + &p.a2) + &(&p.lam * &(&p.b1 + &p.b2))
    }

    pub fn w(&self, k: usize) -> Scalar {
        let p = &self.params;
        &(&p.lam * &(&p.a1 + &(&p.lam * &p.b1))) * &Scalar::int(k as i64)
    }
}

/// Calls `visit` on every step sequence of length `n` that stays at or
/// above height zero, by plain depth-first generation.
pub fn for_each_path(n: usize, prefix: Vec<Step>, visit: &mut dyn FnMut(&MotzkinPath)) {
    fn rec(n: usize, path: &mut MotzkinPath, height: usize, visit: &mut dyn FnMut(&MotzkinPath)) {
        if path.steps.len() == n {
            visit(path);
            return;
        }
        for s in STEPS {
            let next = match s {
                Step::Up => height + 1,
                Step::Level => height,
                Step::Down => match height.checked_sub(1) {
                    Some(h) => h,
                    None => continue,
                },
            };
            path.steps.push(s);
            rec(n, path, next, visit);
            path.steps.pop();
        }
    }
    let mut path = MotzkinPath { steps: prefix };
    let Some(h) = path.end_height() else { return };
    if path.steps.len() > n {
        return;
    }
    rec(n, &mut path, h, visit);
}

fn check_guard(n: usize, guard: usize) -> Result<()> {
    if n > guard {
        return Err(SwrError::GuardExceeded { n, guard });
    }
    Ok(())
}

/// Sums the weight of every path, branching in parallel on the first step.
fn sum_paths(n: usize, weight: &(dyn Fn(&MotzkinPath) -> Result<Option<Scalar>> + Sync)) -> Result<Scalar> {
    let firsts: Vec<Vec<Step>> = if n == 0 { vec![Vec::new()] } else { STEPS.iter().map(|s| vec![*s]).collect() };
    let partials: Vec<Result<Scalar>> = firsts
        .into_par_iter()
        .map(|prefix| {
            let mut acc = Scalar::zero();
            let mut err = None;
            for_each_path(n, prefix, &mut |p| {
                if err.is_some() {
                    return;
                }
                match weight(p) {
                    Ok(Some(w)) => match acc.try_add(&w) {
                        Ok(s) => acc = s,
                        Err(e) => err = Some(e),
                    },
                    Ok(None) => {}
                    Err(e) => err = Some(e),
                }
            });
            err.map_or(Ok(acc), Err)
        })
        .collect();
    partials.into_iter().try_fold(Scalar::zero(), |acc, x| acc.try_add(&x?))
}

/// `T(n,k)` as the total weight of paths of length `n` ending at height
/// `k`, with the default guard.
pub fn enumerate_entry(params: &Params, n: usize, k: usize) -> Result<Scalar> {
    enumerate_entry_guarded(params, n, k, DEFAULT_GUARD)
}

pub fn enumerate_entry_guarded(params: &Params, n: usize, k: usize, guard: usize) -> Result<Scalar> {
    check_guard(n, guard)?;
    let w = PathWeights::new(params);
    sum_paths(n, &|path: &MotzkinPath| {
        if path.end_height() != Some(k) {
            return Ok(None);
        }
        let mut prod = Scalar::one();
        let mut h = 0usize;
        for s in &path.steps {
            let factor = match s {
                Step::Up => w.u(h),
                Step::Level => w.v(h),
                Step::Down => w.w(h),
            };
            prod = prod.try_mul(&factor)?;
            h = match s {
                Step::Up => h + 1,
                Step::Level => h,
                Step::Down => h - 1,
            };
        }
        Ok(Some(prod))
    })
}

/// `T_n(q)` as the total weight of closed paths of length `n`: level steps
/// at height `i` weigh `s_i`, down steps from `i+1` weigh `r_{i+1}`, up
/// steps weigh 1, with `q` replaced by `q_binding` (a rational or the
/// indeterminate `q`).
pub fn enumerate_row_polynomial(params: &Params, n: usize, q_binding: &Scalar) -> Result<Scalar> {
    enumerate_row_polynomial_guarded(params, n, q_binding, DEFAULT_GUARD)
}

pub fn enumerate_row_polynomial_guarded(
    params: &Params,
    n: usize,
    q_binding: &Scalar,
    guard: usize,
) -> Result<Scalar> {
    check_guard(n, guard)?;
    let cf = jacobi_coeffs(params, q_binding, n / 2 + 1)?;
    sum_paths(n, &|path: &MotzkinPath| {
        if path.end_height() != Some(0) {
            return Ok(None);
        }
        let mut prod = Scalar::one();
        let mut h = 0usize;
        for s in &path.steps {
            match s {
                Step::Up => h += 1,
                Step::Level => prod = prod.try_mul(cf.s(h))?,
                Step::Down => {
                    prod = prod.try_mul(cf.r(h))?;
                    h -= 1;
                }
            }
        }
        Ok(Some(prod))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Var, VarSet};
    use crate::triangle::{build_triangle, SpecializationId};

    #[test]
    fn prefix_counts() {
        // paths never below zero, any end height
        for (n, expect) in [1, 2, 5, 13, 35, 96].iter().enumerate() {
            let mut count = 0;
            for_each_path(n, Vec::new(), &mut |_| count += 1);
            assert_eq!(count, *expect);
        }
    }

    #[test]
    fn single_up_step() {
        let p = Params::symbolic();
        assert_eq!(enumerate_entry(&p, 1, 1).unwrap(), &p.b1 + &p.b2);
    }

    #[test]
    fn riordan_and_stirling_entries() {
        let p = SpecializationId::RiordanA049020.params();
        assert_eq!(enumerate_entry(&p, 2, 0).unwrap(), Scalar::int(2));
        let p = SpecializationId::Stirling2.params();
        assert_eq!(enumerate_entry(&p, 4, 2).unwrap(), Scalar::int(7));
    }

    #[test]
    fn closed_paths() {
        let p = SpecializationId::Stirling2.params();
        assert_eq!(enumerate_row_polynomial(&p, 0, &Scalar::int(3)).unwrap(), Scalar::one());
        assert_eq!(enumerate_row_polynomial(&p, 4, &Scalar::int(1)).unwrap(), Scalar::int(15));
        let sym = Params::symbolic();
        let tri = build_triangle(&sym, 1);
        let q = Scalar::var(sym.ring().with(Var::Q), Var::Q).unwrap();
        assert_eq!(enumerate_row_polynomial(&sym, 1, &q).unwrap(), tri.row_polynomial(1));
    }

    #[test]
    fn guard() {
        let p = SpecializationId::Stirling2.params();
        assert!(matches!(enumerate_entry(&p, 11, 0), Err(SwrError::GuardExceeded { n: 11, guard: 10 })));
        assert!(enumerate_entry_guarded(&p, 11, 11, 11).is_ok());
    }

    #[test]
    fn symbolic_entries_match_recurrence() {
        let p = Params::symbolic();
        let tri = build_triangle(&p, 5);
        for n in 0..=5 {
            for k in 0..=n {
                assert_eq!(enumerate_entry(&p, n, k).unwrap(), tri.entry(n, k), "({n},{k})");
            }
        }
        let ring = VarSet::of(&[Var::Q]);
        let q = Scalar::var(ring, Var::Q).unwrap();
        let p = SpecializationId::TannyGeometric.params();
        let tri = build_triangle(&p, 6);
        assert_eq!(enumerate_row_polynomial(&p, 6, &q).unwrap(), tri.row_polynomial(6));
        assert_eq!(
            enumerate_row_polynomial(&p, 6, &Scalar::Rat(rat(2))).unwrap(),
            tri.row_polynomial(6).bind(&[(Var::Q, rat(2))]).unwrap()
        );
    }
}
