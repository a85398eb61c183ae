use num_traits::{Signed, Zero};

use super::sturm::{count_roots_in, isolate_roots, sturm_chain, Bound, RootBox, SturmChain};
use super::upoly::UniPoly;
use crate::error::{Result, SwrError};
use crate::ring::Rational;
use crate::triangle::{Params, Triangle};
use crate::Verdict;

/// What the root locator found when a real-rootedness claim failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootWitness {
    pub degree: usize,
    pub expected: usize,
    /// Real roots counted with multiplicity.
    pub real_roots: usize,
    /// Distinct real roots.
    pub distinct_real_roots: usize,
    /// Distinct real roots inside the target interval.
    pub inside: usize,
    pub boxes: Vec<RootBox>,
}

/// `T_n(q)` of a numeric triangle as a univariate polynomial.
pub fn row_unipoly(tri: &Triangle, n: usize) -> Result<UniPoly> {
    if n > tri.max_row() {
        return Err(SwrError::InsufficientTerms(format!("row {n} not generated (max row {})", tri.max_row())));
    }
    Ok(UniPoly::new(tri.row(n).iter().map(|x| x.to_rational()).collect::<Result<_>>()?))
}

/// Requires nonnegative numeric parameters with `a1 (b1 + b2) >= b1 a2`
/// and `b1 + b2 > 0`. With `strict`, also `a2 > 0` and, when `b1 > 0`,
/// strict inequality: `T_n(-lam) = a2 T_(n-1)(-lam)` and `T_n` at the left
/// endpoint is a multiple of `b1 a2 - a1 (b1 + b2)`, so either equality puts
/// a root on the boundary.
pub fn check_root_regime(params: &Params, strict: bool) -> Result<()> {
    let [a1, a2, b1, b2, lam] = params.values()?;
    if [&a1, &a2, &b1, &b2, &lam].iter().any(|x| x.is_negative()) {
        return Err(SwrError::Precondition(format!("parameters must be nonnegative: {params}")));
    }
    if &a1 * (&b1 + &b2) < &b1 * &a2 {
        return Err(SwrError::Precondition(format!("hypothesis a1(b1+b2) >= b1*a2 fails for {params}")));
    }
    if (&b1 + &b2).is_zero() {
        return Err(SwrError::Precondition(format!("b1 + b2 must be positive: {params}")));
    }
    if strict && a2.is_zero() {
        return Err(SwrError::Precondition(format!(
            "the strict interval test needs a2 > 0; use the closed-interval variant for {params}"
        )));
    }
    if strict && !b1.is_zero() && &a1 * (&b1 + &b2) == &b1 * &a2 {
        return Err(SwrError::Precondition(format!(
            "the strict interval test needs a1(b1+b2) > b1*a2 when b1 > 0; use the closed-interval variant for {params}"
        )));
    }
    Ok(())
}

/// Endpoints `-lam - a1/b1` (or `-inf` when `b1 = 0`) and `-lam`.
pub fn root_interval(params: &Params, closed: bool) -> Result<(Bound, Bound)> {
    let [a1, _, b1, _, lam] = params.values()?;
    let wrap = |x: Rational| if closed { Bound::Closed(x) } else { Bound::Open(x) };
    let lo = if b1.is_zero() { Bound::NegInf } else { wrap(-&lam - &a1 / &b1) };
    Ok((lo, wrap(-lam)))
}

/// Requires `p` to have exactly `expected` real roots counted with
/// multiplicity, all between the bounds; with `simple`, all distinct.
pub fn roots_in_interval_check(
    p: &UniPoly,
    expected: usize,
    lo: &Bound,
    hi: &Bound,
    simple: bool,
) -> Result<Verdict<RootWitness>> {
    if p.is_zero() {
        return Err(SwrError::ZeroPolynomial);
    }
    let degree = p.degree().unwrap_or(0);
    let boxes = isolate_roots(p)?;
    let real_roots: usize = boxes.iter().map(|b| b.multiplicity).sum();
    let inside = count_roots_in(p, lo, hi)?;
    let ok = degree == expected
        && real_roots == expected
        && inside == boxes.len()
        && (!simple || boxes.len() == expected);
    if ok {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::Fail(RootWitness {
            degree,
            expected,
            real_roots,
            distinct_real_roots: boxes.len(),
            inside,
            boxes,
        }))
    }
}

/// `T_n(q)` has `n` simple real roots strictly inside
/// `(-lam - a1/b1, -lam)`. Needs `a2 > 0` and, when `b1 > 0`,
/// `a1 (b1 + b2) > b1 a2`; see [`real_rooted_in_closed_interval_check`]
/// otherwise.
pub fn real_rooted_in_interval_check(params: &Params, n: usize) -> Result<Verdict<RootWitness>> {
    check_root_regime(params, true)?;
    if n == 0 {
        return Ok(Verdict::Pass);
    }
    let tri = crate::triangle::build_triangle(params, n);
    let (lo, hi) = root_interval(params, false)?;
    roots_in_interval_check(&row_unipoly(&tri, n)?, n, &lo, &hi, true)
}

/// Closed-interval form that also admits the boundary cases: all `n` roots
/// real and simple, inside `[-lam - a1/b1, -lam]`.
pub fn real_rooted_in_closed_interval_check(params: &Params, n: usize) -> Result<Verdict<RootWitness>> {
    check_root_regime(params, false)?;
    if n == 0 {
        return Ok(Verdict::Pass);
    }
    let tri = crate::triangle::build_triangle(params, n);
    let (lo, hi) = root_interval(params, true)?;
    roots_in_interval_check(&row_unipoly(&tri, n)?, n, &lo, &hi, true)
}

/// Why the alternation failed: the root `s_index` of `g` (ranked from the
/// largest, starting at 1) is not between the `s_index`-th and
/// `(s_index+1)`-th largest roots of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlaceFailure {
    pub s_index: usize,
}

fn halve(chain: &SturmChain, b: &mut RootBox) {
    let mid = b.midpoint();
    if chain.count_half_open(&b.lo, &mid) == 1 {
        b.hi = mid;
    } else {
        b.lo = mid;
    }
}

/// Distinct real roots of `f` and `g` in increasing order, as pairs of
/// multiplicities `(in f, in g)`. Overlapping boxes are halved until they
/// separate, unless the overlap holds a root of `gcd(f, g)`, which then is
/// the root of both.
fn merge_roots(
    (mut fb, fc): (Vec<RootBox>, SturmChain),
    (mut gb, gc): (Vec<RootBox>, SturmChain),
    h: &UniPoly,
) -> Result<Vec<(usize, usize)>> {
    let hc = match h.degree() {
        Some(d) if d > 0 => Some(sturm_chain(&h.squarefree_part()?)?),
        _ => None,
    };
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(fb.len() + gb.len());
    while i < fb.len() && j < gb.len() {
        let (a, b) = (&mut fb[i], &mut gb[j]);
        if a.hi <= b.lo {
            out.push((a.multiplicity, 0));
            i += 1;
        } else if b.hi <= a.lo {
            out.push((0, b.multiplicity));
            j += 1;
        } else {
            let lo = if a.lo > b.lo { &a.lo } else { &b.lo };
            let hi = if a.hi < b.hi { &a.hi } else { &b.hi };
            if hc.as_ref().is_some_and(|c| c.count_half_open(lo, hi) == 1) {
                out.push((a.multiplicity, b.multiplicity));
                i += 1;
                j += 1;
            } else if a.width() >= b.width() {
                halve(&fc, a);
            } else {
                halve(&gc, b);
            }
        }
    }
    out.extend(fb[i..].iter().map(|a| (a.multiplicity, 0)));
    out.extend(gb[j..].iter().map(|b| (0, b.multiplicity)));
    Ok(out)
}

/// Weak interlacing `r_n <= s_{n-1} <= r_{n-1} <= ... <= s_1 <= r_1`, where
/// `r_i` are the roots of `f` and `s_i` those of `g`, both in decreasing
/// order with multiplicity.
pub fn interlacing_check(g: &UniPoly, f: &UniPoly) -> Result<Verdict<InterlaceFailure>> {
    if f.is_zero() || g.is_zero() {
        return Err(SwrError::ZeroPolynomial);
    }
    let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
    if df != dg + 1 {
        return Err(SwrError::Precondition(format!("interlacing needs deg f = deg g + 1, got {df} and {dg}")));
    }
    if !f.leading().is_positive() || !g.leading().is_positive() {
        return Err(SwrError::Precondition("interlacing needs positive leading coefficients".into()));
    }
    let mut isolated = Vec::with_capacity(2);
    for (name, p, d) in [("f", f, df), ("g", g, dg)] {
        let boxes = isolate_roots(p)?;
        let real: usize = boxes.iter().map(|b| b.multiplicity).sum();
        if real != d {
            return Err(SwrError::Precondition(format!("{name} is not real-rooted ({real} of {d} roots real)")));
        }
        isolated.push((boxes, sturm_chain(&p.squarefree_part()?)?));
    }
    let (fg, gg) = (isolated.remove(0), isolated.remove(0));
    let points = merge_roots(fg, gg, &f.gcd(g))?;
    let mut r_idx = Vec::new();
    let mut s_idx = Vec::new();
    for (i, &(mf, mg)) in points.iter().enumerate().rev() {
        r_idx.extend(std::iter::repeat_n(i, mf));
        s_idx.extend(std::iter::repeat_n(i, mg));
    }
    for (i, &s) in s_idx.iter().enumerate() {
        if !(r_idx[i + 1] <= s && s <= r_idx[i]) {
            return Ok(Verdict::Fail(InterlaceFailure { s_index: i + 1 }));
        }
    }
    Ok(Verdict::Pass)
}
