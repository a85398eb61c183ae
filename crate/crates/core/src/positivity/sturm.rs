use num_traits::Zero;

use super::upoly::{sign, UniPoly};
use crate::error::{Result, SwrError};
use crate::ring::Rational;

/// `p, p', -rem(p, p'), ...` down to the last nonzero remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    pub polys: Vec<UniPoly>,
}

/// An interval endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    PosInf,
    Open(Rational),
    Closed(Rational),
}

/// An isolating interval `(lo, hi]` holding exactly one real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBox {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
}

impl RootBox {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }
}

pub fn sturm_chain(p: &UniPoly) -> Result<SturmChain> {
    if p.is_zero() {
        return Err(SwrError::ZeroPolynomial);
    }
    // Positive rescaling keeps every sign, so each member is stored
    // primitive to stop coefficient growth.
    let mut polys = vec![p.primitive()];
    let d = p.derivative().primitive();
    if !d.is_zero() {
        polys.push(d);
        loop {
            let n = polys.len();
            let (_, r) = polys[n - 2].div_rem(&polys[n - 1])?;
            if r.is_zero() {
                break;
            }
            polys.push(r.neg().primitive());
        }
    }
    Ok(SturmChain { polys })
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmChain {
    pub fn variations_at(&self, x: &Rational) -> usize {
        variations(self.polys.iter().map(|p| sign(&p.eval(x))))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.polys.iter().map(UniPoly::sign_at_neg_inf))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.polys.iter().map(UniPoly::sign_at_pos_inf))
    }

    fn variations_at_bound(&self, b: &Bound) -> usize {
        match b {
            Bound::NegInf => self.variations_at_neg_inf(),
            Bound::PosInf => self.variations_at_pos_inf(),
            Bound::Open(x) | Bound::Closed(x) => self.variations_at(x),
        }
    }

    /// Distinct real roots of the first polynomial in `(a, b]`. The chain
    /// must be built from a squarefree polynomial.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Distinct real roots of `p` between the two bounds, honoring openness.
pub fn count_roots_in(p: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    let sf = p.squarefree_part()?;
    let chain = sturm_chain(&sf)?;
    count_with_chain(&chain, &sf, lo, hi)
}

fn count_with_chain(chain: &SturmChain, sf: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    let point = |b: &Bound| match b {
        Bound::Open(x) | Bound::Closed(x) => Some(x.clone()),
        _ => None,
    };
    if matches!(lo, Bound::PosInf) || matches!(hi, Bound::NegInf) {
        return Err(SwrError::Precondition("interval bounds are reversed".into()));
    }
    if let (Some(a), Some(b)) = (point(lo), point(hi)) {
        if a > b {
            return Err(SwrError::Precondition("interval bounds are reversed".into()));
        }
        if a == b {
            let closed = matches!(lo, Bound::Closed(_)) && matches!(hi, Bound::Closed(_));
            return Ok(usize::from(closed && sf.eval(&a).is_zero()));
        }
    }
    // counts (lo, hi]
    let mut n = chain.variations_at_bound(lo) as i64 - chain.variations_at_bound(hi) as i64;
    if let Bound::Closed(a) = lo {
        if sf.eval(a).is_zero() {
            n += 1;
        }
    }
    if let Bound::Open(b) = hi {
        if sf.eval(b).is_zero() {
            n -= 1;
        }
    }
    Ok(n.max(0) as usize)
}

/// Disjoint, ordered isolating intervals for the real roots of `p`, each
/// carrying the root's multiplicity in `p`.
pub fn isolate_roots(p: &UniPoly) -> Result<Vec<RootBox>> {
    let factors = p.squarefree_factorization()?;
    let sf = p.squarefree_part()?;
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(&sf)?;
    let bound = sf.cauchy_bound();
    let mut boxes = Vec::new();
    bisect(&chain, -bound.clone(), bound, &mut boxes);
    let factor_chains: Vec<(usize, UniPoly, SturmChain)> = factors
        .into_iter()
        .enumerate()
        .filter(|(_, f)| f.degree().unwrap_or(0) > 0)
        .map(|(i, f)| {
            let c = sturm_chain(&f).expect("nonzero factor");
            (i + 1, f, c)
        })
        .collect();
    for b in &mut boxes {
        b.multiplicity = factor_chains
            .iter()
            .find(|(_, _, c)| c.count_half_open(&b.lo, &b.hi) == 1)
            .map(|(m, _, _)| *m)
            .expect("each root of the squarefree part lies in one factor");
    }
    Ok(boxes)
}

fn bisect(chain: &SturmChain, lo: Rational, hi: Rational, out: &mut Vec<RootBox>) {
    match chain.count_half_open(&lo, &hi) {
        0 => {}
        1 => out.push(RootBox { lo, hi, multiplicity: 1 }),
        _ => {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            bisect(chain, lo, mid.clone(), out);
            bisect(chain, mid, hi, out);
        }
    }
}

/// Halves a box around its root until its width is at most `width`.
pub fn refine_box(p: &UniPoly, b: &RootBox, width: &Rational) -> Result<RootBox> {
    let sf = p.squarefree_part()?;
    let chain = sturm_chain(&sf)?;
    let mut cur = b.clone();
    while &cur.width() > width {
        let mid = cur.midpoint();
        if chain.count_half_open(&cur.lo, &mid) == 1 {
            cur.hi = mid;
        } else {
            cur.lo = mid;
        }
    }
    Ok(cur)
}

/// Number of real roots counted with multiplicity.
pub fn real_root_count_with_multiplicity(p: &UniPoly) -> Result<usize> {
    Ok(isolate_roots(p)?.iter().map(|b| b.multiplicity).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn counts_with_endpoints() {
        let f = p(&[0, 1, 1]); // q^2 + q
        assert_eq!(count_roots_in(&f, &Bound::Closed(r(-2)), &Bound::Closed(r(0))).unwrap(), 2);
        assert_eq!(count_roots_in(&f, &Bound::Open(r(-1)), &Bound::Open(r(0))).unwrap(), 0);
        assert_eq!(count_roots_in(&f, &Bound::Closed(r(-1)), &Bound::Open(r(0))).unwrap(), 1);
        assert_eq!(count_roots_in(&f, &Bound::NegInf, &Bound::PosInf).unwrap(), 2);
        assert_eq!(count_roots_in(&p(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf).unwrap(), 0);
        assert!(count_roots_in(&UniPoly::zero(), &Bound::NegInf, &Bound::PosInf).is_err());
    }

    #[test]
    fn isolation_with_multiplicity() {
        // (x+1)^2 (x-3) (2x-1)
        let f = p(&[1, 1]).mul(&p(&[1, 1])).mul(&p(&[-3, 1])).mul(&p(&[-1, 2]));
        let boxes = isolate_roots(&f).unwrap();
        assert_eq!(boxes.len(), 3);
        assert_eq!(boxes.iter().map(|b| b.multiplicity).collect::<Vec<_>>(), vec![2, 1, 1]);
        let roots = [r(-1), Rational::new(1.into(), 2.into()), r(3)];
        for (b, x) in boxes.iter().zip(&roots) {
            assert!(&b.lo < x && x <= &b.hi);
        }
        for w in boxes.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
        assert_eq!(real_root_count_with_multiplicity(&f).unwrap(), 4);
    }

    #[test]
    fn refine_shrinks() {
        let f = p(&[-2, 0, 1]);
        let boxes = isolate_roots(&f).unwrap();
        let eps = Rational::new(1.into(), 1000.into());
        let b = refine_box(&f, &boxes[1], &eps).unwrap();
        assert!(b.width() <= eps);
        assert!(&b.lo * &b.lo < r(2) && r(2) <= &b.hi * &b.hi);
    }

    #[test]
    fn constants_have_no_roots() {
        assert!(isolate_roots(&p(&[5])).unwrap().is_empty());
    }
}
