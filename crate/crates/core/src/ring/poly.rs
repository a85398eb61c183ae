//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept sorted by graded-lexicographic order on exponent vectors
//! (a1 > a2 > b1 > b2 > lam > q), with no stored zero coefficients, so two
//! polynomials over the same ring are equal iff their term vectors are.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use num_traits::{One, Signed, Zero};

use super::var::{Var, VarSet, ALL_VARS, NUM_VARS};
use super::Rational;
use crate::error::{Result, SwrError};

/// Exponent vector, one slot per indeterminate in [`ALL_VARS`] order.
/// Slots outside the owning ring are always zero.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u16; NUM_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NUM_VARS]);

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u16) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[v.index()] = e;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NUM_VARS];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflow");
        }
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0u16; NUM_VARS];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(out))
    }

    pub fn support(&self) -> VarSet {
        ALL_VARS
            .iter()
            .filter(|v| self.exp(**v) > 0)
            .fold(VarSet::EMPTY, |s, &v| s.with(v))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    ring: VarSet,
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero(ring: VarSet) -> MultiPoly {
        MultiPoly { ring, terms: Vec::new() }
    }

    pub fn one(ring: VarSet) -> MultiPoly {
        MultiPoly::constant(ring, Rational::one())
    }

    pub fn constant(ring: VarSet, c: Rational) -> MultiPoly {
        if c.is_zero() {
            MultiPoly::zero(ring)
        } else {
            MultiPoly { ring, terms: vec![(Monomial::ONE, c)] }
        }
    }

    /// The indeterminate `v` as an element of `ring`.
    pub fn var(ring: VarSet, v: Var) -> Result<MultiPoly> {
        if !ring.contains(v) {
            return Err(SwrError::VariableNotInRing(v.name().to_string()));
        }
        Ok(MultiPoly { ring, terms: vec![(Monomial::var(v), Rational::one())] })
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms, normalizing into canonical form.
    pub fn from_terms<I>(ring: VarSet, terms: I) -> Result<MultiPoly>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            if !m.support().is_subset(ring) {
                return Err(SwrError::RingMismatch(m.support(), ring));
            }
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Ok(MultiPoly::from_map(ring, acc))
    }

    fn from_map(ring: VarSet, acc: impl IntoIterator<Item = (Monomial, Rational)>) -> MultiPoly {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MultiPoly { ring, terms }
    }

    pub fn ring(&self) -> VarSet {
        self.ring
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.first() {
            Some((m, c)) if *m == Monomial::ONE => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.exp(v)).max()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// True iff every stored coefficient is nonnegative; the zero polynomial
    /// qualifies.
    pub fn is_coefficientwise_nonneg(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// Views `self` as an element of the larger ring `ring`.
    pub fn extend_ring(&self, ring: VarSet) -> Result<MultiPoly> {
        if !self.ring.is_subset(ring) {
            return Err(SwrError::RingMismatch(self.ring, ring));
        }
        Ok(MultiPoly { ring, terms: self.terms.clone() })
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.ring != other.ring {
            return Err(SwrError::RingMismatch(self.ring, other.ring));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Less => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((*mb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(MultiPoly { ring: self.ring, terms: out })
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.ring);
        }
        MultiPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(self.ring));
        }
        if let Some(c) = other.constant_value() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.constant_value() {
            return Ok(other.scale(&c));
        }
        if let Some(p) = self.mul_small_integer(other) {
            return Ok(p);
        }
        if self.is_integral() && other.is_integral() {
            return Ok(self.mul_big_integer(other));
        }
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        acc.reserve(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    Entry::Occupied(mut e) => *e.get_mut() += prod,
                    Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        Ok(MultiPoly::from_map(self.ring, acc))
    }

    fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Product with machine-integer coefficients; `None` when a coefficient
    /// is not an integer or an intermediate overflows `i128`.
    fn mul_small_integer(&self, other: &MultiPoly) -> Option<MultiPoly> {
        use num_traits::ToPrimitive;
        let small = |p: &MultiPoly| -> Option<Vec<(Monomial, i128)>> {
            p.terms
                .iter()
                .map(|(m, c)| if c.is_integer() { c.numer().to_i128().map(|x| (*m, x)) } else { None })
                .collect()
        };
        let (a, b) = (small(self)?, small(other)?);
        let mut acc: FxHashMap<Monomial, i128> = FxHashMap::default();
        acc.reserve(a.len() * b.len() / 2 + 1);
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let prod = ca.checked_mul(*cb)?;
                let slot = acc.entry(ma.mul(mb)).or_insert(0);
                *slot = slot.checked_add(prod)?;
            }
        }
        let mut terms: Vec<(Monomial, Rational)> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, Rational::from_integer(BigInt::from(c))))
            .collect();
        terms.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        Some(MultiPoly { ring: self.ring, terms })
    }

    fn mul_big_integer(&self, other: &MultiPoly) -> MultiPoly {
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        acc.reserve(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca.numer() * cb.numer();
                match acc.entry(ma.mul(mb)) {
                    Entry::Occupied(mut e) => *e.get_mut() += prod,
                    Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m, Rational::from_integer(c))).collect();
        terms.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        MultiPoly { ring: self.ring, terms }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one(self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).expect("same ring");
            }
        }
        result
    }

    /// Exact quotient `self / divisor`, failing when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(divisor)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(SwrError::DivisionByZero)?.clone();
        if let Some(c) = divisor.constant_value() {
            return Ok(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quotient: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((rm, rc)) = rem.leading_term().cloned() {
            let qm = rm.div(&lead_m).ok_or(SwrError::NotDivisible)?;
            let qc = &rc / &lead_c;
            let shifted = MultiPoly {
                ring: self.ring,
                terms: divisor
                    .terms
                    .iter()
                    .map(|(m, c)| (m.mul(&qm), c * &qc))
                    .collect(),
            };
            rem = rem.try_sub(&shifted)?;
            quotient.push((qm, qc));
        }
        quotient.reverse();
        Ok(MultiPoly { ring: self.ring, terms: quotient })
    }

    /// Substitutes rational values for some indeterminates. The result lives
    /// in the ring with those indeterminates removed.
    pub fn bind(&self, bindings: &[(Var, Rational)]) -> Result<MultiPoly> {
        let mut ring = self.ring;
        for (v, _) in bindings {
            if !self.ring.contains(*v) {
                return Err(SwrError::VariableNotInRing(v.name().to_string()));
            }
            ring = ring.without(*v);
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut m = *m;
            let mut c = c.clone();
            for (v, value) in bindings {
                let e = m.0[v.index()];
                if e > 0 {
                    c *= super::rat_pow(value, e as u32);
                    m.0[v.index()] = 0;
                }
            }
            out.push((m, c));
        }
        MultiPoly::from_terms(ring, out)
    }

    /// Replaces `v` by the polynomial `value` (which must live in the same
    /// ring).
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(value)?;
        if !self.ring.contains(v) {
            return Err(SwrError::VariableNotInRing(v.name().to_string()));
        }
        let max_e = self.degree_in(v).unwrap_or(0);
        let mut powers = vec![MultiPoly::one(self.ring)];
        for e in 1..=max_e as usize {
            let next = powers[e - 1].try_mul(value)?;
            powers.push(next);
        }
        let mut by_power: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); max_e as usize + 1];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = rest.0[v.index()];
            rest.0[v.index()] = 0;
            by_power[e as usize].push((rest, c.clone()));
        }
        let mut total = MultiPoly::zero(self.ring);
        for (e, terms) in by_power.into_iter().enumerate() {
            if terms.is_empty() {
                continue;
            }
            let cofactor = MultiPoly::from_terms(self.ring, terms)?;
            total = total.try_add(&cofactor.try_mul(&powers[e])?)?;
        }
        Ok(total)
    }

    /// Formal partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) > 0)
            .map(|(m, c)| {
                let e = m.exp(v);
                let mut m = *m;
                m.0[v.index()] = e - 1;
                (m, c * Rational::from_integer(e.into()))
            });
        MultiPoly::from_terms(self.ring, terms).expect("derivative stays in ring")
    }

    /// Decomposes `self` as `sum_k coeff_k * v^k`, coefficients living in the
    /// same ring.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let n = self.degree_in(v).map(|d| d as usize + 1).unwrap_or(0);
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); n];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = rest.0[v.index()] as usize;
            rest.0[v.index()] = 0;
            buckets[e].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|t| MultiPoly::from_terms(self.ring, t).expect("same ring"))
            .collect()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let factors: Vec<String> = ALL_VARS
                .iter()
                .filter(|v| m.exp(**v) > 0)
                .map(|v| match m.exp(*v) {
                    1 => v.name().to_string(),
                    e => format!("{}^{}", v.name(), e),
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ring() -> VarSet {
        VarSet::of(&[Var::Lam, Var::Q])
    }

    fn q_plus_lam() -> MultiPoly {
        let q = MultiPoly::var(ring(), Var::Q).unwrap();
        let l = MultiPoly::var(ring(), Var::Lam).unwrap();
        q.try_add(&l).unwrap()
    }

    #[test]
    fn square_of_binomial() {
        let p = q_plus_lam();
        let sq = p.try_mul(&p).unwrap();
        let expect = MultiPoly::from_terms(
            ring(),
            vec![
                (Monomial::var_pow(Var::Q, 2), r(1, 1)),
                (Monomial::var(Var::Q).mul(&Monomial::var(Var::Lam)), r(2, 1)),
                (Monomial::var_pow(Var::Lam, 2), r(1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(sq, expect);
        assert_eq!(sq.to_string(), "lam^2 + 2*lam*q + q^2");
    }

    #[test]
    fn multiply_by_zero_annihilates() {
        let p = q_plus_lam();
        assert!(p.try_mul(&MultiPoly::zero(ring())).unwrap().is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let p = q_plus_lam();
        let other = MultiPoly::var(VarSet::of(&[Var::Q]), Var::Q).unwrap();
        assert!(matches!(p.try_add(&other), Err(SwrError::RingMismatch(..))));
    }

    #[test]
    fn bind_examples() {
        let p = q_plus_lam();
        let bound = p.bind(&[(Var::Lam, r(0, 1))]).unwrap();
        assert_eq!(bound, MultiPoly::var(VarSet::of(&[Var::Q]), Var::Q).unwrap());
        let sq = p.pow(2).bind(&[(Var::Q, r(1, 1)), (Var::Lam, r(1, 1))]).unwrap();
        assert_eq!(sq.constant_value(), Some(r(4, 1)));
        let err = p.bind(&[(Var::A1, r(1, 1))]);
        assert!(matches!(err, Err(SwrError::VariableNotInRing(_))));
    }

    #[test]
    fn exact_division_round_trips_and_detects_remainder() {
        let p = q_plus_lam();
        let cube = p.pow(3);
        assert_eq!(cube.div_exact(&p).unwrap(), p.pow(2));
        let q = MultiPoly::var(ring(), Var::Q).unwrap();
        assert!(matches!(p.div_exact(&q), Err(SwrError::NotDivisible)));
    }

    #[test]
    fn nonnegativity() {
        assert!(q_plus_lam().pow(2).is_coefficientwise_nonneg());
        let q = MultiPoly::var(ring(), Var::Q).unwrap();
        let l = MultiPoly::var(ring(), Var::Lam).unwrap();
        assert!(!q.try_sub(&l).unwrap().is_coefficientwise_nonneg());
        assert!(MultiPoly::zero(ring()).is_coefficientwise_nonneg());
    }

    #[test]
    fn substitute_shift() {
        // lam + lam^2 with lam -> lam + q, then lam = 0 gives q + q^2
        let l = MultiPoly::var(ring(), Var::Lam).unwrap();
        let p = l.try_add(&l.pow(2)).unwrap();
        let shifted = p.substitute(Var::Lam, &q_plus_lam()).unwrap();
        let at0 = shifted.bind(&[(Var::Lam, r(0, 1))]).unwrap();
        let q = MultiPoly::var(VarSet::of(&[Var::Q]), Var::Q).unwrap();
        assert_eq!(at0, q.try_add(&q.pow(2)).unwrap());
    }

    #[test]
    fn derivative_of_power() {
        let p = q_plus_lam().pow(3);
        let d = p.derivative(Var::Q);
        assert_eq!(d, q_plus_lam().pow(2).scale(&r(3, 1)));
    }
}
