use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::MultiPoly;
use super::var::{Var, VarSet};
use super::Rational;
use crate::error::{Result, SwrError};

/// An element of the working ring: a bare rational, or a polynomial over a
/// declared set of indeterminates.
///
/// Rationals combine freely with polynomials (constants live in every ring).
/// Two polynomials must share their ring; the `try_*` methods report a
/// mismatch as an error while the operator impls panic on it.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(Rational),
    Poly(MultiPoly),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_pow(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rat(Rational::one())
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::Rat(rat(n))
    }

    pub fn var(ring: VarSet, v: Var) -> Result<Scalar> {
        MultiPoly::var(ring, v).map(Scalar::Poly)
    }

    /// The ring this value lives in; rationals report the empty ring.
    pub fn ring(&self) -> VarSet {
        match self {
            Scalar::Rat(_) => VarSet::EMPTY,
            Scalar::Poly(p) => p.ring(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Poly(p) => p.is_one(),
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Poly(p) => p.constant_value(),
        }
    }

    pub fn to_rational(&self) -> Result<Rational> {
        self.as_rational().ok_or(SwrError::NotRational)
    }

    pub fn as_poly(&self, ring: VarSet) -> Result<MultiPoly> {
        match self {
            Scalar::Rat(r) => Ok(MultiPoly::constant(ring, r.clone())),
            Scalar::Poly(p) => p.extend_ring(ring),
        }
    }

    /// Nonnegative as a rational, or coefficientwise nonnegative as a
    /// polynomial.
    pub fn is_nonneg(&self) -> bool {
        match self {
            Scalar::Rat(r) => !r.is_negative(),
            Scalar::Poly(p) => p.is_coefficientwise_nonneg(),
        }
    }

    /// Embeds into a ring containing at least the current one.
    pub fn extend_ring(&self, ring: VarSet) -> Result<Scalar> {
        match self {
            Scalar::Rat(r) => Ok(Scalar::Rat(r.clone())),
            Scalar::Poly(p) => p.extend_ring(ring).map(Scalar::Poly),
        }
    }

    fn binary(
        &self,
        other: &Scalar,
        rr: impl Fn(&Rational, &Rational) -> Rational,
        pp: impl Fn(&MultiPoly, &MultiPoly) -> Result<MultiPoly>,
    ) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(rr(a, b))),
            (Scalar::Poly(a), Scalar::Rat(b)) => {
                pp(a, &MultiPoly::constant(a.ring(), b.clone())).map(Scalar::Poly)
            }
            (Scalar::Rat(a), Scalar::Poly(b)) => {
                pp(&MultiPoly::constant(b.ring(), a.clone()), b).map(Scalar::Poly)
            }
            (Scalar::Poly(a), Scalar::Poly(b)) => pp(a, b).map(Scalar::Poly),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, |a, b| a + b, MultiPoly::try_add)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, |a, b| a - b, MultiPoly::try_sub)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Poly(p), Scalar::Rat(c)) | (Scalar::Rat(c), Scalar::Poly(p)) => {
                Ok(Scalar::Poly(p.scale(c)))
            }
            _ => self.binary(other, |a, b| a * b, MultiPoly::try_mul),
        }
    }

    /// Exact division. Over rationals this is ordinary division; over a
    /// polynomial ring the divisor must divide exactly.
    pub fn div_exact(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(SwrError::DivisionByZero);
        }
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a / b)),
            (Scalar::Poly(a), Scalar::Rat(b)) => Ok(Scalar::Poly(a.scale(&b.recip()))),
            _ => self.binary(other, |a, b| a / b, MultiPoly::div_exact),
        }
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r * c),
            Scalar::Poly(p) => Scalar::Poly(p.scale(c)),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Poly(p) => Scalar::Poly(p.neg()),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(rat_pow(r, e)),
            Scalar::Poly(p) => Scalar::Poly(p.pow(e)),
        }
    }

    /// Binds indeterminates to rationals; a fully bound polynomial collapses
    /// to a rational. Rationals are unchanged.
    pub fn bind(&self, bindings: &[(Var, Rational)]) -> Result<Scalar> {
        match self {
            Scalar::Rat(_) => Ok(self.clone()),
            Scalar::Poly(p) => {
                let bound = p.bind(bindings)?;
                if bound.ring().is_empty() {
                    Ok(Scalar::Rat(bound.constant_term()))
                } else {
                    Ok(Scalar::Poly(bound))
                }
            }
        }
    }

    pub fn substitute(&self, v: Var, value: &Scalar) -> Result<Scalar> {
        match self {
            Scalar::Rat(_) => Ok(self.clone()),
            Scalar::Poly(p) => {
                let value = value.as_poly(p.ring())?;
                p.substitute(v, &value).map(Scalar::Poly)
            }
        }
    }

    pub fn derivative(&self, v: Var) -> Scalar {
        match self {
            Scalar::Rat(_) => Scalar::zero(),
            Scalar::Poly(p) => Scalar::Poly(p.derivative(v)),
        }
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a Scalar>>(items: I) -> Scalar {
        items.into_iter().fold(Scalar::zero(), |acc, x| &acc + x)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Poly(a), Scalar::Poly(b)) => a.ring() == b.ring() && a == b,
            (Scalar::Rat(a), Scalar::Poly(p)) | (Scalar::Poly(p), Scalar::Rat(a)) => {
                p.constant_value().as_ref() == Some(a)
            }
        }
    }
}

impl Eq for Scalar {}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<MultiPoly> for Scalar {
    fn from(p: MultiPoly) -> Self {
        Scalar::Poly(p)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            Scalar::Poly(p) => write!(f, "{}", p),
        }
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).expect("scalar ring mismatch")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$try(&rhs).expect("scalar ring mismatch")
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$try(rhs).expect("scalar ring mismatch")
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}
