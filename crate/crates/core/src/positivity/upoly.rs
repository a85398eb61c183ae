use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, SwrError};
use crate::ring::{Monomial, Rational, Scalar, Var};

/// Dense univariate polynomial over the rationals, coefficients in
/// ascending degree with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> UniPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> UniPoly {
        UniPoly::new(vec![c])
    }

    /// `x`.
    pub fn x() -> UniPoly {
        UniPoly::from_ints(&[0, 1])
    }

    /// Reads a scalar as a polynomial in `v`; every other indeterminate of
    /// its ring must be absent from the support.
    pub fn from_scalar(s: &Scalar, v: Var) -> Result<UniPoly> {
        match s {
            Scalar::Rat(r) => Ok(UniPoly::constant(r.clone())),
            Scalar::Poly(p) => {
                let mut coeffs: Vec<Rational> = Vec::new();
                for (m, c) in p.terms() {
                    let e = m.exp(v) as usize;
                    if *m != Monomial::var_pow(v, e as u16) {
                        return Err(SwrError::NotUnivariate(v.name().to_string()));
                    }
                    if coeffs.len() <= e {
                        coeffs.resize(e + 1, Rational::zero());
                    }
                    coeffs[e] += c;
                }
                Ok(UniPoly::new(coeffs))
            }
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or(SwrError::DivisionByZero)?;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + i] -= &c * d;
                }
            }
            quot[top - dd] = c;
            rem.pop();
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// `self` times a positive rational so that the coefficients are
    /// coprime integers. Signs, and hence Sturm counts, are unchanged.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let content = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        UniPoly::new(nums.into_iter().map(|n| Rational::from_integer(n / &content)).collect())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Exact quotient; fails when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(SwrError::NotDivisible);
        }
        Ok(q)
    }

    /// The product of the distinct irreducible factors, made monic.
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(SwrError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_exact(&g)?.monic())
    }

    /// Yun's algorithm: monic squarefree, pairwise coprime `f_1, f_2, ...`
    /// with `self = c * prod f_i^i`. Entry `i - 1` holds `f_i`; trivial
    /// factors are kept as the constant 1.
    pub fn squarefree_factorization(&self) -> Result<Vec<UniPoly>> {
        if self.is_zero() {
            return Err(SwrError::ZeroPolynomial);
        }
        let one = UniPoly::constant(Rational::one());
        let mut out = Vec::new();
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div_exact(&a0)?;
        let mut c = d.div_exact(&a0)?;
        let mut e = c.sub(&b.derivative());
        while b.degree().unwrap_or(0) > 0 {
            let f = b.gcd(&e);
            b = b.div_exact(&f)?;
            c = e.div_exact(&f)?;
            e = c.sub(&b.derivative());
            out.push(f);
        }
        while out.last() == Some(&one) {
            out.pop();
        }
        Ok(out)
    }

    /// Multiplicity of 0 as a root, with the cofactor `self / x^m`.
    pub fn strip_zero_roots(&self) -> (usize, UniPoly) {
        let m = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (m, UniPoly::new(self.coeffs[m.min(self.coeffs.len())..].to_vec()))
    }

    /// Sign of `p(x)` as `x -> +inf`.
    pub fn sign_at_pos_inf(&self) -> i32 {
        sign(&self.leading())
    }

    /// Sign of `p(x)` as `x -> -inf`.
    pub fn sign_at_neg_inf(&self) -> i32 {
        let s = sign(&self.leading());
        if self.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }

    /// A bound `B` with every complex root of modulus below `B`.
    pub fn cauchy_bound(&self) -> Rational {
        let lead = self.leading().abs();
        let max = self.coeffs[..self.coeffs.len().saturating_sub(1)]
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(Rational::zero(), |a, b| if b > a { b } else { a });
        max + Rational::one()
    }

    /// Substitutes `x -> x + c`.
    pub fn shift(&self, c: &Rational) -> UniPoly {
        let lin = UniPoly::new(vec![c.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, a| acc.mul(&lin).add(&UniPoly::constant(a.clone())))
    }

    /// `sum c_i x^i` with `x` bound to `v`.
    pub fn to_scalar(&self, ring: crate::ring::VarSet, v: Var) -> Result<Scalar> {
        let x = Scalar::var(ring, v)?;
        let mut acc = Scalar::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc.try_add(&x.pow(i as u32).scale(c))?;
        }
        Ok(acc)
    }
}

pub(crate) fn sign(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl UniPoly {
    /// Display form with `name` as the indeterminate.
    pub fn to_string_in(&self, name: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coef = crate::ring::rational_to_string(&a);
            match i {
                0 => out.push_str(&coef),
                _ => {
                    if !a.is_one() {
                        out.push_str(&format!("{coef}*"));
                    }
                    if i == 1 {
                        out.push_str(name);
                    } else {
                        out.push_str(&format!("{name}^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}
