//! Truncated formal power series in `t` over [`Scalar`] coefficients.
//!
//! A series of order `N` carries the exact coefficients of `t^0..=t^N` and
//! nothing beyond. Binary operations truncate to the smaller order.

use num_traits::Zero;

use super::{rat, Rational, Scalar};
use crate::error::{Result, SwrError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    order: usize,
    coeffs: Vec<Scalar>,
}

impl PowerSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are stored.
    pub fn new(order: usize, mut coeffs: Vec<Scalar>) -> PowerSeries {
        coeffs.resize(order + 1, Scalar::zero());
        coeffs.truncate(order + 1);
        PowerSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> PowerSeries {
        PowerSeries::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: Scalar) -> PowerSeries {
        PowerSeries::new(order, vec![c])
    }

    pub fn one(order: usize) -> PowerSeries {
        PowerSeries::constant(order, Scalar::one())
    }

    /// `c * t`.
    pub fn monomial_t(order: usize, c: Scalar) -> PowerSeries {
        PowerSeries::new(order, vec![Scalar::zero(), c])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Scalar {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        PowerSeries::new(order.min(self.order), self.coeffs.clone())
    }

    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|i| self.coeffs[i].try_add(&other.coeffs[i]))
            .collect::<Result<Vec<_>>>()?;
        Ok(PowerSeries { order, coeffs })
    }

    pub fn sub(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PowerSeries {
        PowerSeries { order: self.order, coeffs: self.coeffs.iter().map(Scalar::neg).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Result<PowerSeries> {
        let coeffs = self.coeffs.iter().map(|x| x.try_mul(c)).collect::<Result<Vec<_>>>()?;
        Ok(PowerSeries { order: self.order, coeffs })
    }

    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let order = self.order.min(other.order);
        let mut coeffs = vec![Scalar::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(PowerSeries { order, coeffs })
    }

    /// Nonnegative integer power by repeated multiplication.
    pub fn powi(&self, e: u32) -> Result<PowerSeries> {
        let mut acc = PowerSeries::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> PowerSeries {
        let coeffs: Vec<_> = (1..=self.order)
            .map(|i| self.coeffs[i].scale(&rat(i as i64)))
            .collect();
        PowerSeries::new(self.order.saturating_sub(1), coeffs)
    }

    /// Reciprocal of a series with constant term 1.
    pub fn inverse_unit(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_one() {
            return Err(SwrError::SeriesPrecondition("inverse requires constant term 1"));
        }
        let mut inv = vec![Scalar::one()];
        for n in 1..=self.order {
            let mut acc = Scalar::zero();
            for k in 1..=n {
                acc = acc.try_add(&self.coeffs[k].try_mul(&inv[n - k])?)?;
            }
            inv.push(acc.neg());
        }
        Ok(PowerSeries { order: self.order, coeffs: inv })
    }

    /// `exp(f)` for `f` with zero constant term, via `n g_n = sum k f_k g_{n-k}`.
    pub fn exp(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(SwrError::SeriesPrecondition("exp requires constant term 0"));
        }
        let mut g = vec![Scalar::one()];
        for n in 1..=self.order {
            let mut acc = Scalar::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k].try_mul(&g[n - k])?.scale(&rat(k as i64));
                acc = acc.try_add(&term)?;
            }
            g.push(acc.scale(&Rational::new(1.into(), (n as i64).into())));
        }
        Ok(PowerSeries { order: self.order, coeffs: g })
    }

    /// `log(f)` for `f` with constant term 1, via
    /// `n g_n = n f_n - sum_{k<n} k g_k f_{n-k}`.
    pub fn log(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_one() {
            return Err(SwrError::SeriesPrecondition("log requires constant term 1"));
        }
        let mut g = vec![Scalar::zero()];
        for n in 1..=self.order {
            let mut acc = self.coeffs[n].scale(&rat(n as i64));
            for k in 1..n {
                if g[k].is_zero() || self.coeffs[n - k].is_zero() {
                    continue;
                }
                let term = g[k].try_mul(&self.coeffs[n - k])?.scale(&rat(k as i64));
                acc = acc.try_sub(&term)?;
            }
            g.push(acc.scale(&Rational::new(1.into(), (n as i64).into())));
        }
        Ok(PowerSeries { order: self.order, coeffs: g })
    }

    /// `f^alpha = exp(alpha log f)` for `f` with constant term 1.
    pub fn pow(&self, alpha: &Rational) -> Result<PowerSeries> {
        if !self.coeffs[0].is_one() {
            return Err(SwrError::SeriesPrecondition("pow requires constant term 1"));
        }
        if alpha.is_zero() {
            return Ok(PowerSeries::one(self.order));
        }
        self.log()?.scale(&Scalar::Rat(alpha.clone()))?.exp()
    }

    /// The series `e^{c t} - 1`.
    pub fn exp_minus_one(order: usize, c: &Scalar) -> Result<PowerSeries> {
        let e = PowerSeries::monomial_t(order, c.clone()).exp()?;
        let mut coeffs = e.coeffs;
        coeffs[0] = Scalar::zero();
        Ok(PowerSeries { order, coeffs })
    }
}
