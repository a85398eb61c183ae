use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Result, SwrError};
use crate::ring::{rational_to_string, Rational, Scalar, Var, VarSet};

/// The five triangle parameters. Each is either a rational constant or the
/// free indeterminate of the same name; all live in one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub a1: Scalar,
    pub a2: Scalar,
    pub b1: Scalar,
    pub b2: Scalar,
    pub lam: Scalar,
    ring: VarSet,
}

/// A single parameter binding: a rational value or the indeterminate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binding {
    Value(Rational),
    Free,
}

impl From<Rational> for Binding {
    fn from(r: Rational) -> Self {
        Binding::Value(r)
    }
}

impl From<i64> for Binding {
    fn from(n: i64) -> Self {
        Binding::Value(Rational::from_integer(n.into()))
    }
}

pub const PARAM_VARS: [Var; 5] = [Var::A1, Var::A2, Var::B1, Var::B2, Var::Lam];

impl Params {
    /// Builds parameters from bindings ordered (a1, a2, b1, b2, lam).
    pub fn new(bindings: [Binding; 5]) -> Params {
        let ring = PARAM_VARS
            .iter()
            .zip(&bindings)
            .filter(|(_, b)| matches!(b, Binding::Free))
            .fold(VarSet::EMPTY, |acc, (v, _)| acc.with(*v));
        let mut it = PARAM_VARS.iter().zip(bindings).map(|(v, b)| match b {
            Binding::Value(r) => Scalar::Rat(r),
            Binding::Free => Scalar::var(ring, *v).expect("free variable is in ring"),
        });
        Params {
            a1: it.next().unwrap(),
            a2: it.next().unwrap(),
            b1: it.next().unwrap(),
            b2: it.next().unwrap(),
            lam: it.next().unwrap(),
            ring,
        }
    }

    pub fn numeric(values: [Rational; 5]) -> Params {
        Params::new(values.map(Binding::Value))
    }

    pub fn ints(values: [i64; 5]) -> Params {
        Params::new(values.map(Binding::from))
    }

    /// All five parameters free.
    pub fn symbolic() -> Params {
        Params::new([Binding::Free, Binding::Free, Binding::Free, Binding::Free, Binding::Free])
    }

    pub fn ring(&self) -> VarSet {
        self.ring
    }

    pub fn get(&self, v: Var) -> &Scalar {
        match v {
            Var::A1 => &self.a1,
            Var::A2 => &self.a2,
            Var::B1 => &self.b1,
            Var::B2 => &self.b2,
            Var::Lam => &self.lam,
            Var::Q => panic!("q is not a triangle parameter"),
        }
    }

    pub fn bindings(&self) -> [Binding; 5] {
        PARAM_VARS.map(|v| match self.get(v) {
            Scalar::Rat(r) => Binding::Value(r.clone()),
            Scalar::Poly(_) => Binding::Free,
        })
    }

    /// Same parameters with `v` replaced by the binding `b`.
    pub fn with(&self, v: Var, b: Binding) -> Params {
        let mut bindings = self.bindings();
        let idx = PARAM_VARS.iter().position(|&p| p == v).expect("parameter variable");
        bindings[idx] = b;
        Params::new(bindings)
    }

    pub fn with_free_lam(&self) -> Params {
        self.with(Var::Lam, Binding::Free)
    }

    pub fn is_numeric(&self) -> bool {
        self.ring.is_empty()
    }

    /// The rational values (a1, a2, b1, b2, lam), when every parameter is
    /// bound.
    pub fn values(&self) -> Result<[Rational; 5]> {
        if !self.is_numeric() {
            return Err(SwrError::Precondition("parameters must all be bound to rationals".into()));
        }
        Ok(PARAM_VARS.map(|v| self.get(v).to_rational().expect("numeric")))
    }

    /// All five parameters bound to nonnegative rationals.
    pub fn in_positivity_regime(&self) -> bool {
        self.values()
            .map(|vs| vs.iter().all(|x| !x.is_negative()))
            .unwrap_or(false)
    }

    /// Whether `a1 != 0` can be decided and holds.
    pub fn a1_nonzero(&self) -> Option<bool> {
        self.a1.as_rational().filter(|_| matches!(self.a1, Scalar::Rat(_))).map(|r| !r.is_zero())
    }

    pub fn b1_nonzero(&self) -> Option<bool> {
        self.b1.as_rational().filter(|_| matches!(self.b1, Scalar::Rat(_))).map(|r| !r.is_zero())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = PARAM_VARS
            .iter()
            .map(|v| match self.get(*v) {
                Scalar::Rat(r) => format!("{}={}", v.name(), rational_to_string(r)),
                Scalar::Poly(_) => format!("{}=sym", v.name()),
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}
