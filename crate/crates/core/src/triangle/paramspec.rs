//! Textual parameter bindings as accepted on the command line.

use std::str::FromStr;

use super::params::{Binding, Params, PARAM_VARS};
use super::specialization::SpecializationId;
use crate::error::SwrError;
use crate::ring::{rational_from_str, Var};

/// Parameters plus an optional binding for `q`.
///
/// Three spellings are accepted: a specialization name (`stirling2`,
/// `whitney:2`, ...), five comma-separated values in the order
/// `a1,a2,b1,b2,lam`, or `name=value` pairs naming all five parameters
/// and optionally `q`. A value is a rational (`3`, `-1/2`) or `sym`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub params: Params,
    pub q: Option<Binding>,
}

fn binding(s: &str) -> Result<Binding, SwrError> {
    let s = s.trim();
    if s == "sym" {
        Ok(Binding::Free)
    } else {
        Ok(Binding::Value(rational_from_str(s)?))
    }
}

impl FromStr for ParamSpec {
    type Err = SwrError;

    fn from_str(s: &str) -> Result<ParamSpec, SwrError> {
        let s = s.trim();
        if !s.contains(',') && !s.contains('=') {
            return Ok(ParamSpec { params: s.parse::<SpecializationId>()?.params(), q: None });
        }
        let parts: Vec<&str> = s.split(',').collect();
        if !s.contains('=') {
            let values: Vec<Binding> = parts.iter().map(|p| binding(p)).collect::<Result<_, _>>()?;
            let values: [Binding; 5] = values
                .try_into()
                .map_err(|v: Vec<Binding>| SwrError::Parse(format!("expected 5 values, found {}", v.len())))?;
            return Ok(ParamSpec { params: Params::new(values), q: None });
        }
        let mut slots: [Option<Binding>; 5] = Default::default();
        let mut q = None;
        for part in parts {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| SwrError::Parse(format!("expected name=value, found `{part}`")))?;
            let var: Var = name.trim().parse()?;
            let b = binding(value)?;
            let slot = match PARAM_VARS.iter().position(|&v| v == var) {
                Some(i) => &mut slots[i],
                None => &mut q,
            };
            if slot.replace(b).is_some() {
                return Err(SwrError::Parse(format!("`{}` given twice", var.name())));
            }
        }
        let mut bindings = Vec::with_capacity(5);
        for (v, slot) in PARAM_VARS.iter().zip(slots) {
            bindings.push(slot.ok_or_else(|| SwrError::Parse(format!("missing binding for `{}`", v.name())))?);
        }
        Ok(ParamSpec { params: Params::new(bindings.try_into().expect("five bindings")), q })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn three_spellings() {
        let named: ParamSpec = "stirling2".parse().unwrap();
        let listed: ParamSpec = "1,0,0,1,0".parse().unwrap();
        let keyed: ParamSpec = "lam=0,a1=1,a2=0,b1=0,b2=1".parse().unwrap();
        assert_eq!(named, listed);
        assert_eq!(listed, keyed);
    }

    #[test]
    fn symbolic_and_q() {
        let p: ParamSpec = "a1=sym,a2=1/2,b1=sym,b2=0,lam=-3,q=2".parse().unwrap();
        assert_eq!(p.params.to_string(), "a1=sym,a2=1/2,b1=sym,b2=0,lam=-3");
        assert_eq!(p.q, Some(Binding::Value(rat(2))));
    }

    #[test]
    fn malformed() {
        for bad in ["1,2,3", "a1=1,a2=1,b1=1,b2=1", "a1=1,a1=2,a2=1,b1=1,b2=1,lam=1", "x=1", "nosuch", "1,2,3,4,five"] {
            assert!(bad.parse::<ParamSpec>().is_err(), "{bad}");
        }
    }
}
