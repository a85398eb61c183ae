use std::fmt;
use std::str::FromStr;

use super::params::{Binding, Params};
use crate::error::SwrError;
use crate::ring::{rational_from_str, rational_to_string, Rational};

/// Named members of the five-parameter family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecializationId {
    /// Stirling numbers of the second kind.
    Stirling2,
    /// `k! S(n,k)`, the ordered set partition numbers.
    TannyGeometric,
    /// Whitney numbers of the second kind `W_m(n,k)`.
    Whitney(Rational),
    /// Associated Whitney numbers `k! W_m(n,k)`.
    AssocWhitney(Rational),
    /// Set partitions with `k` distinguished blocks (A049020).
    RiordanA049020,
    /// Falling factorials `n!/(n-k)!` (A008279).
    FallingFactorialA008279,
    /// A154602.
    A154602,
}

impl SpecializationId {
    /// Bindings ordered (a1, a2, b1, b2, lam).
    pub fn values(&self) -> [Rational; 5] {
        let i = |n: i64| Rational::from_integer(n.into());
        match self {
            SpecializationId::Stirling2 => [i(1), i(0), i(0), i(1), i(0)],
            SpecializationId::TannyGeometric => [i(1), i(0), i(1), i(0), i(0)],
            SpecializationId::Whitney(m) => [m.clone(), i(1), i(0), i(1), i(0)],
            SpecializationId::AssocWhitney(m) => [m.clone(), i(1), i(1), i(0), i(0)],
            SpecializationId::RiordanA049020 => [i(1), i(0), i(0), i(1), i(1)],
            SpecializationId::FallingFactorialA008279 => [i(0), i(1), i(1), i(0), i(0)],
            SpecializationId::A154602 => [i(2), i(0), i(0), i(1), i(1)],
        }
    }

    pub fn params(&self) -> Params {
        Params::new(self.values().map(Binding::Value))
    }

    pub fn all_fixed() -> [SpecializationId; 5] {
        [
            SpecializationId::Stirling2,
            SpecializationId::TannyGeometric,
            SpecializationId::RiordanA049020,
            SpecializationId::FallingFactorialA008279,
            SpecializationId::A154602,
        ]
    }
}

pub fn specialization_params(id: &SpecializationId) -> Params {
    id.params()
}

impl fmt::Display for SpecializationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecializationId::Stirling2 => f.write_str("stirling2"),
            SpecializationId::TannyGeometric => f.write_str("tanny_geometric"),
            SpecializationId::Whitney(m) => write!(f, "whitney:{}", rational_to_string(m)),
            SpecializationId::AssocWhitney(m) => write!(f, "assoc_whitney:{}", rational_to_string(m)),
            SpecializationId::RiordanA049020 => f.write_str("riordan_a049020"),
            SpecializationId::FallingFactorialA008279 => f.write_str("falling_factorial_a008279"),
            SpecializationId::A154602 => f.write_str("a154602"),
        }
    }
}

impl FromStr for SpecializationId {
    type Err = SwrError;

    /// Accepts the display names, plus `riordan`, `falling_factorial` and
    /// `whitney:<m>` / `assoc_whitney:<m>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n.to_string(), Some(a.to_string())),
            None => (s.clone(), None),
        };
        let m = || -> Result<Rational, SwrError> {
            arg.as_deref()
                .map(rational_from_str)
                .unwrap_or_else(|| Err(SwrError::Parse(format!("`{name}` needs a parameter, e.g. {name}:2"))))
        };
        match name.as_str() {
            "stirling2" => Ok(SpecializationId::Stirling2),
            "tanny_geometric" | "tanny" => Ok(SpecializationId::TannyGeometric),
            "whitney" => Ok(SpecializationId::Whitney(m()?)),
            "assoc_whitney" => Ok(SpecializationId::AssocWhitney(m()?)),
            "riordan_a049020" | "riordan" | "a049020" => Ok(SpecializationId::RiordanA049020),
            "falling_factorial_a008279" | "falling_factorial" | "a008279" => {
                Ok(SpecializationId::FallingFactorialA008279)
            }
            "a154602" => Ok(SpecializationId::A154602),
            _ => Err(SwrError::Parse(format!("unknown specialization `{s}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn bindings_follow_the_family_list() {
        assert_eq!(SpecializationId::Stirling2.values(), [1, 0, 0, 1, 0].map(rat));
        assert_eq!(SpecializationId::RiordanA049020.values(), [1, 0, 0, 1, 1].map(rat));
        assert_eq!(SpecializationId::A154602.values(), [2, 0, 0, 1, 1].map(rat));
        assert_eq!(SpecializationId::Whitney(rat(3)).values(), [3, 1, 0, 1, 0].map(rat));
        assert_eq!(SpecializationId::AssocWhitney(rat(3)).values(), [3, 1, 1, 0, 0].map(rat));
        assert_eq!(SpecializationId::FallingFactorialA008279.values(), [0, 1, 1, 0, 0].map(rat));
        assert_eq!(SpecializationId::TannyGeometric.values(), [1, 0, 1, 0, 0].map(rat));
    }

    #[test]
    fn names_round_trip() {
        for id in SpecializationId::all_fixed() {
            assert_eq!(id.to_string().parse::<SpecializationId>().unwrap(), id);
        }
        let w: SpecializationId = "whitney:1/2".parse().unwrap();
        assert_eq!(w, SpecializationId::Whitney(Rational::new(1.into(), 2.into())));
        assert!("whitney".parse::<SpecializationId>().is_err());
    }
}
