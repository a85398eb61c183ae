use std::fmt;
use std::str::FromStr;

use crate::error::SwrError;

/// One of the six indeterminates the triangle machinery works with.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A1,
    A2,
    B1,
    B2,
    Lam,
    Q,
}

pub const NUM_VARS: usize = 6;

pub const ALL_VARS: [Var; NUM_VARS] = [Var::A1, Var::A2, Var::B1, Var::B2, Var::Lam, Var::Q];

impl Var {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A1 => "a1",
            Var::A2 => "a2",
            Var::B1 => "b1",
            Var::B2 => "b2",
            Var::Lam => "lam",
            Var::Q => "q",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = SwrError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "a1" => Ok(Var::A1),
            "a2" => Ok(Var::A2),
            "b1" => Ok(Var::B1),
            "b2" => Ok(Var::B2),
            "lam" | "lambda" => Ok(Var::Lam),
            "q" => Ok(Var::Q),
            other => Err(SwrError::UnknownVariable(other.to_string())),
        }
    }
}

/// The set of indeterminates of a polynomial ring, always listed in the
/// fixed order a1, a2, b1, b2, lam, q.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VarSet(u8);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn of(vars: &[Var]) -> VarSet {
        vars.iter().fold(VarSet::EMPTY, |acc, &v| acc.with(v))
    }

    pub fn params() -> VarSet {
        VarSet::of(&[Var::A1, Var::A2, Var::B1, Var::B2, Var::Lam])
    }

    pub fn all() -> VarSet {
        VarSet::of(&ALL_VARS)
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn with(self, v: Var) -> VarSet {
        VarSet(self.0 | (1 << v.index()))
    }

    pub fn without(self, v: Var) -> VarSet {
        VarSet(self.0 & !(1 << v.index()))
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        ALL_VARS.into_iter().filter(move |&v| self.contains(v))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.iter().map(Var::name).collect();
        write!(f, "[{}]", names.join(","))
    }
}
