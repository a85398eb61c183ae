//! Exact construction and verification toolkit for the five-parameter
//! Stirling–Whitney–Riordan triangle.

pub mod bfile;
pub mod cf;
pub mod error;
pub mod json;
pub mod linalg;
pub mod paths;
pub mod positivity;
pub mod ring;
pub mod triangle;
pub mod verify;

pub use error::{Result, SwrError};

/// Outcome of a mathematical check: either it held, or a counterexample
/// was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Pass => Verdict::Pass,
            Verdict::Fail(w) => Verdict::Fail(f(w)),
        }
    }
}
