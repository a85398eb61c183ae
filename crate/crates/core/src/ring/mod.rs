//! Exact scalar arithmetic: big rationals, sparse multivariate polynomials
//! and truncated power series.

mod json;
mod poly;
mod scalar;
mod series;
mod var;

pub use json::{poly_from_json, poly_to_json, rational_from_str, rational_to_string, scalar_from_json, scalar_to_json};
pub use poly::{Monomial, MultiPoly};
pub use scalar::{rat, rat_pow, Scalar};
pub use series::PowerSeries;
pub use var::{Var, VarSet, ALL_VARS, NUM_VARS};

pub type Rational = num_rational::BigRational;
