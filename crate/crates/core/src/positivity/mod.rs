//! Positivity checks: total positivity of minors, Stieltjes moment Hankel
//! tests, log-concavity and iterated log-convexity, exact real-root
//! isolation, interlacing and weak Hurwitz stability.

mod column;
mod convolution;
mod lcx;
mod minors;
mod roots;
mod stability;
mod sturm;
mod upoly;

pub use column::{column_zero_real_rooted_check, column_zero_turan_check, column_zero_unipolys};
pub use convolution::{convolution, convolution_sm_check, KnownSm};
pub use lcx::{lcx_operator, log_concavity_check, three_x_lcx_check, LcxWitness};
pub use minors::{sm_check, sm_check_to_order, tp_check, MinorWitness};
pub use roots::{
    check_root_regime, interlacing_check, real_rooted_in_closed_interval_check, real_rooted_in_interval_check,
    root_interval, roots_in_interval_check, row_unipoly, InterlaceFailure, RootWitness,
};
pub use stability::{
    numeric_max_real_part, routh_first_column, stability_check, turan_of, turan_polynomial, StabilityMethod,
    StabilityReport, NUMERIC_TOLERANCE,
};
pub use sturm::{count_roots_in, isolate_roots, real_root_count_with_multiplicity, refine_box, sturm_chain, Bound, RootBox, SturmChain};
pub use upoly::UniPoly;
