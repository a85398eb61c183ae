//! Verification suites: one named check per identity or positivity
//! property, run at configurable bounds, with a JSON witness on failure.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cf::{
    cf_to_series, egf_check, first_column_shift_check, hankel_det_direct,
    hankel_det_via_cf, jacobi_coeffs_col0, jacobi_coeffs_rows, uv_decomposition_check,
};
use crate::error::{Result, SwrError};
use crate::json::{root_witness_to_json, stability_report_to_json, vars_to_json, witness_to_json};
use crate::paths::{enumerate_entry_guarded, enumerate_row_polynomial_guarded, DEFAULT_GUARD};
use crate::positivity::{
    check_root_regime, column_zero_real_rooted_check, column_zero_turan_check, convolution_sm_check,
    interlacing_check, log_concavity_check, real_rooted_in_closed_interval_check, real_rooted_in_interval_check,
    row_unipoly, sm_check_to_order, stability_check, three_x_lcx_check, tp_check, turan_polynomial, KnownSm,
};
use crate::ring::{rat, rational_to_string, scalar_to_json, Rational, Scalar, Var};
use crate::triangle::{
    build_triangle, explicit_entry, verify_factorization, verify_production, verify_recurrence,
    verify_row_recurrence, EntryMismatch, Params, SpecializationId,
};
use crate::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Recurrence,
    Explicit,
    Production,
    Factorization,
    Cf,
    Hankel,
    Egf,
    Oracle,
    Roots,
    Interlace,
    LogConcave,
    Turan,
    Tp,
    Sm,
    Lcx3,
    Convolution,
    Col0,
}

impl Suite {
    pub const ALL: [Suite; 17] = [
        Suite::Recurrence,
        Suite::Explicit,
        Suite::Production,
        Suite::Factorization,
        Suite::Cf,
        Suite::Hankel,
        Suite::Egf,
        Suite::Oracle,
        Suite::Roots,
        Suite::Interlace,
        Suite::LogConcave,
        Suite::Turan,
        Suite::Tp,
        Suite::Sm,
        Suite::Lcx3,
        Suite::Convolution,
        Suite::Col0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrence => "recurrence",
            Suite::Explicit => "explicit",
            Suite::Production => "production",
            Suite::Factorization => "factorization",
            Suite::Cf => "cf",
            Suite::Hankel => "hankel",
            Suite::Egf => "egf",
            Suite::Oracle => "oracle",
            Suite::Roots => "roots",
            Suite::Interlace => "interlace",
            Suite::LogConcave => "logconcave",
            Suite::Turan => "turan",
            Suite::Tp => "tp",
            Suite::Sm => "sm",
            Suite::Lcx3 => "lcx3",
            Suite::Convolution => "convolution",
            Suite::Col0 => "col0",
        }
    }

    /// Whether the suite needs rational parameter values.
    pub fn is_numeric(self) -> bool {
        matches!(
            self,
            Suite::Explicit
                | Suite::Egf
                | Suite::Roots
                | Suite::Interlace
                | Suite::LogConcave
                | Suite::Turan
                | Suite::Convolution
                | Suite::Col0
        )
    }

    /// Parameters used when none are given.
    pub fn default_params(self) -> Params {
        if self == Suite::Lcx3 {
            // three nested squarings of the fully symbolic rows are far too large
            SpecializationId::Stirling2.params()
        } else if self.is_numeric() {
            Params::ints([1, 1, 1, 1, 1])
        } else {
            Params::symbolic()
        }
    }

    /// Row bound used when none is given.
    pub fn default_rows(self, symbolic: bool) -> usize {
        match self {
            Suite::Recurrence | Suite::Explicit | Suite::Cf | Suite::Egf | Suite::Col0 => 10,
            Suite::Production | Suite::Factorization => 6,
            Suite::Hankel | Suite::Sm => {
                if symbolic {
                    4
                } else {
                    6
                }
            }
            Suite::Oracle | Suite::Turan => 8,
            Suite::Roots | Suite::Interlace | Suite::LogConcave => 12,
            Suite::Tp => 7,
            Suite::Lcx3 => 9,
            Suite::Convolution => 5,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SwrError;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SwrError::Parse(format!("unknown suite `{s}`")))
    }
}

/// Bounds shared by all suites. Unset fields take suite defaults.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub params: Option<Params>,
    /// Rows, Hankel size, polynomial degree or matrix size, by suite.
    pub rows: Option<usize>,
    /// Hankel shift; both 0 and 1 when unset.
    pub shift: Option<usize>,
    /// Largest minor order (tp, sm) or iteration depth (lcx3).
    pub order: Option<usize>,
    /// Truncation size for `tp`; falls back to `rows`.
    pub matrix_size: Option<usize>,
    /// Run with all five parameters free.
    pub symbolic: bool,
    /// Evaluation point for `egf`.
    pub q: Option<Rational>,
    pub guard: Option<usize>,
}

impl SuiteConfig {
    fn params_for(&self, suite: Suite) -> Params {
        if self.symbolic {
            Params::symbolic()
        } else {
            self.params.clone().unwrap_or_else(|| suite.default_params())
        }
    }

    fn rows_for(&self, suite: Suite, params: &Params) -> usize {
        self.rows.unwrap_or_else(|| suite.default_rows(!params.is_numeric()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub params: String,
    pub passed: bool,
    pub summary: String,
    pub witness: Option<Value>,
}

impl SuiteReport {
    pub fn to_json(&self) -> Value {
        let mut v = json!({"suite": self.suite.name(), "params": self.params, "passed": self.passed, "summary": self.summary});
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

fn numeric_only(suite: Suite, params: &Params) -> Result<()> {
    if params.is_numeric() {
        Ok(())
    } else {
        Err(SwrError::Precondition(format!("suite `{suite}` needs numeric parameters")))
    }
}

fn mismatch_json(m: &EntryMismatch) -> Value {
    json!({
        "n": m.n,
        "k": m.k,
        "expected": scalar_to_json(&m.expected),
        "got": scalar_to_json(&m.got),
        "vars": vars_to_json(m.expected.ring().union(m.got.ring())),
    })
}

fn scalar_pair(n: usize, expected: &Scalar, got: &Scalar) -> Value {
    json!({
        "n": n,
        "expected": scalar_to_json(expected),
        "got": scalar_to_json(got),
        "vars": vars_to_json(expected.ring().union(got.ring())),
    })
}

/// Runs one suite. Precondition and bound problems are errors; a
/// counterexample is a report with `passed = false`.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let params = cfg.params_for(suite);
    let rows = cfg.rows_for(suite, &params);
    if suite.is_numeric() {
        numeric_only(suite, &params)?;
    }
    if rows == 0 && matches!(suite, Suite::Sm | Suite::Convolution | Suite::Tp) {
        return Err(SwrError::Precondition(format!("suite `{suite}` needs a size of at least 1")));
    }
    let (summary, witness) = match suite {
        Suite::Recurrence => {
            let tri = build_triangle(&params, rows);
            match verify_recurrence(&tri) {
                Verdict::Fail(m) => ("entry recurrence fails".into(), Some(mismatch_json(&m))),
                Verdict::Pass => match verify_row_recurrence(&tri)? {
                    Verdict::Fail(n) => ("row polynomial recurrence fails".into(), Some(json!({"n": n}))),
                    Verdict::Pass => (format!("entry and row recurrences hold for n <= {rows}"), None),
                },
            }
        }
        Suite::Explicit => {
            let tri = build_triangle(&params, rows);
            let mut witness = None;
            'outer: for n in 0..=rows {
                for k in 0..=n {
                    let closed = Scalar::Rat(explicit_entry(&params, n, k)?);
                    let got = tri.entry(n, k);
                    if closed != got {
                        witness = Some(mismatch_json(&EntryMismatch { n, k, expected: closed, got }));
                        break 'outer;
                    }
                }
            }
            (format!("explicit formula matches the recurrence for n <= {rows}"), witness)
        }
        Suite::Production => {
            let tri = build_triangle(&params, rows);
            let w = verify_production(&tri).witness().map(mismatch_json);
            (format!("production matrix identity holds through row {rows}"), w)
        }
        Suite::Factorization => {
            let tri = build_triangle(&params, rows);
            let w = verify_factorization(&tri).witness().map(mismatch_json);
            (format!("factorization T = A B holds through row {rows}"), w)
        }
        Suite::Cf => {
            let tri = build_triangle(&params, rows);
            let series = cf_to_series(&jacobi_coeffs_rows(&params, rows + 1), rows)?;
            let mut witness = (0..=rows)
                .find(|&n| series[n] != tri.row_polynomial(n))
                .map(|n| scalar_pair(n, &tri.row_polynomial(n), &series[n]));
            if witness.is_none() {
                if let Verdict::Fail(n) = uv_decomposition_check(&params, rows + 1)? {
                    witness = Some(json!({"decomposition_level": n}));
                }
            }
            (format!("J-fraction expansion equals T_n(q) for n <= {rows}"), witness)
        }
        Suite::Hankel => {
            let shifts = cfg.shift.map_or(vec![0, 1], |s| vec![s]);
            let max_shift = *shifts.iter().max().unwrap_or(&0);
            let tri = build_triangle(&params, 2 * rows + max_shift);
            let seq: Vec<Scalar> = (0..=tri.max_row()).map(|n| tri.row_polynomial(n)).collect();
            let cf = jacobi_coeffs_rows(&params, rows + 1);
            let mut witness = None;
            'outer: for &shift in &shifts {
                for n in 1..=rows {
                    let direct = hankel_det_direct(&seq, n, shift)?;
                    let via = hankel_det_via_cf(&cf, n, shift)?;
                    if direct != via {
                        let mut w = scalar_pair(n, &direct, &via);
                        w["shift"] = json!(shift);
                        witness = Some(w);
                        break 'outer;
                    }
                }
            }
            (format!("Hankel determinants agree with the J-fraction product for n <= {rows}, shifts {shifts:?}"), witness)
        }
        Suite::Egf => {
            let q = cfg.q.clone().unwrap_or_else(|| rat(1));
            let tri = build_triangle(&params, rows);
            let w = egf_check(&tri, &q)?.witness().map(|m| {
                json!({"n": m.n, "expected": rational_to_string(&m.expected), "got": rational_to_string(&m.got)})
            });
            (format!("closed-form EGF matches through t^{rows} at q = {}", rational_to_string(&q)), w)
        }
        Suite::Oracle => {
            let guard = cfg.guard.unwrap_or(DEFAULT_GUARD);
            let tri = build_triangle(&params, rows);
            let q = Scalar::var(tri.q_ring(), Var::Q)?;
            let mut witness = None;
            'outer: for n in 0..=rows {
                for k in 0..=n {
                    let got = enumerate_entry_guarded(&params, n, k, guard)?;
                    if got != tri.entry(n, k) {
                        witness = Some(mismatch_json(&EntryMismatch { n, k, expected: tri.entry(n, k), got }));
                        break 'outer;
                    }
                }
                let got = enumerate_row_polynomial_guarded(&params, n, &q, guard)?;
                if got != tri.row_polynomial(n) {
                    witness = Some(scalar_pair(n, &tri.row_polynomial(n), &got));
                    break;
                }
            }
            (format!("path enumeration matches entries and row polynomials for n <= {rows}"), witness)
        }
        Suite::Roots => {
            check_root_regime(&params, false)?;
            let strict = check_root_regime(&params, true).is_ok();
            let mut witness = None;
            for n in 1..=rows {
                let v = if strict {
                    real_rooted_in_interval_check(&params, n)?
                } else {
                    real_rooted_in_closed_interval_check(&params, n)?
                };
                if let Verdict::Fail(w) = v {
                    let mut j = root_witness_to_json(&w);
                    j["n"] = json!(n);
                    witness = Some(j);
                    break;
                }
            }
            let interval = if strict { "open" } else { "closed" };
            (format!("T_n(q) has n simple real roots in the {interval} root interval for n <= {rows}"), witness)
        }
        Suite::Interlace => {
            let tri = build_triangle(&params, rows);
            let mut witness = None;
            for n in 1..=rows {
                if let Verdict::Fail(f) = interlacing_check(&row_unipoly(&tri, n - 1)?, &row_unipoly(&tri, n)?)? {
                    witness = Some(json!({"n": n, "s_index": f.s_index}));
                    break;
                }
            }
            (format!("roots of T_(n-1) interlace those of T_n for n <= {rows}"), witness)
        }
        Suite::LogConcave => {
            let tri = build_triangle(&params, rows);
            let mut witness = None;
            for n in 0..=rows {
                let coeffs = tri.row(n).iter().map(Scalar::to_rational).collect::<Result<Vec<_>>>()?;
                if let Verdict::Fail(i) = log_concavity_check(&coeffs) {
                    witness = Some(json!({"n": n, "index": i}));
                    break;
                }
            }
            (format!("coefficient rows are log-concave for n <= {rows}"), witness)
        }
        Suite::Turan => {
            let tri = build_triangle(&params, rows + 1);
            let mut witness = None;
            for n in 1..=rows {
                let report = stability_check(&turan_polynomial(&tri, n)?)?;
                if !report.stable {
                    let mut j = stability_report_to_json(&report);
                    j["n"] = json!(n);
                    witness = Some(j);
                    break;
                }
            }
            (format!("T_(n+1) T_(n-1) - T_n^2 is weakly stable for 1 <= n <= {rows}"), witness)
        }
        Suite::Tp => {
            let size = cfg.matrix_size.unwrap_or(rows);
            let order = cfg.order.unwrap_or(3).min(size);
            let tri = build_triangle(&params, size.saturating_sub(1));
            let w = tp_check(&tri.truncation(size), order)?.witness().map(witness_to_json);
            (format!("all minors of order <= {order} of the {size}x{size} truncation are nonnegative"), w)
        }
        Suite::Sm => {
            let order = cfg.order.unwrap_or(rows).min(rows);
            let tri = build_triangle(&params, 2 * rows - 2);
            let seq: Vec<Scalar> = (0..=tri.max_row()).map(|n| tri.row_polynomial(n)).collect();
            let w = sm_check_to_order(&seq, rows, order)?.witness().map(witness_to_json);
            (format!("Hankel matrix of T_0..T_{} has nonnegative minors of order <= {order}", 2 * rows - 2), w)
        }
        Suite::Lcx3 => {
            let depth = cfg.order.unwrap_or(3);
            let tri = build_triangle(&params, rows);
            let seq: Vec<Scalar> = (0..=rows).map(|n| tri.row_polynomial(n)).collect();
            let w = three_x_lcx_check(&seq, depth)?.witness().map(|w| {
                json!({"depth": w.depth, "index": w.index, "value": scalar_to_json(&w.value), "vars": vars_to_json(w.value.ring())})
            });
            (format!("log-convexity operator preserves nonnegativity {depth} times on T_0..T_{rows}"), w)
        }
        Suite::Convolution => {
            let tri = build_triangle(&params, 2 * rows - 2);
            let mut witness = None;
            'outer: for x in KnownSm::ALL {
                for y in KnownSm::ALL {
                    if let Verdict::Fail(w) = convolution_sm_check(&tri, x, y, rows)? {
                        witness = Some(json!({"x": x.to_string(), "y": y.to_string(), "minor": witness_to_json(&w)}));
                        break 'outer;
                    }
                }
            }
            (format!("convolutions of all known SM pairs are SM at m = {rows}"), witness)
        }
        Suite::Col0 => {
            let tri = build_triangle(&params, rows);
            let series = cf_to_series(&jacobi_coeffs_col0(&params, rows + 1), rows)?;
            let mut witness = (0..=rows)
                .find(|&n| series[n] != tri.entry(n, 0))
                .map(|n| scalar_pair(n, &tri.entry(n, 0), &series[n]));
            let shift_rows = rows.min(8);
            if witness.is_none() {
                if let Verdict::Fail(n) = first_column_shift_check(&params.with_free_lam(), shift_rows)? {
                    witness = Some(json!({"shift_identity_row": n}));
                }
            }
            if witness.is_none() {
                if let Verdict::Fail((n, w)) = column_zero_real_rooted_check(&params, shift_rows)? {
                    let mut j = root_witness_to_json(&w);
                    j["n"] = json!(n);
                    witness = Some(j);
                }
            }
            if witness.is_none() {
                if let Verdict::Fail((n, r)) = column_zero_turan_check(&params, shift_rows)? {
                    let mut j = stability_report_to_json(&r);
                    j["n"] = json!(n);
                    witness = Some(j);
                }
            }
            (
                format!(
                    "first-column J-fraction holds for n <= {rows}; shift identity, real roots and Turan stability in lam for n <= {shift_rows}"
                ),
                witness,
            )
        }
    };
    Ok(SuiteReport { suite, params: params.to_string(), passed: witness.is_none(), summary, witness })
}

/// Runs several suites concurrently; reports come back in input order.
pub fn run_suites(suites: &[Suite], cfg: &SuiteConfig) -> Vec<Result<SuiteReport>> {
    suites.par_iter().map(|s| run_suite(*s, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn stirling_suites_pass() {
        let cfg = SuiteConfig { params: Some(SpecializationId::Stirling2.params()), rows: Some(6), ..Default::default() };
        for s in [Suite::Recurrence, Suite::Cf, Suite::Egf, Suite::Oracle, Suite::Production, Suite::LogConcave] {
            let r = run_suite(s, &cfg).unwrap();
            assert!(r.passed, "{s}: {:?}", r.witness);
        }
    }

    #[test]
    fn numeric_suite_rejects_symbolic() {
        let cfg = SuiteConfig { symbolic: true, ..Default::default() };
        assert!(matches!(run_suite(Suite::Roots, &cfg), Err(SwrError::Precondition(_))));
    }

    #[test]
    fn tp_reports_negative_minor() {
        // a2 < 0 breaks total positivity already at order 1
        let cfg = SuiteConfig {
            params: Some(Params::ints([1, -1, 0, 1, 0])),
            matrix_size: Some(3),
            order: Some(1),
            ..Default::default()
        };
        let r = run_suite(Suite::Tp, &cfg).unwrap();
        assert!(!r.passed);
        assert!(r.witness.unwrap().get("minor").is_some());
    }

    #[test]
    fn hankel_riordan_shift_one() {
        let cfg = SuiteConfig {
            params: Some(SpecializationId::RiordanA049020.params()),
            rows: Some(5),
            shift: Some(1),
            ..Default::default()
        };
        assert!(run_suite(Suite::Hankel, &cfg).unwrap().passed);
    }
}
