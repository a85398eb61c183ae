use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use swr_core::bfile::{compare_with_bfile, oeis_convention, BFile};
use swr_core::cf::{cf_to_series, jacobi_coeffs, jacobi_coeffs_col0, jacobi_coeffs_rows};
use swr_core::json::{cf_to_json, root_boxes_to_json, series_to_json, stability_report_to_json, triangle_to_csv, triangle_to_json};
use swr_core::positivity::{
    check_root_regime, count_roots_in, isolate_roots, refine_box, root_interval, row_unipoly, stability_check,
    turan_polynomial, Bound, RootBox,
};
use swr_core::ring::{rational_from_str, rational_to_string, Rational, Scalar};
use swr_core::triangle::{build_triangle, Binding, ParamSpec};
use swr_core::verify::{run_suite, run_suites, Suite, SuiteConfig, SuiteReport};
use swr_core::{Result, SwrError, Verdict};

/// Generate and verify the five-parameter Stirling-Whitney-Riordan
/// triangle in exact arithmetic.
#[derive(Parser)]
#[command(name = "swr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=N of the triangle.
    Gen {
        /// `stirling2`, `1,0,0,1,0` or `a1=1,a2=0,b1=0,b2=1,lam=0` (values may be `sym`).
        #[arg(long)]
        params: ParamSpec,
        #[arg(long, visible_alias = "n", default_value_t = 5)]
        rows: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a verification suite (or `all`) and print its report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        params: Option<ParamSpec>,
        /// Row bound, Hankel size or degree, depending on the suite.
        #[arg(long, visible_alias = "n")]
        rows: Option<usize>,
        #[arg(long)]
        shift: Option<usize>,
        /// Largest minor order, or iteration depth for lcx3.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        matrix_size: Option<usize>,
        /// Leave all five parameters free.
        #[arg(long)]
        symbolic: bool,
        /// Evaluation point for the egf suite.
        #[arg(long)]
        q: Option<String>,
        /// Allow path enumeration beyond the default length guard.
        #[arg(long)]
        guard_override: Option<usize>,
    },
    /// Compare triangle rows with an OEIS b-file.
    Oeis {
        /// Sequence id; inferred from a `bNNNNNN.txt` file name when omitted.
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long, visible_alias = "n", default_value_t = 12)]
        rows: usize,
    },
    /// Print J-fraction coefficients of the row polynomials.
    Cf {
        #[arg(long)]
        params: ParamSpec,
        #[arg(long, visible_alias = "rows", default_value_t = 6)]
        n: usize,
        /// Coefficients for the first column instead of the rows.
        #[arg(long)]
        col0: bool,
        /// Also expand the fraction into its first n+1 series terms.
        #[arg(long)]
        expand: bool,
    },
    /// Isolate the real roots of T_n(q).
    Roots {
        #[arg(long)]
        params: ParamSpec,
        #[arg(long, visible_alias = "rows")]
        n: usize,
        /// Refine isolating intervals to at most this width.
        #[arg(long, default_value = "1/1024")]
        width: String,
    },
    /// Weak stability of T_(n+1) T_(n-1) - T_n^2.
    Stability {
        #[arg(long)]
        params: ParamSpec,
        #[arg(long, visible_alias = "rows")]
        n: usize,
    },
}

/// Successful run: did the mathematical claim hold?
enum Outcome {
    Verified,
    Counterexample,
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn q_binding(spec: &ParamSpec) -> Result<Option<Rational>> {
    match &spec.q {
        None | Some(Binding::Free) => Ok(None),
        Some(Binding::Value(r)) => Ok(Some(r.clone())),
    }
}

fn bound_json(b: &Bound) -> Value {
    match b {
        Bound::NegInf => json!("-inf"),
        Bound::PosInf => json!("inf"),
        Bound::Open(r) | Bound::Closed(r) => json!(rational_to_string(r)),
    }
}

fn cmd_gen(spec: ParamSpec, rows: usize, format: Format) -> Result<Outcome> {
    let tri = build_triangle(&spec.params, rows);
    match format {
        Format::Json => print(&triangle_to_json(&tri)),
        Format::Csv => print!("{}", triangle_to_csv(&tri)),
    }
    Ok(Outcome::Verified)
}

fn report_outcome(reports: &[SuiteReport]) -> Outcome {
    if reports.iter().all(|r| r.passed) {
        Outcome::Verified
    } else {
        Outcome::Counterexample
    }
}

fn cmd_verify(suite: &str, cfg: SuiteConfig) -> Result<Outcome> {
    if suite == "all" {
        let results = run_suites(&Suite::ALL, &cfg);
        let mut reports = Vec::new();
        let mut first_err = None;
        let mut out = Vec::new();
        for (s, r) in Suite::ALL.iter().zip(results) {
            match r {
                Ok(rep) => {
                    out.push(rep.to_json());
                    reports.push(rep);
                }
                Err(e) => {
                    out.push(json!({"suite": s.name(), "error": e.to_string()}));
                    first_err.get_or_insert(e);
                }
            }
        }
        print(&Value::Array(out));
        return match first_err {
            Some(e) => Err(e),
            None => Ok(report_outcome(&reports)),
        };
    }
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, &cfg)?;
    print(&report.to_json());
    Ok(report_outcome(&[report]))
}

fn infer_id(path: &std::path::Path) -> Result<String> {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("");
    match stem.strip_prefix('b') {
        Some(digits) if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) => Ok(format!("A{digits}")),
        _ => Err(SwrError::Parse(format!("cannot infer a sequence id from `{}`; pass --id", path.display()))),
    }
}

fn cmd_oeis(id: Option<String>, path: PathBuf, rows: usize) -> Result<Outcome> {
    let id = match id {
        Some(id) => id,
        None => infer_id(&path)?,
    };
    let conv = oeis_convention(&id)?;
    let bfile = BFile::read(&id, &path)?;
    match compare_with_bfile(&conv, &bfile, rows)? {
        Verdict::Pass => {
            print(&json!({"id": conv.id, "rows": rows, "passed": true}));
            Ok(Outcome::Verified)
        }
        Verdict::Fail(m) => {
            print(&json!({
                "id": conv.id,
                "rows": rows,
                "passed": false,
                "witness": {"n": m.n, "k": m.k, "expected": m.expected.to_string(), "got": m.got.to_string()},
            }));
            Ok(Outcome::Counterexample)
        }
    }
}

fn cmd_cf(spec: ParamSpec, n: usize, col0: bool, expand: bool) -> Result<Outcome> {
    let horizon = n + 1;
    let cf = match (col0, q_binding(&spec)?) {
        (true, _) => jacobi_coeffs_col0(&spec.params, horizon),
        (false, None) => jacobi_coeffs_rows(&spec.params, horizon),
        (false, Some(q)) => jacobi_coeffs(&spec.params, &Scalar::Rat(q), horizon)?,
    };
    let mut v = cf_to_json(&cf);
    if expand {
        v["series"] = series_to_json(&cf_to_series(&cf, n)?);
    }
    print(&v);
    Ok(Outcome::Verified)
}

fn cmd_roots(spec: ParamSpec, n: usize, width: &str) -> Result<Outcome> {
    let width = rational_from_str(width)?;
    let tri = build_triangle(&spec.params, n);
    let p = row_unipoly(&tri, n)?;
    let boxes: Vec<RootBox> = isolate_roots(&p)?.iter().map(|b| refine_box(&p, b, &width)).collect::<Result<_>>()?;
    let real_roots: usize = boxes.iter().map(|b| b.multiplicity).sum();
    let degree = p.degree().unwrap_or(0);
    let mut v = json!({
        "n": n,
        "polynomial": p.to_string_in("q"),
        "degree": degree,
        "real_roots": real_roots,
        "boxes": root_boxes_to_json(&boxes),
    });
    if check_root_regime(&spec.params, false).is_ok() {
        let closed = check_root_regime(&spec.params, true).is_err();
        let (lo, hi) = root_interval(&spec.params, closed)?;
        v["interval"] = json!({"lo": bound_json(&lo), "hi": bound_json(&hi), "closed": closed});
        v["inside"] = json!(count_roots_in(&p, &lo, &hi)?);
    }
    print(&v);
    Ok(if real_roots == degree { Outcome::Verified } else { Outcome::Counterexample })
}

fn cmd_stability(spec: ParamSpec, n: usize) -> Result<Outcome> {
    let tri = build_triangle(&spec.params, n + 1);
    let p = turan_polynomial(&tri, n)?;
    let report = stability_check(&p)?;
    let mut v = stability_report_to_json(&report);
    v["n"] = json!(n);
    v["polynomial"] = json!(p.to_string_in("q"));
    print(&v);
    Ok(if report.stable { Outcome::Verified } else { Outcome::Counterexample })
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Gen { params, rows, format } => cmd_gen(params, rows, format),
        Command::Verify { suite, params, rows, shift, order, matrix_size, symbolic, q, guard_override } => {
            let cfg = SuiteConfig {
                params: params.map(|p| p.params),
                rows,
                shift,
                order,
                matrix_size,
                symbolic,
                q: q.as_deref().map(rational_from_str).transpose()?,
                guard: guard_override,
            };
            cmd_verify(&suite, cfg)
        }
        Command::Oeis { id, bfile, rows } => cmd_oeis(id, bfile, rows),
        Command::Cf { params, n, col0, expand } => cmd_cf(params, n, col0, expand),
        Command::Roots { params, n, width } => cmd_roots(params, n, &width),
        Command::Stability { params, n } => cmd_stability(params, n),
    }
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("SWR_MAX_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| SwrError::Parse(format!("SWR_MAX_THREADS must be a positive integer, found `{v}`")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| SwrError::Precondition(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match init_threads().and_then(|_| run(cli)) {
        Ok(Outcome::Verified) => ExitCode::SUCCESS,
        Ok(Outcome::Counterexample) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
