//! JSON and CSV documents: triangles, continued fractions, minor
//! witnesses and root reports.
//!
//! Polynomials are serialized over an explicit list of indeterminates. A
//! triangle's ring is implied by which parameters are `"sym"`; documents
//! whose ring cannot be inferred carry it in a `"vars"` field.

use serde_json::{json, Map, Value};

use crate::cf::JacobiCF;
use crate::error::{Result, SwrError};
use crate::positivity::{MinorWitness, RootBox, RootWitness, StabilityMethod, StabilityReport};
use crate::ring::{rational_from_str, rational_to_string, scalar_from_json, scalar_to_json, Scalar, Var, VarSet};
use crate::triangle::{Binding, Params, Triangle, PARAM_VARS};

pub const TRIANGLE_SCHEMA: &str = "swr.triangle.v1";
pub const CF_SCHEMA: &str = "swr.cf.v1";

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| SwrError::Parse(format!("missing field `{name}`")))
}

fn check_schema(v: &Value, schema: &str) -> Result<()> {
    match v.get("schema").and_then(Value::as_str) {
        Some(s) if s == schema => Ok(()),
        other => Err(SwrError::Parse(format!("expected schema {schema}, found {other:?}"))),
    }
}

pub fn vars_to_json(ring: VarSet) -> Value {
    Value::Array(ring.iter().map(|v| Value::String(v.name().into())).collect())
}

pub fn vars_from_json(v: Option<&Value>) -> Result<VarSet> {
    let Some(v) = v else { return Ok(VarSet::EMPTY) };
    let arr = v.as_array().ok_or_else(|| SwrError::Parse("`vars` must be an array".into()))?;
    arr.iter().try_fold(VarSet::EMPTY, |acc, x| {
        let name = x.as_str().ok_or_else(|| SwrError::Parse("variable names must be strings".into()))?;
        Ok(acc.with(name.parse::<Var>()?))
    })
}

fn scalars_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

fn scalars_from_json(ring: VarSet, v: &Value) -> Result<Vec<Scalar>> {
    v.as_array()
        .ok_or_else(|| SwrError::Parse("expected an array of scalars".into()))?
        .iter()
        .map(|x| scalar_from_json(ring, x))
        .collect()
}

pub fn params_to_json(p: &Params) -> Value {
    let mut m = Map::new();
    for (v, b) in PARAM_VARS.iter().zip(p.bindings()) {
        let val = match b {
            Binding::Value(r) => rational_to_string(&r),
            Binding::Free => "sym".to_string(),
        };
        m.insert(v.name().to_string(), Value::String(val));
    }
    Value::Object(m)
}

pub fn params_from_json(v: &Value) -> Result<Params> {
    let mut bindings = Vec::with_capacity(5);
    for var in PARAM_VARS {
        let s = field(v, var.name())?
            .as_str()
            .ok_or_else(|| SwrError::Parse(format!("parameter `{}` must be a string", var.name())))?;
        bindings.push(if s == "sym" { Binding::Free } else { Binding::Value(rational_from_str(s)?) });
    }
    Ok(Params::new(bindings.try_into().expect("five bindings")))
}

pub fn triangle_to_json(tri: &Triangle) -> Value {
    let ring = if tri.params().is_numeric() { "rational" } else { "symbolic" };
    json!({
        "schema": TRIANGLE_SCHEMA,
        "ring": ring,
        "params": params_to_json(tri.params()),
        "rows": tri.rows().iter().map(|r| scalars_to_json(r)).collect::<Vec<_>>(),
    })
}

pub fn triangle_from_json(v: &Value) -> Result<Triangle> {
    check_schema(v, TRIANGLE_SCHEMA)?;
    let params = params_from_json(field(v, "params")?)?;
    let rows = field(v, "rows")?
        .as_array()
        .ok_or_else(|| SwrError::Parse("`rows` must be an array".into()))?
        .iter()
        .map(|r| scalars_from_json(params.ring(), r))
        .collect::<Result<Vec<_>>>()?;
    for (n, r) in rows.iter().enumerate() {
        if r.len() != n + 1 {
            return Err(SwrError::Parse(format!("row {n} has {} entries", r.len())));
        }
    }
    if rows.is_empty() {
        return Err(SwrError::Parse("triangle has no rows".into()));
    }
    Ok(Triangle::from_rows(params, rows))
}

/// `n,k,value` lines under a header; symbolic values in display form.
pub fn triangle_to_csv(tri: &Triangle) -> String {
    let mut out = String::from("n,k,value\n");
    for (n, row) in tri.rows().iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            let value = match x {
                Scalar::Rat(r) => rational_to_string(r),
                Scalar::Poly(_) => format!("\"{x}\""),
            };
            out.push_str(&format!("{n},{k},{value}\n"));
        }
    }
    out
}

fn common_ring<'a>(items: impl IntoIterator<Item = &'a Scalar>) -> VarSet {
    items.into_iter().fold(VarSet::EMPTY, |acc, x| acc.union(x.ring()))
}

pub fn cf_to_json(cf: &JacobiCF) -> Value {
    let ring = common_ring(cf.s.iter().chain(&cf.r));
    json!({
        "schema": CF_SCHEMA,
        "vars": vars_to_json(ring),
        "s": scalars_to_json(&cf.s),
        "r": scalars_to_json(&cf.r),
    })
}

pub fn cf_from_json(v: &Value) -> Result<JacobiCF> {
    check_schema(v, CF_SCHEMA)?;
    let ring = vars_from_json(v.get("vars"))?;
    Ok(JacobiCF::new(scalars_from_json(ring, field(v, "s")?)?, scalars_from_json(ring, field(v, "r")?)?))
}

pub fn series_to_json(series: &[Scalar]) -> Value {
    scalars_to_json(series)
}

pub fn witness_to_json(w: &MinorWitness) -> Value {
    json!({
        "rows": w.rows,
        "cols": w.cols,
        "minor": scalar_to_json(&w.minor),
        "vars": vars_to_json(w.minor.ring()),
    })
}

pub fn witness_from_json(v: &Value) -> Result<MinorWitness> {
    let idx = |name: &str| -> Result<Vec<usize>> {
        field(v, name)?
            .as_array()
            .ok_or_else(|| SwrError::Parse(format!("`{name}` must be an array")))?
            .iter()
            .map(|x| x.as_u64().map(|i| i as usize).ok_or_else(|| SwrError::Parse("bad index".into())))
            .collect()
    };
    let ring = vars_from_json(v.get("vars"))?;
    Ok(MinorWitness { rows: idx("rows")?, cols: idx("cols")?, minor: scalar_from_json(ring, field(v, "minor")?)? })
}

pub fn root_boxes_to_json(boxes: &[RootBox]) -> Value {
    Value::Array(
        boxes
            .iter()
            .map(|b| {
                let mut o = json!({"lo": rational_to_string(&b.lo), "hi": rational_to_string(&b.hi)});
                if b.multiplicity != 1 {
                    o["multiplicity"] = json!(b.multiplicity);
                }
                o
            })
            .collect(),
    )
}

pub fn root_boxes_from_json(v: &Value) -> Result<Vec<RootBox>> {
    v.as_array()
        .ok_or_else(|| SwrError::Parse("root report must be an array".into()))?
        .iter()
        .map(|b| {
            let s = |name: &str| {
                field(b, name)?.as_str().ok_or_else(|| SwrError::Parse(format!("`{name}` must be a string")))
            };
            let multiplicity = b.get("multiplicity").and_then(Value::as_u64).unwrap_or(1) as usize;
            Ok(RootBox { lo: rational_from_str(s("lo")?)?, hi: rational_from_str(s("hi")?)?, multiplicity })
        })
        .collect()
}

pub fn root_witness_to_json(w: &RootWitness) -> Value {
    json!({
        "degree": w.degree,
        "expected": w.expected,
        "real_roots": w.real_roots,
        "distinct_real_roots": w.distinct_real_roots,
        "inside": w.inside,
        "boxes": root_boxes_to_json(&w.boxes),
    })
}

/// The only document with a floating-point field, named as such.
pub fn stability_report_to_json(r: &StabilityReport) -> Value {
    let method = match r.method {
        StabilityMethod::Vacuous => "vacuous",
        StabilityMethod::Exact => "exact",
        StabilityMethod::Numeric => "numeric",
    };
    json!({
        "stable": r.stable,
        "method": method,
        "max_real_part_numeric": r.max_real_part,
        "zero_roots": r.zero_roots,
    })
}
