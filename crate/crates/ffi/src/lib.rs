//! C ABI over `swr-core`.
//!
//! Triangles are opaque handles created by `swr_triangle_new` or
//! `swr_triangle_from_json` and released with `swr_triangle_free`. Every
//! fallible call returns an [`SwrStatus`]; on failure a message is stored
//! per thread and can be read with `swr_last_error_message`. Strings handed
//! out by the library are NUL-terminated UTF-8 and must be released with
//! `swr_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde_json::Value;
use swr_core::json::{triangle_from_json, triangle_to_json};
use swr_core::ring::rational_from_str;
use swr_core::triangle::{build_triangle, ParamSpec, Triangle};
use swr_core::verify::{run_suite, Suite, SuiteConfig};
use swr_core::SwrError;

/// Result codes. `SWR_STATUS_COUNTEREXAMPLE` is not an error: the call succeeded
/// and found that the checked property fails.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwrStatus {
    Ok = 0,
    Counterexample = 1,
    NullArgument = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    Precondition = 5,
    InsufficientTerms = 6,
    GuardExceeded = 7,
    Arithmetic = 8,
    Io = 9,
    OutOfRange = 10,
    Internal = 11,
}

/// Opaque triangle handle.
pub struct SwrTriangle(Triangle);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &SwrError) -> SwrStatus {
    match e {
        SwrError::Parse(_) | SwrError::UnknownVariable(_) | SwrError::Json(_) => SwrStatus::Parse,
        SwrError::InsufficientTerms(_) | SwrError::HorizonTooShort { .. } => SwrStatus::InsufficientTerms,
        SwrError::GuardExceeded { .. } => SwrStatus::GuardExceeded,
        SwrError::NotDivisible | SwrError::DivisionByZero => SwrStatus::Arithmetic,
        SwrError::Io(_) => SwrStatus::Io,
        _ => SwrStatus::Precondition,
    }
}

fn fail(status: SwrStatus, msg: impl Into<String>) -> SwrStatus {
    set_error(msg.into());
    status
}

/// Runs `f`, converting errors and panics into status codes.
fn guarded(f: impl FnOnce() -> Result<SwrStatus, SwrStatus>) -> SwrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) | Ok(Err(s)) => s,
        Err(_) => fail(SwrStatus::Internal, "internal panic"),
    }
}

fn core<T>(r: swr_core::Result<T>) -> Result<T, SwrStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, SwrStatus> {
    if s.is_null() {
        return Err(fail(SwrStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(SwrStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), SwrStatus> {
    if out.is_null() {
        return Err(fail(SwrStatus::NullArgument, "output pointer is null"));
    }
    let c = CString::new(s).map_err(|_| fail(SwrStatus::Internal, "string contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn triangle<'a>(t: *const SwrTriangle) -> Result<&'a Triangle, SwrStatus> {
    t.as_ref().map(|t| &t.0).ok_or_else(|| fail(SwrStatus::NullArgument, "triangle handle is null"))
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn swr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn swr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn swr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds rows `0..=max_row` for `params` (e.g. `"stirling2"`,
/// `"1,1,1,1,1"` or `"a1=sym,a2=0,b1=1,b2=1,lam=0"`).
///
/// # Safety
/// `params` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn swr_triangle_new(params: *const c_char, max_row: usize, out: *mut *mut SwrTriangle) -> SwrStatus {
    guarded(|| {
        if out.is_null() {
            return Err(fail(SwrStatus::NullArgument, "output pointer is null"));
        }
        let spec: ParamSpec = core(read_str(params, "params")?.parse())?;
        *out = Box::into_raw(Box::new(SwrTriangle(build_triangle(&spec.params, max_row))));
        Ok(SwrStatus::Ok)
    })
}

/// Parses a triangle document as produced by `swr_triangle_to_json`.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn swr_triangle_from_json(json: *const c_char, out: *mut *mut SwrTriangle) -> SwrStatus {
    guarded(|| {
        if out.is_null() {
            return Err(fail(SwrStatus::NullArgument, "output pointer is null"));
        }
        let v: Value = core(serde_json::from_str(read_str(json, "json")?).map_err(SwrError::from))?;
        *out = Box::into_raw(Box::new(SwrTriangle(core(triangle_from_json(&v))?)));
        Ok(SwrStatus::Ok)
    })
}

/// Releases a triangle. Null is ignored.
///
/// # Safety
/// `t` must be null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn swr_triangle_free(t: *mut SwrTriangle) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Largest stored row index.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn swr_triangle_max_row(t: *const SwrTriangle, out: *mut usize) -> SwrStatus {
    guarded(|| {
        let tri = triangle(t)?;
        if out.is_null() {
            return Err(fail(SwrStatus::NullArgument, "output pointer is null"));
        }
        *out = tri.max_row();
        Ok(SwrStatus::Ok)
    })
}

/// `T(n,k)` as an exact string: `"p/q"` for rationals, a sum of monomials
/// for symbolic entries.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn swr_triangle_entry(t: *const SwrTriangle, n: usize, k: usize, out: *mut *mut c_char) -> SwrStatus {
    guarded(|| {
        let tri = triangle(t)?;
        if n > tri.max_row() || k > n {
            return Err(fail(SwrStatus::OutOfRange, format!("cell ({n},{k}) outside rows 0..={}", tri.max_row())));
        }
        write_string(out, tri.entry(n, k).to_string())?;
        Ok(SwrStatus::Ok)
    })
}

/// The triangle as a JSON document.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn swr_triangle_to_json(t: *const SwrTriangle, out: *mut *mut c_char) -> SwrStatus {
    guarded(|| {
        let tri = triangle(t)?;
        write_string(out, triangle_to_json(tri).to_string())?;
        Ok(SwrStatus::Ok)
    })
}

fn config_from_json(text: &str) -> swr_core::Result<SuiteConfig> {
    let v: Value = serde_json::from_str(text)?;
    let uint = |name: &str| -> swr_core::Result<Option<usize>> {
        match v.get(name) {
            None | Some(Value::Null) => Ok(None),
            Some(x) => x
                .as_u64()
                .map(|n| Some(n as usize))
                .ok_or_else(|| SwrError::Parse(format!("`{name}` must be a nonnegative integer"))),
        }
    };
    let string = |name: &str| -> swr_core::Result<Option<&str>> {
        match v.get(name) {
            None | Some(Value::Null) => Ok(None),
            Some(x) => x.as_str().map(Some).ok_or_else(|| SwrError::Parse(format!("`{name}` must be a string"))),
        }
    };
    Ok(SuiteConfig {
        params: string("params")?.map(|s| s.parse::<ParamSpec>()).transpose()?.map(|p| p.params),
        rows: uint("rows")?,
        shift: uint("shift")?,
        order: uint("order")?,
        matrix_size: uint("matrix_size")?,
        symbolic: v.get("symbolic").and_then(Value::as_bool).unwrap_or(false),
        q: string("q")?.map(rational_from_str).transpose()?,
        guard: uint("guard")?,
    })
}

/// Runs a verification suite. `config` is null or a JSON object with any
/// of `params` (string), `rows`, `shift`, `order`, `matrix_size`, `guard`
/// (integers), `symbolic` (bool) and `q` (rational string). The report
/// JSON is written to `report` for both `SWR_STATUS_OK` and
/// `SWR_STATUS_COUNTEREXAMPLE`.
///
/// # Safety
/// `suite` must be a valid C string, `config` null or a valid C string,
/// and `report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn swr_verify(suite: *const c_char, config: *const c_char, report: *mut *mut c_char) -> SwrStatus {
    guarded(|| {
        let suite: Suite = core(read_str(suite, "suite")?.parse())?;
        let cfg = if config.is_null() { SuiteConfig::default() } else { core(config_from_json(read_str(config, "config")?))? };
        let r = core(run_suite(suite, &cfg))?;
        write_string(report, r.to_json().to_string())?;
        Ok(if r.passed { SwrStatus::Ok } else { SwrStatus::Counterexample })
    })
}
