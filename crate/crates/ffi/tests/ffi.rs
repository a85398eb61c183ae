use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use serde_json::Value;
use swr_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    swr_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(swr_last_error_message()).to_str().unwrap().to_string()
}

#[test]
fn build_query_and_free() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(swr_triangle_new(c("stirling2").as_ptr(), 6, &mut t), SwrStatus::Ok);
        let mut max = 0;
        assert_eq!(swr_triangle_max_row(t, &mut max), SwrStatus::Ok);
        assert_eq!(max, 6);
        let mut s = ptr::null_mut();
        assert_eq!(swr_triangle_entry(t, 6, 3, &mut s), SwrStatus::Ok);
        assert_eq!(take(s), "90");
        assert_eq!(swr_triangle_entry(t, 7, 0, &mut s), SwrStatus::OutOfRange);
        assert_eq!(swr_triangle_entry(t, 2, 3, &mut s), SwrStatus::OutOfRange);
        swr_triangle_free(t);
    }
}

#[test]
fn json_round_trip_through_handles() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(swr_triangle_new(c("a1=sym,a2=1,b1=1/2,b2=sym,lam=0").as_ptr(), 4, &mut t), SwrStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(swr_triangle_to_json(t, &mut s), SwrStatus::Ok);
        let json = take(s);
        let mut back = ptr::null_mut();
        assert_eq!(swr_triangle_from_json(c(&json).as_ptr(), &mut back), SwrStatus::Ok);
        assert_eq!(swr_triangle_to_json(back, &mut s), SwrStatus::Ok);
        assert_eq!(take(s), json);
        for k in 0..=4 {
            let (mut x, mut y) = (ptr::null_mut(), ptr::null_mut());
            swr_triangle_entry(t, 4, k, &mut x);
            swr_triangle_entry(back, 4, k, &mut y);
            assert_eq!(take(x), take(y));
        }
        swr_triangle_free(t);
        swr_triangle_free(back);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(swr_triangle_new(c("a1=1,a2=2").as_ptr(), 3, &mut t), SwrStatus::Parse);
        assert!(last_error().contains("missing binding"));
        assert!(t.is_null());
        assert_eq!(swr_triangle_new(ptr::null(), 3, &mut t), SwrStatus::NullArgument);
        assert_eq!(swr_triangle_from_json(c("{").as_ptr(), &mut t), SwrStatus::Parse);
        let mut max = 0;
        assert_eq!(swr_triangle_max_row(ptr::null(), &mut max), SwrStatus::NullArgument);
        let bad = [0xffu8, 0];
        assert_eq!(swr_triangle_new(bad.as_ptr().cast(), 1, &mut t), SwrStatus::InvalidUtf8);
        swr_triangle_free(ptr::null_mut());
        swr_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_reports() {
    unsafe {
        let mut r = ptr::null_mut();
        let cfg = c(r#"{"params": "riordan", "rows": 5, "shift": 1}"#);
        assert_eq!(swr_verify(c("hankel").as_ptr(), cfg.as_ptr(), &mut r), SwrStatus::Ok);
        let v: Value = serde_json::from_str(&take(r)).unwrap();
        assert_eq!(v["passed"], true);

        let cfg = c(r#"{"params": "1,-1,0,1,0", "matrix_size": 3, "order": 1}"#);
        assert_eq!(swr_verify(c("tp").as_ptr(), cfg.as_ptr(), &mut r), SwrStatus::Counterexample);
        let v: Value = serde_json::from_str(&take(r)).unwrap();
        assert_eq!(v["passed"], false);
        assert!(v["witness"]["minor"].is_string());

        assert_eq!(swr_verify(c("nope").as_ptr(), ptr::null(), &mut r), SwrStatus::Parse);
        let cfg = c(r#"{"rows": 11, "guard": 10}"#);
        assert_eq!(swr_verify(c("oracle").as_ptr(), cfg.as_ptr(), &mut r), SwrStatus::GuardExceeded);
        let cfg = c(r#"{"symbolic": true}"#);
        assert_eq!(swr_verify(c("roots").as_ptr(), cfg.as_ptr(), &mut r), SwrStatus::Precondition);
    }
}

#[test]
fn errors_are_per_thread() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(swr_triangle_new(c("bogus").as_ptr(), 1, &mut t), SwrStatus::Parse);
        let other = std::thread::spawn(|| swr_last_error_message().is_null()).join().unwrap();
        assert!(other);
        assert!(!swr_last_error_message().is_null());
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/swr.h")).unwrap();
    for f in [
        "swr_last_error_message",
        "swr_version",
        "swr_string_free",
        "swr_triangle_new",
        "swr_triangle_from_json",
        "swr_triangle_free",
        "swr_triangle_max_row",
        "swr_triangle_entry",
        "swr_triangle_to_json",
        "swr_verify",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("typedef struct SwrTriangle SwrTriangle;"));
    let version = unsafe { CStr::from_ptr(swr_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/swr.h");
    let Ok(out) = Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"]).arg(&header).output() else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
