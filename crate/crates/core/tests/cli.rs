use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use swr_core::json::triangle_from_json;
use swr_core::ring::Scalar;

fn swr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swr")).args(args).output().expect("run swr")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/oeis").join(name)
}

#[test]
fn gen_csv_lists_every_cell() {
    let out = swr(&["gen", "--params", "stirling2", "--rows", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k,value");
    assert_eq!(lines.len(), 1 + 10);
    assert!(lines.contains(&"3,2,3"));
}

#[test]
fn gen_json_round_trips() {
    let out = swr(&["gen", "--params", "1,1,1,1,1", "--rows", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let tri = triangle_from_json(&json(&out)).unwrap();
    assert_eq!(tri.max_row(), 6);
    // T(1,0) = a2 + lam (b1 + b2)
    assert_eq!(tri.entry(1, 0), Scalar::int(3));
    let sym = swr(&["gen", "--params", "a1=sym,a2=sym,b1=sym,b2=sym,lam=sym", "--rows", "3"]);
    assert_eq!(json(&sym)["ring"], "symbolic");
    let back = triangle_from_json(&json(&sym)).unwrap();
    assert_eq!(back.row(3).len(), 4);
}

#[test]
fn verify_exit_codes() {
    let pass = swr(&["verify", "--suite", "hankel", "--params", "riordan", "--rows", "5", "--shift", "1"]);
    assert_eq!(pass.status.code(), Some(0), "{}", stderr(&pass));
    assert_eq!(json(&pass)["passed"], true);

    let fail = swr(&["verify", "--suite", "tp", "--params", "1,-1,0,1,0", "--matrix-size", "3", "--order", "1"]);
    assert_eq!(fail.status.code(), Some(1), "{}", stderr(&fail));
    let report = json(&fail);
    assert_eq!(report["passed"], false);
    assert!(report["witness"].is_object());

    let bogus = swr(&["verify", "--suite", "nosuch"]);
    assert_eq!(bogus.status.code(), Some(2));
    assert!(stderr(&bogus).starts_with("error:"));

    let symbolic_roots = swr(&["verify", "--suite", "roots", "--symbolic"]);
    assert_eq!(symbolic_roots.status.code(), Some(2));
}

#[test]
fn oeis_fixtures_match() {
    for file in ["b049020.txt", "b008279.txt"] {
        let path = fixture(file);
        let out = swr(&["oeis", "--bfile", path.to_str().unwrap(), "--rows", "12"]);
        assert_eq!(out.status.code(), Some(0), "{file}: {}", stderr(&out));
        assert_eq!(json(&out)["passed"], true);
    }
}

#[test]
fn oeis_rejects_short_and_garbled_files() {
    let dir = tempfile::tempdir().unwrap();
    let full = std::fs::read_to_string(fixture("b049020.txt")).unwrap();
    let short = dir.path().join("b049020.txt");
    std::fs::write(&short, full.lines().take(10).collect::<Vec<_>>().join("\n")).unwrap();
    let out = swr(&["oeis", "--bfile", short.to_str().unwrap(), "--rows", "12"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("insufficient terms"), "{}", stderr(&out));

    let garbled = dir.path().join("garbled.txt");
    std::fs::write(&garbled, "0 1\n1 one\n").unwrap();
    let out = swr(&["oeis", "--id", "A049020", "--bfile", garbled.to_str().unwrap(), "--rows", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let unnamed = swr(&["oeis", "--bfile", garbled.to_str().unwrap()]);
    assert_eq!(unnamed.status.code(), Some(2));
}

#[test]
fn roots_and_stability() {
    let out = swr(&["roots", "--params", "1,1,1,1,1", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["real_roots"], 5);
    assert_eq!(v["inside"], 5);
    assert_eq!(v["boxes"].as_array().unwrap().len(), 5);

    let out = swr(&["stability", "--params", "stirling2", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(json(&out)["stable"], true);
}

#[test]
fn cf_prints_bell_coefficients() {
    let out = swr(&["cf", "--params", "a1=1,a2=0,b1=0,b2=1,lam=0,q=1", "--n", "4", "--expand"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    let series: Vec<String> = v["series"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
    assert_eq!(series, ["1", "1", "2", "5", "15"]);
}
