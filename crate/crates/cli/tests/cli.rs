use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn gfl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gfl")).args(args).output().expect("run gfl")
}

fn json(args: &[&str]) -> Value {
    let out = gfl(args);
    assert!(out.status.success(), "gfl {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn psi_order_five() {
    let v = json(&["dynamics", "psi-order", "--p", "5"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "dynamics psi-order");
    assert_eq!(v["data"]["order"], 124);
}

#[test]
fn generic_quadrics_match() {
    let v = json(&["hilbert", "generic", "--n", "3", "--degrees", "2,2,2,2", "--dmax", "8", "--trials", "3", "--seed", "42"]);
    assert_eq!(v["verdict"], "MATCH");
    assert_eq!(v["seed"], 42);
    assert_eq!(v["data"]["expected"], serde_json::json!([1, 3, 2, 0, 0, 0, 0, 0, 0]));
}

#[test]
fn exterior_cubic_annihilator() {
    let v = json(&["exterior", "ann", "--n", "9", "--d", "3"]);
    assert_eq!(v["data"]["kernel_dims"][3], 4);
    assert_eq!(v["data"]["primes_agree"], true);
}

#[test]
fn argument_errors_exit_two() {
    assert_eq!(gfl(&["hilbert", "generic", "--n", "3", "--degrees", "2,x"]).status.code(), Some(2));
    assert_eq!(gfl(&["dynamics", "psi-order", "--p", "5", "--bogus"]).status.code(), Some(2));
    assert_eq!(gfl(&["semigroup", "check", "--generators", "4,6"]).status.code(), Some(2));
    assert_eq!(gfl(&["dynamics", "psi-order", "--p", "6"]).status.code(), Some(2));
    assert_eq!(gfl(&["hilbert", "generic", "--n", "3", "--degrees", "2", "--primes", "1000033", "--prime", "1000037"]).status.code(), Some(2));
    assert_eq!(gfl(&["hilbert", "generic", "--n", "3", "--degrees", "2"]).status.code(), Some(2));
}

#[test]
fn deviation_exits_zero() {
    let out = gfl(&["lefschetz", "wlp", "--n", "3", "--recipe", "tndk", "--d", "3", "--k", "3", "--trials", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "FAILS");
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["hilbert", "power", "--n", "3", "--r", "5", "--d", "3", "--seed", "7"];
    let a = gfl(&args);
    let b = gfl(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let single = Command::new(env!("CARGO_BIN_EXE_gfl")).args(args).env("GFL_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, single.stdout);
}

#[test]
fn timing_only_on_request() {
    let args = ["semigroup", "check", "--generators", "2,3"];
    assert!(json(&args).get("wall_time_ms").is_none());
    let mut with = args.to_vec();
    with.push("--timing");
    assert!(json(&with)["wall_time_ms"].is_u64());
}

#[test]
fn csv_tables() {
    let out = gfl(&["semigroup", "check", "--generators", "2,3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "degree,coefficient");
    assert_eq!(lines[1], "0,1");
    assert_eq!(lines.last().unwrap(), &"6,-1");
}

#[test]
fn semigroup_check_two_three() {
    let v = json(&["semigroup", "check", "--generators", "3,2"]);
    assert_eq!(v["data"]["numerator_text"], "1 - t^6");
    assert_eq!(v["data"]["cyclotomic"], true);
    assert_eq!(v["data"]["numerator_shape_ci"], true);
    assert_eq!(v["verdict"], "HOLDS");
}

#[test]
fn phi_two_cycle_at_71() {
    let v = json(&["dynamics", "phi-orbit", "--p", "71", "--poly", "1 + x^63"]);
    assert_eq!(v["data"]["cycle_length"], 2);
    assert_eq!(v["data"]["cycle"][1], "x^23 + x^26 + x^34 + x^39 + x^41 + x^51 + x^70");
}

#[test]
fn point_file_input() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# coordinate points").unwrap();
    writeln!(file, "1 0 0\n0 1 0\n0 0 1").unwrap();
    let path = file.path().to_str().unwrap();
    let v = json(&["points", "defect", "--file", path, "--m", "2", "--dmax", "6"]);
    assert_eq!(v["data"]["defect"], 1);
    let v = json(&["points", "apolarity", "--file", path, "--m", "2", "--d", "2"]);
    assert_eq!(v["data"]["vanishing"], v["data"]["power_ideal"]);
    assert_eq!(gfl(&["points", "hf", "--file", "/nonexistent/points.txt", "--m", "2"]).status.code(), Some(2));
}

#[test]
fn every_group_runs() {
    for args in [
        vec!["waring", "generic-rank", "--k", "4", "--n", "3", "--verify"],
        vec!["waring", "k-rank", "--k", "3", "--d", "2", "--n", "2", "--verify"],
        vec!["waring", "monomial", "--exponents", "1,7", "--k", "4"],
        vec!["waring", "perfect-pairs", "--kmax", "10"],
        vec!["waring", "secant", "--k", "3", "--d", "2", "--n", "2"],
        vec!["waring", "max-rank", "--k", "2", "--d", "2", "--n", "2"],
        vec!["lefschetz", "slp", "--n", "3", "--recipe", "monomial-ci", "--degrees", "2,2,2"],
        vec!["lefschetz", "mu", "--n", "3", "--recipe", "generic", "--degrees", "2,2,2", "--partition", "1,1"],
        vec!["points", "hf", "--s", "4", "--m", "2"],
        vec!["points", "containment", "--s", "3", "--m", "4", "--r", "2", "--dmax", "8"],
        vec!["points", "multigraded", "--s", "2", "--factors", "2,2", "--m", "1", "--multidegree", "1,1"],
        vec!["exterior", "series", "--n", "5", "--d", "2"],
        vec!["exterior", "paths", "--n", "6"],
        vec!["exterior", "two-quadrics", "--n", "5"],
        vec!["dynamics", "phi-orbit", "--p", "5", "--samples", "50"],
        vec!["dynamics", "phi2", "--n", "3"],
        vec!["semigroup", "sweep", "--max-generator", "8", "--max-k", "3"],
        vec!["hilbert", "mu-power", "--n", "3", "--mu", "2,1", "--r", "4"],
        vec!["hilbert", "nicklasson", "--n", "2", "--r", "3", "--d", "1", "--k", "2"],
        vec!["hilbert", "stanley", "--n", "3", "--degrees", "2,2,3,3"],
        vec!["hilbert", "gottlieb", "--n", "3", "--degrees", "2,2,3,3"],
        vec!["hilbert", "tndk", "--n", "3", "--d", "2", "--k", "2"],
    ] {
        let v = json(&args);
        assert_ne!(v["verdict"], "ERROR", "{args:?}");
        let csv = gfl(&[args.as_slice(), &["--format", "csv"]].concat());
        assert!(csv.status.success() && !csv.stdout.is_empty(), "{args:?}");
    }
}
