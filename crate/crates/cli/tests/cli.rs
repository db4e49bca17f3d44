use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_p1cert"));
    c.env_remove("P1CERT_DATA_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/report.schema.json");
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).expect("schema compiles")
}

fn assert_valid(v: &Value) {
    let errs: Vec<String> = schema().iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errs.is_empty(), "schema errors: {errs:#?}");
}

fn interval(v: &Value) -> (f64, f64) {
    let lo: f64 = v[0].as_str().unwrap().parse().unwrap();
    let hi: f64 = v[1].as_str().unwrap().parse().unwrap();
    (lo, hi)
}

#[test]
fn verify_all_json_passes() {
    let o = run(&["verify", "--scope", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_valid(&v);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["result"]["verdict"], true);
    assert_eq!(v["data"]["tables"]["sha256"].as_str().unwrap().len(), 64);
    let names: Vec<&str> = v["result"]["reports"].as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.contains("inner")));
    assert!(names.iter().any(|n| n.contains("omega_4")));
    assert!(v["result"]["region"].as_str().unwrap().contains("37/20"));
}

#[test]
fn omega4_below_three_is_a_precondition_violation() {
    let o = run(&["verify", "--scope", "omega4", "--rho", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_valid(&v);
    assert_eq!(v["verdict"], false);
    assert!(stdout(&run(&["verify", "--scope", "omega4", "--rho", "2"])).contains("precondition violated"));
}

#[test]
fn tampered_partition_names_the_bound() {
    let original: Value =
        serde_json::from_str(include_str!("../../core/data/partitions.json")).unwrap();
    let mut tampered = original.clone();
    for plan in tampered["plans"].as_array_mut().unwrap() {
        if plan["name"] == "residual" {
            plan["points"] = serde_json::json!(["-17/10", "0"]);
        }
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("partitions.json");
    std::fs::write(&path, serde_json::to_string(&tampered).unwrap()).unwrap();

    let o = run(&["--partitions", path.to_str().unwrap(), "verify", "--scope", "inner"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let failed: Vec<&str> = text.lines().filter(|l| l.contains("[FAIL]")).collect();
    assert_eq!(failed.len(), 1, "{text}");
    assert!(failed[0].contains("|R| < 1/8619"));
    assert!(text.contains("failing: inner interval contraction"));
    assert!(text.contains("partitions: ") && !text.contains("partitions: embedded"));

    let o = bin().env("P1CERT_DATA_DIR", dir.path()).args(["verify", "--scope", "inner", "--format", "json"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_valid(&v);
    assert_eq!(v["result"]["failing"][0], "inner interval contraction");
}

#[test]
fn constants_rows_contain_reference_values() {
    let o = run(&["constants", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_valid(&v);
    let rows = v["result"]["constants"].as_array().unwrap();
    for (name, value) in [("M1", 1.13838), ("M6", 0.00231)] {
        let row = rows.iter().find(|r| r["name"] == name).unwrap();
        assert_eq!(row["matches"], true);
        let lo: f64 = row["lo"].as_str().unwrap().parse().unwrap();
        let hi: f64 = row["hi"].as_str().unwrap().parse().unwrap();
        assert!(lo <= value + 1e-5 && value < hi + 1e-5, "{name}: [{lo}, {hi}]");
    }
    let text = stdout(&run(&["constants"]));
    assert!(text.lines().any(|l| l.starts_with("M1 ") && l.trim_end().ends_with("ok")));
}

#[test]
fn constants_shrink_with_rho() {
    let at = |rho: &str| {
        let v = json(&run(&["constants", "--rho", rho, "--format", "json"]));
        v["result"]["constants"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| (r["name"].as_str().unwrap().to_string(), r["hi"].as_str().unwrap().parse::<f64>().unwrap()))
            .collect::<Vec<_>>()
    };
    let three = at("3");
    let four = at("4");
    assert_eq!(three.len(), four.len());
    for ((n3, h3), (n4, h4)) in three.iter().zip(&four) {
        assert_eq!(n3, n4);
        assert!(h4 <= h3, "{n3}: {h4} > {h3}");
    }
    assert_eq!(run(&["constants", "--rho", "5/2"]).status.code(), Some(2));
}

#[test]
fn identities_pass() {
    let o = run(&["identities"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("overall: PASS"));
    assert_valid(&json(&run(&["identities", "--format", "json"])));
}

#[test]
fn eval_at_origin() {
    let o = run(&["eval", "--z", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_valid(&v);
    let r = &v["result"];
    assert_eq!(r["g"]["centre"], "-87/469");
    assert_eq!(r["g"]["radius"], "1/167");
    assert_eq!(r["g_prime"]["centre"], "41/134");
    assert_eq!(r["g_prime"]["radius"], "1/108");
    assert_eq!(r["integrated"]["inside"], true);
    // y(0) = e^{-2 pi i/5} g(0)
    let (re, im) = interval(&r["y"]["centre"]);
    let a = -2.0 * std::f64::consts::PI / 5.0;
    let g = -87.0 / 469.0;
    assert!((re - g * a.cos()).abs() < 1e-15 && (im - g * a.sin()).abs() < 1e-15);
    let text = stdout(&run(&["eval", "--z", "0"]));
    assert!(text.contains("-87/469 +- 1/167"));
}

#[test]
fn eval_dispatches_by_region() {
    let v = json(&run(&["eval", "--z=-3", "--format", "json"]));
    assert_valid(&v);
    assert_eq!(v["result"]["method"], "far_field_omega4");
    assert!(v["result"]["error"].as_f64().unwrap() < 1e-2);

    let v = json(&run(&["eval", "--z", "2,1", "--format", "json"]));
    assert_eq!(v["result"]["method"], "integration");
    assert!(v["result"]["error"].as_f64().unwrap() < 1e-20);

    let o = run(&["eval", "--z", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_polar_matches_cartesian() {
    let a = json(&run(&["eval", "--z", "2<0.5", "--format", "json"]));
    let (x, y) = (2.0 * 0.5f64.cos(), 2.0 * 0.5f64.sin());
    let b = json(&run(&["eval", "--z", &format!("{x:.17},{y:.17}"), "--format", "json"]));
    let (ar, ai) = interval(&a["result"]["y"]);
    let (br, bi) = interval(&b["result"]["y"]);
    assert!((ar - br).abs() < 1e-12 && (ai - bi).abs() < 1e-12);
}

#[test]
fn series_second_coefficient() {
    let o = run(&["series", "--order", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_valid(&v);
    let cs = v["result"]["coeffs"].as_array().unwrap();
    assert_eq!(cs.len(), 9);
    let c = |k: usize| cs[k]["re"].as_str().unwrap().parse::<f64>().unwrap();
    assert!((c(2) - 3.0 * c(0) * c(0)).abs() < 1e-15);
    assert!((c(0) + 87.0 / 469.0).abs() < 1.0 / 167.0);
    let csv = stdout(&run(&["series", "--order", "8", "--format", "csv"]));
    assert!(csv.starts_with("k,re,im\n"));
    assert_eq!(csv.lines().count(), 10);
}

#[test]
fn pole_near_two_point_three_eight() {
    let o = run(&["pole", "--directions", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_valid(&v);
    let d = v["result"]["nearest"]["distance"].as_f64().unwrap();
    assert!((d - 2.38).abs() / 2.38 < 0.05, "{d}");
    assert_eq!(v["result"]["exceeds_certified_radius"], true);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["verify", "--scope", "omegaI", "--format", "json"][..],
        &["constants", "--format", "csv"],
        &["eval", "--z", "1,1"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn bad_flags_and_precision() {
    assert_eq!(run(&["verify", "--scope", "everything"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--unknown"]).status.code(), Some(2));
    assert_eq!(run(&["--precision-bits", "64", "series"]).status.code(), Some(2));
    assert_eq!(run(&["--precision-bits", "160", "series", "--order", "4"]).status.code(), Some(0));
}

#[test]
fn csv_output_has_header() {
    let csv = stdout(&run(&["verify", "--scope", "radius", "--format", "csv"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "report,inequality,lhs_lo,lhs_hi,relation,rhs_lo,rhs_hi,pass");
    assert!(lines.all(|l| l.ends_with(",true")));
}
