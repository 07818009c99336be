use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mrs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn mrs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mrs")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_helicoid_point() {
    let spec = fixture("helicoid");
    let o = mrs(&["eval", "--spec", &spec, "--u", "0.3", "--v", "-0.5", "--echo-spec"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let k = v["K_oracle"].as_f64().unwrap();
    assert!((k + 1.0 / 0.75f64.powi(2)).abs() < 1e-10);
    assert!(v["H_oracle"].as_f64().unwrap().abs() < 1e-12);
    assert_eq!(v["structure"]["cy"].as_f64().unwrap(), 1.0);
    assert!(v["tau_oracle"].is_null());
    assert_eq!(v["spec"]["params"]["h"].as_f64(), Some(1.0));
    // identical output on repeat
    let again = mrs(&["eval", "--spec", &spec, "--u", "0.3", "--v", "-0.5", "--echo-spec"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn export_obj_counts() {
    let out = tmp("h.obj");
    let o = mrs(&["export", "--spec", &fixture("helicoid"), "--format", "obj", "--nu", "8", "--nv", "8", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 64);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 98);
}

#[test]
fn export_csv_header_and_rows() {
    let out = tmp("b.csv");
    let o = mrs(&["export", "--spec", &fixture("bscroll"), "--format", "csv", "--nu", "4", "--nv", "3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "u,v,x1,x2,x3,case,K_oracle,H_oracle,K_printed,H_printed,E,F,G,L,M,N");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r.split(',').count() == 16 && r.contains("TL_TimelikeRuling")));
}

#[test]
fn unknown_export_format_is_usage_error() {
    let out = tmp("x.ply");
    let o = mrs(&["export", "--spec", &fixture("helicoid"), "--format", "ply", "--nu", "4", "--nv", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn frames_helicoid() {
    let o = mrs(&["frames", "--spec", &fixture("helicoid"), "--n", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|c| c.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 4);
    for r in rows {
        assert_eq!(r[col("k_g")], 0.0);
        assert_eq!(r[col("delta")], 0.0);
        assert!((r[col("cy")] - 1.0).abs() < 1e-15);
    }
}

#[test]
fn audit_writes_report() {
    let out = tmp("bscroll_audit.json");
    let o = mrs(&["audit", "--spec", &fixture("bscroll"), "--nu", "6", "--nv", "6", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["grid"]["nu"], 6);
    assert_eq!(v["grid"]["skipped"], 0);
    let h = v["formulas"].as_array().unwrap().iter().find(|f| f["name"] == "H").unwrap();
    assert_eq!(h["verdict"], "Matches");
    assert!(!v["notes"].as_array().unwrap().is_empty());
}

#[test]
fn spec_errors_exit_one() {
    let bad = tmp("bad.json");
    std::fs::write(
        &bad,
        r#"{"name":"bad","alpha":["0","0","v*("],"b":["cos(u)","sin(u)","0"],"domain_u":[0,1],"domain_v":[0,1]}"#,
    )
    .unwrap();
    let o = mrs(&["eval", "--spec", bad.to_str().unwrap(), "--u", "0", "--v", "0"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("alpha[2]") && err.contains("position 3"), "{err}");

    let o = mrs(&["eval", "--spec", "/nonexistent.json", "--u", "0", "--v", "0"]);
    assert_eq!(o.status.code(), Some(1));
    let o = mrs(&["audit", "--spec", &fixture("helicoid"), "--nu", "1", "--out", tmp("n.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn non_arc_length_director_rejected_by_frames() {
    let spec = tmp("slow.json");
    std::fs::write(
        &spec,
        r#"{"name":"slow","alpha":["0","0","u"],"b":["cos(2*u)","sin(2*u)","0"],"domain_u":[0,1],"domain_v":[0,1]}"#,
    )
    .unwrap();
    let o = mrs(&["frames", "--spec", spec.to_str().unwrap(), "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotArcLength"));
}
