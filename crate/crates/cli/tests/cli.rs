use std::process::{Command, Output};

use serde_json::Value;

fn k3w(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3w")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(k3w(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(k3w(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(k3w(&["export", "--what", "octads", "--format", "dot", "--out", "/dev/null"]).status.code(), Some(2));
    assert_eq!(k3w(&["--help"]).status.code(), Some(0));
}

#[test]
fn io_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("none");
    let r = k3w(&["verify", "golay", "--report", missing.join("r.json").to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(2));
    let r = k3w(&["verify", "abelian", "--fixture-dir", missing.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(2));
}

#[test]
fn fermat_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let r = k3w(&["verify", "fermat", "--report", path.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "fermat");
    assert!(v["elapsed_ms"].is_u64());
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    for id in ["points=280", "lines=112", "(280_4,112_10)", "fibration 10+81"] {
        assert!(ids.contains(&id), "{id}");
    }
    for c in v["checks"].as_array().unwrap() {
        for key in ["id", "anchor", "status", "expected", "actual", "witness"] {
            assert!(c.get(key).is_some(), "{key}");
        }
        assert_eq!(c["status"], "pass");
    }
}

#[test]
fn stable_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for (p, jobs) in [(&a, "1"), (&b, "3")] {
        let r = k3w(&["verify", "quadric", "--stable", "--jobs", jobs, "--report", p.to_str().unwrap()]);
        assert_eq!(r.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn printed_claims_are_refuted_not_failed() {
    let r = k3w(&["verify", "quadric", "--stable"]);
    assert_eq!(r.status.code(), Some(0));
    let out = stdout(&r);
    assert!(out.lines().any(|l| l.starts_with("REFUTED") && l.ends_with("printed forms meet 4 base points")));
    assert!(!out.lines().any(|l| l.starts_with("FAIL")));
}

#[test]
fn corrupted_fixture_directory_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let left = k3w_core::abelian::LEFT_FIXTURE.replacen("Q2,(10),(6)'", "Q2,(9),(6)'", 1);
    std::fs::write(dir.path().join("four_torsion_left.csv"), left).unwrap();
    std::fs::write(dir.path().join("four_torsion_right.csv"), k3w_core::abelian::RIGHT_FIXTURE).unwrap();
    let r = k3w(&["verify", "abelian", "--fixture-dir", dir.path().to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(1));
    let out = stdout(&r);
    assert!(out.contains("FAIL     tables match fixture"));
    assert!(out.contains(r#""col":"Q1","computed":["(10)"],"fixture":"(9)","row":"Q2""#), "{out}");
}

#[test]
fn iso_writes_a_verified_bijection() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("iso.json");
    let r = k3w(&["iso", "--left", "leech", "--right", "kummer", "--out", path.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0), "{}", stdout(&r));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["isomorphic"], true);
    let map = v["map"].as_array().unwrap();
    assert_eq!(map.len(), 112);
    let mut images: Vec<u64> = map.iter().map(|m| m["right"].as_u64().unwrap()).collect();
    images.sort_unstable();
    assert_eq!(images, (0..112).collect::<Vec<_>>());
    assert!(stdout(&r).contains("PASS     (16)_10 sides correspond"));
}

#[test]
fn exports() {
    let dir = tempfile::tempdir().unwrap();
    let p = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    assert_eq!(k3w(&["export", "--what", "octads", "--format", "csv", "--out", &p("o.csv")]).status.code(), Some(0));
    let octads = std::fs::read_to_string(p("o.csv")).unwrap();
    assert_eq!(octads.lines().count(), 759);
    assert!(octads.lines().all(|l| l.split(',').count() == 8));
    let mut sorted: Vec<&str> = octads.lines().collect();
    sorted.dedup();
    assert_eq!(sorted.len(), 759);
    assert_eq!(k3w(&["export", "--what", "incidence", "--format", "csv", "--out", &p("i.csv")]).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(p("i.csv")).unwrap().lines().count(), 1121);
    assert_eq!(k3w(&["export", "--what", "lines", "--format", "dot", "--out", &p("l.dot")]).status.code(), Some(0));
    let dot = std::fs::read_to_string(p("l.dot")).unwrap();
    assert_eq!(dot.matches(" -- ").count(), 1680);
    assert_eq!(k3w(&["export", "--what", "tables", "--format", "json", "--out", &p("t.json")]).status.code(), Some(0));
    let t: Value = serde_json::from_str(&std::fs::read_to_string(p("t.json")).unwrap()).unwrap();
    assert_eq!(t.as_array().unwrap().len(), 240);
    assert_eq!(k3w(&["export", "--what", "roots", "--format", "json", "--out", &p("r.json")]).status.code(), Some(0));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(p("r.json")).unwrap()).unwrap();
    assert_eq!(r.as_array().unwrap().len(), 112);
}
