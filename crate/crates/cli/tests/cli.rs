use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn segscore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segscore")).args(args).output().unwrap()
}

fn segscore_env(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segscore")).args(args).env("SEGSCORE_THREADS", threads).output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn fixtures(dir: &Path) {
    assert!(segscore(&["fixtures", "--out", s(dir)]).status.success());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fixtures(d);
    let (pred, gt) = (d.join("s1_auto.pgm"), d.join("s1_gt.pgm"));

    assert_eq!(segscore(&["--help"]).status.code(), Some(0));
    assert_eq!(segscore(&["eval", "--pred", s(&pred)]).status.code(), Some(1));
    assert_eq!(segscore(&["eval", "--pred", s(&pred), "--gt", s(&gt), "--metrics", "nope"]).status.code(), Some(1));
    assert_eq!(segscore(&["frobnicate"]).status.code(), Some(1));

    let missing = d.join("missing.pgm");
    assert_eq!(segscore(&["eval", "--pred", s(&missing), "--gt", s(&gt)]).status.code(), Some(2));

    let small = d.join("small.pgm");
    fs::write(&small, b"P5\n2 2\n255\n\x00\x01\x01\x00").unwrap();
    assert_eq!(segscore(&["eval", "--pred", s(&small), "--gt", s(&gt)]).status.code(), Some(3));

    let rgb = d.join("rgb.pgm");
    fs::write(&rgb, b"P6\n1 1\n255\n\x00\x00\x00").unwrap();
    let out = segscore(&["eval", "--pred", s(&rgb), "--gt", s(&gt)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported pixel format"));

    assert_eq!(segscore_env(&["eval", "--pred", s(&pred), "--gt", s(&gt)], "zero").status.code(), Some(1));
}

#[test]
fn dataset_output_independent_of_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fixtures(d);
    assert!(segscore(&["fixtures", "--out", s(d), "--which", "rotations", "--angles", "0,10,20,30,40"])
        .status
        .success());
    let entries: Vec<String> = [0, 10, 20, 30, 40]
        .iter()
        .map(|a| format!(r#"{{"id": "rot{a}", "pred": "rot_{a}_auto.pgm", "gts": ["rot_gt.pgm", "s1_gt.pgm"]}}"#))
        .collect();
    let manifest = d.join("manifest.json");
    fs::write(&manifest, format!("[{}]", entries.join(","))).unwrap();
    let run = |threads: &str, fmt: &str| {
        let out = segscore_env(&["dataset", "--manifest", s(&manifest), "--format", fmt], threads);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    for fmt in ["json", "csv"] {
        assert_eq!(run("1", fmt), run("4", fmt));
    }
    let json: serde_json::Value = serde_json::from_slice(&run("2", "json")).unwrap();
    assert_eq!(json["images"].as_array().unwrap().len(), 5);
    assert!(json["aggregates"]["npr"]["value"].is_number());
    assert_eq!(json["parameters"]["boundary_connectivity"], 4);
}

#[test]
fn sweep_writes_trends() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.json");
    let status =
        segscore(&["sweep", "--which", "translation", "--steps", "0,5,10", "--metrics", "hausd,ji", "--out", s(&out)]);
    assert!(status.status.success());
    let json: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    let h: Vec<f64> =
        json["steps"].as_array().unwrap().iter().map(|s| s["metrics"]["hausd"].as_f64().unwrap()).collect();
    assert_eq!(h, [0.0, 5.0, 10.0]);
    assert_eq!(json["trends"]["ji"], "monotone-down");

    let bad = segscore(&["sweep", "--which", "rotation", "--steps", "30,0,45"]);
    assert_eq!(bad.status.code(), Some(3));
}
