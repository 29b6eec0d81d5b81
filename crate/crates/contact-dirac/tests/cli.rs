mod common;

use std::process::{Command, Output};

use common::{fixture_path, fixtures_dir};
use contact_dirac::report::identity_names;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contact-dirac"))
        .args(args)
        .output()
        .unwrap()
}

fn run_on(args: &[&str], fixture: &str) -> Output {
    let path = fixture_path(fixture);
    let mut all: Vec<&str> = args.to_vec();
    all.extend(["--fixture", path.to_str().unwrap()]);
    run(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn validate_exit_codes() {
    for name in common::CONTACT_FIXTURES {
        assert_eq!(run_on(&["validate"], name).status.code(), Some(0), "{name}");
    }
    let bad = run_on(&["validate"], "corrupted");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("malformed fixture"));

    let flipped = run_on(&["validate"], "heis3_flipped");
    assert_eq!(flipped.status.code(), Some(1));
    assert!(stdout(&flipped).contains("volume axiom"));

    let jflip = run_on(&["validate"], "heis3_jflip");
    assert_eq!(jflip.status.code(), Some(1));
    assert!(stdout(&jflip).contains("dη-compatibility"));

    let abelian = stdout(&run_on(&["validate"], "abelian"));
    assert!(abelian.contains("dη-compatibility") && abelian.contains("volume axiom"));

    let missing = run(&["validate", "--fixture", "/nonexistent/x.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn jacobi_violation_exits_one() {
    let dir = std::env::temp_dir().join("contact-dirac-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("jacobi.json");
    std::fs::write(
        &path,
        r#"{"dim":3,"c":[{"i":0,"j":1,"k":1,"val":"1"},{"i":1,"j":2,"k":0,"val":"1"}],"orientation":1}"#,
    )
    .unwrap();
    let o = run(&["validate", "--fixture", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn heis3_json_report() {
    let o = run_on(&["report", "--format", "json"], "heis3");
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["fixture"], "heis3");
    assert!(v.get("timing_ms").is_none());
    let ids = v["identities"].as_array().unwrap();
    let names: Vec<&str> = ids.iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert_eq!(names, identity_names());
    let h = ids
        .iter()
        .find(|r| r["name"] == "H_equals_Dirac_webster")
        .unwrap();
    assert_eq!(h["status"], "pass");
    let op = &v["operators"]["H"];
    assert_eq!(op.as_array().unwrap().len(), 2);
    assert_eq!(
        v["spectra"]["c_ieta"]["values"],
        serde_json::json!([-1.0, 1.0])
    );
}

#[test]
fn heis5_text_report_has_det_line() {
    let o = run_on(&["report"], "heis5");
    assert!(o.status.success());
    let text = stdout(&o);
    let line = text.lines().find(|l| l.contains("det_compare1:")).unwrap();
    assert!(line.contains("det_compare1: 6i·η"), "{line}");
    assert!(line.contains("computed: -i·η"), "{line}");
}

#[test]
fn strict_flag_reflects_failures() {
    let o = run_on(&["report", "--strict"], "heis3");
    assert_eq!(o.status.code(), Some(1));
    let o = run_on(&["report", "--strict", "--only", "webster*"], "heis3");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[pass] webster_two_paths"));
}

#[test]
fn reports_are_byte_stable() {
    let a = run_on(&["report", "--format", "json"], "e11");
    let b = run_on(&["report", "--format", "json"], "e11");
    assert_eq!(a.stdout, b.stdout);
    let t = run_on(&["report", "--timing", "--format", "json"], "e11");
    assert!(json(&t)["timing_ms"].is_u64());
}

#[test]
fn report_hash_tracks_fixture_content() {
    let v = json(&run_on(
        &["report", "--format", "json", "--only", "lee_form"],
        "heis3",
    ));
    let w = json(&run_on(
        &["report", "--format", "json", "--only", "lee_form"],
        "su2",
    ));
    let hash = v["fixture_sha256"].as_str().unwrap();
    assert_eq!(hash.len(), 64);
    assert_ne!(hash, w["fixture_sha256"].as_str().unwrap());
}

#[test]
fn spectrum_command() {
    let o = run_on(
        &["spectrum", "--operator", "c_ieta", "--format", "json"],
        "heis3",
    );
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(
        v["eigenvalues"],
        serde_json::json!([[-1.0, 0.0], [1.0, 0.0]])
    );

    let baseline = fixtures_dir().join("baselines/heis3_H.json");
    let o = run_on(
        &[
            "spectrum",
            "--operator",
            "H",
            "--baseline",
            baseline.to_str().unwrap(),
        ],
        "heis3",
    );
    assert!(o.status.success());

    let o = run_on(
        &[
            "spectrum",
            "--operator",
            "H",
            "--baseline",
            baseline.to_str().unwrap(),
        ],
        "su2",
    );
    assert_eq!(o.status.code(), Some(1));

    let bad = run_on(&["spectrum", "--operator", "nope"], "heis3");
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8_lossy(&bad.stderr).into_owned();
    for name in ["H", "dirac_LC", "dirac_webster", "dirac_sympl", "c_ieta"] {
        assert!(err.contains(name), "{err}");
    }
}

#[test]
fn spectrum_json_matches_archived_baselines() {
    for name in ["heis3", "e11"] {
        let o = run_on(&["spectrum", "--operator", "H", "--format", "json"], name);
        let archived =
            std::fs::read_to_string(fixtures_dir().join(format!("baselines/{name}_H.json")))
                .unwrap();
        assert_eq!(stdout(&o), archived, "{name}");
    }
}

#[test]
fn report_with_baseline() {
    let baseline = fixtures_dir().join("baselines/heis3_H.json");
    let o = run_on(
        &[
            "report",
            "--format",
            "json",
            "--only",
            "spectrum_H",
            "--baseline",
            baseline.to_str().unwrap(),
        ],
        "heis3",
    );
    let v = json(&o);
    assert_eq!(v["identities"][0]["status"], "pass");
    assert_eq!(v["identities"][0]["detail"]["baseline"], "compared");
}
