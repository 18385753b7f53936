use std::path::PathBuf;
use std::process::Command;

use cli_verify::commands::analyze_text;

fn brloci() -> Command {
    Command::new(env!("CARGO_BIN_EXE_brloci"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("brloci-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn recipe_file(args: &[&str], name: &str) -> PathBuf {
    let out = brloci().arg("recipe").args(args).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let path = tmp(name);
    std::fs::write(&path, out.stdout).unwrap();
    path
}

fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../schema/report.schema.json");
    jsonschema::JSONSchema::compile(&serde_json::from_str(text).unwrap()).unwrap()
}

#[test]
fn analyze_writes_a_schema_valid_report() {
    let inst = recipe_file(&["cotangent", "--n", "3", "--twist", "3", "--seed", "7"], "cot.inst");
    let json = tmp("cot.json");
    let out = brloci().arg("analyze").arg(&inst).arg("--json").arg(&json).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert!(schema().is_valid(&report));
    assert_eq!(report["computed"]["j"]["degree"], 5);
    assert_eq!(report["verdict"], "PASS");
    assert!(report["diff"].as_array().unwrap().iter().all(|c| !c["anchor"].as_str().unwrap().is_empty()));
}

#[test]
fn reruns_are_byte_identical_apart_from_timing() {
    let inst = recipe_file(&["mk", "--n", "3", "--k", "2", "--seed", "3"], "mk.inst");
    let text = std::fs::read_to_string(&inst).unwrap();
    let a = analyze_text(&text, None).unwrap().to_stable_json().unwrap();
    let b = analyze_text(&text, None).unwrap().to_stable_json().unwrap();
    assert_eq!(a, b);
    let again = recipe_file(&["mk", "--n", "3", "--k", "2", "--seed", "3"], "mk2.inst");
    assert_eq!(std::fs::read(&inst).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn battery_exits_zero_on_a_healthy_build() {
    let json = tmp("battery.jsonl");
    let out = brloci().args(["verify", "--battery", "n<=3,r<=3,t<r", "--seeds", "2", "--json"]).arg(&json).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&json).unwrap();
    let s = schema();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    for l in lines {
        assert!(s.is_valid(&serde_json::from_str(l).unwrap()));
    }
}

#[test]
fn parse_errors_exit_nonzero_with_a_line_number() {
    let path = tmp("broken.inst");
    std::fs::write(&path, "[ring]\np=32003\nvars=x0,x1,x2\n[F]\ntwists=-1,-1,-1\n[G]\ntwists=0\n[phi]\nx0; x1; )\n").unwrap();
    let out = brloci().arg("analyze").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 9"));
}

#[test]
fn failing_claim_gives_exit_one() {
    // The null correlation section vanishes nowhere, so its degeneracy ideal has the
    // wrong codimension and the instance is rejected.
    let inst = recipe_file(&["null-correlation", "--n", "3", "--degrees", "1,1,1,1"], "nc.inst");
    let out = brloci().arg("verify").arg(&inst).output().unwrap();
    assert_ne!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("codim I(psi)"));
}
