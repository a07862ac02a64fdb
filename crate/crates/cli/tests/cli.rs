use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lcdforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcdforge"))
        .args(args)
        .env("RUST_LOG", "warn")
        .output()
        .unwrap()
}

fn stdout_json(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.lines().last().unwrap_or("")).unwrap()
}

fn run_p7(dir: &Path) {
    let out = lcdforge(&["--json", "campaign", "--p", "7", "--f", "0", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn no_arguments_prints_usage() {
    let out = lcdforge(&[]);
    assert_eq!(out.status.code(), Some(2));
    let all = format!("{}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr));
    assert!(all.contains("Usage"));
}

#[test]
fn factor_p7() {
    let out = lcdforge(&["factor", "--p", "7"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "(x-1)(x^3+x+1)(x^3+x^2+1)");

    let out = lcdforge(&["--json", "factor", "--p", "17"]);
    let v = stdout_json(&out);
    assert_eq!((v["s"].as_u64(), v["t"].as_u64()), (Some(2), Some(0)));
}

#[test]
fn usage_errors_exit_2_with_json_line() {
    for args in [
        &["factor", "--p", "9"][..],
        &["campaign", "--p", "11", "--f", "2", "--out", "/tmp/unused"],
        &["campaign", "--p", "7", "--f", "9", "--out", "/tmp/unused"],
        &["analyze", "/nonexistent/code.txt"],
    ] {
        let out = lcdforge(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        if args[0] != "campaign" || args.contains(&"7") {
            let v: Value = serde_json::from_str(err.lines().last().unwrap()).unwrap();
            assert_eq!(v["error"], "usage");
        }
    }
}

#[test]
fn malformed_code_files_are_rejected() {
    let tmp = tempfile::tempdir().unwrap();
    for (name, text) in [("short", "2 3\n101\n"), ("badchar", "1 3\n1x1\n"), ("len", "1 3\n1011\n")] {
        let path = tmp.path().join(name);
        fs::write(&path, text).unwrap();
        let out = lcdforge(&["analyze", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{name}");
    }
}

#[test]
fn campaign_files_round_trip_through_analyze() {
    let tmp = tempfile::tempdir().unwrap();
    run_p7(tmp.path());
    let report: Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("p7-f0/report.json")).unwrap()).unwrap();
    let codes = report["stages"][0]["codes"].as_array().unwrap();
    assert_eq!(codes.len(), 3);
    for c in codes {
        let file = tmp.path().join("p7-f0").join(c["file"].as_str().unwrap());
        let out = lcdforge(&["--json", "analyze", file.to_str().unwrap()]);
        assert!(out.status.success());
        let v = stdout_json(&out);
        assert_eq!(v["d"], 12);
        assert_eq!(v["hull_dim"], 0);
        assert_eq!(v["weight_enumerator"], c["weight_enumerator"]);
        assert_eq!(v["aut_order"].as_str().unwrap(), c["aut_order"].to_string());
    }
}

#[test]
fn decompose_and_equiv() {
    let tmp = tempfile::tempdir().unwrap();
    run_p7(tmp.path());
    let dir = tmp.path().join("p7-f0");
    let a = dir.join("p7-f0-01.txt");
    let b = dir.join("p7-f0-02.txt");

    let out = lcdforge(&["--json", "decompose", a.to_str().unwrap(), "--sigma", "7,4,0"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["decomposition"]["k_pi"], 0);
    assert_eq!(v["decomposition"]["k_j"], serde_json::json!([1, 1]));
    assert_eq!(v["lcd"]["is_lcd"], true);

    // The same automorphism written as explicit cycles.
    let cycles = "(1 2 3 4 5 6 7)(8 9 10 11 12 13 14)(15 16 17 18 19 20 21)(22 23 24 25 26 27 28)";
    let out = lcdforge(&["--json", "decompose", a.to_str().unwrap(), "--perm", cycles]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["decomposition"]["k_j"], serde_json::json!([1, 1]));

    let out = lcdforge(&["decompose", a.to_str().unwrap(), "--sigma", "5,2,0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = lcdforge(&["--json", "equiv", a.to_str().unwrap(), a.to_str().unwrap()]);
    assert_eq!(stdout_json(&out)["equivalent"], true);
    let out = lcdforge(&["--json", "equiv", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(stdout_json(&out)["equivalent"], false);
}

#[test]
fn output_directory_from_environment() {
    let tmp = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_lcdforge"))
        .args(["campaign", "--p", "17"])
        .env("LCDFORGE_OUT", tmp.path())
        .env("RUST_LOG", "warn")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(tmp.path().join("p17/report.json").exists());
}
