use std::process::Command;

fn lab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nullcone-lab")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn show_symplectic_order_prints_block_matrix() {
    let (code, out) = lab(&["show", "symplectic-order", "--t", "2", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("1 3 1 0\n  2 2 0 0\n  0 1 3 1\n  0 0 2 2"), "{out}");
}

#[test]
fn show_gl_order_prints_both_matrices() {
    let (code, out) = lab(&["show", "gl-order", "--m", "5", "--t", "3", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("12 11 10"));
    assert!(out.contains("15 13 10 7 4"));
}

#[test]
fn show_yz_ideal_has_four_generators() {
    let (code, out) = lab(&["show", "ideal", "--shape", "gl", "--m", "2", "--t", "2", "--n", "2", "--ideal", "yz", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["output"]["count"], 4);
    assert_eq!(v["schema"], 1);
}

#[test]
fn named_checks_pass() {
    for args in [
        &["check", "lemma33", "--t-max", "6", "--n-max", "6"][..],
        &["check", "fedder", "--shape", "symplectic", "--t", "1", "--n", "3", "--p", "2"],
        &["check", "decomposition", "--m", "2", "--t", "2", "--n", "2"],
    ] {
        let (code, out) = lab(args);
        assert_eq!(code, 0, "{args:?}: {out}");
        assert!(!out.contains("FAIL"));
    }
}

#[test]
fn failing_check_exits_1() {
    // g lies in m^[2] when y[m,1] z[1,n] repeats the lead of c[1,1]
    let (code, out) = lab(&["check", "compatible", "--m", "1", "--t", "1", "--n", "1"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.starts_with("FAIL compatible"));
}

#[test]
fn usage_and_budget_exit_codes() {
    assert_eq!(lab(&["suite", "no-such-suite"]).0, 2);
    assert_eq!(lab(&["check", "fedder", "--t", "1"]).0, 2);
    assert_eq!(lab(&["check", "fedder", "--t", "1", "--n", "3", "--p", "4"]).0, 2);
    assert_eq!(lab(&["check", "fedder", "--t", "1", "--n", "3", "--budget", "0"]).0, 2);
    assert_eq!(lab(&["suite", "frobenius-desk", "--field", "qq"]).0, 2);
    let (code, out) = lab(&["check", "decomposition", "--m", "2", "--t", "2", "--n", "2", "--budget", "5"]);
    assert_eq!(code, 3);
    assert!(out.contains("SKIP"));
}

#[test]
fn json_output_is_deterministic_and_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let (code, _) = lab(&["suite", "paper-examples", "--seed", "7", "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    let (ja, jb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    assert_eq!(ja, jb);
    let report = nullcone::report::Report::from_json(&ja).unwrap();
    assert_eq!(report.summary.pass + report.summary.fail + report.summary.skipped, report.verdicts.len());
    assert_eq!(report.to_json(), ja.trim_end());
    for v in &report.verdicts {
        assert_eq!(v.elapsed_ms, 0);
    }
}

#[test]
fn suites_pass() {
    for s in ["paper-examples", "frobenius-desk", "gl-grid"] {
        let (code, out) = lab(&["suite", s]);
        assert_eq!(code, 0, "{s}: {out}");
    }
    let (code, out) = lab(&["suite", "symplectic-grid", "--field", "qq"]);
    assert_eq!(code, 0, "{out}");
}
