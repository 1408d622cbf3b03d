//! End-to-end CLI tests: exit-code contract, JSON round-trips, and the
//! documented command examples.

use std::path::Path;
use std::process::{Command, Output};

fn whk(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whk"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn gallery_emission_and_wha_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["g2", "g3", "g4", "zn(3)", "pair(2)", "dual:g4", "opcop:g4"] {
        let file = dir.path().join("h.json");
        let out = whk(&["gallery", name, "--out", file.to_str().unwrap()], dir.path());
        assert_eq!(code(&out), 0, "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let check = whk(&["check", "wha", "--in", file.to_str().unwrap()], dir.path());
        assert_eq!(code(&check), 0, "{name} failed the suite");
        let text = String::from_utf8_lossy(&check.stdout);
        assert!(text.contains("[PASS] wha.antipode_l"));
    }
}

#[test]
fn emitted_json_is_bit_exact_under_round_trip() {
    // parse ∘ emit is the identity: re-emitting a parsed gallery object
    // reproduces the file byte for byte.
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let out = whk(&["gallery", "g4", "--out", first.to_str().unwrap()], dir.path());
    assert_eq!(code(&out), 0);
    // The dual of the dual equals the original, so emitting dual twice
    // exercises parse+emit with actual arithmetic in between.
    let dual = dir.path().join("dual.json");
    let out = whk(
        &["build", "dual", "--in", first.to_str().unwrap(), "--out", dual.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let double_dual = dir.path().join("ddual.json");
    let out = whk(
        &["build", "dual", "--in", dual.to_str().unwrap(), "--out", double_dual.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&double_dual).unwrap();
    assert_eq!(a, b, "double dual JSON differs from the original");
}

#[test]
fn scalar_strings_stay_exact_over_prime_fields() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("z3.json");
    let out = whk(
        &["gallery", "zn(3)", "--field", "fp:7", "--out", file.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(json["field"]["kind"], "prime");
    assert_eq!(json["field"]["p"], 7);
    let check = whk(&["check", "wha", "--in", file.to_str().unwrap()], dir.path());
    assert_eq!(code(&check), 0);
}

#[test]
fn check_failure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h.json");
    whk(&["gallery", "g2", "--out", file.to_str().unwrap()], dir.path());
    // Break one structure constant.
    let mut json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    json["mult"][0][0][0] = serde_json::json!("5");
    std::fs::write(&file, serde_json::to_string(&json).unwrap()).unwrap();
    let check = whk(&["check", "wha", "--in", file.to_str().unwrap()], dir.path());
    assert_eq!(code(&check), 1);
    let text = String::from_utf8_lossy(&check.stdout);
    assert!(text.contains("[FAIL]"), "{text}");
    assert!(text.contains("witness"), "{text}");
}

#[test]
fn malformed_json_exits_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("broken.json");
    std::fs::write(&file, "{ \"field\": { \"kind\": \"rational\" }, ").unwrap();
    let check = whk(&["check", "wha", "--in", file.to_str().unwrap()], dir.path());
    assert_eq!(code(&check), 2);
    let err = String::from_utf8_lossy(&check.stderr);
    assert!(err.contains("line") && err.contains("column"), "{err}");
}

#[test]
fn unknown_gallery_name_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = whk(&["gallery", "nope"], dir.path());
    assert_eq!(code(&out), 2);
}

#[test]
fn build_smash_reports_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("smash.json");
    let out = whk(
        &["build", "smash", "--datum", "ex3", "--base", "g3", "--out", file.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(json["dim"], 2);
}

#[test]
fn build_double_and_check_it() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("double.json");
    let out = whk(
        &["build", "double", "--base", "g3", "--out", file.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(json["dim"], 2);
    let check = whk(&["check", "wha", "--in", file.to_str().unwrap()], dir.path());
    assert_eq!(code(&check), 0);
}

#[test]
fn induced_module_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("module.json");
    let out = whk(
        &["build", "induce", "--datum", "ex1", "--base", "g3", "--out", file.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let check = whk(&["check", "module", "--in", file.to_str().unwrap()], dir.path());
    assert_eq!(code(&check), 0, "{}", String::from_utf8_lossy(&check.stdout));
}

#[test]
fn integrals_commands() {
    let dir = tempfile::tempdir().unwrap();
    let out = whk(&["integrals", "space", "--base", "g2"], dir.path());
    assert_eq!(code(&out), 0);
    let json: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(json["dim"], 1);
    assert_eq!(json["nondegenerate"][0], true);

    let out = whk(
        &["integrals", "v4", "--datum", "ex1", "--base", "g2"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let json: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(json["dim"], 2);
    assert_eq!(json["verified_by_substitution"], true);

    let out = whk(
        &["integrals", "v0", "--example", "1", "--base", "g2"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);

    let out = whk(
        &["integrals", "normalized", "--datum", "ex1", "--base", "g2"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[PASS] normalized.unique"));
}

#[test]
fn suite_runs_and_orders_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let out = whk(&["suite", "duality", "--base", "g2", "--base", "g3"], dir.path());
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    let ids: Vec<&str> = text.lines().map(|l| l.rsplit(' ').next().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted, "suite output is not sorted by check id");
    // Identical invocation gives identical output.
    let again = whk(&["suite", "duality", "--base", "g2", "--base", "g3"], dir.path());
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn max_dim_guardrail() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h.json");
    whk(&["gallery", "g4", "--out", file.to_str().unwrap()], dir.path());
    let check = whk(
        &["check", "wha", "--in", file.to_str().unwrap(), "--max-dim", "2"],
        dir.path(),
    );
    assert_eq!(code(&check), 2);
}

#[test]
fn coaction_and_action_checks() {
    let dir = tempfile::tempdir().unwrap();
    let h_file = dir.path().join("g2.json");
    whk(&["gallery", "g2", "--out", h_file.to_str().unwrap()], dir.path());

    // The comultiplication of g2 as a left coaction on itself.
    let coaction = serde_json::json!({
        "side": "left",
        "h": {"path": "g2.json"},
        "a": {"path": "g2.json"},
        "rho": [["1","0"],["0","0"],["0","0"],["0","1"]],
    });
    let co_file = dir.path().join("coaction.json");
    std::fs::write(&co_file, serde_json::to_string(&coaction).unwrap()).unwrap();
    let out = whk(&["check", "coaction", "--in", co_file.to_str().unwrap()], dir.path());
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[PASS] coaction.a1"));
    assert!(text.contains("[PASS] nondeg.coaction"));

    // Right multiplication of g2 on itself as a module-coalgebra action.
    let action = serde_json::json!({
        "side": "right",
        "h": {"path": "g2.json"},
        "c": {"path": "g2.json"},
        "act": [[["1","0"],["0","1"]], [["0","1"],["1","0"]]],
    });
    let act_file = dir.path().join("action.json");
    std::fs::write(&act_file, serde_json::to_string(&action).unwrap()).unwrap();
    let out = whk(&["check", "action", "--in", act_file.to_str().unwrap()], dir.path());
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));

    // A broken coaction trips the axioms with exit 1.
    let broken = serde_json::json!({
        "side": "left",
        "h": {"path": "g2.json"},
        "a": {"path": "g2.json"},
        "rho": [["1","0"],["0","1"],["0","0"],["0","1"]],
    });
    std::fs::write(&co_file, serde_json::to_string(&broken).unwrap()).unwrap();
    let out = whk(&["check", "coaction", "--in", co_file.to_str().unwrap()], dir.path());
    assert_eq!(code(&out), 1);
}
