use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", &format!("{name}.json")]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stackcoh"))
        .args(args)
        .env_remove("STACKCOH_ORACLE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_temp(name: &str, text: &str) -> String {
    let p = std::env::temp_dir().join(format!("stackcoh-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn orbicurve_rows() {
    let f = fixture("orbicurve_2_3");
    let o = run(&["cohom", "--input", &f, "--max-degree", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let values: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(values, ["k*", "Z^1", "0", "Z/6", "0", "Z/6"]);
}

#[test]
fn json_records_are_stable_and_parse() {
    let f = fixture("cyclic_tower_2");
    let a = run(&["cohom", "--input", &f, "--max-degree", "3", "--format", "json"]);
    let b = run(&["cohom", "--input", &f, "--max-degree", "3", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 4);
    assert_eq!(recs[1]["resolved"], false);
    assert_eq!(recs[1]["order"], "4");
    assert_eq!(recs[3]["order"], "8");
}

#[test]
fn dihedral_groupcoh_with_oracle() {
    let o = run(&["groupcoh", "--group", "D6", "--coeff", "Z", "--degree", "2", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Z/2\t"));
}

#[test]
fn kummer_with_n_one_is_trivial() {
    let o = run(&["kummer", "--input", &fixture("orbicurve_2_3"), "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn picard_of_orbicurve() {
    let o = run(&["picard", "--input", &fixture("orbicurve_2_3")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("quotient\tZ/6"));
}

#[test]
fn crosscheck_reports_tower_as_flagged() {
    let o = run(&["crosscheck", "--input", &fixture("cyclic_tower_3"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["flagged"], true);
    assert_eq!(v["order_laws_hold"], true);
}

#[test]
fn validation_errors_exit_one_and_list_everything() {
    let f = write_temp("bad.json", r#"{"characteristic": -2, "coarse": {"kind": "projective", "genus": "x"}, "oops": 1}"#);
    let o = run(&["cohom", "--input", &f, "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    for key in ["characteristic", "coarse.genus", "oops", "generic_stabilizer", "gerbe"] {
        assert!(err.contains(key), "{key} missing from {err}");
    }
    assert!(o.stdout.is_empty());
}

#[test]
fn wild_descriptor_exits_one() {
    let f = write_temp(
        "wild.json",
        &std::fs::read_to_string(fixture("orbicurve_2_3"))
            .unwrap()
            .replace("\"characteristic\": 0", "\"characteristic\": 3"),
    );
    assert_eq!(run(&["cohom", "--input", &f, "--max-degree", "1"]).status.code(), Some(1));
}

#[test]
fn budget_exhaustion_exits_two() {
    let o = Command::new(env!("CARGO_BIN_EXE_stackcoh"))
        .args(["groupcoh", "--group", "D10", "--coeff", "Z", "--degree", "3", "--oracle"])
        .env("STACKCOH_ORACLE_BUDGET", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["cohom", "--max-degree", "2"]).status.code(), Some(64));
    assert_eq!(run(&["cohom", "--input", "x", "--max-degree", "2", "--colour"]).status.code(), Some(64));
    assert_eq!(run(&["verify", "everything"]).status.code(), Some(64));
    assert_eq!(run(&[]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_crosschecks_flags_but_passes() {
    let o = run(&["verify", "crosschecks"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("pass\tcrosschecks/dihedral_3"));
    assert!(out.contains("flagged\tcrosschecks/cyclic_tower_2"));
}

#[test]
fn verify_json_lists_checks() {
    let o = run(&["verify", "zlin", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["outcome"] == "pass"));
}
