use std::process::{Command, Output};

fn defset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_defset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_paley() {
    let o = defset(&["construct", "--family", "paley", "--p", "7", "--m", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("elements {1, 2, 4}"));
}

#[test]
fn construct_hkm_json() {
    let o = defset(&["construct", "--family", "hkm:1", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["size"], 4);
    assert_eq!(v["elements"].as_array().unwrap().len(), 4);
}

#[test]
fn construct_segre_classified() {
    let o = defset(&["construct", "--family", "maschietti:segre", "--m", "5", "--classify"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("size 15"));
    assert!(s.contains("(31,15,7) difference set"));
}

#[test]
fn code_hkm_expect_pass() {
    let o = defset(&["code", "--family", "hkm:1", "--expect", "hkm"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("1 + 12z^2 + 8z^3 + 6z^4"));
    assert!(s.contains("expect hkm pass"));
}

#[test]
fn code_json_enumerator_round_trips() {
    let o = defset(&["code", "--family", "maschietti:glynn2", "--m", "7", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["d"], 28);
    let emitted = serde_json::to_string(&v["enumerator"]).unwrap();
    let e = defset_core::code::WeightEnumerator::from_json(&emitted).unwrap();
    assert_eq!(e.to_string(), "1 + 36z^28 + 63z^32 + 28z^36");
    let raw = stdout(&o);
    assert!(raw.contains(&e.to_json()));
}

#[test]
fn code_quadratic_residue() {
    let o = defset(&["code", "--family", "paley", "--p", "3", "--m", "2", "--expect", "qr"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("[4,2,2]"));
    assert!(s.contains("1 + 4z^2 + 4z^4"));
}

#[test]
fn mismatch_exits_two() {
    let o = defset(&["code", "--family", "paley", "--p", "3", "--m", "2", "--expect", "skew"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(defset(&["bogus"]).status.code(), Some(1));
    assert_eq!(defset(&["code", "--family", "nope", "--p", "3"]).status.code(), Some(1));
    assert_eq!(defset(&["code", "--family", "paley"]).status.code(), Some(1));
    assert_eq!(
        defset(&["code", "--family", "paley", "--p", "7", "--expect", "zzz"]).status.code(),
        Some(1)
    );
    assert_eq!(defset(&["--help"]).status.code(), Some(0));
}

#[test]
fn budgets_are_enforced() {
    let o = defset(&["code", "--family", "paley", "--p", "3", "--m", "4", "--max-work", "10"]);
    assert_eq!(o.status.code(), Some(1));
    let o = defset(&["construct", "--family", "paley", "--p", "3", "--m", "5", "--max-field-bits", "4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn walsh_gold_m5() {
    let o = defset(&["walsh", "--func", "1@3", "--m", "5", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "semibent");
    let values = v["values"].as_array().unwrap();
    let count = |x: i64| {
        values
            .iter()
            .find(|e| e["value"] == x)
            .map_or(0, |e| e["count"].as_u64().unwrap())
    };
    assert_eq!(count(0), 16);
    assert_eq!(count(8) + count(-8), 16);
}

#[test]
fn walsh_linear_is_other() {
    let o = defset(&["walsh", "--func", "1@1", "--m", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("class other"));
}

#[test]
fn analyze_hkm_quotient() {
    let o = defset(&["analyze-design", "--family", "hkm:1", "--group", "quotient"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("(13,4,1) difference set"));
}

#[test]
fn export_generator_format() {
    let o = defset(&["export-gen", "--family", "paley", "--p", "7"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "7 1 3\n1 2 4\n");
}

#[test]
fn verify_single_case() {
    let o = defset(&["verify-paper", "--case", "glynn2-m9"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("1 + 9z^112 + 108z^120 + 285z^128 + 108z^136 + 1z^144"));
    assert!(s.contains("1 cases, 0 failed"));
}

#[test]
fn verify_json_is_sorted() {
    let o = defset(&["verify-paper", "--case", "skew", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["case_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(ids.len(), 5);
}

#[test]
fn verify_unknown_case() {
    assert_eq!(defset(&["verify-paper", "--case", "nope"]).status.code(), Some(1));
}
