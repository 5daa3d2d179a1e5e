//! End-to-end checks of the command-line surface: output determinism,
//! exit codes, the enumeration guard, and the JSON schemas.

use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = springer::cli::run(
        std::iter::once("springer").chain(args.iter().copied()),
        &mut out,
    );
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn map_c31_example() {
    let (code, out) = run(&[
        "map",
        "--type",
        "C",
        "--n",
        "31",
        "--bipartition",
        "1.4.4.5.6.7|1.3",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["phi"]["symbol"]["S"], serde_json::json!([1, 6, 8, 11, 14, 17]));
    assert_eq!(v["phi"]["symbol"]["T"], serde_json::json!([1, 3, 5, 8, 12]));
    assert_eq!(
        v["phi"]["orbit"],
        serde_json::json!([1, 1, 2, 4, 4, 5, 5, 8, 8, 10, 14])
    );
    assert_eq!(v["phi"]["local_system_trivial"], serde_json::json!(false));
}

#[test]
fn map_trivial_c1() {
    let (code, out) = run(&[
        "map", "--type", "C", "--n", "1", "--bipartition", "1|", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["phi"]["orbit"], serde_json::json!([2]));
    assert_eq!(v["phi"]["d"], serde_json::json!(0));
    assert_eq!(v["phi"]["local_system_trivial"], serde_json::json!(true));
}

#[test]
fn map_gl_modular() {
    let (code, out) = run(&[
        "map", "--type", "A", "--mu", "2.3", "--ell", "3", "--modular", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["modular_orbit"], serde_json::json!([1, 2, 2]));
}

#[test]
fn map_errors() {
    // size mismatch against --n
    let (code, _) = run(&["map", "--type", "C", "--n", "5", "--bipartition", "1|"]);
    assert_eq!(code, 2);
    // modular without --ell
    let (code, _) = run(&["map", "--type", "C", "--bipartition", "1|", "--modular"]);
    assert_eq!(code, 2);
    // non-regular label with --modular
    let (code, _) = run(&[
        "map",
        "--type",
        "C",
        "--bipartition",
        "1.1.1|",
        "--ell",
        "3",
        "--modular",
    ]);
    assert_eq!(code, 2);
    // degenerate type D label without a sign
    let (code, _) = run(&["map", "--type", "D", "--bipartition", "1|1"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["map", "--type", "D", "--bipartition", "1|1", "--sign", "+"]);
    assert_eq!(code, 0);
}

#[test]
fn table_shapes() {
    let (code, out) = run(&["table", "--type", "C", "--n", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let orbits: Vec<&str> = rows.iter().map(|r| r["orbit"].as_str().unwrap()).collect();
    assert!(orbits.contains(&"2") && orbits.contains(&"1.1"));

    let (code, out) = run(&["table", "--type", "D", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let signed = rows
        .iter()
        .filter(|r| r["label"].as_str().unwrap().contains(':'))
        .count();
    assert_eq!(signed, 2);

    // rejected edge: n = 0
    let (code, _) = run(&["table", "--type", "C", "--n", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn deterministic_output() {
    for format in ["json", "tsv"] {
        let args = ["table", "--type", "B", "--n", "3", "--ell", "3", "--format", format];
        let (code_a, out_a) = run(&args);
        let (code_b, out_b) = run(&args);
        assert_eq!(code_a, 0);
        assert_eq!(code_b, 0);
        assert_eq!(out_a, out_b, "byte-identical {format} output");
        assert!(!out_a.is_empty());
    }
}

#[test]
fn quotient_matches_oracle() {
    let (code, out) = run(&[
        "quotient",
        "--type",
        "B",
        "--lambda",
        "1.2.2.3.4.4.6.6.7.8.8",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["quotient"]["first"], serde_json::json!([2, 3, 3, 3]));
    assert_eq!(v["quotient"]["second"], serde_json::json!([2, 2, 2, 3, 5]));
    assert_eq!(v["oracle_agrees"], serde_json::json!(true));

    // not an orbit partition for the declared type
    let (code, _) = run(&["quotient", "--type", "C", "--lambda", "1.2"]);
    assert_eq!(code, 2);
}

#[test]
fn straighten_walkthrough() {
    let (code, out) = run(&[
        "straighten",
        "--type",
        "C",
        "--s-row",
        "1.6.8.11.14.17",
        "--t-row",
        "1.3.5.8.12",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), 2);
    assert_eq!(
        v["steps"][0]["swapped"],
        serde_json::json!([[6, 3], [8, 5], [11, 8], [14, 12]])
    );
    assert_eq!(v["distinguished"]["S"], serde_json::json!([1, 3, 6, 8, 12, 17]));
    assert_eq!(
        v["orbit"],
        serde_json::json!([1, 1, 2, 4, 4, 5, 5, 8, 8, 10, 14])
    );
}

#[test]
fn verify_exit_codes() {
    let (code, out) = run(&[
        "verify", "--prop", "round-trip", "--type", "D", "--max-n", "3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS"));

    let (code, _) = run(&["verify", "--prop", "no-such-property"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_all_small() {
    let (code, out) = run(&["verify", "--prop", "all", "--max-n", "2", "--format", "tsv"]);
    assert_eq!(code, 0);
    // one line per report plus the header
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines.len() > 10);
    assert!(lines[1..].iter().all(|l| l.contains("\ttrue\t")));
}

#[test]
fn basic_set_files() {
    let dir = std::env::temp_dir().join(format!("springer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let matrix = dir.join("matrix.json");
    let order = dir.join("order.json");
    std::fs::write(
        &matrix,
        r#"{"ordinary":["E1","E2"],"modular":["F"],"entries":[[1],[1]]}"#,
    )
    .unwrap();
    std::fs::write(&order, r#"{"pairs":[["E1","E2"]]}"#).unwrap();
    let (code, out) = run(&[
        "basic-set",
        "--matrix",
        matrix.to_str().unwrap(),
        "--order",
        order.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["beta"], serde_json::json!([["F", "E2"]]));

    // entry 2: no datum, still exit 0 with the explanatory message
    std::fs::write(
        &matrix,
        r#"{"ordinary":["E"],"modular":["F"],"entries":[[2]]}"#,
    )
    .unwrap();
    std::fs::write(&order, r#"{"pairs":[]}"#).unwrap();
    let (code, out) = run(&[
        "basic-set",
        "--matrix",
        matrix.to_str().unwrap(),
        "--order",
        order.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("no basic set datum exists"));

    // malformed JSON is a usage error
    std::fs::write(&matrix, "{not json").unwrap();
    let (code, _) = run(&[
        "basic-set",
        "--matrix",
        matrix.to_str().unwrap(),
        "--order",
        order.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn enumeration_guard_and_env_override() {
    // beyond the default guard: usage error (separate process so the
    // environment stays isolated)
    let exe = env!("CARGO_BIN_EXE_springer");
    let output = Command::new(exe)
        .args(["table", "--type", "C", "--n", "13"])
        .env_remove("SPRINGER_MAX_N")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("SPRINGER_MAX_N"), "stderr: {stderr}");

    // raising the guard admits the same rank (use a small value to stay fast)
    let output = Command::new(exe)
        .args(["verify", "--prop", "quotient-oracle-vs-explicit", "--type", "C", "--max-n", "7"])
        .env("SPRINGER_MAX_N", "7")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));

    // and the same invocation without the override is rejected... only when
    // above the default; 7 is within the default guard of 12, so check 13
    let output = Command::new(exe)
        .args(["verify", "--prop", "round-trip", "--type", "C", "--max-n", "13"])
        .env_remove("SPRINGER_MAX_N")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn pretty_symbol_layout_is_two_rows() {
    let (code, out) = run(&["map", "--type", "C", "--bipartition", "2.2.3.3.4|1.1.3.4.5"]);
    assert_eq!(code, 0);
    assert!(out.contains("(0 4 6 9 11 14)\n(2 4 8 11 14)"));
}
