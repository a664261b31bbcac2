use std::process::{Command, Output};
use std::sync::Arc;

use serde_json::Value;
use unitgroup_cli::{parse_group_spec, GroupSpec, SCHEMA_VERSION};
use unitgroup_core::analysis::construct_z2_witness;
use unitgroup_core::coeff::FunctionField;
use unitgroup_core::groupring::parse_element;

fn unitgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unitgroup"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn run_ok(args: &[&str]) -> Value {
    let out = unitgroup(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report = json_of(&out);
    assert_eq!(report["schema_version"], SCHEMA_VERSION);
    report
}

#[test]
fn hypercentral_k8() {
    let r = run_ok(&["classify-hypercentral", "--group", "K8", "--no-timings"]);
    assert_eq!(r["answer"], "Yes(c)");
    assert_eq!(r["question"], "classify-hypercentral");
    assert!(r.get("timings").is_none());
    let r = run_ok(&["classify-hypercentral", "--group", "S3"]);
    assert_eq!(r["answer"], "No");
    assert!(r["timings"]["total_ms"].is_number());
}

#[test]
fn hyperbolic_with_witness_round_trips() {
    let r = run_ok(&[
        "classify-hyperbolic",
        "--field",
        "GF(2)(t)",
        "--group",
        "C3",
        "--about",
        "V",
        "--witness",
        "--no-timings",
    ]);
    assert_eq!(r["answer"], "not_hyperbolic");
    assert_eq!(r["rule"], "R1");
    let w = &r["witness"];
    let GroupSpec::Finite(c3) = parse_group_spec("C3").unwrap() else {
        unreachable!()
    };
    let c3 = Arc::new(c3);
    let k = FunctionField::new(2).unwrap();
    let u1 = parse_element(c3.clone(), k, w["u1"].as_str().unwrap()).unwrap();
    let u2 = parse_element(c3.clone(), k, w["u2"].as_str().unwrap()).unwrap();
    let expected = construct_z2_witness(
        2,
        c3.clone(),
        c3.index_of(w["g0"].as_str().unwrap()).unwrap(),
    )
    .unwrap();
    assert_eq!(u1, expected.u1);
    assert_eq!(u2, expected.u2);

    let without = run_ok(&[
        "classify-hyperbolic",
        "--field",
        "GF(2)(t)",
        "--group",
        "C3",
        "--about",
        "V",
    ]);
    assert!(without.get("witness").is_none());
}

#[test]
fn hyperbolic_table_through_the_cli() {
    let cases = [
        (["GF(4)", "Q8", "V"], "hyperbolic", "R1"),
        (["GF(2^2)", "K8", "V"], "hyperbolic", "R1"),
        (["algcl(2)", "C3", "V"], "not_hyperbolic", "R1"),
        (
            ["GF(2)(t)", "infinite:coprime-torsion", "V"],
            "not_hyperbolic",
            "R2",
        ),
        (
            ["GF(2)(t)", "infinite:p-torsion", "V"],
            "not_hyperbolic",
            "R3",
        ),
        (["algcl(2)", "Q8", "U"], "not_hyperbolic", "R4"),
    ];
    for ([field, group, about], answer, rule) in cases {
        let r = run_ok(&[
            "classify-hyperbolic",
            "--field",
            field,
            "--group",
            group,
            "--about",
            about,
        ]);
        assert_eq!(r["answer"], answer, "{field} {group} {about}");
        assert_eq!(r["rule"], rule, "{field} {group} {about}");
    }
    let r = run_ok(&[
        "classify-hyperbolic",
        "--field",
        "algcl(2)",
        "--group",
        "infinite:coprime-torsion",
        "--about",
        "V",
    ]);
    assert_eq!(r["answer"], "undetermined");
    assert!(r["rule"].is_null());
    assert!(!r["evidence"]["constraints"].as_array().unwrap().is_empty());
}

#[test]
fn exit_codes() {
    let budget = unitgroup(&[
        "enumerate-units",
        "--field",
        "GF(7)",
        "--group",
        "Q8",
        "--budget",
        "1000",
    ]);
    assert_eq!(budget.status.code(), Some(2));
    assert_eq!(json_of(&budget)["error"]["kind"], "budget_exceeded");

    let search_budget = unitgroup(&[
        "unit-search",
        "--group",
        "C8",
        "--bound",
        "2",
        "--budget",
        "1000",
    ]);
    assert_eq!(search_budget.status.code(), Some(2));

    let parse = unitgroup(&["central-series", "--group", "K8xZ3"]);
    assert_eq!(parse.status.code(), Some(1));
    assert!(json_of(&parse)["error"]["message"]
        .as_str()
        .unwrap()
        .contains("position 3"));

    assert_eq!(
        unitgroup(&[
            "classify-hyperbolic",
            "--field",
            "GF(4)(t)",
            "--group",
            "C3",
            "--about",
            "V"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        unitgroup(&["central-series", "--group", "K8", "--frobnicate"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(unitgroup(&["no-such-verb"]).status.code(), Some(1));
    assert_eq!(unitgroup(&["--help"]).status.code(), Some(0));

    let pre = unitgroup(&[
        "witness-z2",
        "--field",
        "GF(3)(t)",
        "--group",
        "C3",
        "--element",
        "g",
    ]);
    assert_eq!(pre.status.code(), Some(3));
    let pre = unitgroup(&[
        "witness-z2",
        "--field",
        "GF(2)(t)",
        "--group",
        "C3",
        "--element",
        "1",
    ]);
    assert_eq!(pre.status.code(), Some(3));
    let pre = unitgroup(&[
        "classify-hyperbolic",
        "--field",
        "GF(2)",
        "--group",
        "C1",
        "--about",
        "V",
    ]);
    assert_eq!(pre.status.code(), Some(3));
    let pre = unitgroup(&["enumerate-units", "--field", "GF(2)(t)", "--group", "C2"]);
    assert_eq!(pre.status.code(), Some(3));
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "unit-search",
        "--group",
        "C5",
        "--bound",
        "1",
        "--no-timings",
    ];
    let a = unitgroup(&args);
    let b = unitgroup(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = [
        "witness-z2",
        "--field",
        "GF(3)(t)",
        "--group",
        "S3",
        "--no-timings",
    ];
    assert_eq!(unitgroup(&args).stdout, unitgroup(&args).stdout);
}

#[test]
fn unit_search_and_enumeration() {
    let r = run_ok(&["unit-search", "--group", "Q8", "--bound", "1"]);
    assert_eq!(r["answer"]["units"], 8);
    assert_eq!(r["answer"]["trivial_only"], true);
    assert_eq!(r["evidence"]["candidates"], "6561");

    let r = run_ok(&["unit-search", "--group", "C5", "--bound", "1"]);
    let units: Vec<&str> = r["evidence"]["units"]
        .as_array()
        .unwrap()
        .iter()
        .map(|u| u.as_str().unwrap())
        .collect();
    assert!(units.contains(&"-1 + g + g^4"));

    let r = run_ok(&["enumerate-units", "--field", "GF(2)", "--group", "Q8"]);
    assert_eq!(r["answer"]["order"], 128);
    assert_eq!(r["evidence"]["units"].as_array().unwrap().len(), 128);
}

#[test]
fn series_and_dedekind() {
    let r = run_ok(&["central-series", "--group", "D4"]);
    assert_eq!(r["evidence"]["orders"], serde_json::json!([1, 2, 8]));
    let r = run_ok(&["central-series", "--group", "S3"]);
    assert_eq!(r["answer"], "not_nilpotent");
    let r = run_ok(&["verify-dedekind", "--group", "S3"]);
    assert_eq!(r["answer"]["all_hold"], false);
    assert!(r["evidence"]["all_subgroups_normal"]["counterexample"].is_array());
}

#[test]
fn structured_and_table_files() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        format!("@{}", path.display())
    };
    let c4 = write(
        "c4.json",
        r#"{"torsion": "C4", "free_rank": 1, "actions": ["inversion"]}"#,
    );
    assert_eq!(
        run_ok(&["classify-hypercentral", "--group", &c4])["answer"],
        "Yes(b)"
    );

    let c3 = write(
        "c3.json",
        r#"{"torsion": "C3", "free_rank": 1, "actions": ["inversion"]}"#,
    );
    assert_eq!(
        run_ok(&["classify-hypercentral", "--group", &c3])["answer"],
        "No"
    );

    let k8c2 = write(
        "k8c2.json",
        r#"{"torsion": "K8xC2", "free_rank": 1, "actions": ["conj:(i,1)"]}"#,
    );
    assert_eq!(
        run_ok(&["classify-hypercentral", "--group", &k8c2])["answer"],
        "Yes(c)"
    );

    let swap = write(
        "swap.json",
        r#"{"torsion": "K8", "free_rank": 1, "actions": [{"generators": {"i": "j", "j": "i"}}]}"#,
    );
    let r = run_ok(&["classify-hypercentral", "--group", &swap]);
    assert_eq!(r["answer"], "No");
    assert_eq!(
        r["evidence"]["action_classes"],
        serde_json::json!(["not_inner"])
    );

    // structured infinite group in the hyperbolicity rules: torsion C3 is prime to 2
    let r = run_ok(&[
        "classify-hyperbolic",
        "--field",
        "GF(2)(t)",
        "--group",
        &c3,
        "--about",
        "V",
    ]);
    assert_eq!(r["rule"], "R2");

    let table = write(
        "c2.json",
        r#"{"table": [[0, 1], [1, 0]], "labels": ["e", "a"]}"#,
    );
    let r = run_ok(&["unit-search", "--group", &table, "--bound", "2"]);
    assert_eq!(r["evidence"]["units"], serde_json::json!(["a", "1"]));

    let bad = write("bad.json", r#"{"table": [[0, 1], [0, 1]]}"#);
    assert_eq!(
        unitgroup(&["central-series", "--group", &bad])
            .status
            .code(),
        Some(1)
    );
    let wrong_action = write(
        "wrong.json",
        r#"{"torsion": "C3", "free_rank": 1, "actions": [[0, 0, 0]]}"#,
    );
    assert_eq!(
        unitgroup(&["classify-hypercentral", "--group", &wrong_action])
            .status
            .code(),
        Some(1)
    );
    let missing = format!("@{}", dir.path().join("missing.json").display());
    assert_eq!(
        unitgroup(&["central-series", "--group", &missing])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = unitgroup(&[
        "verify-dedekind",
        "--group",
        "K8",
        "--output",
        path.to_str().unwrap(),
        "--no-timings",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["answer"]["all_hold"], true);
    assert!(!out.stderr.is_empty());
}
