//! End-to-end tests that drive the compiled `hesspatch` binary: exit codes,
//! report shapes, golden-file agreement (parsed polynomials), and
//! byte-identical reruns.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

use hesspatch::charts::w0_ring;
use hesspatch::{parse_poly, CoeffDomain, Polynomial, Ring};

const BIN: &str = env!("CARGO_BIN_EXE_hesspatch");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .output()
        .expect("the binary should run")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn json_ok(args: &[&str]) -> Value {
    let mut with_json: Vec<&str> = args.to_vec();
    with_json.push("--json");
    serde_json::from_str(&stdout_ok(&with_json)).expect("valid JSON report")
}

fn golden(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("read {}: {e}", path.display()));
    serde_json::from_str(&text).expect("golden file is JSON")
}

fn parse_list(ring: &Ring, list: &Value) -> Vec<Polynomial> {
    list.as_array()
        .expect("array of polynomial strings")
        .iter()
        .map(|v| parse_poly(ring, v.as_str().expect("string entry")).expect("parses"))
        .collect()
}

fn temp_file(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("hesspatch-cli-{}-{name}", std::process::id()))
}

// --- golden files ---------------------------------------------------------

const GOLDEN_CASES: [(&str, usize, &str); 3] = [
    ("n4-h3344", 4, "3,3,4,4"),
    ("n5-h23455", 5, "2,3,4,5,5"),
    ("n5-h34455", 5, "3,4,4,5,5"),
];

#[test]
fn gens_matches_golden_as_parsed_polynomials() {
    for (tag, n, h) in GOLDEN_CASES {
        let ring = w0_ring(n, CoeffDomain::Rational).unwrap();
        let actual = json_ok(&["gens", "--n", &n.to_string(), "--h", h]);
        let expected = golden(&format!("gens-{tag}.json"));
        assert_eq!(actual["n"], expected["n"]);
        assert_eq!(actual["h"], expected["h"]);
        assert_eq!(actual["positions"], expected["positions"]);
        assert_eq!(
            parse_list(&ring, &actual["generators"]),
            parse_list(&ring, &expected["generators"]),
            "generators differ for {tag}"
        );
    }
}

#[test]
fn gb_matches_golden_as_parsed_polynomials() {
    for (tag, n, h) in GOLDEN_CASES {
        let ring = w0_ring(n, CoeffDomain::Rational).unwrap();
        let actual = json_ok(&["gb", "--n", &n.to_string(), "--h", h]);
        let expected = golden(&format!("gb-{tag}.json"));
        for key in ["dimension", "squarefree", "ideal_of_indeterminates", "checks"] {
            assert_eq!(actual[key], expected[key], "{key} differs for {tag}");
        }
        assert_eq!(
            parse_list(&ring, &actual["reduced_groebner_basis"]),
            parse_list(&ring, &expected["reduced_groebner_basis"]),
            "reduced basis differs for {tag}"
        );
        assert_eq!(
            parse_list(&ring, &actual["initial_ideal"]),
            parse_list(&ring, &expected["initial_ideal"]),
            "initial ideal differs for {tag}"
        );
    }
}

#[test]
fn gvd_cert_matches_golden_as_parsed_polynomials() {
    for (tag, n, h) in GOLDEN_CASES {
        // Witnesses from relabeled lower levels use variables that all exist
        // in the size-n chart ring, so one ring parses every step.
        let ring = w0_ring(n, CoeffDomain::Rational).unwrap();
        let actual = json_ok(&["gvd-cert", "--n", &n.to_string(), "--h", h]);
        let expected = golden(&format!("gvd-cert-{tag}.json"));
        assert_eq!(actual["n"], expected["n"]);
        assert_eq!(actual["h"], expected["h"]);
        assert_eq!(actual["terminal"], expected["terminal"]);
        let actual_steps = actual["steps"].as_array().unwrap();
        let expected_steps = expected["steps"].as_array().unwrap();
        assert_eq!(actual_steps.len(), expected_steps.len());
        for (a, e) in actual_steps.iter().zip(expected_steps) {
            assert_eq!(a["m"], e["m"]);
            assert_eq!(a["y"], e["y"]);
            assert_eq!(a["kind"], e["kind"]);
            assert_eq!(a["checks"], e["checks"]);
            let wa = parse_poly(&ring, a["witness"].as_str().unwrap()).unwrap();
            let we = parse_poly(&ring, e["witness"].as_str().unwrap()).unwrap();
            assert_eq!(wa, we, "witness differs for {tag}");
        }
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for (_, n, h) in GOLDEN_CASES {
        let n = n.to_string();
        for cmd in ["gens", "gb", "gvd-cert"] {
            for json in [false, true] {
                let mut args: Vec<&str> = vec![cmd, "--n", &n, "--h", h];
                if json {
                    args.push("--json");
                }
                let first = run(&args);
                let second = run(&args);
                assert!(first.status.success());
                assert_eq!(
                    first.stdout, second.stdout,
                    "non-deterministic output for {args:?}"
                );
            }
        }
    }
}

// --- exit codes ------------------------------------------------------------

#[test]
fn non_triangular_ideal_file_exits_one_naming_the_check() {
    let path = temp_file("non-triangular.json");
    std::fs::write(
        &path,
        r#"{ "ring": { "field": "Q", "variables": ["x", "y"] },
             "generators": ["x + y", "x - y"] }"#,
    )
    .unwrap();
    let out = run(&["tci", "--ideal", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("triangular_lead_structure"),
        "stderr must name the failed check, got: {stderr}"
    );
    // the report itself is still printed
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("triangular = false"));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn usage_errors_exit_two() {
    // missing required flag
    assert_eq!(run(&["gens", "--n", "4"]).status.code(), Some(2));
    // neither --ideal nor --n/--h
    assert_eq!(run(&["gb"]).status.code(), Some(2));
    // unknown flag
    assert_eq!(run(&["gens", "--bogus"]).status.code(), Some(2));
    // oversized explorer chart
    assert_eq!(
        run(&["explore", "--n", "6", "--h", "2,3,4,5,6,6"]).status.code(),
        Some(2)
    );
    // malformed Hessenberg list
    assert_eq!(
        run(&["gens", "--n", "3", "--h", "2,x,3"]).status.code(),
        Some(2)
    );
    // h too short for the chart
    assert_eq!(
        run(&["gens", "--n", "5", "--h", "2,3,3"]).status.code(),
        Some(2)
    );
}

// --- frob / poset ----------------------------------------------------------

#[test]
fn frob_without_h_certifies_the_whole_poset() {
    let report = json_ok(&["frob", "--n", "4", "--p", "3"]);
    assert_eq!(report["n"], 4);
    assert_eq!(report["p"], 3);
    assert_eq!(report["splitting"], "F_n^(p-1)");
    assert_eq!(report["unit_check"], true);
    let nodes = report["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 5);
    for node in nodes {
        assert_eq!(node["frob_power_membership"], true, "node {}", node["h"]);
        assert_eq!(node["sampled_direct_checks"]["failures"], 0);
    }
    assert_eq!(report["edges"].as_array().unwrap().len(), 9);
}

#[test]
fn frob_with_h_reports_a_single_patch() {
    let report = json_ok(&["frob", "--n", "3", "--p", "2", "--h", "2,3,3"]);
    assert_eq!(report["unit_check"], true);
    assert_eq!(report["frob_power_membership"], true);
    assert_eq!(report["checks"]["sampled_checks_clean"], true);
    let out = run(&["frob", "--n", "3", "--p", "2", "--h", "2,3,3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn poset_command_matches_frob_report() {
    let a = json_ok(&["poset", "--n", "3", "--p", "2"]);
    let b = json_ok(&["frob", "--n", "3", "--p", "2"]);
    assert_eq!(a, b);
}

// --- explore ----------------------------------------------------------------

#[test]
fn explore_reports_pattern_and_squarefree_facts() {
    let report = json_ok(&["explore", "--n", "4", "--h", "3,3,4,4"]);
    assert_eq!(report["contains_321_pattern"], true);
    let orders = report["orders"].as_array().unwrap();
    assert_eq!(orders.len(), 3);
    let row_major = &orders[0];
    assert_eq!(row_major["order"], "row-major");
    assert_eq!(row_major["squarefree"], true);
    assert_eq!(row_major["ideal_of_indeterminates"], true);

    let identity = json_ok(&["explore", "--n", "3", "--h", "2,3,3", "--w", "1,2,3"]);
    assert_eq!(identity["contains_321_pattern"], false);

    let longest = json_ok(&["explore", "--n", "4", "--h", "2,3,4,4", "--w", "4,3,2,1"]);
    assert_eq!(longest["contains_321_pattern"], true);
}

#[test]
fn explore_accepts_an_explicit_order() {
    let report = json_ok(&[
        "explore",
        "--n",
        "3",
        "--h",
        "2,3,3",
        "--orders",
        "",
        "--order",
        "x[2,1],x[1,2],x[1,1]",
    ]);
    let orders = report["orders"].as_array().unwrap();
    assert_eq!(orders.len(), 1);
    assert_eq!(orders[0]["initial_ideal"], serde_json::json!(["x[2,1]"]));
}

// --- misc flags --------------------------------------------------------------

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = temp_file("gens-out.json");
    let out = run(&[
        "gens",
        "--n",
        "3",
        "--h",
        "2,3,3",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let body: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(body["generators"], serde_json::json!(["-x[1,2] + x[2,1]"]));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn gens_json_files_load_back_as_ideals() {
    let path = temp_file("gens-roundtrip.json");
    let ok = run(&[
        "gens",
        "--n",
        "4",
        "--h",
        "2,3,4,4",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(ok.status.success());
    let report = json_ok(&["gb", "--ideal", path.to_str().unwrap()]);
    assert_eq!(report["dimension"], 3);
    assert_eq!(report["checks"]["s_polynomials_reduce_to_zero"], true);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn gb_tabulates_the_graded_hilbert_function() {
    let report = json_ok(&["gb", "--n", "4", "--h", "2,3,4,4", "--dmax", "4"]);
    assert_eq!(report["hilbert_function"], serde_json::json!([1, 1, 2, 3, 4]));
}

#[test]
fn explicit_order_flag_changes_the_initial_ideal() {
    let report = json_ok(&[
        "gb",
        "--n",
        "3",
        "--h",
        "2,3,3",
        "--order",
        "x[2,1],x[1,2],x[1,1]",
    ]);
    assert_eq!(report["initial_ideal"], serde_json::json!(["x[2,1]"]));
}

#[test]
fn chain_level_flag_restricts_the_generator_list() {
    let report = json_ok(&["gens", "--n", "5", "--h", "2,3,4,5,5", "--m", "2"]);
    let positions = report["positions"].as_array().unwrap();
    assert_eq!(positions.len(), 4);
    assert!(!positions.contains(&serde_json::json!([5, 1])));
    assert!(!positions.contains(&serde_json::json!([5, 2])));
    assert!(positions.contains(&serde_json::json!([5, 3])));
}
