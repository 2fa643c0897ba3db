use std::path::PathBuf;
use std::process::Command;

use frobx::{run, Outcome};
use serde_json::{json, Value};

const SUBCOMMANDS: [&str; 8] = ["validate", "frobenius", "delta", "gram", "ambijunction", "roundtrip", "mate-demo", "tqft"];

const FIXTURES: [&str; 7] = [
    "dual_numbers",
    "group_z2",
    "mat2",
    "broken_associativity",
    "degenerate_counit",
    "malformed_rational",
    "truncated",
];

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../algebras");
    p.push(format!("{name}.json"));
    p.to_string_lossy().into_owned()
}

fn frobx(args: &[&str]) -> Outcome {
    run(std::iter::once("frobx").chain(args.iter().copied()))
}

fn json_of(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", out.stdout))
}

/// Extra flags so that `tqft` has something to evaluate.
fn args_for<'a>(cmd: &'a str, path: &'a str) -> Vec<&'a str> {
    let mut v = vec![cmd, path, "--format", "json"];
    if cmd == "tqft" {
        v.extend(["--genus", "2"]);
    }
    v
}

#[test]
fn frobenius_on_dual_numbers() {
    let path = fixture("dual_numbers");
    let out = frobx(&["frobenius", &path]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("gram:"));
    assert!(out.stdout.contains("dual basis:"));
    assert!(out.stdout.contains("Δ(1) = 1⊗x + x⊗1"));
    assert!(out.stdout.contains("Δ(x) = x⊗x"));
    assert!(out.stdout.trim_end().ends_with("all Frobenius axioms hold"));

    let doc = json_of(&frobx(&["frobenius", &path, "--format", "json"]));
    assert_eq!(doc["command"], "frobenius");
    assert_eq!(doc["passed"], true);
    let names: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["coassociativity", "counit", "frobenius_left", "frobenius_right", "casimir_invariance"]);
    assert_eq!(doc["values"]["gram"], json!([["0", "1"], ["1", "0"]]));
}

#[test]
fn delta_values_match_hand_computation() {
    // Rows are indexed by (p, q), columns by i: Δ(1) = 1⊗x + x⊗1, Δ(x) = x⊗x.
    let doc = json_of(&frobx(&["delta", &fixture("dual_numbers"), "--format", "json"]));
    assert_eq!(doc["values"]["comultiplication"], json!([["0", "0"], ["1", "0"], ["1", "0"], ["0", "1"]]));
    // ℚ[ℤ/2] with ε = (1, 0): Δ(g) = Σ_h gh⊗h⁻¹, so Δ(1) = 1⊗1 + t⊗t and Δ(t) = t⊗1 + 1⊗t.
    let doc = json_of(&frobx(&["delta", &fixture("group_z2"), "--format", "json"]));
    assert_eq!(doc["values"]["comultiplication"], json!([["1", "0"], ["0", "1"], ["0", "1"], ["1", "0"]]));
}

#[test]
fn closed_surfaces() {
    let out = frobx(&["tqft", &fixture("group_z2"), "--genus", "3"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "8\n"));
    let out = frobx(&["tqft", &fixture("dual_numbers"), "--genus", "1"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "2\n"));
    let out = frobx(&["tqft", &fixture("dual_numbers"), "--word", "u | d | m | c", "--format", "json"]);
    assert_eq!(json_of(&out)["values"]["value"], json!([["2"]]));
}

#[test]
fn genus_of_noncommutative_algebra_is_a_usage_error() {
    let out = frobx(&["tqft", &fixture("mat2"), "--genus", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("algebra is not commutative"));
    assert!(out.stdout.is_empty());
    // words are fine on any Frobenius algebra
    assert_eq!(frobx(&["tqft", &fixture("mat2"), "--word", "u | d | m | c"]).code, 0);
}

#[test]
fn corrupted_associativity_names_witnesses() {
    let out = frobx(&["frobenius", &fixture("broken_associativity"), "--format", "json"]);
    assert_eq!(out.code, 1);
    let doc = json_of(&out);
    assert_eq!(doc["passed"], false);
    let assoc = doc["checks"].as_array().unwrap().iter().find(|c| c["name"] == "associativity").unwrap();
    assert_eq!(assoc["passed"], false);
    // (x·1)·1 = 4x but x·(1·1) = 2x, a failure at indices (1,0,0,1)
    assert!(assoc["witness"].as_str().unwrap().contains("(1,0,0,1)"));
}

#[test]
fn input_errors_exit_two() {
    let cases: [(&[&str], &str); 7] = [
        (&["gram", &fixture("degenerate_counit")], "degenerate form"),
        (&["frobenius", &fixture("malformed_rational")], "zero denominator"),
        (&["frobenius", &fixture("truncated")], "invalid algebra file"),
        (&["frobenius", "no/such/file.json"], "cannot read"),
        (&["tqft", &fixture("dual_numbers"), "--word", "u | x"], "byte 4"),
        (&["tqft", &fixture("dual_numbers"), "--word", "u | d | c"], "slice 3"),
        (&["tqft", &fixture("dual_numbers")], "--genus or --word"),
    ];
    for (args, needle) in cases {
        let out = frobx(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stderr.contains(needle), "{args:?}: {}", out.stderr);
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(frobx(&["frobnicate", &fixture("mat2")]).code, 2);
    assert_eq!(frobx(&["frobenius"]).code, 2);
    assert_eq!(frobx(&["frobenius", &fixture("mat2"), "--format", "yaml"]).code, 2);
    let help = frobx(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("mate-demo"));
}

#[test]
fn exit_code_agrees_with_checks() {
    for cmd in SUBCOMMANDS {
        for name in FIXTURES {
            let path = fixture(name);
            let out = frobx(&args_for(cmd, &path));
            let doc = json_of(&out);
            let checks = doc["checks"].as_array().unwrap();
            let all = checks.iter().all(|c| c["passed"] == true);
            assert_eq!(doc["passed"], all, "{cmd} {name}");
            assert_eq!(doc["command"], cmd);
            assert_eq!(out.code == 0, all, "{cmd} {name}");
            let input_failure = checks.iter().any(|c| c["name"] == "input");
            assert_eq!(out.code == 2, input_failure, "{cmd} {name}");
            let expected = match name {
                "dual_numbers" | "group_z2" => 0,
                "mat2" if cmd != "tqft" => 0,
                "broken_associativity" => 1,
                _ => 2,
            };
            assert_eq!(out.code, expected, "{cmd} {name}: {}", out.stdout);
        }
    }
}

#[test]
fn json_output_is_deterministic() {
    for cmd in SUBCOMMANDS {
        for name in ["dual_numbers", "mat2", "broken_associativity", "degenerate_counit"] {
            let path = fixture(name);
            let a = frobx(&args_for(cmd, &path));
            let b = frobx(&args_for(cmd, &path));
            assert_eq!(a, b, "{cmd} {name}");
        }
    }
}

#[test]
fn mate_demo_under_several_seeds() {
    for seed in ["0", "1", "9999"] {
        let out = frobx(&["mate-demo", &fixture("group_z2"), "--seed", seed, "--format", "json"]);
        let doc = json_of(&out);
        assert_eq!(out.code, 0);
        assert_eq!(doc["values"]["seed"], seed.parse::<u64>().unwrap());
        assert_eq!(doc["checks"].as_array().unwrap().len(), 5);
    }
}

#[test]
fn binary_reports_through_process_exit() {
    let bin = env!("CARGO_BIN_EXE_frobx");
    let out = Command::new(bin).args(["tqft", &fixture("group_z2"), "--genus", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "8\n");
    let out = Command::new(bin).args(["tqft", &fixture("mat2"), "--genus", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("algebra is not commutative"));
}
