use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn lgcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, Option<i32>) {
    let out = lgcheck(args);
    (
        serde_json::from_slice(&out.stdout).expect("valid JSON"),
        out.status.code(),
    )
}

fn failing_ids(report: &Value) -> Vec<String> {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["check_id"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn full_run_fails_only_the_third_elliptic_quotient() {
    let (report, code) = json(&["all", "--json"]);
    assert_eq!(code, Some(1));
    assert_eq!(failing_ids(&report), ["elliptic.canonical_e3"]);
    let n = report["checks"].as_array().unwrap().len();
    assert!(n >= 40, "only {n} checks");
    assert_eq!(report["passed"].as_u64().unwrap() as usize + 1, n);
    assert_eq!(report["failed"], 1);
}

#[test]
fn report_matches_the_schema() {
    let schema: Value =
        serde_json::from_str(include_str!("../schema/report.schema.json")).expect("schema parses");
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    for args in [
        &["all", "--json"][..],
        &["all", "--json", "--timings"],
        &["monodromy", "--mod", "5", "--json"],
    ] {
        let (report, _) = json(args);
        let errors: Vec<String> = validator
            .iter_errors(&report)
            .map(|e| e.to_string())
            .collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [&["all", "--json"][..], &["all"]] {
        let a = lgcheck(args);
        let b = lgcheck(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn groups_appear_in_registration_order() {
    let (report, _) = json(&["all", "--json"]);
    let prefixes: Vec<String> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            c["check_id"]
                .as_str()
                .unwrap()
                .split('.')
                .next()
                .unwrap()
                .to_string()
        })
        .collect();
    let mut order: Vec<String> = Vec::new();
    for p in prefixes {
        if order.last() != Some(&p) {
            assert!(!order.contains(&p), "group {p} is split");
            order.push(p);
        }
    }
    assert_eq!(order, ["rep", "form", "lattice", "monodromy", "elliptic"]);
}

#[test]
fn every_check_is_anchored_and_float_free() {
    let (report, _) = json(&["all", "--json"]);
    let mut ids = BTreeSet::new();
    for c in report["checks"].as_array().unwrap() {
        assert!(!c["paper_anchor"].as_str().unwrap().is_empty());
        assert!(
            ids.insert(c["check_id"].as_str().unwrap().to_string()),
            "duplicate id"
        );
        for field in ["expected", "computed"] {
            let s = c[field].as_str().unwrap();
            let floaty = s
                .as_bytes()
                .windows(3)
                .any(|w| w[0].is_ascii_digit() && w[1] == b'.' && w[2].is_ascii_digit());
            assert!(!floaty, "{}: {s}", c["check_id"]);
        }
    }
}

#[test]
fn only_filter_restricts_to_one_group() {
    let (report, code) = json(&["all", "--only", "lattice", "--json"]);
    assert_eq!(code, Some(0));
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["check_id"].as_str().unwrap().starts_with("lattice.")));
}

#[test]
fn subcommand_examples() {
    let rep = lgcheck(&["rep", "--d", "3", "--q", "2", "--p", "2"]);
    assert_eq!(rep.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&rep.stdout).contains("computed (1,1)"));

    let mono = lgcheck(&["monodromy", "--mod", "3"]);
    assert_eq!(mono.status.code(), Some(0));
    let text = String::from_utf8_lossy(&mono.stdout);
    assert!(text
        .lines()
        .any(|l| l.contains("monodromy.orbit_mod3") && l.contains("computed 80")));

    for args in [
        &["lattice"][..],
        &["form", "--d", "6"],
        &["monodromy", "--mod", "2"],
        &["rep", "--d", "5", "--q", "4", "--p", "3"],
    ] {
        assert_eq!(lgcheck(args).status.code(), Some(0), "{args:?}");
    }
    assert_eq!(lgcheck(&["elliptic"]).status.code(), Some(1));
}

#[test]
fn quiet_prints_failures_and_summary_only() {
    let out = lgcheck(&["all", "--quiet"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("FAIL  elliptic.canonical_e3"));
    assert!(lines[1].contains("1 failed"));
}

#[test]
fn usage_errors_exit_two_with_usage_on_stderr() {
    for args in [
        &["--bogus"][..],
        &["monodromy", "--mod", "7"],
        &["rep", "--q", "2", "--p", "3"],
        &[],
        &["nonsense"],
    ] {
        let out = lgcheck(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(
            err.contains("Usage") || err.contains("--help"),
            "{args:?}: {err}"
        );
    }
}

#[test]
fn corrupted_generator_is_caught() {
    let (report, code) = json(&["--inject-fault", "corrupt-tau6", "monodromy", "--json"]);
    assert_eq!(code, Some(1));
    let failing = failing_ids(&report);
    assert!(failing.contains(&"monodromy.tau6_symplectic".to_string()));
    assert!(!failing.contains(&"monodromy.tau5_symplectic".to_string()));
    let help = String::from_utf8_lossy(&lgcheck(&["--help"]).stdout).to_string();
    assert!(!help.contains("inject-fault"));
}
