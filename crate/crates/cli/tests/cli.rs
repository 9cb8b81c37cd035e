use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn supergroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supergroup"))
        .args(args)
        .env_remove("SUPERGROUP_PREC_BITS")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

const SINGLE_BOSON: &str = r#"{"m":1,"n":0,"beta":{"re":"1/2"},"bosonic":[{"re":"1"}],"fermionic":[]}"#;

#[test]
fn ls_eval_single_boson() {
    let out = supergroup(&["ls-eval", "--json", SINGLE_BOSON]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema"], "supergroup-report/1");
    assert_eq!(r["config"]["command"], "ls-eval");
    let re: f64 = r["result"]["value"]["re"].as_str().unwrap().parse().unwrap();
    // I₀(1), computed independently with mpmath
    assert!((re - 1.2660658777520082).abs() < 1e-15);
}

#[test]
fn input_file_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ev.json");
    let output = dir.path().join("out.json");
    fs::write(&input, SINGLE_BOSON).unwrap();
    let out = supergroup(&["ls-eval", "--input", input.to_str().unwrap(), "--json-out", output.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&fs::read_to_string(output).unwrap()).unwrap();
    assert_eq!(r["pass"], true);
}

#[test]
fn bk_eval_runs() {
    let json = format!(r#"{{"lambda":{SINGLE_BOSON},"mu":{SINGLE_BOSON}}}"#);
    let out = supergroup(&["bk-eval", "--json", &json]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["branch"], "generic");
}

#[test]
fn malformed_input_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"m\": 1,").unwrap();
    let out = supergroup(&["ls-eval", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = supergroup(&["selftest", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(supergroup(&["ls-eval", "--prec-bits", "32", "--json", SINGLE_BOSON]).status.code(), Some(2));
    assert_eq!(supergroup(&["lr-check", "--m", "1", "--n", "1", "--max-boxes", "11"]).status.code(), Some(2));
    assert_eq!(supergroup(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn truncation_cap_is_exit_3() {
    let out = supergroup(&["conjecture-verify", "--N", "3", "--trunc-cap", "8"]);
    assert_eq!(out.status.code(), Some(3));
    let out = supergroup(&["selftest", "--trunc-cap", "8"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn conjecture_proved_case() {
    let out = supergroup(&["conjecture-verify", "--N", "2", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"][0]["samples"].as_array().unwrap().len(), 10);
    assert_eq!(r["result"][0]["N"], 2);
}

#[test]
fn lr_check_all_zero_residuals() {
    let out = supergroup(&["lr-check", "--max-boxes", "8", "--m", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let checks = r["result"]["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["residual"] == "0"));
}

#[test]
fn strninxi_with_given_values() {
    let json = r#"{"bosonic":["1/2","-3/7"],"fermionic":["2/5"]}"#;
    let out = supergroup(&["strninxi-check", "--m", "2", "--n", "1", "--json", json]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"].as_array().unwrap().len(), 6);
    let out = supergroup(&["strninxi-check", "--m", "1", "--n", "1", "--json", json]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn brute_force_and_theorems() {
    let out = supergroup(&["appendix-e-verify", "--m", "1", "--n", "1", "--samples", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["rel_errors"].as_array().unwrap().len(), 3);
    let out = supergroup(&["theorems-check", "--N", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn precision_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_supergroup"))
        .args(["ls-eval", "--json", SINGLE_BOSON])
        .env("SUPERGROUP_PREC_BITS", "128")
        .output()
        .unwrap();
    assert_eq!(report(&out)["config"]["precision_bits"], 128);
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, r#"{"prec_bits": 192, "seed": 7}"#).unwrap();
    let r = report(&supergroup(&["ls-eval", "--config", cfg.to_str().unwrap(), "--json", SINGLE_BOSON]));
    assert_eq!(r["config"]["precision_bits"], 192);
    assert_eq!(r["config"]["seed"], 7);
}

#[test]
fn timing_is_opt_in() {
    let plain = report(&supergroup(&["theorems-check", "--N", "2"]));
    assert!(plain.get("wall_time_ms").is_none());
    let timed = report(&supergroup(&["theorems-check", "--N", "2", "--timing"]));
    assert!(timed["wall_time_ms"].is_u64());
}

#[test]
fn selftest_is_byte_identical_across_jobs() {
    let a = supergroup(&["selftest", "--seed", "42", "--jobs", "1"]);
    let b = supergroup(&["selftest", "--seed", "42", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8_lossy(&a.stderr).lines().count(), 12);
}
