//! End-to-end tests of the `nfkit` binary.

use std::path::Path;
use std::process::Command;

use nfkit::quadclass::Certificate;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn nfkit(args: &[&str]) -> Run {
    nfkit_env(args, None)
}

fn nfkit_env(args: &[&str], cache_env: Option<&Path>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nfkit"));
    cmd.args(args).env_remove("NFKIT_CACHE");
    if let Some(p) = cache_env {
        cmd.env("NFKIT_CACHE", p);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn records(stdout: &str) -> Vec<Value> {
    stdout
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

fn of_type<'a>(recs: &'a [Value], t: &str) -> Vec<&'a Value> {
    recs.iter().filter(|r| r["type"] == t).collect()
}

#[test]
fn class_number_record() {
    let r = nfkit(&["--json", "--no-meta", "class", "h", "--d", "79"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let recs = records(&r.stdout);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["h"], "3");
    assert_eq!(recs[0]["methods_agree"], true);
}

#[test]
fn meta_record_is_last_unless_suppressed() {
    let r = nfkit(&["--json", "class", "h", "--d", "15"]);
    assert_eq!(r.code, 0);
    let recs = records(&r.stdout);
    assert_eq!(recs.last().unwrap()["type"], "meta");
    assert_eq!(recs.last().unwrap()["tool"], "nfkit");

    let r = nfkit(&["--json", "--no-meta", "class", "h", "--d", "15"]);
    assert!(of_type(&records(&r.stdout), "meta").is_empty());
}

#[test]
fn text_output_by_default() {
    let r = nfkit(&["--no-meta", "cyclo", "minus", "--m", "23"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("[minus] "), "{}", r.stdout);
    assert!(r.stdout.contains("h_minus=3"), "{}", r.stdout);
}

#[test]
fn help_goes_to_stdout_once() {
    let r = nfkit(&["--help"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.matches("Usage:").count(), 1);
    assert!(r.stderr.is_empty());
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["class", "h", "--d", "16"][..],
        &["class", "h", "--d", "0"],
        &["family", "synth", "--word", "1,2"],
        &["pell", "unit", "--d", "49"],
        &["cyclo", "minus", "--m", "2"],
        &["verify", "theorem11", "--case", "1", "--p", "7", "--n", "1..3"],
        &["no-such-command"],
    ] {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let r = nfkit(&full);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        assert!(!r.stderr.is_empty(), "{args:?}");
        assert!(of_type(&records(&r.stdout), "meta").is_empty(), "{args:?}");
    }
}

#[test]
fn failed_certificate_exits_3() {
    let r = nfkit(&["--json", "--no-meta", "class", "cert", "--d", "7"]);
    assert_eq!(r.code, 3);
    let recs = records(&r.stdout);
    assert_eq!(recs[0]["type"], "certificate_failure");
    assert_eq!(recs[0]["step"], "class_number_one");
}

#[test]
fn certificate_json_round_trips() {
    let r = nfkit(&["--json", "--no-meta", "class", "cert", "--d", "35"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rec = &records(&r.stdout)[0];
    let cert: Certificate = serde_json::from_value(rec.clone()).expect("certificate parses");
    assert_eq!(cert.p, 13);
    assert_eq!(cert.h, 2);
    cert.revalidate().expect("certificate revalidates");
}

#[test]
fn inadmissible_word_is_rejected() {
    let r = nfkit(&["--json", "verify", "paper", "--word", "1,2,1", "--n", "1..3"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not admissible"), "{}", r.stderr);
}

#[test]
fn sweep_output_is_deterministic() {
    let args = ["--json", "--no-meta", "verify", "paper", "--word", "1", "--n", "1..30", "--p-limit", "30"];
    let one = nfkit(&[&["--jobs", "1"][..], &args].concat());
    let many = nfkit(&[&["--jobs", "4"][..], &args].concat());
    assert_eq!(one.code, 0, "{}", one.stderr);
    assert_eq!(one.stdout, many.stdout);
    let again = nfkit(&[&["--jobs", "4"][..], &args].concat());
    assert_eq!(many.stdout, again.stdout);
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let cache_s = cache.to_str().unwrap();
    let args = ["--json", "--no-meta", "verify", "paper", "--word", "1", "--n", "1..25", "--p-limit", "30"];

    let plain = nfkit(&args);
    let cold = nfkit(&[&["--cache", cache_s][..], &args].concat());
    let written = std::fs::read_to_string(&cache).unwrap();
    let warm = nfkit(&[&["--cache", cache_s][..], &args].concat());
    let checked = nfkit(&[&["--cache", cache_s, "--verify-cache", "--verify-rate", "1"][..], &args].concat());
    let via_env = nfkit_env(&args, Some(&cache));

    assert_eq!(plain.code, cold.code);
    for r in [&cold, &warm, &checked, &via_env] {
        assert_eq!(r.code, plain.code, "{}", r.stderr);
        assert_eq!(r.stdout, plain.stdout);
    }
    assert!(!written.is_empty());
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), written, "warm runs append nothing");
}

#[test]
fn tampered_cache_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let cache_s = cache.to_str().unwrap();
    let args = ["--json", "--no-meta", "verify", "paper", "--word", "1", "--n", "1..3"];
    assert_eq!(nfkit(&[&["--cache", cache_s][..], &args].concat()).code, 0);

    let tampered: String = std::fs::read_to_string(&cache)
        .unwrap()
        .lines()
        .map(|l| {
            let mut e: Value = serde_json::from_str(l).unwrap();
            if e["key"].as_str().unwrap().starts_with("class:") {
                e["value"]["h"] = Value::from(7);
            }
            format!("{e}\n")
        })
        .collect();
    std::fs::write(&cache, tampered).unwrap();

    let r = nfkit(&[&["--cache", cache_s, "--verify-cache", "--verify-rate", "1"][..], &args].concat());
    assert_eq!(r.code, 4);
    let recs = records(&r.stdout);
    let mismatch = of_type(&recs, "cache_mismatch");
    assert_eq!(mismatch.len(), 1);
    assert!(!mismatch[0]["keys"].as_array().unwrap().is_empty());
}

#[test]
fn theorem_family_sweep() {
    let r = nfkit(&["--json", "--no-meta", "verify", "theorem11", "--case", "3", "--p", "7", "--n", "1..4"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    let recs = records(&r.stdout);
    let members = of_type(&recs, "member");
    assert!(!members.is_empty());
    assert!(members.iter().all(|m| m["status"] == "PASS" || m["status"] == "SKIP"));
    assert_eq!(of_type(&recs, "summary")[0]["fail"], "0");
}

#[test]
fn family_sweep_lists_members_and_skips() {
    let r = nfkit(&["--json", "--no-meta", "family", "sweep", "--word", "2,2", "--n", "0..5"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let recs = records(&r.stdout);
    let ds: Vec<&str> = of_type(&recs, "member").iter().map(|m| m["d"].as_str().unwrap()).collect();
    assert_eq!(ds, ["2", "41", "130", "269", "458", "697"]);
    assert_eq!(of_type(&recs, "summary").len(), 1);
}
