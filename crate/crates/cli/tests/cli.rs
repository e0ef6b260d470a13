//! End-to-end tests of the `wpgap` binary: output formats, exit codes,
//! cache behavior, and jobs-independence of emitted bytes.

use std::path::Path;
use std::process::{Command, Output};

fn wpgap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpgap"))
        .args(args)
        .env_remove("WPGAP_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn wpgap_in(dir: &Path, envs: &[(&str, &str)], args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_wpgap"));
    cmd.args(args)
        .current_dir(dir)
        .env_remove("WPGAP_CACHE_DIR");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn enumerate_genus_three_sorted_lines() {
    let out = wpgap(&["enumerate", "--genus", "3", "--sorted", "--format", "lines"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "1,2,3\n1,2,4\n1,2,5\n1,3,5\n");
}

#[test]
fn enumerate_genus_zero_single_empty_record() {
    let out = wpgap(&["enumerate", "--genus", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "\n");
}

#[test]
fn enumerate_even_gap_filter() {
    let out = wpgap(&["enumerate", "--genus", "2", "--even-gaps", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "1,3\n");
}

#[test]
fn enumerate_json_and_csv_formats() {
    let out = wpgap(&["enumerate", "--genus", "3", "--sorted", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["wpgap_report"], 1);
    assert_eq!(doc["count"], 4);
    assert_eq!(doc["gap_sets"][3], serde_json::json!([1, 3, 5]));

    let out = wpgap(&["enumerate", "--genus", "2", "--sorted", "--format", "csv"]);
    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("genus,multiplicity,conductor,weight,even_gaps,gaps")
    );
    assert_eq!(lines.next(), Some("2,3,3,0,1,1 2"));
    assert_eq!(lines.next(), Some("2,2,4,1,0,1 3"));
}

#[test]
fn verify_theorem_holds_and_fails() {
    let out = wpgap(&["verify", "theorem", "--gamma", "3", "--genus", "16"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["all_hold"], true);
    assert_eq!(doc["results"][0]["w1_lower"], 63);
    assert_eq!(doc["results"][0]["n_g_1"], 60);

    let out = wpgap(&["verify", "theorem", "--gamma", "3", "--genus", "12"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["all_hold"], false);

    let out = wpgap(&[
        "verify",
        "theorem",
        "--gamma",
        "3",
        "--genus-range",
        "16:20",
        "--t-policy",
        "paper",
    ]);
    assert!(out.status.success());
}

#[test]
fn verify_lemma_range() {
    let out = wpgap(&[
        "verify",
        "lemma",
        "--gamma",
        "3",
        "--genus-range",
        "12:14",
        "--class",
        "II",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["all_hold"], true);
    assert_eq!(doc["results"][0]["bound"], 23);
    assert_eq!(doc["results"][0]["max_observed"], 23);
}

#[test]
fn table_outputs() {
    let out = wpgap(&["table", "thresholds", "--gamma-range", "3:5"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("gamma,paper_threshold,exact_min_genus"));
    assert_eq!(lines.next(), Some("3,16,15"));
    assert_eq!(lines.next(), Some("4,24,22"));
    assert_eq!(lines.next(), Some("5,32,30"));

    let out = wpgap(&["table", "bounds", "--gamma", "3", "--genus-range", "16:16"]);
    let text = stdout_str(&out);
    assert_eq!(text, "g,c1,c2,c3,N,omega1\n16,63,53,66,60,4080\n");

    let out = wpgap(&["table", "pflaum-n2", "--genus-range", "3:3", "--n", "2"]);
    let text = stdout_str(&out);
    assert_eq!(text, "g,n,omega_n,W_lower,N,holds\n3,2,108,18,16,true\n");
}

#[test]
fn weight_round_trips_enumerate_lines() {
    let out = wpgap(&["enumerate", "--genus", "4", "--sorted"]);
    assert!(out.status.success());
    for line in stdout_str(&out).lines() {
        let out = wpgap(&["weight", "--gaps", line]);
        assert!(out.status.success(), "line {line:?}");
        let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
        assert_eq!(doc["genus"], 4);
    }
    let out = wpgap(&["weight", "--gaps", "1,3,5,7"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["weight"], 6);
    assert_eq!(doc["multiplicity"], 2);
}

#[test]
fn exit_codes() {
    // Usage error from clap.
    let out = wpgap(&["enumerate", "--bogus-flag"]);
    assert_eq!(out.status.code(), Some(2));
    // Usage error from validation: inverted range.
    let out = wpgap(&[
        "verify",
        "lemma",
        "--gamma",
        "3",
        "--genus-range",
        "14:12",
        "--class",
        "II",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // Bad class token.
    let out = wpgap(&[
        "verify",
        "lemma",
        "--gamma",
        "3",
        "--genus-range",
        "12:12",
        "--class",
        "IV",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // Resource cap.
    let out = wpgap(&["enumerate", "--genus", "36"]);
    assert_eq!(out.status.code(), Some(3));
    // A gap set that is not co-closed is a usage error, not a counterexample.
    let out = wpgap(&["weight", "--gaps", "1,4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn jobs_never_change_output() {
    for args in [
        vec!["enumerate", "--genus", "9", "--format", "lines"],
        vec!["enumerate", "--genus", "9", "--sorted", "--format", "json"],
        vec![
            "verify",
            "lemma",
            "--gamma",
            "3",
            "--genus-range",
            "12:13",
            "--class",
            "III",
        ],
    ] {
        let mut one = args.clone();
        one.extend(["--jobs", "1"]);
        let mut eight = args.clone();
        eight.extend(["--jobs", "8"]);
        let a = wpgap(&one);
        let b = wpgap(&eight);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn cache_dir_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache_str = cache.to_str().unwrap();
    let args = [
        "enumerate",
        "--genus",
        "6",
        "--min-mult",
        "3",
        "--cache-dir",
        cache_str,
    ];
    let first = wpgap(&args);
    assert!(first.status.success());
    let files: Vec<_> = std::fs::read_dir(&cache).unwrap().collect();
    assert_eq!(files.len(), 1);
    let path = files[0].as_ref().unwrap().path();
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.starts_with("wpgap-cache v1 genus=6 filter=min-mult=3 count="));
    assert!(content.ends_with('\n'));

    let second = wpgap(&args);
    assert_eq!(first.stdout, second.stdout);

    // The environment variable points at the same cache.
    let via_env = wpgap_in(
        dir.path(),
        &[("WPGAP_CACHE_DIR", cache_str)],
        &["enumerate", "--genus", "6", "--min-mult", "3"],
    );
    assert_eq!(via_env.stdout, first.stdout);
}
