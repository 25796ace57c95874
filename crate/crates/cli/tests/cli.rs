use std::process::{Command, Output};

use serde_json::Value;

fn charconj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charconj"))
        .args(args)
        .env_remove("CHARCONJ_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn status(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn signed_two_color_polynomial() {
    let out = charconj(&["gpoly", "--mu", "2", "--m", "2", "--signed"]);
    assert_eq!(status(&out), 0);
    assert_eq!(
        stdout(&out).trim(),
        "-p1^2*q1 - 2*p1*p2*q2 - p2^2*q2 + p1*q1^2 + p2*q2^2"
    );
}

#[test]
fn single_box_polynomial() {
    let out = charconj(&["gpoly", "--mu", "1", "--m", "1"]);
    assert_eq!(stdout(&out).trim(), "p1*q1");
}

#[test]
fn character_values() {
    assert_eq!(
        stdout(&charconj(&["char", "--lambda", "2,2", "--nu", "2,1,1"])).trim(),
        "0"
    );
    assert_eq!(
        stdout(&charconj(&["char", "--lambda", "2,2", "--nu", "1,1,1,1"])).trim(),
        "2"
    );
    assert_eq!(
        stdout(&charconj(&["char", "--lambda", "3,1", "--nu", "2,2"])).trim(),
        "-1"
    );
}

#[test]
fn fhat_by_partition_and_by_shape_agree() {
    // two stacked rectangles 1x3 over 1x1 form the partition (3,1)
    let by_shape = charconj(&["fhat", "--shape", "1x3,1x1", "--mu", "2"]);
    let by_lambda = charconj(&["fhat", "--lambda", "3,1", "--mu", "2"]);
    assert_eq!(status(&by_shape), 0);
    assert_eq!(stdout(&by_shape), stdout(&by_lambda));
    assert_eq!(stdout(&by_lambda).trim(), "4");
}

#[test]
fn extraction_interpolation_and_pair_sum_agree() {
    let signed = stdout(&charconj(&["gpoly", "--mu", "3", "--m", "2", "--signed"]));
    let fk = stdout(&charconj(&["fk", "--k", "3", "--m", "2"]));
    let interp = stdout(&charconj(&["interp", "--mu", "3", "--m", "2"]));
    assert_eq!(signed, fk);
    assert_eq!(signed, interp);
}

#[test]
fn json_polynomial_record() {
    let out = charconj(&["--format", "json", "gpoly", "--mu", "2", "--m", "2"]);
    let record: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(record["m"], 2);
    assert_eq!(
        record["variables"],
        serde_json::json!(["p1", "p2", "q1", "q2"])
    );
    let terms = record["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 5);
    assert_eq!(terms[0]["exponents"], serde_json::json!([2, 0, 1, 0]));
    assert_eq!(terms[0]["coefficient"], "1");
    assert_eq!(terms[1]["coefficient"], "2");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["char", "--lambda", "2,3", "--nu", "1,1,1,1,1"][..],
        &["char", "--lambda", "2,2", "--nu", "3"],
        &["gpoly", "--mu", "2", "--m", "0"],
        &["fhat", "--lambda", "2", "--shape", "1x2", "--mu", "1"],
        &["verify", "nonsense"],
        &["verify", "reduction", "--mu", "2", "--m", "2", "--i", "2"],
        &["nosuchcommand"],
    ] {
        let out = charconj(args);
        assert_eq!(status(&out), 1, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(status(&charconj(&["--help"])), 0);
}

#[test]
fn verify_report_is_json_and_passes() {
    let out = charconj(&["verify", "prop1", "--kmax", "3", "--mmax", "2"]);
    assert_eq!(status(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["identity"], "prop1");
    assert_eq!(report["pass"], true);
    assert_eq!(report["details"]["k=2,m=2"], "6");
    assert!(report["mismatches"].as_array().unwrap().is_empty());
}

#[test]
fn verify_text_summary() {
    let out = charconj(&[
        "--format", "text", "verify", "theorem1", "--kmax", "3", "--dim", "3",
    ]);
    assert_eq!(status(&out), 0);
    assert!(stdout(&out).starts_with("theorem1: PASS ("));
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let args = [
        "verify",
        "conjecture",
        "--kmax",
        "3",
        "--m",
        "2",
        "--dim",
        "2",
        "--no-timing",
    ];
    let run = |threads: &str| {
        let mut full = vec!["--threads", threads];
        full.extend_from_slice(&args);
        let out = charconj(&full);
        assert_eq!(status(&out), 0);
        stdout(&out)
    };
    assert_eq!(run("1"), run("4"));

    let via_env = Command::new(env!("CARGO_BIN_EXE_charconj"))
        .args(args)
        .env("CHARCONJ_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&via_env), run("1"));
}

#[test]
fn bad_thread_env_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_charconj"))
        .args(["char", "--lambda", "1", "--nu", "1"])
        .env("CHARCONJ_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(status(&out), 1);
}
