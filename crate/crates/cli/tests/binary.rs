//! End-to-end runs of the compiled binary: output shapes and exit codes.

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn neutrorank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_neutrorank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn write_file(suffix: &str, contents: &str) -> NamedTempFile {
    let mut file = tempfile::Builder::new()
        .suffix(suffix)
        .tempfile()
        .unwrap();
    file.write_all(contents.as_bytes()).unwrap();
    file
}

#[test]
fn rank_prints_a_table() {
    let file = write_file(".csv", "id,t,i,f\na,0.6,0.2,0.3\nb,0.5,0.1,0.2\n");
    let output = neutrorank(&["rank", file.path().to_str().unwrap()]);
    assert!(output.status.success(), "{}", stderr(&output));
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("rank  id"), "{text}");
    assert!(lines[1].contains("1  b"), "{text}");
    assert!(lines[2].contains("2  a"), "{text}");
}

#[test]
fn rank_emits_json_reports_deterministically() {
    let file = write_file(
        ".json",
        r#"[
            {"id": "c", "t": [0.1, 0.7], "i": [0.2, 0.4], "f": [0.3, 0.5]},
            {"id": "d", "t": [0.3, 0.5], "i": [0.1, 0.5], "f": [0.2, 0.6]}
        ]"#,
    );
    let path = file.path().to_str().unwrap();
    let first = neutrorank(&["rank", path, "--output", "json"]);
    let second = neutrorank(&["rank", path, "--output", "json"]);
    assert!(first.status.success(), "{}", stderr(&first));
    assert_eq!(first.stdout, second.stdout);

    let report: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(report["backend"], "rational");
    assert_eq!(report["kind"], "interval");
    assert_eq!(report["entries"][0]["equality_class"], "neutro_equal");
    assert_eq!(report["equality_classes"][0]["ids"][0], "c");
    assert_eq!(report["equality_classes"][0]["ids"][1], "d");
}

#[test]
fn rank_honors_explicit_format_and_float_backend() {
    let file = write_file(".txt", "id,t,i,f\na,0.6,0.2,0.3\n");
    let path = file.path().to_str().unwrap();

    let bare = neutrorank(&["rank", path]);
    assert_eq!(bare.status.code(), Some(2));
    assert!(stderr(&bare).contains("cannot infer a format"), "{}", stderr(&bare));

    let explicit = neutrorank(&["rank", path, "--format", "csv", "--backend", "float"]);
    assert!(explicit.status.success(), "{}", stderr(&explicit));
    assert!(stdout(&explicit).contains("0.7000000000000001"), "{}", stdout(&explicit));
}

#[test]
fn rank_exit_codes_distinguish_failure_kinds() {
    let empty = write_file(".csv", "id,t,i,f\n");
    let output = neutrorank(&["rank", empty.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(3));
    assert!(stderr(&output).contains("no alternatives"), "{}", stderr(&output));

    let malformed = write_file(".csv", "id,t,i,f\na,1.2,0,0\n");
    let output = neutrorank(&["rank", malformed.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));

    let output = neutrorank(&["rank", "/nonexistent/dataset.csv"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn compare_traces_and_fails_on_mixed_kinds() {
    let output = neutrorank(&["compare", "(0.6,0.1,0.3)", "(0.5,0.0,0.3)"]);
    assert!(output.status.success(), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("stage 2 accuracy: 0.3 vs 0.2, decides"), "{text}");
    assert!(text.contains("result: Greater"), "{text}");

    let mixed = neutrorank(&["compare", "(0.6,0.1,0.3)", "([0.4,0.5],[0.2,0.3],[0.3,0.4])"]);
    assert_eq!(mixed.status.code(), Some(2));
    assert!(stderr(&mixed).contains("mixed payload kinds"), "{}", stderr(&mixed));
}

#[test]
fn possibility_prints_exact_degrees() {
    let output = neutrorank(&["possibility", "[0.4,0.7]", "[0.3,0.6]"]);
    assert!(output.status.success(), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("P(A >= B) = 2/3"), "{text}");
    assert!(text.contains("P(B >= A) = 1/3"), "{text}");
    assert!(text.contains("sum = 1"), "{text}");
}

#[test]
fn score_evaluates_literals_of_both_kinds() {
    let svn = neutrorank(&["score", "(0.6,0.1,0.3)"]);
    assert!(svn.status.success(), "{}", stderr(&svn));
    assert!(stdout(&svn).contains("11/15"), "{}", stdout(&svn));

    let ivn = neutrorank(&["score", "([0.4,0.5],[0.2,0.3],[0.3,0.4])"]);
    assert!(ivn.status.success(), "{}", stderr(&ivn));
    assert!(stdout(&ivn).contains("interval family"), "{}", stdout(&ivn));

    let bad = neutrorank(&["score", "(0.6,0.1)"]);
    assert_eq!(bad.status.code(), Some(2));
}
