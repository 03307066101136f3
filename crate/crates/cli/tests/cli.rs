use std::fs;
use std::process::{Command, Output};

fn stabgeom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabgeom"))
        .args(args)
        .env_remove("STABGEOM_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn five_qubit_distance_is_three() {
    let o = stabgeom(&["distance", "builtin:five_qubit"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("minimum weight: 3\n"));
}

#[test]
fn gv_rate_at_zero_is_one() {
    let o = stabgeom(&["gv-rate", "--delta", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1.0\n");
}

#[test]
fn gv_rate_rejects_out_of_range_delta() {
    let o = stabgeom(&["gv-rate", "--delta", "0.3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn constructed_qr13_has_distance_five() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("qr13.txt");
    let p = path.to_str().unwrap();
    assert!(stabgeom(&["construct", "qr", "--p", "13", "-o", p]).status.success());
    let o = stabgeom(&["distance", p, "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["d_dual"], 5);
    assert_eq!(v["dim_S"], 12);
    assert_eq!(v["complete"], true);
}

#[test]
fn written_code_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("qr5.txt");
    let p = path.to_str().unwrap();
    assert!(stabgeom(&["construct", "qr", "--p", "5", "-o", p]).status.success());
    let direct = stabgeom(&["distance", "builtin:five_qubit"]);
    let read_back = stabgeom(&["distance", p]);
    assert!(read_back.status.success());
    assert_eq!(stdout(&read_back).lines().next(), stdout(&direct).lines().next());
    let v = stabgeom(&["validate", p, "--strict"]);
    assert!(v.status.success());
    let text = fs::read_to_string(&path).unwrap();
    let copy = dir.path().join("copy.txt");
    fs::write(&copy, &text).unwrap();
    let again = stabgeom(&["validate", copy.to_str().unwrap(), "--strict"]);
    assert_eq!(stdout(&v), stdout(&again));
}

#[test]
fn worker_count_does_not_change_output() {
    let one = stabgeom(&["distance", "builtin:ten_qubit", "--workers", "1"]);
    let three = stabgeom(&["distance", "builtin:ten_qubit", "--workers", "3"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn invalid_code_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "n=2\n10|00\n00|10\n").unwrap();
    let o = stabgeom(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("invalid"));
}

#[test]
fn parse_error_exits_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.txt");
    fs::write(&path, "n=3\n101|010\n10x|000\n").unwrap();
    let o = stabgeom(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn unknown_builtin_exits_two() {
    let o = stabgeom(&["distance", "builtin:nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn truncated_search_exits_one() {
    let o = stabgeom(&["distance", "builtin:ten_qubit", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("complete: false"));
}

#[test]
fn repetition_code_is_rejected_for_css() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.txt");
    fs::write(&path, "# [3,1] repetition\n111\n").unwrap();
    let o = stabgeom(&["construct", "css", "--classical", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn correctable_agrees_with_statevector() {
    let o = stabgeom(&["correctable", "builtin:five_qubit", "--t", "1", "--statevector"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = stabgeom(&["correctable", "builtin:five_qubit", "--t", "2", "--statevector"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stdout(&o).contains("DISAGREEMENT"));
}

#[test]
fn clifford_check_passes_for_small_n() {
    let o = stabgeom(&["clifford-check", "--n", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn codewords_dump_five_qubit() {
    let o = stabgeom(&["codewords", "builtin:five_qubit"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("# codeword")).count(), 2);
}

#[test]
fn encode_map_preserves_form() {
    let o = stabgeom(&["encode-map", "builtin:eight_qubit"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("preserves alternating form: true"));
}
