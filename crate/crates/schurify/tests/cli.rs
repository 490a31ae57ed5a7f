//! End-to-end tests of the `schurify` binary: documented examples, exit codes, configuration
//! files, reproducible output and the LR cache.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn schurify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurify"))
        .args(args)
        .env_remove("SCHURIFY_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn dim_of_zigzag() {
    let o = schurify(&["dim", "--algebra", "zigzag:1", "-n", "2", "-d", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "202");
    let o = schurify(&[
        "dim",
        "--algebra",
        "zigzag:1",
        "-n",
        "2",
        "-d",
        "2",
        "--out",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rank"], "202");
    let o = schurify(&["dim", "--algebra", "zigzag-bar:1", "-n", "2", "-d", "2"]);
    assert_eq!(stdout(&o).trim(), "36");
}

#[test]
fn decomp_of_the_base_case() {
    let o = schurify(&[
        "decomp",
        "--algebra",
        "zigzag:1",
        "-n",
        "1",
        "-d",
        "1",
        "--field",
        "Q",
        "--out",
        "text",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "[[1,0],[qπ,1]]");
    let o = schurify(&[
        "decomp",
        "--algebra",
        "zigzag:1",
        "-n",
        "1",
        "-d",
        "1",
        "--field",
        "Q",
        "--out",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["matrix"], serde_json::json!([["1", "0"], ["qπ", "1"]]));
    assert_eq!(v["agree"], true);
}

#[test]
fn decomp_csv_in_characteristic_two() {
    let o = schurify(&[
        "decomp",
        "--algebra",
        "zigzag:1",
        "-n",
        "2",
        "-d",
        "2",
        "--field",
        "Fp:2",
        "--method",
        "both",
        "--out",
        "csv",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda,mu,entry"));
    assert_eq!(lines.count(), 25);
    assert!(text.contains("\"[[2],[]]\",\"[[1,1],[]]\",1"), "{text}");
}

#[test]
fn verify_passes_on_zigzag() {
    let o = schurify(&["verify", "--algebra", "zigzag:1", "-n", "2", "-d", "2"]);
    let text = stdout(&o);
    assert_eq!(code(&o), 0, "{text}");
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    assert!(text.contains("decomposition"));
}

#[test]
fn verify_reports_a_failing_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dual.json");
    fs::write(
        &path,
        r#"{"basis": ["e", "x"],
            "kappa": [{"a": "e", "c": "e", "out": {"e": 1}}, {"a": "e", "c": "x", "out": {"x": 1}}, {"a": "x", "c": "e", "out": {"x": 1}}],
            "degree": {"x": 2},
            "heredity": {"order": [], "X": {"0": ["e", "x"]}, "Y": {"0": ["e"]}, "e": {"0": "e"}, "a": ["e"]}}"#,
    )
    .unwrap();
    let alg = format!("file:{}", path.display());
    let o = schurify(&["verify", "--algebra", &alg, "-n", "1", "-d", "1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL  heredity"), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["dim", "-n", "0"][..],
        &["dim", "--algebra", "cyclic:3"],
        &["decomp", "--field", "Z"],
        &["decomp", "--field", "Fp:4"],
        &["decomp", "-n", "1", "-d", "2"],
        &["frobnicate"],
    ] {
        let o = schurify(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        let v: Value =
            serde_json::from_slice(&o.stderr).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(v["error"]["exit_code"], 2);
        assert!(v["error"]["message"].is_string());
    }
}

#[test]
fn small_n_is_refused_with_a_reason() {
    let o = schurify(&["straighten", "-n", "1", "-d", "2", "--elem", "[]"]);
    assert_eq!(code(&o), 2);
    let v: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert!(
        v["error"]["message"].as_str().unwrap().contains("n >= d"),
        "{v}"
    );
    assert_eq!(code(&schurify(&["dim", "-n", "1", "-d", "2"])), 0);
}

#[test]
fn multiplication_of_idempotents() {
    let e = r#"[{"orbit":[{"b":"e0","r":1,"s":1}],"coeff":"1"}]"#;
    let o = schurify(&["mul", "-n", "2", "-d", "1", "--left", e, "--right", e]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::from_str::<Value>(e).unwrap());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.json");
    fs::write(&path, e).unwrap();
    let at = format!("@{}", path.display());
    let o2 = schurify(&["mult", "-n", "2", "-d", "1", "--left", &at, "--right", e]);
    assert_eq!(stdout(&o2), stdout(&o));
}

#[test]
fn blocks_of_k_plus_k() {
    let o = schurify(&[
        "blocks",
        "--algebra",
        "semisimple:2",
        "-n",
        "2",
        "-d",
        "2",
        "--field",
        "Fp:2",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 3);
    let o = schurify(&["blocks", "--algebra", "zigzag:1", "-n", "2", "-d", "2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 1);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(
        &cfg,
        "algebra = \"zigzag:1\"\nn = 2\nd = 2\nfield = \"Fp:2\"\nout = \"text\"\n",
    )
    .unwrap();
    let cfg = cfg.to_str().unwrap();
    let o = schurify(&["dim", "--config", cfg]);
    assert_eq!(stdout(&o).trim(), "202");
    let o = schurify(&["dim", "--config", cfg, "-d", "1"]);
    assert_eq!(stdout(&o).trim(), "20");
    let bad = dir.path().join("bad.toml");
    fs::write(&bad, "colour = 1\n").unwrap();
    assert_eq!(
        code(&schurify(&["dim", "--config", bad.to_str().unwrap()])),
        2
    );
}

fn run_to(dir: &Path, name: &str, extra: &[&str]) -> Vec<u8> {
    let path = dir.join(name);
    let mut args = vec![
        "decomp",
        "--algebra",
        "zigzag:2",
        "-n",
        "2",
        "-d",
        "2",
        "--out",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    let o = schurify(&args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    fs::read(path).unwrap()
}

#[test]
fn output_files_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = run_to(dir.path(), "a.csv", &[]);
    let b = run_to(dir.path(), "b.csv", &["--threads", "4"]);
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let v1 = stdout(&schurify(&[
        "verify",
        "--algebra",
        "zigzag:1",
        "-n",
        "2",
        "-d",
        "2",
        "--seed",
        "5",
        "--out",
        "json",
    ]));
    let v2 = stdout(&schurify(&[
        "verify",
        "--algebra",
        "zigzag:1",
        "-n",
        "2",
        "-d",
        "2",
        "--seed",
        "5",
        "--out",
        "json",
        "--threads",
        "3",
    ]));
    assert_eq!(v1, v2);
}

#[test]
fn lr_cache_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let first = run_to(
        dir.path(),
        "a.csv",
        &["--cache-dir", cache.to_str().unwrap()],
    );
    let file = cache.join("lr_cache.jsonl");
    let text = fs::read_to_string(&file).unwrap();
    assert!(text.lines().count() > 0);
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert!(
            v["lambda"].is_array() && v["factors"].is_array() && v["value"].is_string(),
            "{line}"
        );
    }
    let second = run_to(
        dir.path(),
        "b.csv",
        &["--cache-dir", cache.to_str().unwrap()],
    );
    assert_eq!(first, second);
    assert_eq!(fs::read_to_string(&file).unwrap(), text);
    fs::write(&file, "not json\n").unwrap();
    let o = schurify(&[
        "decomp",
        "--algebra",
        "zigzag:1",
        "-n",
        "2",
        "-d",
        "2",
        "--cache-dir",
        cache.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
}
