use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn hypotheses() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios/hypotheses.json")
}

fn litigacost(args: &[&str], env_policy: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_litigacost"));
    cmd.args(args).env_remove("LITIGACOST_POLICY");
    if let Some(p) = env_policy {
        cmd.env("LITIGACOST_POLICY", p);
    }
    cmd.output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn eval_csv_reproduces_hypotheses() {
    let file = hypotheses();
    let out = litigacost(
        &[
            "eval",
            "--scenarios",
            file.to_str().unwrap(),
            "--format",
            "csv",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[1].ends_with("2,4000.00,0.0400,Litigate,ProposeSettlement,false"));
    assert!(lines[2].contains("64000.00,0.6400,ProposeSettlement"));
    assert!(lines[3].ends_with("true"));
}

#[test]
fn validation_failure_exits_2_without_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let text =
        std::fs::read_to_string(hypotheses())
            .unwrap()
            .replacen(r#""ka": 0"#, r#""ka": 1"#, 1);
    let bad = write(&dir, "bad.json", &text);
    let out = litigacost(
        &[
            "eval",
            "--scenarios",
            bad.to_str().unwrap(),
            "--format",
            "csv",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("h1-confirm-80"), "{err}");
    assert!(err.contains("indicators"), "{err}");
}

#[test]
fn missing_file_exits_3() {
    let out = litigacost(&["eval", "--scenarios", "/definitely/not/here.json"], None);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn policy_layers_flag_over_document_over_env() {
    let dir = tempfile::tempdir().unwrap();
    let file = hypotheses();
    let file = file.to_str().unwrap();
    // h1 has tc fraction 0.04: a threshold at or below it flips the plaintiff
    let low = write(
        &dir,
        "low.json",
        r#"{"plaintiff_settle_threshold": "0.04"}"#,
    );
    let high = write(
        &dir,
        "high.json",
        r#"{"plaintiff_settle_threshold": "0.9"}"#,
    );

    let out = litigacost(
        &["eval", "--scenarios", file, "--format", "csv"],
        Some(&low),
    );
    assert!(stdout(&out)
        .lines()
        .nth(1)
        .unwrap()
        .contains("ProposeSettlement,ProposeSettlement"));

    let out = litigacost(
        &[
            "eval",
            "--scenarios",
            file,
            "--format",
            "csv",
            "--policy",
            high.to_str().unwrap(),
        ],
        Some(&low),
    );
    assert!(stdout(&out).lines().nth(1).unwrap().contains("Litigate"));

    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(hypotheses()).unwrap()).unwrap();
    doc["policy"] = serde_json::json!({"plaintiff_settle_threshold": "0.9"});
    let with_policy = write(&dir, "doc.json", &doc.to_string());
    let out = litigacost(
        &[
            "eval",
            "--scenarios",
            with_policy.to_str().unwrap(),
            "--format",
            "csv",
        ],
        Some(&low),
    );
    assert!(stdout(&out).lines().nth(1).unwrap().contains("Litigate"));

    let broken = write(
        &dir,
        "broken.json",
        r#"{"plaintiff_settle_threshold": "7"}"#,
    );
    let out = litigacost(&["eval", "--scenarios", file], Some(&broken));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_breakeven_compare_commands() {
    let file = hypotheses();
    let file = file.to_str().unwrap();
    let out = litigacost(
        &[
            "sweep",
            "--scenarios",
            file,
            "--id",
            "h1-confirm-80",
            "--param",
            "confirmation",
            "--min",
            "0.5",
            "--max",
            "0.8",
            "--steps",
            "4",
            "--format",
            "csv",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text
        .lines()
        .nth(2)
        .unwrap()
        .contains("0.6000,2,44000.00,0.4400"));

    let out = litigacost(
        &[
            "sweep",
            "--scenarios",
            file,
            "--id",
            "h1-confirm-80",
            "--min",
            "0.5",
            "--max",
            "0.5",
            "--steps",
            "2",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    let out = litigacost(
        &[
            "breakeven",
            "--scenarios",
            file,
            "--id",
            "h1-confirm-80",
            "--target-fraction",
            "0.04",
            "--format",
            "json",
        ],
        None,
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["confirmation"], "0.8000");

    let out = litigacost(
        &[
            "breakeven",
            "--scenarios",
            file,
            "--id",
            "h1-confirm-80",
            "--target-fraction",
            "2.0",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(2));

    let out = litigacost(
        &[
            "compare",
            "--scenarios",
            file,
            "--id",
            "h1-confirm-80",
            "--before",
            "BG-pre-reform",
            "--after",
            "reformed",
            "--format",
            "json",
        ],
        None,
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["delta"], "-10000.00");
    assert_eq!(v["verdict"], "ReformEffective");

    let out = litigacost(
        &[
            "compare",
            "--scenarios",
            file,
            "--id",
            "nope",
            "--before",
            "reformed",
            "--after",
            "reformed",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn document_presets_are_usable_in_compare() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(hypotheses()).unwrap()).unwrap();
    doc["presets"] = serde_json::json!([{
        "name": "worse",
        "description": "no precautionary measures either",
        "indicators": {"z": 1, "kb": 1, "t_long": 1, "y": 0, "ka": 0, "t_short": 0}
    }]);
    let path = write(&dir, "doc.json", &doc.to_string());
    let out = litigacost(
        &[
            "compare",
            "--scenarios",
            path.to_str().unwrap(),
            "--id",
            "h1-confirm-80",
            "--before",
            "BG-pre-reform",
            "--after",
            "worse",
            "--format",
            "csv",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("4000.00,6000.00,2000.00,ReformIneffective"));
}
