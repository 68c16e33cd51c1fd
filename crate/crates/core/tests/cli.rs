use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frieze")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("frieze-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn check_verdicts() {
    let ok = run(&["check", &data("square.fwc")]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("embeddable"));
    let bad = run(&["check", &data("square-rejected.fwc")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("p=3"));
}

#[test]
fn validate_documents() {
    assert_eq!(run(&["validate", &data("square.fwc")]).status.code(), Some(0));
    assert_eq!(run(&["validate", &data("decagon.tri")]).status.code(), Some(0));
    let broken = temp("ptolemy.fwc", r#"{"format": "fwc-v1", "n": 4, "rows": [["3", "5", "3"], ["3", "3"], ["3"]]}"#);
    let o = run(&["validate", &broken]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(0, 1, 2, 3)"));
    let garbage = temp("garbage.fwc", "not json");
    assert_eq!(run(&["validate", &garbage]).status.code(), Some(1));
    assert_eq!(run(&["validate", "/nonexistent/file.fwc"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["render", &data("square.fwc"), "--format", "png"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", &data("square.fwc"), "--max-n", "40"]).status.code(), Some(2));
}

#[test]
fn embed_is_deterministic_and_validates() {
    let args = ["embed", &data("square.fwc"), "--choices", &data("worked-example.choices")];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains(r#""y": ["5", "1", "3"]"#));
    assert!(text.contains(r#""y": ["3", "1", "7", "3"]"#));
    assert!(text.contains(r#""y": ["1", "1", "11", "5", "2"]"#));
    let saved = temp("embedding.json", &text);
    assert_eq!(run(&["validate", &saved]).status.code(), Some(0));
    assert_eq!(run(&["embed", &data("square-rejected.fwc")]).status.code(), Some(1));
}

#[test]
fn embed_all_writes_an_array() {
    let tri = temp("five.fwc", r#"{"format": "fwc-v1", "n": 3, "rows": [["5", "10"], ["5"]]}"#);
    let o = run(&["embed", &tri, "--all", "--limit", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let docs = v.as_array().unwrap();
    assert_eq!(docs.len(), 2);
    assert_ne!(docs[0]["frieze"], docs[1]["frieze"]);
    assert!(docs.iter().all(|d| d["format"] == "embedding-v1"));
}

#[test]
fn triangulation_round_trip_and_restriction() {
    let f = run(&["from-triangulation", &data("decagon.tri")]);
    assert_eq!(f.status.code(), Some(0));
    let fwc = temp("decagon.fwc", &stdout(&f));
    let t = run(&["to-triangulation", &fwc]);
    assert_eq!(stdout(&t).trim_end(), std::fs::read_to_string(data("decagon.tri")).unwrap().trim_end());
    let r = run(&["restrict", &fwc, "--vertices", "0,2,4,6"]);
    assert_eq!(stdout(&r), std::fs::read_to_string(data("square.fwc")).unwrap());
    assert_eq!(run(&["to-triangulation", &data("square.fwc")]).status.code(), Some(1));
}

#[test]
fn oracle_verdicts() {
    let tri = temp("tri.fwc", r#"{"format": "fwc-v1", "n": 3, "rows": [["1", "2"], ["1"]]}"#);
    let o = run(&["oracle", &tri, "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4-gon"));
    let capped = Command::new(env!("CARGO_BIN_EXE_frieze"))
        .args(["oracle", &tri, "--max-n", "5"])
        .env("FRIEZE_ENUMERATION_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn pattern_rows() {
    let o = run(&["pattern", &data("square.fwc"), "--rows", "2", "--first", "-1"]);
    assert_eq!(stdout(&o), "  -1: 0 12 2 2 0\n   0: 0 2 26 12 0\n");
}

#[test]
fn render_counts() {
    let svg = stdout(&run(&["render", &data("square.fwc"), "--format", "svg"]));
    assert_eq!(svg.matches(r#"class="vertex""#).count(), 4);
    assert_eq!(svg.matches(r#"class="segment"#).count(), 6);
    assert_eq!(svg.matches(r#"class="label""#).count(), 6);

    let tri = temp("one.fwc", r#"{"format": "fwc-v1", "n": 3, "rows": [["1", "1"], ["1"]]}"#);
    let dot = stdout(&run(&["render", &tri, "--format", "dot"]));
    assert_eq!(dot.matches("[label=\"").count(), 6);
    assert_eq!(dot.matches(" -- ").count(), 3);

    let decagon = stdout(&run(&["render", &data("decagon.tri"), "--format", "svg"]));
    assert_eq!(decagon.matches(r#"class="vertex""#).count(), 10);
    assert_eq!(decagon.matches(r#"class="segment diagonal heavy""#).count(), 7);

    let out = temp("out.svg", "");
    assert_eq!(run(&["render", &data("decagon.tri"), "--format", "svg", "-o", &out]).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), decagon);
}
