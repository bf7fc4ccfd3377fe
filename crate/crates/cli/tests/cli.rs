use std::path::PathBuf;
use std::process::{Command, Output};

fn lindef(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lindef")).args(args).env("LINDEF_THREADS", "1").output().expect("run lindef")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("lindef-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn data(file: &str) -> String {
    format!("{}/../../data/{file}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn hilbert_of_veronese() {
    let o = lindef(&["hilbert", "--builtin", "v53"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1,30,45,5");
    let o = lindef(&["hilbert", "--veronese", "5", "3"]);
    assert_eq!(stdout(&o).trim(), "1,30,45,5");
}

#[test]
fn certify_roos_succeeds() {
    let o = lindef(&["certify", "--witness", &data("roos.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("certified"));
}

#[test]
fn corrupted_witness_exits_one() {
    let text = std::fs::read_to_string(data("roos.json")).unwrap();
    let bad = text.replacen("\"x-z\"", "\"x-y\"", 1);
    assert_ne!(bad, text);
    let dir = scratch("corrupt");
    let p = dir.join("bad.json");
    std::fs::write(&p, bad).unwrap();
    let o = lindef(&["certify", "--witness", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("refuted"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lindef(&["certify", "--bogus"]).status.code(), Some(2));
    assert_eq!(lindef(&["hilbert"]).status.code(), Some(2));
    assert_eq!(lindef(&["certify", "--witness", "/nonexistent/w.json"]).status.code(), Some(2));
    assert_eq!(lindef(&["colon", "--builtin", "roos", "--by", "x+"]).status.code(), Some(2));
}

#[test]
fn json_output_carries_manifest() {
    let dir = scratch("json");
    let o = lindef(&["--format", "json", "--out", dir.to_str().unwrap(), "hilbert", "--builtin", "s36"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["manifest"]["command"], "hilbert");
    assert_eq!(v["manifest"]["algebra_spec_sha256"].as_str().unwrap().len(), 64);
    assert!(dir.join("manifest.json").exists());
    assert!(dir.join("hilbert.json").exists());
}

#[test]
fn obstruction_and_colon() {
    let o = lindef(&["obstruction", "--builtin", "s36"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("h(-1) = 1"));
    let o = lindef(&["colon", "--builtin", "roos", "--by", "x-z"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn residue_field_resolution_over_roos() {
    let o = lindef(&["--format", "json", "resolve", "--builtin", "roos", "--cutoff", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let s = v["result"].to_string();
    assert!(s.contains("12"), "{s}");
}

#[test]
fn search_writes_witnesses() {
    let dir = scratch("search");
    let out = dir.join("witnesses.json");
    let o = lindef(&["search", "--builtin", "roos", "--pool=-1,1", "--max-support", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let ws: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(ws.as_array().unwrap().len(), 1);
}

#[test]
fn reproduce_roos() {
    let o = lindef(&["reproduce", "roos", "--search-seconds", "60"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("1/1 cases reproduced"));
}
