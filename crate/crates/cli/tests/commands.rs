use std::path::Path;
use std::process::{Command, Output};

use cherednik_cli::{run, RunConfig};
use serde_json::Value;

fn bin(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cherednik"))
        .args(args)
        .env("CHEREDNIK_CACHE", cache)
        .output()
        .unwrap()
}

fn json(cache: &Path, args: &[&str]) -> Value {
    let out = bin(cache, args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn kostka_two_has_four_entries() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["kostka", "--n", "2"]);
    assert_eq!(v["schema"], 1);
    let e = v["entries"].as_object().unwrap();
    assert_eq!(e.len(), 4);
    assert_eq!(e["[1,1]|[2]"], "q");
    assert_eq!(e["[1,1]|[1,1]"], "t");
    assert!(dir.path().join("kostka_n2.json").exists());
    let swapped = json(dir.path(), &["kostka", "--n", "2", "--convention", "swapped"]);
    assert_eq!(swapped["entries"]["[1,1]|[2]"], "t");
}

#[test]
fn degree_one_character() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["char", "--n", "1", "--p", "5", "--c", "0/1", "--lambda", "[1]"]);
    assert_eq!(v["dim_limit"], "1/25");
    assert_eq!(v["lift"], 0);
    assert_eq!(v["routes_agree"], true);
    assert!(v["warnings"].as_array().unwrap().iter().any(|w| w.as_str().unwrap().contains("lift defaulted")));
}

#[test]
fn dunkl_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["check", "--n", "2", "--p", "5", "--c", "2/1", "--suite", "dunkl"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["c_mod_p"], 2);
}

#[test]
fn verma_reports_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["verma", "--n", "2", "--p", "5", "--c", "2", "--tau", "[2]"]);
    assert_eq!(v["dim_verma"], 50);
    let total: u64 = v["character"].as_object().unwrap().values().map(|x| x.as_u64().unwrap()).sum();
    assert_eq!(v["dim_simple"].as_u64().unwrap(), total);
}

#[test]
fn bad_inputs_fail_with_messages() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["char", "--n", "2", "--p", "9", "--c", "1", "--lambda", "[2]"][..],
        &["char", "--n", "3", "--p", "3", "--c", "1", "--lambda", "[3]"],
        &["char", "--n", "2", "--p", "5", "--c", "1", "--lambda", "[2,"],
        &["char", "--n", "2", "--p", "5", "--c", "0.5", "--lambda", "[2]"],
        &["verma", "--n", "2", "--p", "5", "--c", "1", "--tau", "[1]"],
    ] {
        let out = bin(dir.path(), args);
        assert!(!out.status.success(), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn bad_c_warns() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(dir.path(), &["verma", "--n", "2", "--p", "5", "--c", "1/2", "--tau", "[2]"]);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
    assert_eq!(v["c_mod_p"], 3);
}

#[test]
fn text_format_and_flag_precedence() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().to_str().unwrap();
    let out = bin(env_dir.path(), &["kostka", "--n", "1", "--format", "text", "--cache-dir", flag]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[1]|[1]: 1"), "{text}");
    assert!(flag_dir.path().join("kostka_n1.json").exists());
    assert!(!env_dir.path().join("kostka_n1.json").exists());
}

#[test]
fn library_entry_point() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let config = RunConfig::parse_from([
        "cherednik", "euler", "--n", "2", "--class", "skyscraper", "--mu", "[2]", "--cache-dir", d,
    ])
    .unwrap();
    let v: Value = serde_json::from_str(&run(&config).unwrap()).unwrap();
    assert_eq!(v["euler"], "1");
    assert_eq!(v["limit_at_one"], "1");
    assert!(RunConfig::parse_from(["cherednik", "kostka", "--n", "2", "--threads", "0"]).is_err());
}

#[test]
fn corrupt_cache_is_regenerated() {
    let dir = tempfile::tempdir().unwrap();
    let first = bin(dir.path(), &["kostka", "--n", "3"]);
    let path = dir.path().join("kostka_n3.json");
    let good = std::fs::read(&path).unwrap();
    std::fs::write(&path, b"{\"version\": 1, \"n\": 3, \"entries\": {}}").unwrap();
    let second = bin(dir.path(), &["kostka", "--n", "3"]);
    assert!(second.status.success());
    assert_eq!(second.stdout, first.stdout);
    assert!(String::from_utf8_lossy(&second.stderr).contains("replaced"));
    assert_eq!(std::fs::read(&path).unwrap(), good);
}
