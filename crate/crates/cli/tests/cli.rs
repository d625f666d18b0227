use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn wfano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wfano"))
        .args(args)
        .env_remove("WFANO_COLOR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_file(name: &str, contents: &[u8]) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wfano-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn classify_a4_pair_has_link() {
    let out = wfano(&["classify", "--genus", "5", "--degree", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "classify --genus 5 --degree 8");
    assert_eq!(v["result"]["aset"], "A4");
    assert_eq!(v["result"]["link"]["target"], "(5,8) ⊂ P³");
    assert_eq!(v["result"]["link"]["has_flop"], true);
}

#[test]
fn classify_text_format() {
    let out = wfano(&[
        "classify", "--genus", "3", "--degree", "6", "--format", "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("weak-fano-unconditional") || text.contains("fano-conditional"));
    assert!(!text.contains('\x1b'));

    let colored = Command::new(env!("CARGO_BIN_EXE_wfano"))
        .args([
            "classify", "--genus", "3", "--degree", "6", "--format", "text",
        ])
        .env("WFANO_COLOR", "1")
        .output()
        .unwrap();
    assert!(String::from_utf8(colored.stdout)
        .unwrap()
        .contains("\x1b[1m"));
}

#[test]
fn negative_genus_is_invalid_input() {
    let out = wfano(&["classify", "--genus", "-1", "--degree", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_flag_prints_usage_and_exits_1() {
    let out = wfano(&["classify", "--genus", "1", "--degree", "3", "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert_eq!(wfano(&[]).status.code(), Some(1));
    assert_eq!(wfano(&["--help"]).status.code(), Some(0));
}

#[test]
fn cubic_ii_has_nine_rows() {
    let out = wfano(&["tables", "emit", "--table", "cubic-ii"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    let secants: Vec<i64> = rows
        .iter()
        .map(|r| r["four_secants"].as_i64().unwrap())
        .collect();
    assert_eq!(secants, [1, 6, 3, 1, 5, 2, 5, 1, 6]);
    let keys: Vec<&str> = rows[0]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(
        keys,
        [
            "category",
            "d",
            "dim_anti",
            "four_secants",
            "g",
            "k",
            "link",
            "mults"
        ]
    );
}

#[test]
fn key_order_is_fixed() {
    let out = wfano(&["tables", "emit", "--table", "cubic-i"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("schema_version") < pos("command"));
    assert!(pos("command") < pos("result"));
    assert!(pos("g") < pos("d") && pos("d") < pos("k") && pos("k") < pos("mults"));
    assert!(!text.contains("four_secants"));
}

#[test]
fn every_table_round_trips() {
    for table in ["1", "2", "cubic-i", "cubic-ii", "cubic-iii", "4"] {
        let out = wfano(&["tables", "emit", "--table", table]);
        assert_eq!(out.status.code(), Some(0), "emit {table}");
        let path = temp_file(&format!("table-{table}.json"), &out.stdout);
        let verify = wfano(&["tables", "verify", "--file", path.to_str().unwrap()]);
        assert_eq!(verify.status.code(), Some(0), "verify {table}");
        assert_eq!(json(&verify)["result"]["mismatches"], Value::Array(vec![]));
    }
}

#[test]
fn tampered_table_is_a_mismatch() {
    let out = wfano(&["tables", "emit", "--table", "cubic-iii"]);
    let text = String::from_utf8(out.stdout)
        .unwrap()
        .replacen("27", "26", 1);
    let path = temp_file("tampered.json", text.as_bytes());
    let verify = wfano(&["tables", "verify", "--file", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(2));
    assert_eq!(
        json(&verify)["result"]["mismatches"]
            .as_array()
            .unwrap()
            .len(),
        1
    );

    let garbage = temp_file("garbage.json", b"not json");
    let bad = wfano(&["tables", "verify", "--file", garbage.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tables", "emit", "--table", "1"][..],
        &["cubic", "enumerate"][..],
        &["quartic", "search", "--genus", "5", "--degree", "8"][..],
        &["tables", "emit", "--table", "4", "--format", "markdown"][..],
    ] {
        let a = wfano(args);
        let b = wfano(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn markdown_table() {
    let out = wfano(&[
        "tables",
        "emit",
        "--table",
        "cubic-iii",
        "--format",
        "markdown",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| 19 | 12 | 12 | (4,4,4,4,4,4) | 27 |"));
}

#[test]
fn cubic_enumerate_counts() {
    let count = |cat: &str| {
        json(&wfano(&["cubic", "enumerate", "--category", cat]))["result"]
            .as_array()
            .unwrap()
            .len()
    };
    assert_eq!(count("fano"), 4);
    assert_eq!(count("small"), 9);
    assert_eq!(count("divisorial"), 3);
    assert_eq!(count("all"), 16);
}

#[test]
fn cubic_classify() {
    let v = json(&wfano(&["cubic", "classify", "--class", "12;4,4,4,4,4,4"]));
    assert_eq!(v["result"]["category"], "weak-fano-divisorial");
    assert_eq!(v["result"]["four_secant_count"], 27);
    assert_eq!(
        wfano(&["cubic", "classify", "--class", "4;1,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        wfano(&["cubic", "classify", "--class", "garbage"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn quartic_commands() {
    let out = wfano(&["quartic", "verify-table4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["mismatches"], 0);
    assert_eq!(v["result"]["twisted_cubics"], 792);

    let v = json(&wfano(&[
        "quartic", "search", "--genus", "14", "--degree", "11",
    ]));
    let classes: Vec<&str> = v["result"]["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert!(classes.contains(&"10;3,3,3,3,3,2,2,2,2,2,2,2"));
}

#[test]
fn secants_and_linkage() {
    let v = json(&wfano(&["secants", "--genus", "14", "--degree", "11"]));
    assert_eq!(v["result"]["verdicts"][0]["possible"], false);
    assert_eq!(
        wfano(&["secants", "--genus", "0", "--degree", "1"])
            .status
            .code(),
        Some(1)
    );

    let v = json(&wfano(&[
        "linkage", "--genus", "15", "--degree", "11", "--n1", "3", "--n2", "4",
    ]));
    assert_eq!(v["result"]["residual"]["d"], 1);
    assert_eq!(v["result"]["secancy"], 5);
}

#[test]
fn points_classify() {
    let path = temp_file(
        "points.json",
        br#"[["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"],["1","1","1","1"]]"#,
    );
    let v = json(&wfano(&[
        "points",
        "classify",
        "--file",
        path.to_str().unwrap(),
    ]));
    assert_eq!(v["result"]["passes"], true);
    assert_eq!(v["result"]["numeric_verdict"], "candidate-weak-fano");
    assert_eq!(v["result"]["k3"], 24);

    let bad = temp_file("bad-points.json", br#"[["0","0","0","0"]]"#);
    let out = wfano(&["points", "classify", "--file", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let missing = wfano(&["points", "classify", "--file", "/nonexistent/points.json"]);
    assert_eq!(missing.status.code(), Some(1));
}
