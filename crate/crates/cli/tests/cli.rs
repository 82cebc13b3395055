use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn vlink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vlink")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = vlink(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("vlink-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn catalog_show_and_list() {
    let v = json(&["catalog", "show", "trefoil"]);
    assert_eq!(v["code"], "O1+ U2+ O3+ U1+ O2+ U3+");
    assert!(v["notes"].as_str().unwrap().contains("trefoil"));
    let names: Vec<String> =
        json(&["catalog", "list"]).as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap().to_string()).collect();
    for n in ["unknot", "trefoil", "figure-eight", "virtual-trefoil", "kishino"] {
        assert!(names.contains(&n.to_string()), "{n}");
    }
    assert_eq!(vlink(&["catalog", "show", "nope"]).status.code(), Some(1));
}

#[test]
fn invariants_report() {
    let v = json(&["invariants", "trefoil", "--targets", "dihedral:3", "alexander:3,2,2"]);
    assert_eq!(v["counts"]["dihedral:3"]["total"], 9);
    assert_eq!(v["counts"]["alexander:3,2,2"]["kind"], "biquandle");
    assert_eq!(v["genus"], 0);
    assert_eq!(v["realizable"], true);
    assert_eq!(v["abelianization"]["text"], "Z");
    let k = json(&["invariants", "kishino"]);
    assert_eq!(k["genus"], 2);
    assert_eq!(k["counts"]["dihedral:3"]["total"], 3);
}

#[test]
fn output_is_deterministic_with_sorted_keys() {
    let args = ["invariants", "figure-eight", "--targets", "dihedral:5", "conj:S3", "alexander:5,2,3"];
    let (a, b) = (vlink(&args), vlink(&args));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let top: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
}

#[test]
fn orbit_reaches_unknot() {
    let v = json(&["move", "orbit", "O1+ U1+", "--depth", "1"]);
    assert!(v["codes"].as_array().unwrap().iter().any(|c| c == "()"));
    assert_eq!(v["truncated"], false);
    let capped = json(&["move", "orbit", "trefoil", "--depth", "2", "--cap", "50"]);
    assert_eq!(capped["truncated"], true);
    assert_eq!(capped["size"], 50);
}

#[test]
fn move_apply_keeps_invariants() {
    let targets = ["--targets", "dihedral:3", "dihedral:5", "alexander:3,2,2"];
    let before = json(&[&["invariants", "trefoil"][..], &targets[..]].concat());
    let moved = json(&["move", "apply", "trefoil", "--kind", "R2_insert", "--site", "3"]);
    let code = moved["result"].as_str().unwrap().to_string();
    let after = json(&[&["invariants", code.as_str()][..], &targets[..]].concat());
    assert_eq!(before["counts"], after["counts"]);
    let deleted = json(&["move", "apply", "O1+ U1+", "--kind", "R1_delete", "--site", r#"{"crossing": 1}"#]);
    assert_eq!(deleted["result"], "()");
}

#[test]
fn exit_codes() {
    assert_eq!(vlink(&["genus", "O1+ U2+"]).status.code(), Some(1));
    assert_eq!(vlink(&["invariants", "trefoil", "--targets", "bogus:3"]).status.code(), Some(2));
    assert_eq!(vlink(&["invariants", "trefoil", "--targets", "alexander:4,1,1"]).status.code(), Some(1));
    assert_eq!(vlink(&["present", "trefoil"]).status.code(), Some(2));
    assert_eq!(vlink(&["move", "apply", "trefoil", "--kind", "R9", "--site", "0"]).status.code(), Some(2));
    assert_eq!(vlink(&["move", "apply", "trefoil", "--kind", "R1_delete", "--site", "0"]).status.code(), Some(1));
    assert_eq!(vlink(&["tube", "();()"]).status.code(), Some(1));
    let err = String::from_utf8(vlink(&["invariants", "trefoil", "--targets", "bogus:3"]).stderr).unwrap();
    assert!(err.contains("--targets"));
}

#[test]
fn presentations_and_geometry() {
    let q = json(&["present", "trefoil", "--kind", "quandle"]);
    assert_eq!(q["generators"].as_array().unwrap().len(), 3);
    let g = json(&["present", "trefoil", "--kind", "group"]);
    assert_eq!(g["kind"], "group");
    assert_eq!(json(&["abelianize", "();()"])["free_rank"], 2);
    let t = json(&["tube", "trefoil"]);
    assert_eq!(t["ribbon"]["bases"], 3);
    let s = json(&["spin", "trefoil"]);
    assert_eq!(s["data"]["sheets"].as_array().unwrap().len(), 6);
    assert_eq!(s["data"]["realizability"], "spun");
    assert_eq!(json(&["genus", "virtual-trefoil"])["genus"], 1);
}

#[test]
fn files() {
    let ribbon = temp_file("ribbon.json", &json(&["tube", "trefoil"])["ribbon"].to_string());
    let p = json(&["ribbon-quandle", ribbon.to_str().unwrap()]);
    assert_eq!(p["generators"], serde_json::json!(["b1", "b2", "b3"]));
    assert_eq!(json(&["validate", ribbon.to_str().unwrap()])["kind"], "ribbon_data");

    let table = temp_file("d3.json", r#"{"n": 3, "op": [[0, 2, 1], [2, 1, 0], [1, 0, 2]]}"#);
    let spec = format!("table:{}", table.display());
    let v = json(&["invariants", "trefoil", "--targets", &spec]);
    assert_eq!(v["counts"][&spec]["total"], 9);
    assert_eq!(json(&["validate", table.to_str().unwrap()])["kind"], "quandle");

    let bad = temp_file("bad.json", r#"{"n": 2, "op": [[0, 0], [1, 1]], "inv_op": [[1, 1], [0, 0]]}"#);
    assert_eq!(vlink(&["validate", bad.to_str().unwrap()]).status.code(), Some(1));

    let group = temp_file("z3.json", r#"{"n": 3, "mul": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}"#);
    let conj = format!("conj:{}", group.display());
    assert_eq!(json(&["invariants", "trefoil", "--targets", &conj])["counts"][&conj]["total"], 3);
    let coset = format!("coset:{}:0:0", group.display());
    assert_eq!(json(&["invariants", "trefoil", "--targets", &coset])["counts"][&coset]["total"], 3);

    let code = temp_file("code.txt", "O1+ U2+ U1+ O2+\n");
    assert_eq!(json(&["validate", code.to_str().unwrap()])["crossings"], 2);
    assert_eq!(vlink(&["validate", "/nonexistent/x.json"]).status.code(), Some(1));
}
