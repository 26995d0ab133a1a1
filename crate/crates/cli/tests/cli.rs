use std::path::PathBuf;

use sing_cli::{execute, Failure, Report};
use sing_core::Error;

fn corpus(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name);
    p.to_string_lossy().into_owned()
}

fn scratch(name: &str, text: &str) -> String {
    let p = std::env::temp_dir().join(format!("sing-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, Report) {
    let mut argv = vec!["sing"];
    argv.extend_from_slice(args);
    execute(&argv)
}

#[test]
fn radical_betti_text() {
    let (code, rep) = run(&["radical", "--betti", &corpus("fifteen_planes.arr")]);
    assert_eq!(code, 0);
    assert!(rep.text.contains(" 9:     -   11   10\n"), "{}", rep.text);
    assert!(rep.text.ends_with("Tot:    1   11   10\n"), "{}", rep.text);
}

#[test]
fn hypothesis_witness() {
    let (code, rep) = run(&["hypothesis", &corpus("seven_planes.arr")]);
    assert_eq!(code, 0);
    assert_eq!(rep.data["holds"], false);
    let ws = rep.data["witnesses"].as_array().unwrap();
    assert!(!ws.is_empty());
    assert!(ws.iter().all(|w| w["plane"] == "x"));
}

#[test]
fn json_round_trip() {
    let (code, rep) = run(&["--json", "betti", "--of", "radical", &corpus("seven_planes.arr")]);
    assert_eq!(code, 0);
    let back: Report = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(back, Report { text: String::new(), ..rep.clone() });
    assert_eq!(back.schema, 1);
    assert_eq!(back.field, "p:32003");
}

#[test]
fn fields_agree() {
    for file in ["seven_planes.arr", "emb_pt.arr", "eight_planes.arr"] {
        for kind in ["jacobian", "radical", "top"] {
            let (_, p) = run(&["--field", "p:32003", "betti", "--of", kind, &corpus(file)]);
            let (_, q) = run(&["--field", "q", "betti", "--of", kind, &corpus(file)]);
            assert_eq!(q.field, "q");
            assert_eq!(p.data["betti"], q.data["betti"], "{file} {kind}");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["betti", "/nonexistent.arr"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["--field", "p:7", "lattice", &corpus("star.arr")]).0, 1);
    let bad = scratch("dup.arr", "vars: x y z w\nx\n2x\n");
    let (code, rep) = run(&["lattice", &bad]);
    assert_eq!(code, 1);
    assert!(rep.data["error"].as_str().unwrap().contains("lines 2 and 3"));
    assert_eq!(Failure::Core(Error::Limit("cap".into())).code(), 2);
    assert_eq!(Failure::Mismatch("rao".into()).code(), 1);
}

#[test]
fn liaison_add_verified() {
    let a = scratch("a.arr", "vars: x y z w\nx\ny\nz\n");
    let b = scratch("b.arr", "vars: x y z w\nw\nx + y + z + w\n");
    let (code, rep) = run(&["liaison-add", &a, &b, "--verify"]);
    assert_eq!(code, 0, "{}", rep.text);
    assert_eq!(rep.data["ok"], true);
    let (code, _) = run(&["liaison-add", &a, &a]);
    assert_eq!(code, 1);
}

#[test]
fn bdl_verified() {
    let (code, rep) = run(&["bdl", &corpus("seven_planes.arr"), "--planes", "2", "--verify"]);
    assert_eq!(code, 0, "{}", rep.text);
    assert_eq!(rep.data["checks"]["rao shift 2"], true);
}

#[test]
fn radical_construction() {
    let (code, rep) = run(&["construct-lr-radical", "--r", "1", "--h", "1", "--verify"]);
    assert_eq!(code, 0, "{}", rep.text);
    assert_eq!(rep.data["rao"], serde_json::json!([[5, 1]]));
}

#[test]
fn graph_commands() {
    let (code, rep) = run(&["triangles", &corpus("dodecahedron.graph")]);
    assert_eq!(code, 0);
    assert_eq!(rep.data["holds"], true);
    let (code, rep) = run(&["graphic", "--section", &corpus("octahedron.graph")]);
    assert_eq!(code, 0);
    assert_eq!(rep.data["planes"], 12);
    let text = rep.data["arrangement"].as_str().unwrap();
    assert!(text.starts_with("vars:"));
}

#[test]
fn corpus_subset() {
    let (code, rep) = run(&["corpus", "--dir", &corpus(""), "--only", "seven_planes"]);
    assert_eq!(code, 0, "{}", rep.text);
    assert_eq!(rep.data["entries"].as_array().unwrap().len(), 2);
}
