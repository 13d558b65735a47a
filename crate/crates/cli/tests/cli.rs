use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use nkd_core::census::connected_graphs_up_to;
use nkd_core::graph::io::{read_edge_list, read_graph6, write_graph6};
use serde_json::Value;
use tempfile::TempDir;

fn nkd(args: &[&str]) -> Output {
    run(args, None)
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nkd"))
        .args(args)
        .env_remove("NKD_ACCEPT_COST")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_family(dir: &TempDir, file: &str, args: &[&str]) -> PathBuf {
    let out = dir.path().join(file);
    let mut all = vec!["family"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", path(&out)]);
    let o = nkd(&all);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn family_outputs() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("h.g6");
    let o = nkd(&["family", "cliques-plus-edge", "--d", "2", "--m", "1", "--out", path(&out)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("distinguished edge: 6 7"));
    let g = read_graph6(fs::read_to_string(&out).unwrap().trim()).unwrap();
    assert_eq!(g.order(), 8);

    let chain = write_family(&dir, "chain.el", &["gadget-chain", "--copies", "2"]);
    let g = read_edge_list(&fs::read_to_string(&chain).unwrap()).unwrap();
    assert_eq!(g.order(), 12);

    let forced = write_family(&dir, "chain.txt", &["gadget-chain", "--copies", "2", "--format", "g6"]);
    assert_eq!(read_graph6(fs::read_to_string(&forced).unwrap().trim()).unwrap(), g);

    assert_eq!(code(&nkd(&["family", "blowup", "--d", "0", "--m", "1"])), 2);
    assert_eq!(code(&nkd(&["family", "blowup", "--d", "1"])), 2);
    assert_eq!(code(&nkd(&["family", "petersen", "--d", "1", "--m", "1"])), 2);

    let o = nkd(&["family", "blowup", "--d", "1", "--m", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(read_graph6(stdout(&o).trim()).unwrap().order(), 12);
}

#[test]
fn check_examples() {
    let dir = TempDir::new().unwrap();
    let h = write_family(&dir, "h.g6", &["cliques-plus-edge", "--d", "2", "--m", "1"]);
    let o = nkd(&["check", "--graph", path(&h), "--n", "2", "--k", "1", "--d", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("holds\n"));

    let o = nkd(&["check", "--graph", path(&h), "--n", "2", "--k", "1", "--d", "1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parity"));

    let minus = dir.path().join("minus.el");
    let g = read_graph6(fs::read_to_string(&h).unwrap().trim()).unwrap();
    fs::write(&minus, nkd_core::graph::io::write_edge_list(&g.delete_edge(6, 7).unwrap())).unwrap();
    let o = nkd(&["check", "--graph", path(&minus), "--n", "0", "--k", "1", "--d", "2", "--method", "both"]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.contains("witness: blocked-extension"), "{text}");
    assert!(text.contains("agreement: yes"));

    let o = nkd(&["check", "--graph", path(&minus), "--n", "0", "--k", "1", "--d", "2", "--json"]);
    assert_eq!(code(&o), 1);
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["holds"], false);
    assert_eq!(json["results"][0]["verdict"]["witness"]["kind"], "blocked-extension");
}

#[test]
fn check_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let h = write_family(&dir, "h.g6", &["cliques-plus-edge-cone", "--d", "2", "--m", "1"]);
    let args = ["check", "--graph", path(&h), "--n", "1", "--k", "1", "--d", "2", "--method", "both", "--json"];
    let a = nkd(&args);
    let b = nkd(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&a), code(&b));
}

#[test]
fn input_handling() {
    let dir = TempDir::new().unwrap();
    let g6 = write_graph6(&nkd_core::Graph::complete(6)).unwrap();
    let o = run(&["check", "--graph", "-", "--n", "0", "--k", "1", "--d", "0"], Some(&g6));
    assert_eq!(code(&o), 0);
    let o = run(&["check", "--graph", "-", "--format", "el", "--n", "0", "--k", "1", "--d", "0"], Some("4 3\n0 1\n1 2\n2 3\n"));
    assert_eq!(code(&o), 1);

    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "E~~\n").unwrap();
    let o = nkd(&["check", "--graph", path(&bad), "--n", "0", "--k", "0", "--d", "0", "--json"]);
    assert_eq!(code(&o), 3);
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["error"]["kind"], "decode");
    assert_eq!(json["exit"], 3);

    let o = nkd(&["check", "--graph", path(&dir.path().join("missing.g6")), "--n", "0", "--k", "0", "--d", "0"]);
    assert_eq!(code(&o), 2);
    assert_eq!(code(&nkd(&["check", "--graph", path(&bad), "--n", "-1", "--k", "0", "--d", "0"])), 2);
    assert_eq!(code(&nkd(&["check"])), 2);
}

#[test]
fn witness_examples() {
    let dir = TempDir::new().unwrap();
    let h = write_family(&dir, "h.g6", &["cliques-plus-edge", "--d", "2", "--m", "1"]);
    let base = ["witness", "--graph", path(&h), "--n", "2", "--k", "1", "--d", "2"];
    let o = nkd(&[&base[..], &["--edge", "6", "7", "--variant", "d1"]].concat());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("set: 0 1\n"));
    let o = nkd(&[&base[..], &["--edge", "0", "7", "--variant", "d1"]].concat());
    assert_eq!(code(&o), 2);

    let chain = write_family(&dir, "chain.g6", &["gadget-chain", "--copies", "2"]);
    let o = nkd(&["witness", "--graph", path(&chain), "--n", "1", "--k", "3", "--d", "3", "--edge", "10", "11", "--variant", "d3"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "no witness\n");

    let k6 = dir.path().join("k6.g6");
    fs::write(&k6, write_graph6(&nkd_core::Graph::complete(6)).unwrap()).unwrap();
    let o = nkd(&["witness", "--graph", path(&k6), "--n", "2", "--k", "1", "--d", "0", "--edge", "0", "1", "--variant", "d1", "--json"]);
    assert_eq!(code(&o), 1);
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(json["witness"].is_null());
}

#[test]
fn census_runs() {
    let stream: String = connected_graphs_up_to(6)
        .iter()
        .map(|g| write_graph6(g).unwrap() + "\n")
        .collect();
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("report.json");
    let o = run(&["census", "--jobs", "2", "--report", path(&report)], Some(&stream));
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).ends_with("census: pass\n"));
    let json: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["pass"], true);
    assert_eq!(json["graphs_examined"], 143);
    assert_eq!(json["theorems"].as_array().unwrap().len(), 11);

    let input = dir.path().join("six.g6");
    fs::write(&input, &stream).unwrap();
    let o = nkd(&["census", "--input", path(&input), "--theorems", "a3,D1", "--json"]);
    assert_eq!(code(&o), 0);
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["theorems"][1]["theorem"], "D1");

    let o = run(&["census"], Some(""));
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(&["census", "--max-order", "30"], Some(""))), 2);
    assert_eq!(code(&run(&["census", "--max-order", "30", "--accept-cost"], Some(""))), 0);
    assert_eq!(code(&run(&["census", "--theorems", "Z9"], Some(""))), 2);
    assert_eq!(code(&run(&["census"], Some("C~\nnot graph6\n"))), 3);
}
