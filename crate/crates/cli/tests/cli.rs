use std::io::Write;
use std::process::{Command, Output, Stdio};

fn crystalkit(args: &[&str], stdin: &str) -> Output {
    crystalkit_env(args, stdin, &[])
}

fn crystalkit_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_crystalkit"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("CRYSTALKIT_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    // The binary may exit before reading stdin (usage errors), so a broken pipe is fine.
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

const EMPTY3: &str = r#"{"kind":"ms","rank":3,"segments":[]}"#;

#[test]
fn f_on_empty_adds_a_box() {
    let o = crystalkit(&["apply", "f", "--index", "1"], EMPTY3);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "{\"kind\":\"ms\",\"rank\":3,\"segments\":[[1,1,1]]}\n");
}

#[test]
fn e_on_empty_is_null() {
    let o = crystalkit(&["apply", "e", "--index", "1"], EMPTY3);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "null\n"));
}

#[test]
fn sigma_chain_trace_matches_golden_output() {
    let o = crystalkit(&["apply", "sigma-chain", "--trace", "--input", &fixture("sigma_chain_example.json")], "");
    assert_eq!(code(&o), 0);
    let golden = std::fs::read_to_string(fixture("sigma_chain_trace.json")).unwrap();
    assert_eq!(stdout(&o), golden);
    let v: serde_json::Value = serde_json::from_str(&golden).unwrap();
    let a: Vec<u64> = v["trace"].as_array().unwrap().iter().map(|s| s["a"].as_u64().unwrap()).collect();
    assert_eq!(a, [2, 1, 3, 2, 4]);
    assert_eq!(
        v["result"].to_string(),
        r#"{"kind":"ms","rank":5,"segments":[[1,1,2],[1,2,1],[1,3,1],[1,4,1],[2,2,1],[2,3,2]]}"#
    );
}

#[test]
fn sigma_chain_without_trace_prints_the_result() {
    let o = crystalkit(&["apply", "sigma-chain", "--format", "text", "--input", &fixture("sigma_chain_example.json")], "");
    assert_eq!(stdout(&o), "[1,1]^2 [1,2] [1,3] [1,4] [2,2] [2,3]^2\n");
}

#[test]
fn operators_on_other_kinds() {
    let pbw = r#"{"kind":"pbw","rank":2,"exponents":[1,0,2]}"#;
    let o = crystalkit(&["apply", "f", "-i", "1"], pbw);
    assert_eq!(stdout(&o), "{\"kind\":\"pbw\",\"rank\":2,\"exponents\":[2,0,2]}\n");
    let o = crystalkit(&["apply", "f*", "-i", "2"], pbw);
    assert_eq!(stdout(&o), "{\"kind\":\"pbw\",\"rank\":2,\"exponents\":[1,0,3]}\n");
    let tab = r#"{"kind":"tab","rank":1,"rows":[[1]]}"#;
    let o = crystalkit(&["apply", "f", "-i", "1"], tab);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "null\n"));
    let o = crystalkit(&["apply", "e", "-i", "1", "--format", "text"], tab);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn invalid_op_kind_combinations_are_usage_errors() {
    let tab = r#"{"kind":"tab","rank":2,"rows":[[0]]}"#;
    assert_eq!(code(&crystalkit(&["apply", "f*", "-i", "1"], tab)), 1);
    assert_eq!(code(&crystalkit(&["apply", "flip"], tab)), 1);
    let pbw = r#"{"kind":"pbw","rank":2,"exponents":[0,0,0]}"#;
    assert_eq!(code(&crystalkit(&["apply", "sigma", "-i", "1"], pbw)), 1);
    assert_eq!(code(&crystalkit(&["apply", "f"], EMPTY3)), 1);
    assert_eq!(code(&crystalkit(&["apply", "f", "-i", "4"], EMPTY3)), 1);
    assert_eq!(code(&crystalkit(&["apply", "flip", "-i", "1"], EMPTY3)), 1);
    assert_eq!(code(&crystalkit(&["apply", "frobnicate"], EMPTY3)), 1);
}

#[test]
fn parse_and_validation_exit_codes() {
    assert_eq!(code(&crystalkit(&["apply", "f", "-i", "1"], "{\"kind\":")), 2);
    assert_eq!(code(&crystalkit(&["apply", "f", "-i", "1"], r#"{"kind":"ms","rank":2,"segs":[]}"#)), 2);
    let bad = r#"{"kind":"ms","rank":2,"segments":[[2,1,1]]}"#;
    assert_eq!(code(&crystalkit(&["apply", "f", "-i", "1"], bad)), 3);
    let unsorted = r#"{"kind":"ms","rank":2,"segments":[[2,2,1],[1,1,1]]}"#;
    assert_eq!(code(&crystalkit(&["apply", "f", "-i", "1"], unsorted)), 3);
    let tab = r#"{"kind":"tab","rank":2,"rows":[[1,0]]}"#;
    assert_eq!(code(&crystalkit(&["apply", "f", "-i", "1"], tab)), 3);
    assert_eq!(code(&crystalkit(&["apply", "f", "-i", "1", "--rank", "2"], EMPTY3)), 3);
}

#[test]
fn convert_pairs() {
    let o = crystalkit(&["convert", "--to", "ms"], r#"{"kind":"pbw","rank":2,"exponents":[1,0,2]}"#);
    assert_eq!(stdout(&o), "{\"kind\":\"ms\",\"rank\":2,\"segments\":[[1,1,1],[2,2,2]]}\n");
    let o = crystalkit(&["convert", "--to", "pbw"], r#"{"kind":"ms","rank":2,"segments":[[1,1,1],[2,2,2]]}"#);
    assert_eq!(stdout(&o), "{\"kind\":\"pbw\",\"rank\":2,\"exponents\":[1,0,2]}\n");
    let fig = r#"{"kind":"tab","rank":3,"rows":[[0,1,2,3],[1,2,3],[2,3]]}"#;
    let o = crystalkit(&["convert", "--to", "ms", "--format", "text"], fig);
    assert_eq!(stdout(&o), "[1,1] [1,2] [1,3] [2,2] [2,3] [3,3]\n");
    assert_eq!(code(&crystalkit(&["convert", "--to", "tab"], EMPTY3)), 1);
}

#[test]
fn round_trip_through_pbw() {
    let listing = stdout(&crystalkit(&["enumerate", "ms", "--rank", "3", "--max-size", "4"], ""));
    let docs: Vec<&str> = listing.lines().collect();
    assert_eq!(docs.len(), 62);
    for doc in docs.iter().take(100) {
        let pbw = stdout(&crystalkit(&["convert", "--to", "pbw"], doc));
        let back = stdout(&crystalkit(&["convert", "--to", "ms"], &pbw));
        assert_eq!(back.trim_end(), *doc);
    }
}

#[test]
fn verify_exit_codes_and_reports() {
    let o = crystalkit(&["verify", "ks", "--rank", "2", "--max-size", "8"], "");
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["elements"], 95);
    assert_eq!(code(&crystalkit(&["verify", "sigma-shift", "--rank", "3", "--max-size", "8"], "")), 0);
    let o = crystalkit(&["verify", "embedding", "--rank", "2", "--shape", "2,1"], "");
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["elements"], 8);
    assert_eq!(code(&crystalkit(&["verify", "nope", "--rank", "2", "--max-size", "2"], "")), 1);
    assert_eq!(code(&crystalkit(&["verify", "ks", "--rank", "2"], "")), 1);
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = crystalkit(&["verify", "bracket-count", "--rank", "3", "--max-size", "5", "--output", path.to_str().unwrap()], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.ends_with("}\n"));
    assert!(text.contains("\"suite\": \"bracket_count\""));
}

#[test]
fn budget_refusals_exit_4() {
    assert_eq!(code(&crystalkit(&["graph", "ms", "--rank", "4", "--max-size", "30"], "")), 4);
    let capped = [("CRYSTALKIT_BUDGET", "3")];
    assert_eq!(code(&crystalkit_env(&["verify", "ks", "--rank", "2", "--max-size", "4"], "", &capped)), 4);
    assert_eq!(code(&crystalkit_env(&["verify", "ks", "--rank", "2", "--max-size", "3"], "", &capped)), 0);
    let bad = [("CRYSTALKIT_BUDGET", "lots")];
    assert_eq!(code(&crystalkit_env(&["verify", "ks", "--rank", "2", "--max-size", "3"], "", &bad)), 1);
}

#[test]
fn graphs() {
    let o = crystalkit(&["graph", "ms", "--rank", "1", "--max-size", "2", "--format", "dot"], "");
    assert_eq!(
        stdout(&o),
        "digraph crystal {\n  n0 [label=\"∅\"];\n  n1 [label=\"[1,1]\"];\n  n2 [label=\"[1,1]^2\"];\n  n0 -> n1 [label=\"f1\"];\n  n1 -> n2 [label=\"f1\"];\n}\n"
    );
    let o = crystalkit(&["graph", "tab", "--shape", "1", "--rank", "2", "--format", "json"], "");
    let g: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((g["nodes"].as_array().unwrap().len(), g["edges"].as_array().unwrap().len()), (3, 2));
    let o = crystalkit(&["graph", "ms", "--rank", "2", "--max-size", "2", "--format", "json"], "");
    let g: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(g["nodes"].as_array().unwrap().len(), 7);
    let o = crystalkit(&["graph", "ms", "--rank", "2", "--max-size", "1", "--star"], "");
    assert!(stdout(&o).contains("[label=\"f2*\", style=dashed]"));
    let again = crystalkit(&["graph", "ms", "--rank", "2", "--max-size", "1", "--star"], "");
    assert_eq!(o.stdout, again.stdout);
    assert_eq!(code(&crystalkit(&["graph", "tab", "--shape", "1", "--rank", "2", "--star"], "")), 1);
    assert_eq!(code(&crystalkit(&["graph", "ms", "--rank", "2", "--max-size", "1", "--format", "text"], "")), 1);
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(code(&crystalkit(&["--help"], "")), 0);
    assert_eq!(code(&crystalkit(&["--version"], "")), 0);
    assert_eq!(code(&crystalkit(&[], "")), 1);
}
