use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn termrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_termrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn ryser(m: [u32; 3], ell: usize) -> String {
    let [a, b, c] = m;
    format!(
        r#"{{"mode":"ryser","s":["s1","s2","s3"],"t":["t1","t2","t3"],
        "m_s":{{"s1":{a},"s2":{b},"s3":{c}}},"m_t":{{"t1":{a},"t2":{b},"t3":{c}}},"ell":{ell}}}"#
    )
}

const ORE_K22: &str = r#"{"mode":"ore","s":["s1","s2"],"t":["t1","t2"],
    "m_s":{"s1":1,"s2":1},"m_t":{"t1":1,"t2":1}}"#;

const TERM_RANK: &str = r#"{"mode":"ryser_gen","s":["a","b","c"],"t":["x","y","z"],
    "h0":[["a","x"]],
    "m_s":{"a":0,"b":1,"c":1},"m_t":{"x":0,"y":1,"z":1},
    "matroid_s":{"kind":"uniform","k":2},"matroid_t":{"kind":"uniform","k":2}}"#;

#[test]
fn check_feasible_ryser_exits_zero_with_matching() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "ok.json", &ryser([2, 1, 1], 3));
    let o = termrank(&["check", f.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&o);
    assert_eq!(r["verdict"], "feasible");
    assert_eq!(r["witness"]["matching"].as_array().unwrap().len(), 3);
}

#[test]
fn check_infeasible_ryser_exits_one_with_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.json", &ryser([2, 2, 0], 3));
    let o = termrank(&["check", f.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let c = &json(&o)["certificate"];
    assert_eq!(c["x"], serde_json::json!(["s1", "s2"]));
    assert_eq!(c["y"], serde_json::json!([]));
    assert!(c["lhs"].as_i64().unwrap() > c["rhs"].as_i64().unwrap());
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "broken.json", "{\"mode\": ");
    assert_eq!(code(&termrank(&["check", f.to_str().unwrap()])), 2);

    let f = write(
        dir.path(),
        "path.json",
        r#"{"mode":"ore","s":["a"],"t":["b"],"h0":[["a","zz"]]}"#,
    );
    let o = termrank(&["check", f.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("h0[0][1]"));

    assert_eq!(code(&termrank(&["check", "/nonexistent/file.json"])), 2);
    let f = write(dir.path(), "ok.json", ORE_K22);
    assert_eq!(
        code(&termrank(&["check", f.to_str().unwrap(), "--mode", "nope"])),
        2
    );
}

#[test]
fn size_cap_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k22.json", ORE_K22);
    let o = Command::new(env!("CARGO_BIN_EXE_termrank"))
        .args(["check", f.to_str().unwrap()])
        .env("TERMRANK_MAX_GROUND", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn solve_ore_k22_gives_a_perfect_matching() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k22.json", ORE_K22);
    for route in ["cover", "brute", "both"] {
        let o = termrank(&["solve", f.to_str().unwrap(), "--route", route]);
        assert_eq!(
            code(&o),
            0,
            "{route}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        let edges = json(&o)["witness"]["edges"].as_array().unwrap().clone();
        assert_eq!(edges.len(), 2);
        let mut s: Vec<_> = edges
            .iter()
            .map(|e| e[0].as_str().unwrap().to_owned())
            .collect();
        let mut t: Vec<_> = edges
            .iter()
            .map(|e| e[1].as_str().unwrap().to_owned())
            .collect();
        s.sort();
        t.sort();
        assert_eq!(s, ["s1", "s2"]);
        assert_eq!(t, ["t1", "t2"]);
    }
}

#[test]
fn solve_term_rank_lists_matching_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "tr.json", TERM_RANK);
    let out = dir.path().join("result.json");
    let o = termrank(&["solve", f.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["witness"]["matching"].as_array().unwrap().len(), 2);
    let v = termrank(&["verify", f.to_str().unwrap(), out.to_str().unwrap()]);
    assert_eq!(code(&v), 0);

    // a tampered witness is rejected
    let mut bad = r.clone();
    bad["witness"]["edges"] = serde_json::json!([]);
    let badp = write(dir.path(), "bad.json", &bad.to_string());
    assert_eq!(
        code(&termrank(&[
            "verify",
            f.to_str().unwrap(),
            badp.to_str().unwrap()
        ])),
        1
    );
}

#[test]
fn solve_infeasible_echoes_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.json", &ryser([2, 2, 0], 3));
    let o = termrank(&["solve", f.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(json(&o)["certificate"].is_object());
}

#[test]
fn fuzz_is_clean_and_deterministic() {
    let args = [
        "fuzz", "--seed", "7", "--count", "1000", "--max-s", "4", "--max-t", "4",
    ];
    let a = termrank(&args);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stdout));
    assert!(json(&a)["counterexamples"].as_array().unwrap().is_empty());
    let b = termrank(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn injected_fault_writes_reproducers() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("repro");
    let o = termrank(&[
        "fuzz",
        "--count",
        "4",
        "--modes",
        "ore,ryser",
        "--inject-fault",
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
    let files: Vec<_> = std::fs::read_dir(&out).unwrap().collect();
    assert_eq!(files.len(), 4);
    // every reproducer is a loadable instance file
    for f in files {
        let p = f.unwrap().path();
        let c = code(&termrank(&["check", p.to_str().unwrap()]));
        assert!(c == 0 || c == 1, "{}", p.display());
    }
}

#[test]
fn selftest_quick_passes() {
    let o = termrank(&["selftest", "--quick"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8_lossy(&o.stdout);
    assert_eq!(text.lines().filter(|l| l.contains("[PASS]")).count(), 8);
}
