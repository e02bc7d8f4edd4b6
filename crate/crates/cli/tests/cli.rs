use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use cliquerep::artifact::{representation_from_json, CliqueListArtifact};
use cliquerep::format::parse_edge_list;
use cliquerep::{validate_partition, validate_representation};
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cliquerep"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, content: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, content).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K3: &str = "n=3\n0 1\n1 2\n0 2\n";

#[test]
fn k22_greedy_has_four_cliques() {
    let dir = TempDir::new().unwrap();
    // K_{2,2} with parts {0,1} and {2,3}
    let g = write(&dir, "k22.g6", "C]\n");
    let out = run(&["partition", s(&g), "--method", "greedy"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["cliques"].as_array().unwrap().len(), 4);
    assert_eq!(doc["ordered"], true);
}

#[test]
fn sweep_n4_is_clean() {
    let out = run(&["sweep", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["violations"].as_array().unwrap().len(), 0);
    assert_eq!(doc["graphs_checked"], 64);
    assert_eq!(doc["strategies"].as_array().unwrap().len(), 11);
}

#[test]
fn verify_names_uncovered_pair() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k3.el", K3);
    let bad = write(
        &dir,
        "bad.json",
        r#"{"n":3,"ordered":false,"cliques":[[0,1],[1,2]]}"#,
    );
    let out = run(&["verify", "partition", s(&g), s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    assert_eq!(doc["valid"], false);
    let v = &doc["violations"][0];
    assert_eq!((v["u"].as_u64(), v["v"].as_u64()), (Some(0), Some(2)));
}

#[test]
fn verify_accepts_valid_artifacts() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k3.el", K3);
    let good = write(
        &dir,
        "good.json",
        r#"{"n":3,"ordered":true,"cliques":[[0,1,2]]}"#,
    );
    let path = write(&dir, "p3.el", "n=3\n0 1\n1 2\n");
    let path_good = write(
        &dir,
        "p3.json",
        r#"{"n":3,"ordered":true,"cliques":[[0,1],[1,2]]}"#,
    );
    for kind in ["partition", "greedy"] {
        assert_eq!(
            run(&["verify", kind, s(&g), s(&good)]).status.code(),
            Some(0),
            "{kind}"
        );
        // all three triangle vertices get the same set
        let strict = run(&["verify", kind, s(&g), s(&good), "--require-distinct"]);
        assert_eq!(strict.status.code(), Some(1), "{kind}");
        let out = run(&[
            "verify",
            kind,
            s(&path),
            s(&path_good),
            "--require-distinct",
        ]);
        assert_eq!(out.status.code(), Some(0), "{kind}");
    }
}

#[test]
fn require_distinct_flags_duplicates() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k3.el", K3);
    let rep = write(
        &dir,
        "r.json",
        r#"{"n":3,"ground_size":1,"sets":[[0],[0],[0]]}"#,
    );
    let plain = run(&["verify", "representation", s(&g), s(&rep)]);
    assert_eq!(plain.status.code(), Some(0));
    let strict = run(&[
        "verify",
        "representation",
        s(&g),
        s(&rep),
        "--require-distinct",
    ]);
    assert_eq!(strict.status.code(), Some(1));
    assert_eq!(
        stdout_json(&strict)["violations"][0]["kind"],
        "duplicate_class"
    );
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad_graph = write(&dir, "x.el", "0 1\n");
    let out = run(&["partition", s(&bad_graph), "--method", "greedy"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "{err}");
    assert!(err.contains("line 1"), "{err}");

    let g = write(&dir, "k3.el", K3);
    let junk = write(&dir, "junk.json", "{not json");
    assert_eq!(
        run(&["verify", "partition", s(&g), s(&junk)]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["partition", "/nonexistent.g6", "--method", "erdos"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["sweep", "--n", "9"]).status.code(), Some(2));
    assert_eq!(
        run(&["partition", s(&g), "--method", "greedy", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "partition",
            s(&g),
            "--method",
            "greedy",
            "--strategy",
            "random"
        ])
        .status
        .code(),
        Some(2)
    );

    let big = write(&dir, "big.el", "n=12\n0 1\n");
    assert_eq!(run(&["oracle", "cp", s(&big)]).status.code(), Some(2));

    let out = bin()
        .args(["sweep", "--n", "4"])
        .env("CLIQUEREP_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let g = write(
        &dir,
        "g.el",
        "n=7\n0 1\n0 2\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n1 4\n",
    );
    let cases: [&[&str]; 4] = [
        &[
            "partition",
            s(&g),
            "--method",
            "greedy",
            "--strategy",
            "random",
            "--seed",
            "7",
        ],
        &["represent", s(&g), "--method", "erdos", "--augment"],
        &["partition", s(&g), "--method", "erdos", "--output", "dot"],
        &["oracle", "cp", s(&g)],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
    let one = bin()
        .args(["sweep", "--n", "5", "--seeds", "3"])
        .env("CLIQUEREP_THREADS", "1")
        .output()
        .unwrap();
    let many = bin()
        .args(["sweep", "--n", "5", "--seeds", "3"])
        .env("CLIQUEREP_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn emitted_json_round_trips() {
    let dir = TempDir::new().unwrap();
    let text = "n=6\n0 1\n0 2\n1 2\n2 3\n3 4\n";
    let g = write(&dir, "g.el", text);
    let graph = parse_edge_list(text).unwrap();

    for method in ["greedy", "erdos"] {
        let out = run(&["partition", s(&g), "--method", method]);
        let a = CliqueListArtifact::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
        assert_eq!(
            a.to_json() + "\n",
            String::from_utf8(out.stdout.clone()).unwrap()
        );
        assert!(validate_partition(&graph, &a.into_partition()).is_empty());
        let saved = write(&dir, "p.json", std::str::from_utf8(&out.stdout).unwrap());
        assert_eq!(
            run(&["verify", "partition", s(&g), s(&saved)])
                .status
                .code(),
            Some(0)
        );

        let out = run(&["represent", s(&g), "--method", method, "--augment"]);
        let r = representation_from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
        assert!(validate_representation(&graph, &r, true).is_valid());
        let saved = write(&dir, "r.json", std::str::from_utf8(&out.stdout).unwrap());
        let check = run(&[
            "verify",
            "representation",
            s(&g),
            s(&saved),
            "--require-distinct",
        ]);
        assert_eq!(check.status.code(), Some(0));
    }

    let out = run(&["oracle", "omega", s(&g)]);
    let doc = stdout_json(&out);
    assert_eq!(doc["kind"], "omega");
    let r = representation_from_json(&doc["witness"].to_string()).unwrap();
    assert_eq!(r.ground_size() as u64, doc["value"].as_u64().unwrap());
    assert!(validate_representation(&graph, &r, true).is_valid());
}

#[test]
fn stdin_and_sniffing() {
    let out = run_stdin(&["oracle", "cp", "-"], "C~\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["value"], 1);

    let out = run_stdin(&["oracle", "cp", "-"], "# triangle\nn=3\n0 1\n1 2\n0 2\n");
    assert_eq!(stdout_json(&out)["value"], 1);

    let out = run_stdin(&["oracle", "cp", "-", "--format", "graph6"], "n=3\n");
    assert_eq!(out.status.code(), Some(2));

    let dir = TempDir::new().unwrap();
    let a = write(
        &dir,
        "a.json",
        r#"{"n":4,"ordered":false,"cliques":[[0,1,2,3]]}"#,
    );
    let out = run_stdin(&["verify", "partition", "-", s(&a)], "C~");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        run_stdin(&["verify", "partition", "-", "-"], "C~")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn dot_matches_json_order() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.el", "n=5\n0 1\n1 2\n0 2\n3 4\n2 3\n");
    let json = run(&["partition", s(&g), "--method", "greedy"]);
    let dot = String::from_utf8(
        run(&["partition", s(&g), "--method", "greedy", "--output", "dot"]).stdout,
    )
    .unwrap();
    let a = CliqueListArtifact::from_json(std::str::from_utf8(&json.stdout).unwrap()).unwrap();
    for (k, c) in a.cliques.iter().enumerate() {
        for (u, v) in c.pairs() {
            assert!(
                dot.contains(&format!("{u} -- {v} [label=\"Q{k}\"")),
                "{dot}"
            );
        }
    }
}
