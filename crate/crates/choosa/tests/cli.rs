//! End-to-end checks of the `choosa` binary: exit codes, output shape and
//! structured-format reproducibility.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_choosa");

struct TempDir(PathBuf);

impl TempDir {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("choosa-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        TempDir(dir)
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.0.join(name);
        std::fs::write(&path, contents).unwrap();
        path
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(BIN).args(args).env(key, value).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

const TRIANGLE: &str = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
const K2: &str = "p edge 2 1\ne 1 2\n";

#[test]
fn solve_uncolorable_triangle_exits_1() {
    let dir = TempDir::new("tri");
    let g = dir.file("g.col", TRIANGLE);
    let l = dir.file(
        "l.txt",
        "lists general\n0 : 1 2\n1 : 1 2\n2 : 1 2\n",
    );
    let out = run(&["solve", arg(&g), arg(&l)]);
    assert_eq!(code(&out), 1, "{out:?}");
    assert_eq!(stdout(&out), "UNCOLORABLE\n");
}

#[test]
fn solve_k2_emits_coloring_and_exits_0() {
    let dir = TempDir::new("k2");
    let g = dir.file("g.col", K2);
    let l = dir.file("l.txt", "lists general\n0 : 1 2\n1 : 2 3\n");
    let out = run(&["solve", arg(&g), arg(&l)]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert_eq!(stdout(&out), "0:1 1:2\n");
}

#[test]
fn solve_diamond_interval_instance() {
    let dir = TempDir::new("diamond");
    let g = dir.file(
        "g.col",
        "p edge 4 5\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 3 4\n",
    );
    let l = dir.file(
        "l.txt",
        "lists interval\n0 2 4\n1 3 5\n2 1 3\n3 4 6\n",
    );
    let out = run(&["solve", arg(&g), arg(&l)]);
    assert_eq!(code(&out), 0, "{out:?}");
    let text = stdout(&out);
    // a coloring line v:c for each vertex
    assert_eq!(text.trim().split(' ').count(), 4, "{text}");
}

#[test]
fn malformed_graph_exits_2() {
    let dir = TempDir::new("bad");
    let g = dir.file("g.col", "e 1 2\n");
    let l = dir.file("l.txt", "lists general\n0 : 1\n1 : 1\n");
    let out = run(&["solve", arg(&g), arg(&l)]);
    assert_eq!(code(&out), 2, "{out:?}");
    assert!(!out.stderr.is_empty());
}

#[test]
fn malformed_lists_exit_2() {
    let dir = TempDir::new("badl");
    let g = dir.file("g.col", K2);
    let l = dir.file("l.txt", "0 : 1\n1 : 1\n");
    let out = run(&["solve", arg(&g), arg(&l)]);
    assert_eq!(code(&out), 2, "{out:?}");
}

#[test]
fn choosable_yes_and_no_with_witness() {
    let dir = TempDir::new("choose");
    let g = dir.file("g.col", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    let yes = run(&["choosable", arg(&g), "-k", "2"]);
    assert_eq!(code(&yes), 0, "{yes:?}");
    assert_eq!(stdout(&yes), "YES\n");

    let mut k24_text = String::from("p edge 6 8\n");
    for u in 1..=2 {
        for v in 3..=6 {
            k24_text.push_str(&format!("e {u} {v}\n"));
        }
    }
    let k24 = dir.file("k24.col", &k24_text);
    let no = run(&["choosable", arg(&k24), "-k", "2"]);
    assert_eq!(code(&no), 1, "{no:?}");
    let text = stdout(&no);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("NO"));
    assert_eq!(lines.next(), Some("lists general"));
    // witness: one size-2 list per vertex
    assert_eq!(lines.count(), 6);

    let interval = run(&["choosable", arg(&k24), "-k", "2", "--mode", "interval"]);
    assert_eq!(code(&interval), 0, "{interval:?}");
}

#[test]
fn cap_exceeded_exits_3_and_force_overrides() {
    let dir = TempDir::new("cap");
    let g = dir.file("g.col", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    let capped = run(&["choosable", arg(&g), "-k", "2", "--cap", "10"]);
    assert_eq!(code(&capped), 3, "{capped:?}");
    assert!(stdout(&capped).starts_with("CAP EXCEEDED"));

    let forced = run(&["choosable", arg(&g), "-k", "2", "--cap", "10", "--force"]);
    assert_eq!(code(&forced), 0, "{forced:?}");

    let env_capped = run_env(&["choosable", arg(&g), "-k", "2"], "CHOOSA_CAP", "10");
    assert_eq!(code(&env_capped), 3, "{env_capped:?}");
    // an explicit --cap wins over the environment
    let widened = run_env(
        &["choosable", arg(&g), "-k", "2", "--cap", "100000000"],
        "CHOOSA_CAP",
        "10",
    );
    assert_eq!(code(&widened), 0, "{widened:?}");
}

#[test]
fn chromatic_and_choice_numbers() {
    let dir = TempDir::new("nums");
    let g = dir.file("g.col", TRIANGLE);
    let chrom = run(&["chromatic", arg(&g)]);
    assert_eq!(code(&chrom), 0);
    assert!(stdout(&chrom).starts_with("chromatic number 3\n"));

    let cn = run(&["choice-number", arg(&g)]);
    assert_eq!(code(&cn), 0);
    assert_eq!(stdout(&cn), "choice number 3\n");

    let gm = run(&["gm-choice-number", arg(&g)]);
    assert_eq!(code(&gm), 0);
    assert_eq!(stdout(&gm), "gm choice number 3\n");

    let fast = run(&["gm-choice-number", arg(&g), "--mode", "fast"]);
    assert_eq!(code(&fast), 0);
    assert_eq!(stdout(&fast), "gm choice number 3\n");
}

#[test]
fn generate_output_round_trips() {
    for args in [
        vec!["generate", "complete-bipartite", "2", "4"],
        vec!["generate", "cycle", "5"],
        vec!["generate", "complete", "4"],
        vec!["generate", "tree", "7", "--seed", "3"],
        vec!["generate", "outerplanar", "8", "--seed", "3"],
        vec!["generate", "outerplanar", "8", "--seed", "3", "--submaximal"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 0, "{args:?}");
        let text = stdout(&out);
        assert!(text.starts_with("p edge "), "{args:?}: {text}");
        // feed it back through solve to prove it parses
        let dir = TempDir::new("gen");
        let g = dir.file("g.col", &text);
        let chrom = run(&["chromatic", arg(&g)]);
        assert_eq!(code(&chrom), 0, "{args:?}");
    }
}

#[test]
fn generate_rejects_bad_sizes() {
    assert_eq!(code(&run(&["generate", "cycle", "2"])), 2);
    assert_eq!(code(&run(&["generate", "complete-bipartite", "0", "3"])), 2);
}

#[test]
fn structured_format_is_reproducible() {
    let dir = TempDir::new("repro");
    let g = dir.file("g.col", TRIANGLE);
    let args = ["--format", "structured", "choosable", arg(&g), "-k", "3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(code(&b), 0);
    let strip = |out: &Output| -> Vec<String> {
        stdout(out)
            .lines()
            .filter(|l| !l.starts_with("elapsed_ms:"))
            .map(str::to_string)
            .collect()
    };
    assert_eq!(strip(&a), strip(&b));
    let text = stdout(&a);
    assert!(text.contains("command: choosable\n"), "{text}");
    assert!(text.contains("answer: YES\n"), "{text}");
    assert!(text.contains("graph.n: 3\n"), "{text}");
}

#[test]
fn verify_theorems_scope() {
    let out = run(&["verify-theorems", "--scope", "theorem4"]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(stdout(&out).contains("[PASS]"), "{out:?}");
    let bad = run(&["verify-theorems", "--scope", "nonsense"]);
    assert_eq!(code(&bad), 2);
}
