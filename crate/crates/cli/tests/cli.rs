use std::fs;
use std::path::Path;
use std::process::Command;

use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
}

impl Run {
    fn result(&self) -> &str {
        self.stdout.lines().last().unwrap_or("")
    }
}

fn run(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_anticoord"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap();
}

fn setup() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(d, "k2.graph", "p 2 1 u\ne 1 2\n");
    write(d, "tri.graph", "p 3 3 u\ne 1 2\ne 2 3\ne 1 3\n");
    write(d, "path.graph", "p 3 2 u\ne 1 2\ne 2 3\n");
    write(d, "cyc3.graph", "p 3 3 d\ne 1 2\ne 2 3\ne 3 1\n");
    dir
}

#[test]
fn solve_k2() {
    let dir = setup();
    let r = run(dir.path(), &["solve", "k2.graph", "-k", "2", "--out", "sol"]);
    assert_eq!(r.code, 0);
    assert!(r.result().contains("welfare=2"), "{}", r.stdout);
    assert!(r.result().contains("converged=yes"));
    assert_eq!(
        fs::read_to_string(dir.path().join("sol.coloring")).unwrap(),
        "k 2\nv 1 2\nv 2 1\n"
    );
    assert_eq!(
        fs::read_to_string(dir.path().join("sol.trace")).unwrap(),
        "s 1 1 2 0 1\n"
    );
}

#[test]
fn solve_tight_instance_meets_pigeonhole_bound() {
    let dir = setup();
    assert_eq!(run(dir.path(), &["gen", "poa-tight", "3", "--out", "p3.graph"]).code, 0);
    let r = run(dir.path(), &["solve", "p3.graph", "-k", "3", "--init", "all1"]);
    assert_eq!(r.code, 0);
    let welfare: usize = r
        .result()
        .split_whitespace()
        .find_map(|kv| kv.strip_prefix("welfare="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(welfare >= 12);
}

#[test]
fn solve_directed_cycle_does_not_converge() {
    let dir = setup();
    let r = run(dir.path(), &["solve", "cyc3.graph", "-k", "2"]);
    assert_eq!(r.code, 3);
    assert!(r.result().starts_with("RESULT status=no-convergence"));
}

#[test]
fn check_examples() {
    let dir = setup();
    let d = dir.path();
    write(d, "112.col", "k 2\nv 1 1\nv 2 1\nv 3 2\n");
    write(d, "121.col", "k 2\nv 1 1\nv 2 2\nv 3 1\n");
    write(d, "11.col", "k 2\nv 1 1\nv 2 1\n");
    let r = run(d, &["check", "tri.graph", "112.col"]);
    assert_eq!(r.code, 0);
    assert!(r.result().contains("stability=stable-non-strict"));
    assert!(r.result().contains("welfare=4"));
    let r = run(d, &["check", "path.graph", "121.col"]);
    assert!(r.result().contains("stability=strictly-stable"));
    let r = run(d, &["check", "k2.graph", "11.col"]);
    assert!(r.result().contains("stability=unstable"));
    assert!(r.result().contains("unhappy=1,2"));
    let r = run(d, &["check", "k2.graph", "112.col"]);
    assert_eq!(r.code, 2);
}

#[test]
fn poa_of_tight_instances() {
    let dir = setup();
    let d = dir.path();
    for (k, want) in [("2", "PoA 2/1"), ("5", "PoA 5/4")] {
        run(d, &["gen", "poa-tight", k, "--out", "g.graph"]);
        let r = run(d, &["poa", "g.graph", "-k", k, "--out", "w"]);
        assert_eq!(r.code, 0);
        assert!(r.stdout.lines().any(|l| l == want), "{}", r.stdout);
        assert!(d.join("w.worst.coloring").exists());
    }
}

#[test]
fn no_equilibrium_and_budget_exit_codes() {
    let dir = setup();
    let d = dir.path();
    assert_eq!(run(d, &["enumerate", "cyc3.graph", "-k", "2"]).code, 5);
    assert_eq!(run(d, &["poa", "cyc3.graph", "-k", "2"]).code, 5);
    assert_eq!(run(d, &["enumerate", "tri.graph", "-k", "3", "--budget", "10"]).code, 4);
    let r = run(d, &["enumerate", "tri.graph", "-k", "2", "--mode", "strict", "--list"]);
    assert_eq!(r.code, 5);
    let r = run(d, &["enumerate", "path.graph", "-k", "2", "--list"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().filter(|l| l.starts_with("eq ")).count(), 2);
}

#[test]
fn gen_families() {
    let dir = setup();
    let d = dir.path();
    let r = run(d, &["gen", "poa-tight", "5"]);
    assert!(r.result().contains("n=10 m=25"));
    let r = run(d, &["gen", "cycle", "4", "--out", "c4.graph"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        fs::read_to_string(d.join("c4.graph"))
            .unwrap()
            .lines()
            .filter(|l| l.starts_with("e "))
            .count(),
        4
    );
    run(d, &["gen", "random", "10", "0.5", "--seed", "7", "--out", "a.graph"]);
    run(d, &["gen", "random", "10", "0.5", "--seed", "7", "--out", "b.graph"]);
    assert_eq!(
        fs::read(d.join("a.graph")).unwrap(),
        fs::read(d.join("b.graph")).unwrap()
    );
    assert_eq!(run(d, &["gen", "random", "5", "1.5"]).code, 2);
    assert_eq!(run(d, &["gen", "poa-tight", "1"]).code, 2);
}

#[test]
fn verify_examples() {
    let dir = setup();
    let d = dir.path();
    write(d, "f.cnf", "p cnf 3 1\n1 2 -3 0\n");
    write(d, "star.graph", "p 4 3 u\ne 1 2\ne 1 3\ne 1 4\n");
    write(d, "k4.graph", "p 4 6 u\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    write(d, "spec.mixed", "p 2 1 mixed\na 1 2 c\n");
    let cases = [
        (vec!["verify", "sat-strict2", "f.cnf"], "source=yes target=yes"),
        (vec!["verify", "bup-directed2", "star.graph"], "source=no target=no"),
        (
            vec!["verify", "kcolor-strict", "k4.graph", "-k", "3"],
            "source=no target=no",
        ),
        (
            vec!["verify", "proxy", "spec.mixed", "-k", "3"],
            "source=yes target=yes",
        ),
        (
            vec!["verify", "directed2-directedk", "cyc3.graph"],
            "source=no target=no",
        ),
    ];
    for (args, want) in cases {
        let r = run(d, &args);
        assert_eq!(r.code, 0, "{}", r.stdout);
        assert!(r.result().contains("verdict=MATCH"), "{}", r.stdout);
        assert!(r.result().ends_with(want), "{}", r.stdout);
    }
    assert_eq!(run(d, &["verify", "bup-directed2", "tri.graph"]).code, 2);
}

#[test]
fn reduce_writes_graph_and_roles() {
    let dir = setup();
    let d = dir.path();
    let r = run(
        d,
        &[
            "reduce",
            "kcolor-strict",
            "tri.graph",
            "--out",
            "red",
            "--dot",
            "red.dot",
        ],
    );
    assert_eq!(r.code, 0);
    let graph = fs::read_to_string(d.join("red.graph")).unwrap();
    assert!(graph.starts_with("p 6 9 u"));
    let roles = fs::read_to_string(d.join("red.roles")).unwrap();
    assert_eq!(roles.lines().count(), 6);
    assert!(roles.starts_with("r 1 original:1"));
    assert!(fs::read_to_string(d.join("red.dot")).unwrap().contains("xlabel"));

    let r = run(d, &["reduce", "directed2-directedk", "cyc3.graph", "--copies", "min"]);
    assert!(r.result().contains("n=8"), "{}", r.stdout);
    let r = run(d, &["reduce", "directed2-directedk", "cyc3.graph"]);
    assert!(r.result().contains("n=32"), "{}", r.stdout);
    assert_eq!(
        run(d, &["reduce", "directed2-directedk", "cyc3.graph", "--copies", "2"]).code,
        2
    );
}

#[test]
fn dot_rendering() {
    let dir = setup();
    let d = dir.path();
    write(d, "c.col", "k 2\nv 1 1\nv 2 2\nv 3 1\n");
    let r = run(d, &["dot", "cyc3.graph", "--coloring", "c.col"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("digraph G"));
    assert!(r.stdout.contains("1 -> 2;"));
}

#[test]
fn reports_are_deterministic() {
    let dir = setup();
    let d = dir.path();
    let args = ["solve", "tri.graph", "-k", "2", "--init", "random", "--seed", "5"];
    assert_eq!(run(d, &args).stdout, run(d, &args).stdout);
    let r = run(d, &args);
    assert!(r.stdout.lines().any(|l| l.starts_with("input: tri.graph sha256=")));
}

#[test]
fn bad_input_is_exit_two() {
    let dir = setup();
    let d = dir.path();
    write(d, "bad.graph", "p 2 2 u\ne 1 2\n");
    assert_eq!(run(d, &["solve", "bad.graph"]).code, 2);
    assert_eq!(run(d, &["solve", "missing.graph"]).code, 2);
    assert_eq!(run(d, &["solve", "k2.graph", "--init", "sideways"]).code, 2);
}
