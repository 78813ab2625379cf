use std::process::{Command, Output};

fn zollstock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zollstock")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = zollstock(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn products_and_involution() {
    assert_eq!(stdout(&["dot", "t1", "t1"]), "t1^2 + 2*t1*t2");
    assert_eq!(stdout(&["odot", "1", "t0+t1"]), "t0*t1 + t1^2 + 2*t1*t2");
    assert_eq!(stdout(&["eval", "t2*t1 + t1*t2"]), "2*t1*t2");
    assert_eq!(
        stdout(&["iota", "t0^2*t1"]),
        "t0^2*t1 + 2*t0*t1^2 + 4*t0*t1*t2 + t1^3 + 3*t1^2*t2 + 3*t1*t2^2 + 6*t1*t2*t3"
    );
}

#[test]
fn eval_lists_components() {
    assert_eq!(stdout(&["eval", "t0*t1 + t1*t2", "--components"]), "t0*t1 + t1*t2\n(1, t0*t1)\n(2, t1*t2)");
}

#[test]
fn basis_expansions() {
    assert_eq!(stdout(&["basis", "t1"]), "1 * (1 (*) 1)");
    assert_eq!(stdout(&["basis", "t0"]), "1 * (t0)");
    assert_eq!(stdout(&["basis", "--which", "iota-basis", "t0*t1 + t1^2 + 2*t1*t2"]), "1 * (1 (*) (t0+t1))");
}

#[test]
fn output_is_deterministic() {
    let args = ["basis", "t1*t2^2 + t0^2"];
    assert_eq!(stdout(&args), stdout(&args));
    let a = zollstock(&["verify", "ring", "--json", "--seed", "5"]);
    let b = zollstock(&["verify", "ring", "--json", "--seed", "5"]);
    let strip = |o: &Output| {
        String::from_utf8_lossy(&o.stdout).lines().filter(|l| !l.contains("duration_ms")).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn parse_errors_exit_2() {
    for args in [&["eval", "t2"][..], &["dot", "t1", "t1 +"], &["iota", "x3"], &["bogus"], &["verify", "nope"]] {
        let out = zollstock(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn verify_examples() {
    let out = stdout(&["verify", "dim", "--max-degree", "10"]);
    assert!(out.contains("11 checks, 11 passed, 0 failed"), "{out}");
    assert!(out.contains("count=1024"));
    stdout(&["verify", "identity", "--max-n", "6"]);
    stdout(&["verify", "vowa", "--dim", "4", "--max-arity", "3"]);
}

#[test]
fn verify_with_base_file() {
    let base = concat!(env!("CARGO_MANIFEST_DIR"), "/data/dual_numbers.base");
    let out = stdout(&["verify", "important", "--base", base, "--max-n", "2"]);
    assert!(out.contains("seed 0"));
    let missing = zollstock(&["verify", "important", "--base", "/nonexistent.base"]);
    assert_eq!(missing.status.code(), Some(2));
}
