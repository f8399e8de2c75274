//! End-to-end tests of the binary: output shapes, exit codes, determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn heroix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heroix"))
        .args(args)
        .env_remove("HEROIX_MAX_N")
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name]
        .iter()
        .collect();
    path.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_then_chi() {
    let gen = heroix(&["gen", "d", "3"]);
    assert!(gen.status.success());
    assert!(stdout(&gen).starts_with("7\n"));

    let chi = heroix(&["chi", &fixture("d3.txt")]);
    assert!(chi.status.success());
    assert_eq!(stdout(&chi), "3\n");
}

#[test]
fn gen_matches_fixtures() {
    for (args, name) in [
        (vec!["gen", "d", "3"], "d3.txt"),
        (vec!["gen", "u", "3"], "u3.txt"),
        (vec!["gen", "n"], "n.txt"),
        (vec!["gen", "s", "3"], "s3.txt"),
        (vec!["gen", "delta2"], "delta2.txt"),
    ] {
        let out = heroix(&args);
        assert!(out.status.success());
        let expected = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(stdout(&out), expected, "{name}");
    }
}

#[test]
fn deterministic_output() {
    let a = heroix(&["enumerate", "5"]);
    let b = heroix(&["enumerate", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("classes: 12\n"));
}

#[test]
fn contains_and_exit_codes() {
    let out = heroix(&["contains", &fixture("d3.txt"), &fixture("u3.txt")]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "none\n");

    let out = heroix(&["contains", &fixture("d3.txt"), &fixture("c.txt")]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("embedding "));
}

#[test]
fn forest7_fixture_content_is_pinned() {
    // The worked 7-vertex example: identity ordering must have exactly the
    // backedges {0,2}, {1,4}, {3,5}.
    let text = std::fs::read_to_string(fixture("forest7.txt")).unwrap();
    let (t, order) = heroix_cli::format::parse(&text).unwrap();
    let b = heroix::forest::backedge_graph(&t, &order).unwrap();
    assert_eq!(b.edges(), [(0, 2), (1, 4), (3, 5)]);
    assert!(heroix::forest::is_forest_ordering(&t, &order).unwrap());
}

#[test]
fn forest_and_incomparable() {
    let out = heroix(&["forest", &fixture("delta2.txt")]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "not a forest tournament\n");

    let out = heroix(&["incomparable", &fixture("forest7.txt"), "--r", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("r-incomparable at r=5: verified"));

    // Delta_2 is not a forest tournament, so no map can be built.
    let out = heroix(&["incomparable", &fixture("delta2.txt"), "--r", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn coloring_algorithms() {
    let out = heroix(&["color", &fixture("u3.txt"), "--alg", "forest"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("colors "));

    let out = heroix(&["color", &fixture("delta2.txt"), "--alg", "forest"]);
    assert_eq!(out.status.code(), Some(1));

    let out = heroix(&["color", &fixture("s3.txt"), "--alg", "u3hero", "--n", "3"]);
    assert!(out.status.success());

    // U_3 violates its own precondition.
    let out = heroix(&["color", &fixture("u3.txt"), "--alg", "u3hero"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_reports_fields() {
    let out = heroix(&["classify", &fixture("u3.txt")]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in [
        "vertices: 5",
        "prime: yes",
        "member_D: no",
        "member_A: yes",
        "member_AF: yes",
        "hero: no",
        "minimal non-hero: yes",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in {text}");
    }
}

#[test]
fn survey_table() {
    let out = heroix(&["survey", "--forbid", "c", "--max-n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().count() >= 5);
    // C-free tournaments are transitive: max chi is 1 at every size.
    for line in text.lines().skip(1) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(fields[2], "1");
    }
}

#[test]
fn usage_errors_exit_two() {
    let out = heroix(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = heroix(&["chi", "/no/such/file"]);
    assert_eq!(out.status.code(), Some(2));

    let out = heroix(&["gen", "q", "9"]);
    assert_eq!(out.status.code(), Some(2));

    let out = heroix(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_files_exit_two_with_diagnostics() {
    let dir = std::env::temp_dir().join("heroix-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "2\n01\n10\n").unwrap();
    let out = heroix(&["chi", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("assigned twice"), "stderr: {err}");
}

#[test]
fn verify_core_passes() {
    let out = heroix(&["verify", "core"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("[pass] core.enumeration_counts"));
    assert!(text.contains("summary:"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn max_n_env_limits_enumeration() {
    let out = Command::new(env!("CARGO_BIN_EXE_heroix"))
        .args(["enumerate", "8"])
        .env("HEROIX_MAX_N", "6")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));

    let out = Command::new(env!("CARGO_BIN_EXE_heroix"))
        .args(["verify", "core"])
        .env("HEROIX_MAX_N", "6")
        .output()
        .expect("binary runs");
    // Checks that need n = 7 or 8 become undecided, never silently pass.
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("undecided"));
}
