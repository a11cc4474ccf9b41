use std::path::PathBuf;

use colorflip_cli::{run, EXIT_INPUT, EXIT_OK, EXIT_UNSATISFIABLE};
use tempfile::TempDir;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("colorflip").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no `{key}` in {out}"))
}

#[test]
fn star_and_complete_gadgets() {
    let o = cli(&["gadget", "star", "4"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.out.trim(), "c1,c0,c1,c0,c1,c2,c0,c2,c3,c0,c3,c0");
    let o = cli(&["gadget", "star", "4", "--labels", "h,l1,l2,l3"]);
    assert_eq!(o.out.trim(), "l1,h,l1,h,l1,l2,h,l2,l3,h,l3,h");
    let o = cli(&["gadget", "complete", "2"]);
    assert_eq!(o.out.trim().split(',').count(), 6);
    assert_ne!(cli(&["gadget", "star", "1"]).code, EXIT_OK);
}

#[test]
fn small_gadgets_print_role_names() {
    assert_eq!(cli(&["gadget", "edge"]).out.trim(), "a,b,a,b,a,b");
    assert_eq!(cli(&["gadget", "triangle"]).out.trim(), "a,b,a,c,b,a,c");
    assert_eq!(cli(&["gadget", "p3ends"]).out.trim(), "c,a,b,a,b,a,b,c");
    assert_eq!(cli(&["gadget", "p3end"]).out.trim(), "c,a,b,a,c,b,a");
    assert_eq!(
        cli(&["gadget", "edge", "--labels", "0,1"]).out.trim(),
        "0,1,0,1,0,1"
    );
}

#[test]
fn reverse_path_on_three_vertices() {
    let dir = TempDir::new().unwrap();
    let p3 = file(&dir, "p3.txt", "n 3\n0 1\n1 2\n");
    let p = p3.to_str().unwrap();
    let o = cli(&["reverse", "-i", p, "--verify"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    assert_eq!(field(&o.out, "word"), "0,1,0,1,0,2,0,2,1");
    assert_eq!(field(&o.out, "length"), "9");
    assert_eq!(field(&o.out, "bound"), "9");
    assert_eq!(field(&o.out, "verified"), "17 colorings");
    let o = cli(&["reverse", "-i", p, "--labels", "a,b,c"]);
    assert_eq!(field(&o.out, "word"), "a,b,a,b,a,c,a,c,b");
}

#[test]
fn reverse_reads_graph6_and_reduces() {
    let dir = TempDir::new().unwrap();
    let c6 = file(&dir, "c6.g6", "EhEG\n");
    let plain = cli(&["reverse", "-i", c6.to_str().unwrap()]);
    let reduced = cli(&[
        "reverse",
        "-i",
        c6.to_str().unwrap(),
        "--reduce",
        "--verify",
    ]);
    assert_eq!(reduced.code, EXIT_OK, "{}", reduced.err);
    let len = |o: &Outcome| field(&o.out, "length").parse::<usize>().unwrap();
    assert!(len(&reduced) <= len(&plain));
    assert!(len(&plain) <= 20);
}

#[test]
fn isolated_vertex_is_unsatisfiable() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "g.txt", "n 3\n0 1\n");
    let o = cli(&["reverse", "-i", g.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_UNSATISFIABLE);
    assert!(o.err.contains("isolated"));
    let o = cli(&[
        "transform",
        "-i",
        g.to_str().unwrap(),
        "--from",
        "+++",
        "--to",
        "++-",
    ]);
    assert_eq!(o.code, EXIT_UNSATISFIABLE);
    let o = cli(&[
        "transform",
        "-i",
        g.to_str().unwrap(),
        "--from",
        "+++",
        "--to",
        "--+",
        "--verify",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
}

#[test]
fn transform_reports_strategy() {
    let dir = TempDir::new().unwrap();
    let c5 = file(&dir, "c5.txt", "n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let p = c5.to_str().unwrap();
    let o = cli(&[
        "transform",
        "-i",
        p,
        "--from",
        "+++++",
        "--to",
        "-++++",
        "--verify",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    assert_eq!(field(&o.out, "strategy"), "fix-V1");
    assert_eq!(field(&o.out, "bound"), "26");
    let o = cli(&[
        "transform",
        "-i",
        p,
        "--from",
        "+++++",
        "--to",
        "-----",
        "--verify",
    ]);
    assert_eq!(field(&o.out, "strategy"), "flip-V0-then-all");
    let o = cli(&["transform", "-i", p, "--from", "+-+-+", "--to", "+-+-+"]);
    assert_eq!(field(&o.out, "length"), "0");
    assert_eq!(field(&o.out, "strategy"), "none");
}

#[test]
fn apply_matches_hand_computation() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.txt", "n 3\n0 1\n0 2\n1 2\n");
    let p = k3.to_str().unwrap();
    // one inversion at 0 removes the edge 1-2 and flips 1 and 2
    let o = cli(&["apply", "-i", p, "--colors", "+++", "--word", "0"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    assert_eq!(o.out, "n 3\n0 1\n0 2\n+--\n");
    let o = cli(&[
        "apply", "-i", p, "--colors", "+++", "--word", "a,b,c,a", "--labels", "a,b,c",
    ]);
    assert_eq!(o.out, "n 3\n0 1\n0 2\n1 2\n+++\n");
}

#[test]
fn exact_emits_json() {
    let dir = TempDir::new().unwrap();
    let s4 = file(&dir, "s4.txt", "n 4\n0 1\n0 2\n0 3\n");
    let o = cli(&["exact", "-i", s4.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    let v: serde_json::Value = serde_json::from_str(o.out.trim()).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["n"], 4);
    assert_eq!(v["exact_cr"], 12);
    assert_eq!(v["witness"].as_array().unwrap().len(), 12);
    assert!(v["synthesized_length"].as_u64().unwrap() <= v["bound"].as_u64().unwrap());
    let o = cli(&["exact", "-i", s4.to_str().unwrap(), "--cap", "3"]);
    assert_eq!(o.code, EXIT_INPUT);
}

#[test]
fn survey_is_deterministic_across_jobs() {
    let one = cli(&["survey", "--max-n", "4"]);
    let again = cli(&["survey", "--max-n", "4", "--jobs", "1"]);
    let many = cli(&["survey", "--max-n", "4", "--jobs", "4"]);
    assert_eq!(one.code, EXIT_OK, "{}", one.err);
    assert_eq!(one.out, again.out);
    assert_eq!(one.out, many.out);
    let lines: Vec<&str> = one.out.lines().collect();
    assert_eq!(lines.len(), 1 + 2 + 6 + 1);
    let summary: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(summary["summary"]["graphs"], 9);
    assert_eq!(summary["summary"]["above_3n"].as_array().unwrap().len(), 0);
}

#[test]
fn survey_from_graph6_catalog() {
    let catalog = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/tests/data/connected5.g6"
    );
    let o = cli(&["survey", "--max-n", "5", "--graph6", catalog, "--jobs", "2"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    assert_eq!(o.out.lines().count(), 22);
    let o = cli(&["survey", "--max-n", "4", "--graph6", catalog]);
    assert_eq!(o.out.lines().count(), 1);
    assert_ne!(cli(&["survey", "--max-n", "8"]).code, EXIT_OK);
}

#[test]
fn malformed_inputs() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.txt", "n 3\n0 5\n");
    let o = cli(&["reverse", "-i", bad.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.err.contains("line 2"));
    let bad6 = file(&dir, "bad.g6", "A`\n");
    let o = cli(&["reverse", "-i", bad6.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.err.contains("byte 1"));
    let p3 = file(&dir, "p3.txt", "n 3\n0 1\n1 2\n");
    let o = cli(&[
        "apply",
        "-i",
        p3.to_str().unwrap(),
        "--colors",
        "++",
        "--word",
        "0",
    ]);
    assert_eq!(o.code, EXIT_INPUT);
    let o = cli(&[
        "apply",
        "-i",
        p3.to_str().unwrap(),
        "--colors",
        "+++",
        "--word",
        "0,7",
    ]);
    assert_eq!(o.code, EXIT_INPUT);
    assert_eq!(cli(&["reverse"]).code, EXIT_INPUT);
    assert_eq!(cli(&["--help"]).code, EXIT_OK);
}
