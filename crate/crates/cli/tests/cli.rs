use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use burling_core::{validate_witness, GraphFile, Witness};

fn burling(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burling"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_then_verify_level_two() {
    let dir = tempfile::tempdir().unwrap();
    let g2 = dir.path().join("g2.graph");
    let o = burling(&[
        "generate",
        "--mode",
        "graft",
        "--k",
        "2",
        "--out",
        path_str(&g2),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = burling(&["verify", "--in", path_str(&g2)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.lines().filter(|l| l.contains(": HOLDS")).count(),
        5,
        "{out}"
    );
}

#[test]
fn equivalence_prints_the_bijection() {
    let o = burling(&["equiv", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let line = out
        .lines()
        .find_map(|l| l.strip_prefix("bijection: "))
        .unwrap();
    let f: Vec<usize> = serde_json::from_str(line).unwrap();
    let mut sorted = f.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, (0..21).collect::<Vec<_>>());
}

#[test]
fn planted_wheel_is_reported_with_valid_witnesses() {
    let path = fixture("wheel6.graph");
    let o = burling(&["verify", "--in", path_str(&path)]);
    assert_eq!(o.status.code(), Some(1));
    let g = GraphFile::parse(&std::fs::read_to_string(&path).unwrap())
        .unwrap()
        .graph()
        .unwrap();
    let out = stdout(&o);
    let witnesses: Vec<Witness> = out
        .lines()
        .filter_map(|l| {
            l.split_once("witness=")?
                .1
                .rsplit_once(" (explored=")
                .map(|(w, _)| w)
        })
        .map(|w| serde_json::from_str(w).unwrap())
        .collect();
    assert!(
        witnesses.iter().any(|w| matches!(w, Witness::Wheel { .. })),
        "{out}"
    );
    for w in &witnesses {
        assert!(validate_witness(&g, None, w).unwrap(), "{w:?}");
    }
}

#[test]
fn exit_codes_for_usage_and_caps() {
    let o = burling(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(burling(&["verify"]).status.code(), Some(2));
    assert_eq!(burling(&["equiv", "--k", "4"]).status.code(), Some(3));
    assert_eq!(
        burling(&["verify", "--in", "/nonexistent/x.graph"])
            .status
            .code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let g4 = dir.path().join("g4.graph");
    burling(&[
        "generate",
        "--mode",
        "graft",
        "--k",
        "4",
        "--out",
        path_str(&g4),
    ]);
    assert_eq!(
        burling(&["verify", "--in", path_str(&g4)]).status.code(),
        Some(3)
    );
    let o = burling(&["verify", "--in", path_str(&g4), "--budget", "50"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("INCONCLUSIVE"));
    let o = burling(&["chroma", "--in", path_str(&g4)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("(not exact)"));
}

#[test]
fn chromatic_verbs_on_level_three() {
    let dir = tempfile::tempdir().unwrap();
    let g3 = dir.path().join("g3.graph");
    burling(&[
        "generate",
        "--mode",
        "graft",
        "--k",
        "3",
        "--out",
        path_str(&g3),
    ]);
    let o = burling(&["chroma", "--in", path_str(&g3)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("chi=4 (exact)\n"));
    let o = burling(&["chroma", "--in", path_str(&g3), "--rainbow", "3", "3"]);
    assert_eq!(o.status.code(), Some(0));

    // on the level-two C5 both tips see two colours in every 3-colouring
    let g2 = dir.path().join("g2.graph");
    burling(&[
        "generate",
        "--mode",
        "graft",
        "--k",
        "2",
        "--out",
        path_str(&g2),
    ]);
    assert_eq!(
        burling(&["chroma", "--in", path_str(&g2), "--rainbow", "2", "3"])
            .status
            .code(),
        Some(0)
    );
    let o = burling(&["chroma", "--in", path_str(&g2), "--rainbow", "3", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("non-rainbow colouring: ["));
}

#[test]
fn pair_mode_writes_stable_sets() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p3.graph");
    let o = burling(&[
        "generate",
        "--mode",
        "pair",
        "--k",
        "3",
        "--out",
        path_str(&p),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let f = GraphFile::parse(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(f.pair().unwrap().stables().len(), 8);
    assert_eq!(f.n, 13);
}

#[test]
fn generate_writes_a_replayable_trace() {
    let dir = tempfile::tempdir().unwrap();
    let (g, t) = (dir.path().join("g.graph"), dir.path().join("g.trace"));
    burling(&[
        "generate",
        "--mode",
        "graft",
        "--k",
        "3",
        "--out",
        path_str(&g),
        "--trace",
        path_str(&t),
    ]);
    let trace =
        burling_core::ConstructionTrace::parse(&std::fs::read_to_string(&t).unwrap()).unwrap();
    let file = GraphFile::parse(&std::fs::read_to_string(&g).unwrap()).unwrap();
    assert_eq!(burling_core::replay(&trace).unwrap(), file.graft().unwrap());
}

#[test]
fn fuzz_is_byte_reproducible() {
    let args = [
        "fuzz",
        "--ops",
        "6",
        "--seed",
        "42",
        "--runs",
        "20",
        "--print-scripts",
    ];
    let a = burling(&args);
    let b = burling(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("failures=0\n"));
}

#[test]
fn fuzz_replays_a_script_file() {
    let o = burling(&["fuzz", "--script", path_str(&fixture("star_then_path.ops"))]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(stdout(&o).matches("step ").count(), 4);
}

#[test]
fn export_dot() {
    let o = burling(&["export", "--in", path_str(&fixture("k2.graph")), "--dot"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "graph \"G\" {\n  node [shape=circle];\n  0;\n  1 [shape=box];\n  0 -- 1;\n}\n"
    );
}
