use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_hypereuler");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus_file(name: &str) -> String {
    corpus().join(name).to_str().unwrap().to_string()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

/// `(file, family, tour)` from the expectation line of every corpus file.
fn expectations() -> Vec<(String, bool, bool)> {
    let mut out = Vec::new();
    for entry in fs::read_dir(corpus()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "hg") {
            let text = fs::read_to_string(&path).unwrap();
            let line = text.lines().next().unwrap();
            let yes = |key: &str| line.contains(&format!("{key}=YES"));
            assert!(line.starts_with("# expect"), "{}", path.display());
            out.push((path.to_str().unwrap().to_string(), yes("family"), yes("tour")));
        }
    }
    out.sort();
    out
}

#[test]
fn corpus_verdicts_match_expectations() {
    let all = expectations();
    assert!(all.len() >= 10);
    for (file, family, tour) in all {
        for (mode, want) in [("family", family), ("tour", tour)] {
            for solver in ["--direct", "--reduce"] {
                let o = run(&["decide", "--mode", mode, "--spanning", solver, &file]);
                assert_eq!(code(&o), if want { 0 } else { 1 }, "{file} {mode} {solver}");
            }
            let o = run(&["oracle", "--mode", mode, "--spanning", &file]);
            assert_eq!(code(&o), if want { 0 } else { 1 }, "{file} {mode} oracle");
        }
    }
}

#[test]
fn pendant_reports_the_degree_condition() {
    let o = run(&["decide", "--mode", "family", "--spanning", &corpus_file("pendant.hg")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("NO: necessary condition (ii)"), "{}", stdout(&o));
}

#[test]
fn witness_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    let w = w.to_str().unwrap();
    let input = corpus_file("bowtie.hg");
    let o = run(&["decide", "--mode", "tour", "--spanning", "--witness", w, &input]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("YES\n"));

    let o = run(&["verify", "--mode", "tour", "--spanning", "--witness", w, &input]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "ok\n"));

    let text = fs::read_to_string(w).unwrap();
    let first = text.lines().next().unwrap();
    let bad = write(&dir, "bad.txt", &format!("{text}{first}\n"));
    let o = run(&["verify", "--mode", "tour", "--spanning", "--witness", &bad, &input]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("violation:"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(&dir, "broken.hg", "hg 2 1\n1 5\n");
    assert_eq!(code(&run(&["decide", "--mode", "family", &broken])), 2);
    assert_eq!(code(&run(&["decide", "--mode", "family", "/no/such/file.hg"])), 2);
    assert_eq!(code(&run(&["decide", "--mode", "sideways", &broken])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn oracle_refuses_large_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("hg 4 8\n");
    for _ in 0..8 {
        text.push_str("1 2 3 4\n");
    }
    let big = write(&dir, "big.hg", &text);
    assert_eq!(code(&run(&["oracle", "--mode", "family", &big])), 2);
    assert_eq!(code(&run(&["decide", "--mode", "family", &big])), 0);
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--seed", "17", "--structure", "glued-2cut", "--n", "3..4", "--m", "2..4", "--parallel", "1"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("hg "));
    assert_ne!(
        run(&["gen", "--seed", "18", "--structure", "glued-2cut", "--n", "3..4", "--m", "2..4"]).stdout,
        a.stdout
    );
}

#[test]
fn generated_instances_agree_across_solvers() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..20 {
        let file = dir.path().join(format!("g{seed}.hg"));
        let file = file.to_str().unwrap();
        let s = seed.to_string();
        let structure = ["glued-1cut", "glued-2cut", "deg2-cut", "uniform"][seed % 4];
        let o = run(&["gen", "--seed", &s, "--structure", structure, "--n", "2..3", "--m", "2..3", "-o", file]);
        assert_eq!(code(&o), 0);
        for mode in ["family", "tour"] {
            let direct = code(&run(&["decide", "--mode", mode, "--spanning", "--direct", file]));
            let reduce = code(&run(&["decide", "--mode", mode, "--spanning", "--reduce", file]));
            assert_eq!(direct, reduce, "seed {seed} {structure} {mode}");
        }
    }
}

#[test]
fn cuts_lists_the_pair() {
    let o = run(&["cuts", &corpus_file("glued-pair.hg")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l.starts_with("S={") && l.contains("minimal=yes")), "{}", stdout(&o));

    let o = run(&["cuts", &corpus_file("two-doubled.hg")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn reduce_prints_a_trace() {
    let o = run(&["reduce", "--mode", "tour", &corpus_file("four-cut.hg")]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.lines().next().unwrap().starts_with("2cut-even"), "{out}");
    assert!(out.contains("H1*:"));
}
