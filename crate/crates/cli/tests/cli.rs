use std::path::Path;
use std::process::{Command, Output};

use extremal_core::extremal::ExtremalSequence;
use extremal_core::IntTriple;
use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extremal")).current_dir(dir).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn generate_fibonacci_seed() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["generate", "fib", "--a", "1", "--b", "2", "--terms", "8", "--out", "s.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let s = ExtremalSequence::read_json(&dir.path().join("s.json")).unwrap();
    assert_eq!(s.len(), 8);
    assert_eq!(
        s.triples()[..4],
        [IntTriple::new(1, 1, 0), IntTriple::new(4, 3, 2), IntTriple::new(25, 18, 13), IntTriple::new(576, 415, 299)]
    );
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("576"), "{text}");
}

#[test]
fn generate_example_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["generate", "ex2", "--a", "1", "--terms", "5", "--out", "e.json"]);
    assert_eq!(code(&o), 0);
    let v = read_json(&dir.path().join("e.json"));
    assert_eq!(v["triples"][2], serde_json::json!(["5", "2", "1"]));
    assert_eq!(v["matrix"], serde_json::json!(["1", "1", "-1", "0"]));
}

#[test]
fn explicit_seed_matches_named_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(dir.path(), &["generate", "ex2", "--a", "2", "--terms", "7", "--out", "a.json"]);
    let b = run(
        dir.path(),
        &["generate", "explicit", "--matrix", "2,1,-1,0", "--y1", "1,1,0", "--y2", "12,7,4", "--terms", "7", "--out", "b.json"],
    );
    assert_eq!((code(&a), code(&b)), (0, 0), "{}", stderr(&b));
    let (x, y) = (read_json(&dir.path().join("a.json")), read_json(&dir.path().join("b.json")));
    assert_eq!(x["triples"], y["triples"]);
}

#[test]
fn usage_and_runtime_errors_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(dir.path(), &["generate", "fib", "--a", "2", "--b", "2"])), 3);
    assert_eq!(code(&run(dir.path(), &["nonsense"])), 3);
    assert_eq!(code(&run(dir.path(), &["xi", "--seq", "missing.json"])), 3);
    assert_eq!(code(&run(dir.path(), &["verify", "--seq", "missing.json", "--range", "x"])), 3);
    assert_eq!(code(&run(dir.path(), &["--help"])), 0);
    assert_eq!(code(&run(dir.path(), &["--version"])), 0);
}

#[test]
fn config_errors_name_their_origin() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("run.cfg"), "# defaults\nxmax = 10\nbogus = 1\n").unwrap();
    let o = run(dir.path(), &["--config", "run.cfg", "relations", "--d", "1,1"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("run.cfg:3"), "{}", stderr(&o));
    let o = run(dir.path(), &["--set", "cap_bits=64", "relations", "--d", "1,1"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("cap_bits"), "{}", stderr(&o));
}

#[test]
fn config_file_sets_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("out")).unwrap();
    std::fs::write(dir.path().join("run.cfg"), "out_dir = out\n").unwrap();
    let o = run(dir.path(), &["--config", "run.cfg", "generate", "fib", "--a", "1", "--b", "2", "--terms", "5"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(dir.path().join("out/sequence.json").exists());
}

#[test]
fn outputs_do_not_depend_on_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(code(&run(p, &["generate", "fib", "--a", "1", "--b", "2", "--terms", "12", "--out", "s.json"])), 0);
    for w in ["1", "4"] {
        let o = run(p, &["--workers", w, "minpoints", "--seq", "s.json", "--xmax", "30000", "--crosscheck", "--out", &format!("mp{w}.json")]);
        assert!(matches!(code(&o), 0 | 1), "{}", stderr(&o));
        let o = run(p, &["--workers", w, "minpoly", "--seq", "s.json", "--hmax", "400", "--out", &format!("q{w}.json")]);
        assert!(matches!(code(&o), 0..=2), "{}", stderr(&o));
        let o = run(p, &["--workers", w, "relations", "--d", "1,1,0,2,1", "--seq", "s.json", "--out", &format!("r{w}.json")]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
    }
    for stem in ["mp", "q", "r"] {
        let a = std::fs::read(p.join(format!("{stem}1.json"))).unwrap();
        let b = std::fs::read(p.join(format!("{stem}4.json"))).unwrap();
        assert!(a == b, "{stem} differs between worker counts");
    }
}

#[test]
fn xi_digits_round_trip_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(code(&run(p, &["generate", "fib", "--a", "1", "--b", "2", "--terms", "14", "--out", "s.json"])), 0);
    let o = run(p, &["xi", "--seq", "s.json", "--digits", "40", "--out", "xi.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("0.72048466763213253088"), "{text}");
    assert_eq!(read_json(&p.join("xi.json"))["digits"], 40);
    // more digits than the terms support
    let o = run(p, &["xi", "--seq", "s.json", "--digits", "100000"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn relation_search_reports_the_known_relation() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["relations", "--d", "0,1,1,2,1", "--p", "5", "--out", "r.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = read_json(&dir.path().join("r.json"));
    assert_eq!(v["known"][0]["in_kernel"], true);
    assert_eq!(v["verdict"], "PASS");
}

#[test]
fn verify_writes_certificate_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(code(&run(p, &["generate", "ex2", "--a", "2", "--terms", "14", "--out", "s.json"])), 0);
    let o = run(p, &["verify", "--seq", "s.json", "--range", "1:10", "--tail-from", "20", "--out", "v.json", "--csv", "v.csv"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = read_json(&p.join("v.json"));
    assert_eq!(v["extremality"]["constants"]["det2"], 1.0);
    let csv = std::fs::read_to_string(p.join("v.csv")).unwrap();
    assert_eq!(csv.lines().count(), 11);
}
