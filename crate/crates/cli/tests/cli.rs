use std::path::PathBuf;
use std::process::{Command, Output};

fn sample(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("samples").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parheis")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn worked_example_composition() {
    let o = run(&["compose", "--lhs", &sample("upper.par"), "--rhs", &sample("lower.par")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "5->5\nt^2 * [[1,5],[2,-1],[3,-3,-5],[4],[-2,-4]]\n");
    let o = run(&["compose", "--lhs", &sample("upper.par"), "--rhs", &sample("lower.par"), "--t", "3"]);
    assert!(stdout(&o).contains("9 * [[1,5]"));
}

#[test]
fn cup_is_the_image_of_the_unit() {
    let o = run(&["psi", "--in", &sample("eta.par")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1->^v\n1 * {pairs: [[T1,T2]], bubbles: 0}\n");
}

#[test]
fn printed_images_parse_back() {
    let dir = tempfile::tempdir().unwrap();
    let image = stdout(&run(&["psi", "--in", &sample("swap.par")]));
    let path = dir.path().join("swap.heis");
    std::fs::write(&path, &image).unwrap();
    let o = run(&["normalize", "--in", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), image);
}

#[test]
fn actcom_suite_passes() {
    let o = run(&["suite", "actcom", "--n", "2..5", "--max-size", "4", "--seed", "7"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("suite actcom: PASS"));
}

#[test]
fn json_reports_are_reproducible() {
    let args = ["--json", "suite", "actcom", "--n", "2..3", "--max-size", "3", "--seed", "3"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 3);
    assert_eq!(v["suite"], "actcom");
    assert_eq!(v["pass"], true);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.par");
    std::fs::write(&bad, "2->2\n[[1,7]]\n").unwrap();
    assert_eq!(run(&["psi", "--in", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["suite", "nope"]).status.code(), Some(2));
    let o = run(&["compose", "--lhs", &sample("eta.par"), "--rhs", &sample("swap.par")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("arity mismatch"));
}

#[test]
fn size_guard() {
    let o = run(&["suite", "bee", "--n", "20", "--max-size", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported configuration"));
}

#[test]
fn kronecker_image_in_json() {
    let o = run(&["--json", "k0", "--in", &sample("s21.sym")]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["image"].as_str().unwrap().contains("((2,1), (2,1), 1)"));
}
