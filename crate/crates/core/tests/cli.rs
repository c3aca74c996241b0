use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kirchhoff"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert_eq!(
        o.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).expect("valid json")
}

fn header(edge_list: &str) -> (usize, usize) {
    let line = edge_list
        .lines()
        .find(|l| !l.starts_with('#') && !l.trim().is_empty())
        .unwrap();
    let mut it = line.split_whitespace().map(|t| t.parse().unwrap());
    (it.next().unwrap(), it.next().unwrap())
}

fn body(edge_list: &str) -> Vec<&str> {
    edge_list.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn gen_writes_edge_lists() {
    let star = run(&["gen", "--family", "star", "--n", "4"]);
    assert!(star.status.success());
    assert_eq!(header(&stdout(&star)), (4, 3));

    let sun = run(&["gen", "--family", "sun", "--n", "20"]);
    assert_eq!(header(&stdout(&sun)), (20, 65));

    let bireg = stdout(&run(&[
        "gen",
        "--family",
        "biregular",
        "--n1",
        "10",
        "--a",
        "4",
        "--n2",
        "4",
        "--b",
        "10",
    ]));
    let kbip = stdout(&run(&[
        "gen",
        "--family",
        "complete-bipartite",
        "--r",
        "10",
        "--s",
        "4",
    ]));
    assert_eq!(body(&bireg), body(&kbip));
    assert_eq!(header(&bireg), (14, 40));

    let circ = stdout(&run(&[
        "gen",
        "--family",
        "circulant",
        "--n",
        "8",
        "--offsets",
        "1,2",
    ]));
    assert_eq!(header(&circ), (8, 16));
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(
        run(&["gen", "--family", "sun", "--n", "7"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["gen", "--family", "cycle"]).status.code(), Some(2));
    assert_eq!(
        run(&["gen", "--family", "nonsense", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gen_output_file_round_trips_through_exact() {
    let path = std::env::temp_dir().join(format!("kirchhoff-cli-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    assert!(run(&["gen", "--family", "cycle", "--n", "5", "-o", p])
        .status
        .success());
    let v = json(&run(&["exact", "-i", p, "--format", "json"]));
    std::fs::remove_file(&path).ok();
    assert!((v["indices"]["r_plus"].as_f64().unwrap() - 40.0).abs() < 1e-9);
}

#[test]
fn exact_reads_stdin() {
    let gen = stdout(&run(&["gen", "--family", "star", "--n", "4"]));
    let v = json(&run_stdin(&["exact", "--format", "json"], &gen));
    assert!((v["indices"]["r_plus"].as_f64().unwrap() - 24.0).abs() < 1e-9);

    let k6 = stdout(&run(&["gen", "--family", "complete", "--n", "6"]));
    let v = json(&run_stdin(&["exact", "--format", "json"], &k6));
    assert!((v["indices"]["r_plus"].as_f64().unwrap() - 50.0).abs() < 1e-9);
}

#[test]
fn petersen_fixture() {
    let p = fixture("petersen.txt");
    let p = p.to_str().unwrap();
    let v = json(&run(&["exact", "-i", p, "--format", "json"]));
    // 3-regular, Laplacian spectrum 0, 2^5, 5^4: R = 10(5/2 + 4/5) = 33, R+ = 2·3·R
    assert!((v["indices"]["r"].as_f64().unwrap() - 33.0).abs() < 1e-9);
    assert!((v["indices"]["r_plus"].as_f64().unwrap() - 198.0).abs() < 1e-9);

    let b = json(&run(&["bounds", "-i", p, "--format", "json"]));
    let dr = b["bounds"]["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["id"] == "UB-DR")
        .unwrap();
    assert_eq!(dr["applicable"], true);
    assert!((dr["value"].as_f64().unwrap() - 390.0 * 81.0 / 101.0).abs() < 1e-9);
    assert_eq!(b["graph"]["is_distance_regular"], true);
}

#[test]
fn verify_exit_codes() {
    let p = fixture("petersen.txt");
    let p = p.to_str().unwrap();
    let ok = run(&["verify", "-i", p]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json(&run(&["verify", "-i", p, "--format", "json"]));
    assert_eq!(v["verification"]["passed"], true);
    let strict = run(&["verify", "-i", p, "--tol=-1"]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let o = run_stdin(&["exact"], "3 2\n0 0\n1 2\n");
    assert_eq!(o.status.code(), Some(2));
    let o = run_stdin(&["exact"], "4 2\n0 1\n2 3\n");
    assert_eq!(o.status.code(), Some(2));
    let o = run_stdin(&["exact"], "3 2\n0 1\nnot an edge\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["exact", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn reproduce_formats() {
    let all = run(&["reproduce"]);
    assert_eq!(all.status.code(), Some(0));
    let text = stdout(&all);
    assert!(text.contains("flagged"));

    let md = run(&["reproduce", "--table", "2", "--format", "markdown"]);
    assert_eq!(md.status.code(), Some(0));
    let md = stdout(&md);
    assert!(md.contains("848.6") && md.contains('|'));
    assert!(!md.contains("table 1"));

    let v = json(&run(&["reproduce", "--format", "json"]));
    let tables = v["tables"].as_array().unwrap();
    assert_eq!(tables.len(), 4);
    assert!(tables
        .iter()
        .flat_map(|t| t["rows"].as_array().unwrap())
        .all(|r| r["status"] != "fail"));

    assert_eq!(run(&["reproduce", "--table", "5"]).status.code(), Some(2));
}

#[test]
fn reproduce_is_deterministic() {
    let a = stdout(&run(&["reproduce", "--format", "json"]));
    let b = stdout(&run(&["reproduce", "--format", "json"]));
    assert_eq!(a, b);
}

#[test]
fn compare_lists_each_input() {
    let dir = std::env::temp_dir();
    let star = dir.join(format!("kirchhoff-cmp-star-{}.txt", std::process::id()));
    std::fs::write(
        &star,
        stdout(&run(&["gen", "--family", "star", "--n", "6"])),
    )
    .unwrap();
    let pet = fixture("petersen.txt");
    let v = json(&run(&[
        "compare",
        "-i",
        star.to_str().unwrap(),
        "-i",
        pet.to_str().unwrap(),
        "--format",
        "json",
    ]));
    std::fs::remove_file(&star).ok();
    let rows = v["comparison"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for r in rows {
        let exact = r["r_plus"].as_f64().unwrap();
        assert!(r["best_lower"]["value"].as_f64().unwrap() <= exact + 1e-6);
        assert!(r["best_upper"]["value"].as_f64().unwrap() >= exact - 1e-6);
    }
    // star(6): UB-30 attains 3N²-7N+4 = 70
    assert!((rows[0]["r_plus"].as_f64().unwrap() - 70.0).abs() < 1e-9);
}
