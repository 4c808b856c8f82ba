//! End-to-end tests of the ballgames binary: exit codes, transcript
//! round-trips, scripted REPL sessions, tournaments and estimator output.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ballgames"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn play_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.jsonl");
    let o = run(&[
        "play",
        "--game",
        "bms",
        "--beta",
        "1/5",
        "--alice",
        "porosity:cantor",
        "--bob",
        "random:seed=1",
        "--rounds",
        "25",
        "--target",
        "complement:cantor",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("Alice"), "stdout: {}", stdout(&o));
    let v = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "stderr: {}", stderr(&v));
    assert!(stdout(&v).contains("ok:"));
}

#[test]
fn schmidt_product_law_in_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.jsonl");
    let o = run(&[
        "play",
        "--game",
        "schmidt",
        "--alpha",
        "1/2",
        "--beta",
        "1/2",
        "--alice",
        "dummy",
        "--bob",
        "random:seed=2",
        "--rounds",
        "10",
        "--out",
        path.to_str().unwrap(),
    ]);
    // no target: undecided exit
    assert_eq!(o.status.code(), Some(2), "stderr: {}", stderr(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    // closing Bob ball radius is exactly (1/4)^10 = 1/1048576
    assert!(
        text.contains("\"radius\":\"1/1048576\""),
        "final radius missing from {text}"
    );
    let v = run(&["verify", path.to_str().unwrap()]);
    assert!(stdout(&v).contains("schmidt radius law exact"));
}

#[test]
fn usage_error_names_the_missing_parameter() {
    let o = run(&[
        "play",
        "--game",
        "bms",
        "--alice",
        "dummy",
        "--bob",
        "random:seed=1",
    ]);
    assert_eq!(o.status.code(), Some(64));
    assert!(
        stderr(&o).contains("--beta"),
        "stderr should name --beta: {}",
        stderr(&o)
    );
}

#[test]
fn tampered_transcript_fails_at_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.jsonl");
    run(&[
        "play",
        "--game",
        "schmidt",
        "--alpha",
        "1/2",
        "--beta",
        "1/2",
        "--alice",
        "dummy",
        "--bob",
        "random:seed=3",
        "--rounds",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&path).unwrap();
    // perturb the first Alice radius 1/2 -> 500000001/1000000000
    let tampered = text.replacen("\"radius\":\"1/2\"", "\"radius\":\"500000001/1000000000\"", 1);
    assert_ne!(text, tampered);
    let bad = dir.path().join("bad.jsonl");
    std::fs::write(&bad, tampered).unwrap();
    let v = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(1));
    assert!(
        stderr(&v).contains("line 3"),
        "expected a line number: {}",
        stderr(&v)
    );
}

#[test]
fn schema_mismatch_is_a_distinct_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.jsonl");
    run(&[
        "play",
        "--game",
        "banach-mazur",
        "--alice",
        "dummy",
        "--bob",
        "random:seed=4",
        "--rounds",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&path)
        .unwrap()
        .replace("\"schema_version\":1", "\"schema_version\":9");
    let bad = dir.path().join("old.jsonl");
    std::fs::write(&bad, text).unwrap();
    let v = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(65));
    assert!(stderr(&v).contains("schema"));
}

#[test]
fn estimate_rational_exact_hit() {
    let o = run(&["estimate", "--x", "22/7", "--qmax", "7"]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lagrange_upper"]["lo"], "0");
    assert_eq!(v["lagrange_upper"]["hi"], "0");
    assert_eq!(v["omega_lower"], "infinity");
}

#[test]
fn estimate_sqrt2_and_golden() {
    let o = run(&["estimate", "--x", "sqrt2", "--qmax", "10000"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let lag = v["lagrange_upper"]["approx"].as_f64().unwrap();
    assert!((lag - 0.35355339).abs() < 1e-3, "lagrange(sqrt2) = {lag}");
    let om = v["omega_lower"]["approx"].as_f64().unwrap();
    assert!((1.9..=2.1).contains(&om), "omega(sqrt2) = {om}");
    assert!(v["best_approximations"].as_array().unwrap().len() > 5);

    let o = run(&["estimate", "--x", "golden", "--qmax", "10000"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let lag = v["lagrange_upper"]["approx"].as_f64().unwrap();
    assert!((lag - 0.4472136).abs() < 1e-3, "lagrange(golden) = {lag}");
}

#[test]
fn estimate_quad_and_cf_descriptors() {
    // quad:1,5,2 is (1+sqrt5)/2, the golden ratio again
    let o = run(&["estimate", "--x", "quad:1,5,2", "--qmax", "5000"]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let lag = v["lagrange_upper"]["approx"].as_f64().unwrap();
    assert!((lag - 0.4472136).abs() < 1e-2, "lagrange(quad golden) = {lag}");
    // a bounded-quotient prefix keeps the estimate above 1/(M+2) = 1/6
    let o = run(&[
        "estimate",
        "--x",
        "cf:[0;1,2,4,1,3,2,4,1,2,3,4,1,2]",
        "--qmax",
        "1000",
    ]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let lo: f64 = v["lagrange_upper"]["lo"]
        .as_str()
        .map(|s| {
            let (n, d) = s.split_once('/').unwrap_or((s, "1"));
            n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap()
        })
        .unwrap();
    assert!(lo >= 1.0 / 6.0, "lagrange lower end {lo}");
}

#[test]
fn repl_rejects_bad_input_without_mutating() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("repl.jsonl");
    let mut child = bin()
        .args([
            "repl",
            "--game",
            "schmidt",
            "--alpha",
            "1/2",
            "--beta",
            "1/2",
            "--human",
            "alice",
            "--opponent",
            "random:seed=7",
            "--rounds",
            "2",
            "--out",
            path.to_str().unwrap(),
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let stdin = child.stdin.as_mut().unwrap();
        // garbage, a float, an illegal radius, a hint, then legal play twice
        writeln!(stdin, "what").unwrap();
        writeln!(stdin, "0.5 0.25").unwrap();
        writeln!(stdin, "0 1/3").unwrap();
        writeln!(stdin, "hint").unwrap();
        writeln!(stdin, "0 1/2").unwrap();
        writeln!(stdin, "0 1/8").unwrap();
    }
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("cannot parse"), "stdout: {text}");
    assert!(text.contains("illegal:"), "stdout: {text}");
    assert!(text.contains("radius must equal"), "stdout: {text}");
    assert!(text.contains("a legal move:"), "stdout: {text}");
    // the session transcript passes verification
    let v = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "stderr: {}", stderr(&v));
    // exactly 2 rounds = 2 alice + 3 bob moves survived the bad inputs
    let saved = std::fs::read_to_string(&path).unwrap();
    assert_eq!(saved.matches("\"mover\":\"alice\"").count(), 2);
    assert_eq!(saved.matches("\"mover\":\"bob\"").count(), 3);
}

#[test]
fn repl_hint_in_bmm_is_a_tangent_ball() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("repl2.jsonl");
    let mut child = bin()
        .args([
            "repl",
            "--game",
            "bmm",
            "--beta",
            "1/3",
            "--human",
            "bob",
            "--opponent",
            "dummy",
            "--rounds",
            "1",
            "--out",
            path.to_str().unwrap(),
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let stdin = child.stdin.as_mut().unwrap();
        writeln!(stdin, "0 1").unwrap(); // opening
        writeln!(stdin, "hint").unwrap(); // constructive existence move
        writeln!(stdin, "resign").unwrap();
    }
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(3)); // resigned
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("a legal move:"), "stdout: {text}");
}

#[test]
fn tournament_summary_is_reproducible() {
    let run_once = |dir: &Path| -> String {
        let o = bin()
            .args([
                "tournament",
                "--game",
                "bms",
                "--beta",
                "1/5",
                "--alice",
                "porosity:cantor",
                "--bob",
                "random:seed={seed}",
                "--seeds",
                "1..=8",
                "--rounds",
                "20",
                "--target",
                "complement:cantor",
                "--out",
                dir.to_str().unwrap(),
                "--jobs",
                "4",
            ])
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
        let out = stdout(&o);
        assert!(out.contains("alice 8"), "stdout: {out}");
        std::fs::read_to_string(dir.join("summary.json")).unwrap()
    };
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    let s1 = run_once(d1.path()).replace(d1.path().to_str().unwrap(), "<out>");
    let s2 = run_once(d2.path()).replace(d2.path().to_str().unwrap(), "<out>");
    assert_eq!(s1, s2, "summaries differ across identical runs");
}

#[test]
fn empty_tournament_matrix_is_ok() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin()
        .args([
            "tournament",
            "--game",
            "bms",
            "--beta",
            "1/5",
            "--alice",
            "dummy",
            "--bob",
            "random:seed={seed}",
            "--seeds",
            "5..5",
            "--rounds",
            "2",
            "--out",
            dir.path().to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("0 cells"), "stdout: {}", stdout(&o));
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("summary.json")).unwrap())
            .unwrap();
    assert_eq!(summary["cells"].as_array().unwrap().len(), 0);
}

#[test]
fn dummy_alice_never_beats_the_chaser() {
    // the rational-chasing Bob forces the play into the liminf set; with no
    // decidable target the cells stay undecided — zero Alice wins
    let dir = tempfile::tempdir().unwrap();
    let o = bin()
        .args([
            "tournament",
            "--game",
            "bms",
            "--beta",
            "1/4",
            "--alice",
            "dummy",
            "--bob",
            "bob-s:psi=q^-3,Q0=auto,cap=256",
            "--seeds",
            "1..=3",
            "--rounds",
            "30",
            "--out",
            dir.path().to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("alice 0"), "stdout: {out}");
}

#[test]
fn porosity_check_grid_and_greedy_beta() {
    let o = run(&["porosity-check", "--cert", "cantor"]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("0 failures"));
    let o = run(&["porosity-check", "--cert", "cantor", "--beta", "1/3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&[
        "porosity-check",
        "--cert",
        "finite:{0,1};beta=1/4;r0=1/4",
        "--mode",
        "random",
        "--count",
        "500",
        "--seed",
        "9",
    ]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
}

#[test]
fn float_parameters_rejected() {
    let o = run(&[
        "play",
        "--game",
        "bms",
        "--beta",
        "0.2",
        "--alice",
        "dummy",
        "--bob",
        "random:seed=1",
    ]);
    assert_eq!(o.status.code(), Some(64), "stderr: {}", stderr(&o));
    assert!(stderr(&o).contains("floats are rejected"), "{}", stderr(&o));
}
