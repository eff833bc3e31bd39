use std::path::Path;
use std::process::{Command, Output};

fn rsat(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsat"))
        .args(args)
        .env("RSAT_CACHE", cache)
        .output()
        .expect("run rsat")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn header(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap().lines().next().unwrap().to_string()
}

#[test]
fn construct_then_verify_gamma() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("gamma.ecg");
    let f = file.to_str().unwrap();
    let o = rsat(&["construct", "--family", "gamma", "--r", "5", "--n", "10", "-o", f], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(header(&file), "ecg 10 34");
    let o = rsat(&["verify", "--kind", "rsat", "--r", "5", f], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "VERDICT rsat r=5 holds");
}

#[test]
fn gamma_r4_has_3n_minus_6_edges() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.ecg");
    let o = rsat(
        &["construct", "--family", "gamma", "--r", "4", "--n", "8", "-o", file.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(header(&file), "ecg 8 18");
}

#[test]
fn gprime_is_one_saturated() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("gp.graph");
    let f = file.to_str().unwrap();
    let o = rsat(&["construct", "--family", "gprime", "--n", "10", "--r", "4", "-o", f], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let o = rsat(&["verify", "--kind", "ksat", "--r", "4", "--k", "1", f], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "VERDICT ksat r=4 k=1 holds");
}

#[test]
fn rainbow_triangle_is_not_free() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k3.ecg");
    std::fs::write(&file, "ecg 3 3\n0 1 0\n0 2 1\n1 2 2\n").unwrap();
    let o = rsat(&["verify", "--kind", "rfree", "--r", "3", file.to_str().unwrap()], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "VERDICT rfree r=3 fails witness=clique=0,1,2");
}

#[test]
fn satk_is_complete_bipartite() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s.graph");
    let o = rsat(
        &["construct", "--family", "satk", "--r", "3", "--k", "2", "--n", "9", "-o", file.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(header(&file), "graph 9 18");
}

#[test]
fn nonstab_construction() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("n.ecg");
    let o = rsat(
        &["construct", "--family", "nonstab", "--r", "3", "--n", "12", "--m", "40", "-o", file.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(header(&file), "ecg 12 40");
    // Below the construction's range: explicit error, no file.
    let bad = dir.path().join("bad.ecg");
    let o = rsat(
        &["construct", "--family", "nonstab", "--r", "3", "--n", "12", "--m", "19", "-o", bad.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(!bad.exists());
}

#[test]
fn search_f3_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let o = rsat(&["search", "f", "--k", "3"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.starts_with("RESULT f k=3 value=5 witness=f_k3.txt elapsed_ms="), "{out}");
    let cached = std::fs::read_to_string(dir.path().join("results.txt")).unwrap();
    assert_eq!(cached.trim(), out.trim());
    assert!(dir.path().join("f_k3.txt").exists());
}

#[test]
fn tampered_cache_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let o = rsat(&["search", "sat", "--n", "5", "--r", "3"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("value=4"));
    let witness = dir.path().join("sat_n5_hK3.txt");
    std::fs::write(&witness, "graph 5 4\n0 1\n0 2\n0 3\n1 2\n").unwrap();
    let o = rsat(&["table", "--r", "3", "--n", "5:6"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("integrity"));
}

#[test]
fn table_lists_closed_forms_and_cached_values() {
    let dir = tempfile::tempdir().unwrap();
    let o = rsat(&["table", "--r", "5", "--n", "8:14"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row10 = out.lines().find(|l| l.trim_start().starts_with("10 ")).unwrap();
    assert!(row10.ends_with(" 34"), "{row10}");
    assert_eq!(out.lines().count(), 2 + 7);

    rsat(&["search", "sat", "--n", "6", "--r", "3"], dir.path());
    let out = stdout(&rsat(&["table", "--r", "3", "--n", "6:6"], dir.path()));
    assert!(out.contains("5/5"), "{out}");
}

#[test]
fn checks() {
    let dir = tempfile::tempdir().unwrap();
    let o = rsat(&["check", "petersen"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "VERDICT petersen n=10 omega=4 t=2 robust=true holds");
    let o = rsat(&["check", "prop-comparison", "--n", "5", "--r", "3"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let file = dir.path().join("t.graph");
    std::fs::write(&file, "graph 6 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n").unwrap();
    let o = rsat(&["check", "lemma2", file.to_str().unwrap()], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("hypothesis=true conclusion=true holds"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(rsat(&["verify", "--kind", "nope", "x"], dir.path()).status.code(), Some(2));
    assert_eq!(rsat(&["verify", "--kind", "rsat", "--r", "3", "/nonexistent"], dir.path()).status.code(), Some(2));
    let file = dir.path().join("bad.graph");
    std::fs::write(&file, "graph 3 1\n0 7\n").unwrap();
    let o = rsat(&["verify", "--kind", "sat", "--r", "3", file.to_str().unwrap()], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(rsat(&["verify", "--kind", "sat", file.to_str().unwrap()], dir.path()).status.code(), Some(2));
}

#[test]
fn verdict_lines_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s.graph");
    std::fs::write(&file, "graph 4 3\n0 1\n0 2\n0 3\n").unwrap();
    let args = ["verify", "--kind", "sat", "--r", "3", file.to_str().unwrap()];
    let a = rsat(&args, dir.path());
    let b = rsat(&["--jobs", "1", args[0], args[1], args[2], args[3], args[4], args[5]], dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}
