use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_critgraph"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("critgraph-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn table_matches_counts() {
    let o = run(&["table", "--max-k", "16"], "");
    assert_eq!(o.status.code(), Some(0));
    let got: Vec<usize> = stdout(&o).lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(
        got,
        [1, 1, 2, 2, 4, 6, 11, 17, 27, 39, 58, 80, 112, 148, 197, 253]
    );
}

#[test]
fn critical_c5() {
    let o = run(&["critical", "--k", "3", "Dhc"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");
    let o = run(&["critical", "--k", "4", "Dhc"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumerate_is_deterministic() {
    let a = run(&["enumerate", "--k", "9"], "");
    let b = run(&["enumerate", "--k", "9"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 27);
    let p = run(&["enumerate", "--k", "3", "--profiles"], "");
    assert_eq!(stdout(&p).lines().collect::<Vec<_>>(), ["K3", "1,1,1,1,1"]);
}

#[test]
fn verify_accepts_certify_output() {
    // Enumerated 5- and 6-critical graphs, piped through stdin.
    let mut graphs = stdout(&run(&["enumerate", "--k", "5"], ""));
    graphs.push_str(&stdout(&run(&["enumerate", "--k", "6"], "")));
    for k in 2..=6 {
        let ks = k.to_string();
        let certs = run(&["certify", "--k", &ks], &graphs);
        assert!(matches!(certs.status.code(), Some(0 | 1)));
        let text = stdout(&certs);
        assert_eq!(text.lines().count(), graphs.lines().count());
        let file = temp_file(&format!("certs-{k}"), &text);
        let v = run(
            &["verify", "--k", &ks, "--cert", file.to_str().unwrap()],
            &graphs,
        );
        std::fs::remove_file(&file).unwrap();
        assert_eq!(v.status.code(), Some(0), "k={k}");
        assert!(stdout(&v).lines().all(|l| l == "accept"));
    }
}

#[test]
fn verify_rejects_tampered_coloring() {
    let file = temp_file(
        "tampered",
        r#"{"verdict":"yes","k":3,"coloring":[0,0,1,0,1],"witness":null,"claimed":null}"#,
    );
    let v = run(
        &[
            "verify",
            "--k",
            "3",
            "--cert",
            file.to_str().unwrap(),
            "Dhc",
        ],
        "",
    );
    std::fs::remove_file(&file).unwrap();
    assert_eq!(v.status.code(), Some(1));
    assert_eq!(stdout(&v).trim(), "reject");
}

#[test]
fn usage_and_format_errors_exit_two() {
    assert_eq!(run(&["chi", "D~"], "").status.code(), Some(2));
    assert_eq!(run(&["chi", "--bogus", "Dhc"], "").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    let o = run(&["chi"], "Dh\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn freecheck_reports_witness() {
    let o = run(&["freecheck", "--forbid", "gem,co-gem", "Dhc"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["freecheck", "--forbid", "p4", "Dhc"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("P4: "));
}

#[test]
fn catalog_and_threads() {
    let o = run(&["--threads", "1", "catalog", "--id", "1"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Dhc");
    assert_eq!(stdout(&run(&["catalog"], "")).lines().count(), 10);
}
