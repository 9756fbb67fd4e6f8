use std::io::Write;
use std::process::{Command, Output, Stdio};

use abs_extremal::families::{abs_kappa_xy_closed, build_complete_bipartite, build_complete_multipartite, build_knp};
use abs_extremal::io::from_graph6;
use abs_extremal::{canonical_form, is_isomorphic, PartSizes};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_abs-extremal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_path_and_edge() {
    let o = run(&["compute"], "4\n0 1\n1 2\n2 3\n");
    assert_eq!(o.status.code(), Some(0));
    // two end edges of weight sqrt(1/3), one middle edge of weight sqrt(1/2)
    let expected = 2.0 * (1.0f64 / 3.0).sqrt() + 0.5f64.sqrt();
    let got: f64 = stdout(&o).trim().parse().unwrap();
    assert!((got - expected).abs() < 1e-11);
    assert_eq!(stdout(&o).trim().len(), "1.86180731957".len());

    let o = run(&["compute"], "2\n0 1\n");
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn compute_reads_graph6_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.g6");
    std::fs::write(&path, "A_\nBw\n").unwrap();
    let o = run(&["compute", path.to_str().unwrap(), "--format", "json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[1]["edges"], 3);
}

#[test]
fn malformed_input_exits_two() {
    let o = run(&["compute"], "3\n0 7\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["compute", "/nonexistent/file"], "").status.code(), Some(2));
}

#[test]
fn build_knp_is_the_family_member() {
    let o = run(&["build", "knp", "--n", "5", "--p", "1"], "");
    let g = from_graph6(stdout(&o).trim()).unwrap();
    assert_eq!(canonical_form(&g), canonical_form(&build_knp(5, 1).unwrap()));
    let o = run(&["build", "knp", "--n", "5", "--p", "1", "--canonical"], "");
    assert_eq!(stdout(&o).trim(), canonical_form(&build_knp(5, 1).unwrap()).to_graph6());
}

#[test]
fn build_turan_is_k223() {
    let o = run(&["build", "turan", "--n", "7", "--k", "3"], "");
    let g = from_graph6(stdout(&o).trim()).unwrap();
    let k223 = build_complete_multipartite(&PartSizes::new(vec![2, 2, 3]).unwrap()).unwrap();
    assert!(is_isomorphic(&g, &k223));
}

#[test]
fn build_reports_closed_form() {
    let o = run(&["build", "kappa-xy", "--x", "4", "--y", "2", "--kappa", "1", "--closed-form"], "");
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(from_graph6(lines.next().unwrap()).unwrap().order(), 8);
    let value: f64 = lines.next().unwrap().strip_prefix("closed-form ABS: ").unwrap().parse().unwrap();
    assert!((value - abs_kappa_xy_closed(4, 2, 1).unwrap()).abs() < 1e-10);
}

#[test]
fn build_rejects_bad_parameters() {
    let o = run(&["build", "knp", "--n", "5", "--p", "4"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("p <= n - 2"));
    assert_eq!(run(&["build", "knp", "--n", "5"], "").status.code(), Some(2));
    assert_eq!(run(&["build", "nosuch"], "").status.code(), Some(2));
}

#[test]
fn enumerate_counts_and_streams() {
    let o = run(&["enumerate", "--n", "6", "--count"], "");
    assert_eq!(stdout(&o).trim(), "112");
    let o = run(&["enumerate", "--n", "7", "--bipartite"], "");
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 44);
    assert!(lines.iter().all(|l| from_graph6(l).is_ok()));
    let o = run(&["enumerate", "--n", "10"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_cut_vertices_all_p() {
    let o = run(&["verify", "cut-vertices", "--n", "6", "--all-p", "--format", "csv"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.ends_with(",confirmed")));
}

#[test]
fn verify_bipartite_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = run(&["verify", "bipartite-kappa", "--n", "7", "--kappa", "3", "--report", report.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
    let r = &v["extremal"][0];
    assert_eq!(r["verdict"], "confirmed");
    assert_eq!(r["maximizers"].as_array().unwrap().len(), 1);
    let k34 = canonical_form(&build_complete_bipartite(3, 4).unwrap()).to_graph6();
    assert_eq!(r["maximizers"][0]["graph6"], k34);
}

#[test]
fn verify_join_class() {
    let o = run(&["verify", "k-partiteness", "--n", "8", "--k", "2", "--r", "2", "--format", "json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["extremal"][0]["verdict"], "confirmed");
    assert_eq!(v["extremal"][0]["expected"]["family"], "K_2 v T(6,2)");
}

#[test]
fn verify_refuses_beyond_envelope() {
    let o = run(&["verify", "cut-vertices", "--n", "10"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("envelope"));
    assert_eq!(run(&["verify", "cut-vertices", "--n", "5", "--tie-tol", "0"], "").status.code(), Some(2));
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let mut docs = Vec::new();
    for (i, workers) in ["1", "4", "4"].iter().enumerate() {
        let path = dir.path().join(format!("r{i}.json"));
        let o = run(
            &[
                "--workers",
                workers,
                "verify",
                "cut-vertices",
                "--n-min",
                "5",
                "--n-max",
                "7",
                "--report",
                path.to_str().unwrap(),
            ],
            "",
        );
        assert_eq!(o.status.code(), Some(0));
        docs.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(docs[0], docs[1]);
    assert_eq!(docs[1], docs[2]);
    assert_eq!(run(&["--workers", "0", "verify", "cut-vertices", "--n", "5"], "").status.code(), Some(2));
}

#[test]
fn lemma_check_exit_codes() {
    assert_eq!(run(&["lemma-check", "nosuch"], "").status.code(), Some(2));
    let o = run(&["lemma-check", "fil2", "--n-max", "40"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("| fil2 | n <= 40 |"));
    let o = run(&["lemma-check", "turan-shift", "--n-max", "30", "--k-max", "6", "--format", "json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lemmas"][0]["verdict"], "pass");
    assert_eq!(v["lemmas"][0]["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn table_markdown_layout() {
    let o = run(&["table", "class", "bipartite-kappa", "--n", "8"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("| class | n | extremal graph | ABS |"));
    assert!(out.contains("Kbar_1[4,2]") && out.contains("K_{4,4}"));
    let o = run(&["table", "lemmas", "--n-max", "12", "--format", "csv"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 13);
}
