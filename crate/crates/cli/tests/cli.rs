use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn autoratio(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_autoratio"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn gamma(p: &str, q: &str) -> String {
    let out = autoratio(&["gamma", "--p", p, "--q", q], None);
    assert_eq!(code(&out), 0);
    stdout(&out)
}

#[test]
fn gamma_piped_into_graph_aut() {
    let out = autoratio(&["aut", "graph", "-"], Some(&gamma("3", "2")));
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("order 6"));
    assert_eq!(text.lines().count(), 7);

    let out = autoratio(
        &["aut", "graph", "-", "--count-only"],
        Some(&gamma("6", "40")),
    );
    assert_eq!(stdout(&out), "order 720\n");
}

#[test]
fn gamma_output_file_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let out = autoratio(
        &[
            "gamma",
            "--p",
            "2",
            "--q",
            "1",
            "--plus",
            "-o",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code(&out), 0);
    let json = fs::read_to_string(&path).unwrap();
    assert!(json.contains("\"vertices\""));

    let dot = stdout(&autoratio(
        &["gamma", "--p", "1", "--q", "1", "--format", "dot"],
        None,
    ));
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("c0 -- "));
}

#[test]
fn structures_from_graph_have_graph_group() {
    let g = gamma("3", "2");
    for kind in ["monoid", "partial-group", "poset"] {
        let built = autoratio(&["construct", kind, "-"], Some(&g));
        assert_eq!(code(&built), 0, "{kind}");
        let out = autoratio(&["aut", kind, "-", "--count-only"], Some(&stdout(&built)));
        assert_eq!(
            code(&out),
            0,
            "{kind}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(stdout(&out), "order 6\n", "{kind}");
    }
}

#[test]
fn construct_check_reports_axioms() {
    let g = gamma("2", "1");
    let pg = autoratio(&["construct", "partial-group", "-", "--check"], Some(&g));
    assert_eq!(code(&pg), 0);
    let poset = autoratio(&["construct", "poset", "-", "--check"], Some(&g));
    assert_eq!(code(&poset), 0);
    let monoid = autoratio(&["construct", "monoid", "-", "--check"], Some(&g));
    assert_eq!(code(&monoid), 2);
    assert!(String::from_utf8_lossy(&monoid.stderr).contains("associativity"));
}

#[test]
fn partial_group_word_queries() {
    let g = gamma("2", "1");
    let yes = autoratio(&["pg", "check", "-", "--word", "[c0,c1][c1]"], Some(&g));
    assert_eq!(code(&yes), 0);
    assert_eq!(
        stdout(&yes),
        "word [c0,c1][c1]\nin domain: yes\nproduct: [c0]\n"
    );

    for word in ["[c0][c1][c0]", "[c1][c2]"] {
        let no = autoratio(&["pg", "check", "-", "--word", word], Some(&g));
        assert_eq!(code(&no), 0);
        assert!(stdout(&no).ends_with("in domain: no\n"), "{word}");
    }

    let bad = autoratio(&["pg", "check", "-", "--word", "[c0][zz]"], Some(&g));
    assert_eq!(code(&bad), 65);
}

#[test]
fn evoalg_matrix_check() {
    let dir = tempfile::tempdir().unwrap();
    let g = gamma("2", "1");
    let alg = autoratio(&["construct", "evoalg", "-"], Some(&g));
    let alg_path = dir.path().join("a.evoalg");
    fs::write(&alg_path, stdout(&alg)).unwrap();
    // basis: c0 c1 c2 d1 {c0,c1} {c0,c2} {c0,d1}
    let swap = "7\n1 0 0 0 0 0 0\n0 0 1 0 0 0 0\n0 1 0 0 0 0 0\n0 0 0 1 0 0 0\n0 0 0 0 0 1 0\n0 0 0 0 1 0 0\n0 0 0 0 0 0 1\n";
    let bad = "7\n1 0 0 0 0 0 0\n0 0 0 1 0 0 0\n0 0 1 0 0 0 0\n0 1 0 0 0 0 0\n0 0 0 0 1 0 0\n0 0 0 0 0 1 0\n0 0 0 0 0 0 1\n";
    for (name, m, expect) in [("swap", swap, 0), ("bad", bad, 2)] {
        let path = dir.path().join(name);
        fs::write(&path, m).unwrap();
        let out = autoratio(
            &[
                "evoalg",
                "check-matrix",
                alg_path.to_str().unwrap(),
                path.to_str().unwrap(),
            ],
            None,
        );
        assert_eq!(code(&out), expect, "{name}: {}", stdout(&out));
    }
}

#[test]
fn realize_and_verify() {
    let out = autoratio(
        &[
            "realize", "--ratio", "1/1", "--target", "graph-v", "--verify", "3",
        ],
        None,
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("achieved ratio 6/6 = 1"), "{text}");
    assert!(text.trim_end().ends_with("PASS"));

    let dir = tempfile::tempdir().unwrap();
    let out = autoratio(
        &[
            "realize",
            "--ratio",
            "3/2",
            "--target",
            "poset",
            "--verify",
            "3",
            "-o",
            dir.path().to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(dir.path().join("graph.json").exists());
    assert!(fs::read_to_string(dir.path().join("structure.poset"))
        .unwrap()
        .starts_with("autoratio-poset v1"));
}

#[test]
fn realize_plan_only_prints_exact_integers() {
    let out = autoratio(&["realize", "--ratio", "5", "--target", "monoid"], None);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("p: 20\n"));
    assert!(text.contains("q: 243290200817663978\n"));
}

#[test]
fn exit_codes() {
    let refused = autoratio(
        &[
            "realize", "--ratio", "5", "--target", "monoid", "--verify", "1",
        ],
        None,
    );
    assert_eq!(code(&refused), 3);
    assert!(stdout(&refused).contains("refused"));

    assert_eq!(
        code(&autoratio(&["aut", "graph", "-", "--frobnicate"], None)),
        64
    );
    assert_eq!(
        code(&autoratio(
            &["realize", "--ratio", "0", "--target", "poset"],
            None
        )),
        64
    );
    assert_eq!(
        code(&autoratio(
            &["aut", "graph", "-"],
            Some("{\"vertices\": [\"a\"], \"edges\": [[\"a\",\"b\"]]}")
        )),
        65
    );
    assert_eq!(
        code(&autoratio(&["aut", "poset", "-"], Some("not a poset"))),
        65
    );
    assert_eq!(
        code(&autoratio(
            &["aut", "graph", "/nonexistent/file.json"],
            None
        )),
        66
    );
    assert_eq!(code(&autoratio(&["--help"], None)), 0);
}

#[test]
fn output_is_deterministic() {
    let g = gamma("3", "2");
    let a = autoratio(&["aut", "partial-group", "-"], Some(&g));
    let b = autoratio(&["aut", "partial-group", "-"], Some(&g));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_paper_quick_table_and_csv() {
    let out = autoratio(&["verify-paper", "--quick"], None);
    let text = stdout(&out);
    assert_eq!(code(&out), 0, "{text}");
    assert!(!text.contains("FAIL"), "{text}");
    assert_eq!(
        text.lines()
            .filter(|l| l.starts_with("[PASS] criterion"))
            .count(),
        9
    );

    let csv = autoratio(&["verify-paper", "--quick", "--csv", "-"], None);
    let csv_text = stdout(&csv);
    assert_eq!(
        csv_text.lines().next(),
        Some("claim,expected,computed,status")
    );
    assert!(csv_text.lines().skip(1).all(|l| l.ends_with(",PASS")));
}
