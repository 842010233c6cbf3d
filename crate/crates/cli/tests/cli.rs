use std::io::Write;
use std::process::{Command, Stdio};

use clap::Parser;
use hyperseq_cli::{args::Cli, run, Output};

fn exec(argv: &[&str]) -> Output {
    let cli = Cli::try_parse_from(std::iter::once("hyperseq").chain(argv.iter().copied()))
        .unwrap_or_else(|e| panic!("parse {argv:?}: {e}"));
    run(&cli).unwrap_or_else(|e| panic!("run {argv:?}: {e:#}"))
}

fn stdout(argv: &[&str]) -> String {
    let out = exec(argv);
    assert_eq!(out.code, 0, "{argv:?} exited {}: {}", out.code, out.stdout);
    out.stdout
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperseq"))
}

fn json(argv: &[&str]) -> serde_json::Value {
    serde_json::from_str(&exec(argv).stdout).unwrap()
}

#[test]
fn gen_examples() {
    assert_eq!(
        stdout(&["gen", "upath", "--n", "2", "--ell", "3"]),
        "{\"n_vertices\":5,\"edges\":[[0,1,2],[2,3,4]]}\n"
    );
    let rc: serde_json::Value = serde_json::from_str(&stdout(&["gen", "rollercoaster"])).unwrap();
    assert_eq!(rc["n_vertices"], 16);
    assert_eq!(
        stdout(&["gen", "star", "--sizes", "2,2,2"]),
        "{\"n_vertices\":4,\"edges\":[[0,1],[0,2],[0,3]]}\n"
    );
    assert_eq!(
        stdout(&["gen", "qpath", "--n", "2", "--ell", "3"]),
        "{\"n_vertices\":4,\"edges\":[[0,1],[1,2,3]]}\n"
    );
}

#[test]
fn gen_reports_the_violated_precondition() {
    let cli = Cli::try_parse_from(["hyperseq", "gen", "upath", "--n", "2"]).unwrap();
    let err = run(&cli).unwrap_err().to_string();
    assert!(err.contains("--ell"), "{err}");
    let cli = Cli::try_parse_from(["hyperseq", "gen", "upath", "--n", "2", "--ell", "1"]).unwrap();
    assert!(run(&cli).is_err());
}

#[test]
fn poly_examples() {
    assert_eq!(
        stdout(&["poly", "--family", "upath", "--n", "6", "--ell", "3", "--method", "closed"]),
        "1,13,60,120,104,36,4\n"
    );
    let rc = stdout(&["gen", "rollercoaster"]);
    let dir = std::env::temp_dir().join(format!("hyperseq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rc.json");
    std::fs::write(&path, rc).unwrap();
    assert_eq!(
        stdout(&[
            "poly",
            "--file",
            path.to_str().unwrap(),
            "--method",
            "brute"
        ]),
        "1,16,15,20,15,6,1\n"
    );
    let all = stdout(&[
        "poly",
        "--family",
        "star",
        "--sizes",
        "3,4",
        "--all-methods",
    ]);
    assert_eq!(all, "brute: 1,6,6\nclosed: 1,6,6\nagree: true\n");
}

#[test]
fn poly_methods_agree_on_every_family() {
    let cases: &[&[&str]] = &[
        &["--family", "upath", "--n", "5", "--ell", "4"],
        &["--family", "upath", "--n", "7", "--ell", "2"],
        &["--family", "qpath", "--n", "4", "--ell", "3"],
        &["--family", "comb", "--n", "3", "--ell", "3"],
        &["--family", "star", "--sizes", "2,3,4"],
    ];
    for case in cases {
        let mut argv = vec!["poly", "--all-methods"];
        argv.extend_from_slice(case);
        let out = stdout(&argv);
        assert!(out.ends_with("agree: true\n"), "{out}");
        assert!(out.lines().count() >= 3, "{out}");
    }
}

#[test]
fn poly_rejects_inapplicable_methods() {
    let cli = Cli::try_parse_from([
        "hyperseq",
        "poly",
        "--family",
        "rollercoaster",
        "--method",
        "closed",
    ])
    .unwrap();
    assert!(run(&cli).is_err());
    assert!(Cli::try_parse_from([
        "hyperseq",
        "poly",
        "--family",
        "upath",
        "--n",
        "2",
        "--ell",
        "3",
        "--method",
        "closed",
        "--all-methods",
    ])
    .is_err());
    assert!(Cli::try_parse_from(["hyperseq", "poly", "--bogus"]).is_err());
}

#[test]
fn poly_over_the_limit() {
    let cli = Cli::try_parse_from([
        "hyperseq", "--limit", "10", "poly", "--family", "comb", "--n", "3", "--ell", "3",
        "--method", "brute",
    ])
    .unwrap();
    let err = run(&cli).unwrap_err().to_string();
    assert!(err.contains("limit"), "{err}");
    // The recurrence has no limit.
    assert_eq!(
        stdout(&["--limit", "10", "poly", "--family", "comb", "--n", "3", "--ell", "3"]).trim(),
        stdout(&["poly", "--family", "comb", "--n", "3", "--ell", "3", "--method", "brute"]).trim()
    );
    let all = stdout(&[
        "--limit",
        "10",
        "poly",
        "--family",
        "comb",
        "--n",
        "3",
        "--ell",
        "3",
        "--all-methods",
    ]);
    assert!(all.starts_with("brute: skipped"), "{all}");
}

#[test]
fn check_examples() {
    let out = exec(&["check", "--seq", "1,16,15,20,15,6,1"]);
    assert_eq!(out.code, 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["unimodal"], false);
    assert_eq!(v["pass"], false);

    let out = exec(&[
        "check",
        "--family",
        "upath",
        "--n",
        "8",
        "--ell",
        "4",
        "--realrooted",
    ]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["real_rooted"], true);
    assert_eq!(v["requested"], serde_json::json!(["realrooted"]));

    let v = json(&["check", "--seq", "1"]);
    for key in ["unimodal", "log_concave", "newton", "real_rooted", "pass"] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn check_selected_verdicts_decide_the_exit_code() {
    // 1,16,15,... fails unimodality but has no internal zeros.
    assert_eq!(
        exec(&["check", "--seq", "1,16,15,20,15,6,1", "--unimodal"]).code,
        1
    );
    // Hyperstar (2,2,2): log-concave, not real-rooted.
    assert_eq!(
        exec(&[
            "check",
            "--family",
            "star",
            "--sizes",
            "2,2,2",
            "--logconcave"
        ])
        .code,
        0
    );
    assert_eq!(
        exec(&[
            "check",
            "--family",
            "star",
            "--sizes",
            "2,2,2",
            "--realrooted"
        ])
        .code,
        1
    );
}

#[test]
fn check_rejects_malformed_sequences() {
    for bad in ["1,x,2", "1,-2", ""] {
        let cli = Cli::try_parse_from(["hyperseq", "check", "--seq", bad]);
        if let Ok(cli) = cli {
            assert!(run(&cli).is_err(), "{bad}");
        }
    }
}

#[test]
fn table_examples() {
    let table1 = "n,0,1,2,3,4,5,6\n\
                  0,1,0,0,0,0,0,0\n\
                  1,1,3,0,0,0,0,0\n\
                  2,1,5,4,0,0,0,0\n\
                  3,1,7,12,4,0,0,0\n\
                  4,1,9,24,20,4,0,0\n\
                  5,1,11,40,56,28,4,0\n\
                  6,1,13,60,120,104,36,4\n";
    assert_eq!(stdout(&["table", "--ell", "3", "--nmax", "6"]), table1);

    let t2 = stdout(&["table", "--ell", "2", "--nmax", "5"]);
    // Row 0 is the empty hyperpath, not the one-vertex graph path.
    assert!(t2.lines().nth(1).unwrap().starts_with("0,1,0,"));
    for (n, line) in t2.lines().enumerate().skip(2).map(|(i, l)| (i - 1, l)) {
        let cells: Vec<u64> = line
            .split(',')
            .skip(1)
            .map(|c| c.parse().unwrap())
            .collect();
        for (k, &c) in cells.iter().enumerate() {
            assert_eq!(
                c,
                binomial(n as i64 - k as i64 + 2, k as i64),
                "n={n} k={k}"
            );
        }
    }

    let t4 = stdout(&["table", "--ell", "4", "--nmax", "3"]);
    assert_eq!(t4.lines().nth(3).unwrap(), "2,1,7,9,0");
}

fn binomial(a: i64, b: i64) -> u64 {
    if b < 0 || a < b {
        return 0;
    }
    (0..b).fold(1u64, |acc, i| acc * (a - i) as u64 / (i + 1) as u64)
}

#[test]
fn large_table_entries_become_strings_in_json() {
    let v = json(&["table", "--ell", "12", "--nmax", "40", "--format", "json"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[1][1], 12);
    let big = &rows[40][20];
    assert!(big.is_string(), "{big}");
    let small = &rows[5][2];
    assert!(small.is_u64());
}

#[test]
fn verify_examples() {
    let out = stdout(&["verify", "pknl", "--nmax", "8", "--ellmax", "5"]);
    assert!(out.starts_with("pknl: PASS ("), "{out}");
    let out = stdout(&["verify", "bijection", "--n", "3..7", "--ell", "3,4"]);
    assert!(out.starts_with("bijection: PASS"), "{out}");
    assert!(stdout(&["verify", "blocks", "--n", "2..6", "--ell", "3"]).starts_with("blocks: PASS"));
    assert!(stdout(&["verify", "comb", "--n", "0..3"]).starts_with("comb: PASS"));
}

#[test]
fn verify_factorization_forms() {
    // The single-bracket product form agrees only for n = 2, 3.
    let out = exec(&["verify", "factorization", "--ell", "3", "--n", "2..6"]);
    assert_eq!(out.code, 1);
    assert!(
        out.stdout.starts_with("factorization: FAIL (5 instances"),
        "{}",
        out.stdout
    );
    assert!(out.stdout.contains("n=4 ell=3"));
    assert!(!out.stdout.contains("n=3 ell=3"));
    assert_eq!(
        exec(&["verify", "factorization", "--ell", "3", "--n", "2..3"]).code,
        0
    );
    let out = stdout(&[
        "verify",
        "factorization",
        "--ell",
        "3",
        "--n",
        "2..6",
        "--form",
        "chebyshev",
    ]);
    assert!(out.starts_with("factorization: PASS"), "{out}");
}

#[test]
fn certify_comb_reports() {
    let v = json(&["certify-comb", "--ell", "3"]);
    assert_eq!(v["ell"], 3);
    assert_eq!(v["overall"], true);
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 6);
    let many = json(&["certify-comb", "--ell", "3,4,5"]);
    assert_eq!(many.as_array().unwrap().len(), 3);
}

#[test]
fn certify_reads_a_gadget() {
    let mut child = binary()
        .args(["certify", "--g", "-", "--v", "1", "--ell", "3"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n_vertices":3,"edges":[[0,1,2]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["overall"], true);
}

#[test]
fn certify_flags_a_non_log_concave_gadget() {
    let rc = stdout(&["gen", "rollercoaster"]);
    let mut child = binary()
        .args(["certify", "--g", "-", "--v", "10", "--ell", "3"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(rc.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["overall"], false);
    assert_eq!(v["witness"]["polynomial"], 1);
}

#[test]
fn binary_reads_stdin_and_honours_the_env_limit() {
    let mut child = binary()
        .args(["poly", "--file", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n_vertices":5,"edges":[[0,1,2],[2,3,4]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1,5,4\n");

    let out = binary()
        .args([
            "poly", "--family", "upath", "--n", "3", "--ell", "3", "--method", "brute",
        ])
        .env("HYPERSEQ_ENUM_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));

    let out = binary()
        .args(["gen", "upath", "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--ell"));
}

#[test]
fn output_is_deterministic() {
    let runs: &[&[&str]] = &[
        &["table", "--ell", "5", "--nmax", "9", "--format", "json"],
        &[
            "poly",
            "--family",
            "comb",
            "--n",
            "3",
            "--ell",
            "4",
            "--all-methods",
        ],
        &["certify-comb", "--ell", "3,7"],
        &["verify", "blocks", "--n", "4..5"],
    ];
    for argv in runs {
        assert_eq!(exec(argv), exec(argv), "{argv:?}");
    }
}

#[test]
fn attached_family_round_trip() {
    let dir = std::env::temp_dir().join(format!("hyperseq-att-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = dir.join("g.json");
    std::fs::write(&g, r#"{"n_vertices":3,"edges":[[0,1],[1,2]]}"#).unwrap();
    let g = g.to_str().unwrap();
    for aux in [false, true] {
        let mut argv = vec![
            "poly",
            "--family",
            "attached",
            "--g",
            g,
            "--v",
            "1",
            "--ell",
            "3",
            "--n",
            "3",
            "--all-methods",
        ];
        if aux {
            argv.push("--aux");
        }
        let out = stdout(&argv);
        assert!(out.ends_with("agree: true\n"), "{out}");
    }
}
