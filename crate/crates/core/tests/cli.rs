use std::io::Write;
use std::process::{Command, Output, Stdio};

use svreg::cli::{ReportDocument, ReportResult};

fn svreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_svreg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> ReportDocument {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = svreg(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    ReportDocument::from_json(std::str::from_utf8(&out.stdout).unwrap().trim()).unwrap()
}

#[test]
fn reg_reports_value_and_note() {
    let doc = json(&["reg", "--l", "1,1", "--d", "1,1", "--m", "0,0"]);
    assert_eq!(doc.command, "reg");
    match doc.result {
        ReportResult::Regularity { value, witness, .. } => {
            assert_eq!(value, 1);
            assert_eq!(witness, vec![1, 2]);
        }
        other => panic!("{other:?}"),
    }
    assert!(!doc.note.is_empty());
}

#[test]
fn table_output_is_default() {
    let out = svreg(&["--explain", "reg", "--l", "1,1", "--d", "1,1", "--m", "0,0"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("reg = 1"), "{text}");
    assert!(text.contains("{1,2}"), "{text}");
    assert!(text.contains("<- max"), "{text}");
}

#[test]
fn usage_errors_exit_one() {
    let out = svreg(&["reg", "--l", "1,1", "--d", "1", "--m", "0,0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--d"), "{err}");

    assert_eq!(svreg(&["nonsense"]).status.code(), Some(1));
    assert_eq!(
        svreg(&["reg", "--l", "1", "--d", "1", "--m", "1.5"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn help_exits_zero() {
    let out = svreg(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("verify"));
}

#[test]
fn every_subcommand_runs() {
    let cases: &[&[&str]] = &[
        &["cohomology", "--l", "1,2", "--d", "1,1", "--m", "-2,-4"],
        &[
            "regular", "--l", "1,1", "--d", "1,1", "--m", "0,0", "--p", "1,1",
        ],
        &["oracle", "--l", "2", "--d", "2", "--m", "0", "--p", "-1"],
        &[
            "regset",
            "--l",
            "1,1",
            "--d",
            "1,1",
            "--m",
            "5,5",
            "--antichain",
        ],
        &[
            "member", "--l", "1,1", "--d", "1,1", "--m", "0,0", "--p", "0,1",
        ],
        &["reg", "--l", "3", "--d", "1", "--m", "0"],
        &["segre2", "--a", "2", "--b", "3", "--k", "0", "--l", "0"],
        &["lambda", "--l", "1,2", "--d", "1,1"],
        &[
            "subadd", "--l", "1,1", "--d", "1,1", "--m", "2,3", "--m2", "2,3",
        ],
        &[
            "tate", "--l", "1,1", "--d", "1,1", "--m", "0,0", "--pad", "1",
        ],
        &["endpoints", "--l", "2,2,2", "--d", "1,1,1", "--m", "5,5,5"],
    ];
    for args in cases {
        for format in ["table", "json"] {
            let mut full = vec!["--format", format];
            full.extend_from_slice(args);
            let out = svreg(&full);
            assert_eq!(
                out.status.code(),
                Some(0),
                "{args:?}: {}",
                String::from_utf8_lossy(&out.stderr)
            );
            assert!(!out.stdout.is_empty());
        }
    }
}

#[test]
fn subadd_always_holds() {
    let doc = json(&[
        "subadd", "--l", "1,2", "--d", "2,1", "--m", "-3,4", "--m2", "5,-7", "--p", "4,4", "--p2",
        "9,9",
    ]);
    match doc.result {
        ReportResult::Subadditivity {
            report,
            l_regularity,
        } => {
            assert!(report.holds);
            assert_eq!(l_regularity, Some(svreg::LSubadditivity::Holds));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn tate_window_document() {
    let doc = json(&[
        "tate", "--l", "1,1", "--d", "1,1", "--m", "0,0", "--pad", "1",
    ]);
    match doc.result {
        ReportResult::Window {
            window, inverted, ..
        } => {
            assert!(!inverted);
            assert_eq!((window.p_minus, window.p_plus), (-1, 1));
            let ps: Vec<i64> = window.terms.iter().map(|t| t.p).collect();
            assert_eq!(ps, vec![-2, -1, 0, 1, 2]);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn output_is_stable() {
    let args = [
        "--format",
        "json",
        "endpoints",
        "--l",
        "1,1",
        "--d",
        "1,1",
        "--m",
        "0,2",
    ];
    assert_eq!(svreg(&args).stdout, svreg(&args).stdout);
}

#[test]
fn verify_small_grid_passes() {
    let out = svreg(&[
        "--format",
        "json",
        "--seed",
        "3",
        "verify",
        "--max-l",
        "2",
        "--max-d",
        "2",
        "--range",
        "4",
        "--samples",
        "200",
        "--pairs",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = ReportDocument::from_json(std::str::from_utf8(&out.stdout).unwrap().trim()).unwrap();
    match doc.result {
        ReportResult::Verify { passed, report } => {
            assert!(passed);
            assert_eq!(report.config.seed, 3);
            assert_eq!(report.checks.len(), 8);
            assert!(report
                .checks
                .iter()
                .all(|c| c.instances > 0 && c.counterexample.is_none()));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn batch_emits_one_document_per_line() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_svreg"))
        .arg("batch")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"reg --l 1,1 --d 1,1 --m 0,0\n# comment\n\nlambda --l 2 --d 2\nreg --l 1 --d 1,1 --m 0\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let docs: Vec<ReportDocument> = text
        .lines()
        .map(|l| ReportDocument::from_json(l).unwrap())
        .collect();
    assert_eq!(docs.len(), 3);
    assert_eq!(docs[0].command, "reg");
    assert_eq!(docs[1].command, "lambda");
    assert!(matches!(docs[2].result, ReportResult::Error { .. }));
}
