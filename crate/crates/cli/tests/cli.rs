//! End-to-end checks of the binary: flag handling, exit codes and output
//! shapes.

use std::process::{Command, Output};

fn quasihom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasihom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn count_text_examples() {
    let out = quasihom(&["count", "--family", "cycle", "--n", "5", "--m", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n");

    let out = quasihom(&[
        "count",
        "--family",
        "path",
        "--n",
        "3",
        "--m",
        "3",
        "--method",
        "bruteforce",
    ]);
    assert_eq!(stdout(&out), "6\n");

    let out = quasihom(&[
        "count",
        "--family",
        "broken-wheel",
        "--n",
        "10",
        "--m",
        "5",
        "--method",
        "transfer",
    ]);
    assert!(out.status.success());
    let transfer_count = stdout(&out);
    let out = quasihom(&["count", "--family", "broken-wheel", "--n", "10", "--m", "5"]);
    assert_eq!(stdout(&out), transfer_count);
}

#[test]
fn count_json_shape() {
    let out = quasihom(&[
        "count",
        "--family",
        "wheel",
        "--n",
        "4",
        "--m",
        "4",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"family\":\"wheel\",\"n\":4,\"m\":4,\"class\":\"hom\",\"method\":\"closed\",\"count\":\"20\"}\n"
    );
}

#[test]
fn count_usage_errors_exit_two() {
    let out = quasihom(&["count", "--family", "cycle", "--n", "3", "--m", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("use complete(3)"));

    let out = quasihom(&["count", "--family", "complete", "--n", "2", "--m", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n >= 3"));

    let out = quasihom(&[
        "count",
        "--family",
        "complete",
        "--n",
        "3",
        "--m",
        "4",
        "--method",
        "transfer",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("method unsupported for family"));

    let out = quasihom(&[
        "count",
        "--family",
        "path",
        "--n",
        "4",
        "--m",
        "4",
        "--class",
        "inj",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = quasihom(&["count", "--family", "path", "--n", "4", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn profile_csv_matches_layout() {
    let out = quasihom(&[
        "profile", "--m", "4", "--families", "complete", "--n-max", "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,n,m,class,method,count"));
    assert_eq!(lines.next(), Some("complete,3,4,all,closed,12"));
    assert_eq!(lines.next(), Some("complete,3,4,inj,closed,12"));
    assert_eq!(lines.next(), Some("complete,3,4,sur,closed,0"));
    assert_eq!(lines.next(), Some("complete,3,4,bij,closed,0"));
    // The n = 5 >= m rows are present with count 0.
    assert!(text.contains("complete,5,4,all,closed,0\n"));
}

#[test]
fn profile_cycle_range_starts_at_four() {
    let out = quasihom(&["profile", "--m", "3", "--families", "cycle", "--n-max", "6"]);
    let text = stdout(&out);
    assert!(!text.contains("cycle,3,"));
    for n in 4..=6 {
        assert!(text.contains(&format!("cycle,{n},3,all,closed,")));
    }
}

#[test]
fn profile_json_round_trips() {
    let out = quasihom(&[
        "profile", "--m", "3", "--families", "path", "--n-max", "3", "--format", "json",
    ]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let rows = rows.as_array().expect("array of rows");
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["family"], "path");
    assert_eq!(rows[0]["n"], 2);
    assert_eq!(rows[0]["count"], "4");
    assert_eq!(rows[1]["n"], 3);
    assert_eq!(rows[1]["count"], "6");
}

#[test]
fn profile_unwritable_out_exits_three() {
    let out = quasihom(&[
        "profile",
        "--m",
        "3",
        "--families",
        "path",
        "--n-max",
        "3",
        "--out",
        "/nonexistent-dir/profile.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn poly_output_shapes() {
    let out = quasihom(&["poly", "--kind", "p", "--i", "1"]);
    assert_eq!(stdout(&out), "[-2, 1]  (= -2 + 1*m)\n");

    let out = quasihom(&["poly", "--kind", "q", "--i", "2", "--eval", "3"]);
    assert_eq!(stdout(&out), "[2, -3, 1]  (= 2 + -3*m + 1*m^2)\nq_2(3) = 2\n");

    let out = quasihom(&["poly", "--kind", "p", "--i", "0"]);
    assert_eq!(stdout(&out), "[1]  (= 1)\n");

    let out = quasihom(&["poly", "--kind", "r", "--i", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_grid_passes() {
    let dir = std::env::temp_dir().join("quasihom-cli-test-verify");
    std::fs::create_dir_all(&dir).unwrap();
    let errata = dir.join("errata.csv");
    let out = quasihom(&[
        "verify",
        "--n-max",
        "4",
        "--m-max",
        "4",
        "--transfer-n-max",
        "8",
        "--errata",
        errata.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    for property in [
        "closed-vs-bruteforce",
        "per-k-terms",
        "transfer-equivalence",
        "polynomial-fit",
        "printed-reconciliation",
    ] {
        assert!(text.contains(&format!("{property}: ok")), "missing {property}");
    }
    let csv = std::fs::read_to_string(&errata).unwrap();
    assert!(csv.starts_with("family,n,m,k,printed_value,normative_value,oracle_value\n"));
    assert!(csv.contains("path,4,3,1,6,10,10\n"));
}

#[test]
fn count_methods_agree_on_the_small_grid() {
    for (family, n) in [("path", "5"), ("cycle", "5"), ("wheel", "4")] {
        for m in ["3", "4"] {
            let closed = quasihom(&["count", "--family", family, "--n", n, "--m", m]);
            let brute = quasihom(&[
                "count",
                "--family",
                family,
                "--n",
                n,
                "--m",
                m,
                "--method",
                "bruteforce",
            ]);
            let transfer = quasihom(&[
                "count",
                "--family",
                family,
                "--n",
                n,
                "--m",
                m,
                "--method",
                "transfer",
            ]);
            assert_eq!(stdout(&closed), stdout(&brute), "{family} {n} {m}");
            assert_eq!(stdout(&closed), stdout(&transfer), "{family} {n} {m}");
        }
    }
}
