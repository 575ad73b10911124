//! End-to-end exercising of the CLI subcommands and their file outputs.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cqdds(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cqdds"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn assert_ok(out: &Output) {
    assert!(
        out.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn run_then_report_produces_the_table_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = cqdds(
        &[
            "run",
            "--algo",
            "cqdds,qpso",
            "--function",
            "F1,F16",
            "--dim",
            "5",
            "--iters",
            "60",
            "--trials",
            "3",
            "--seed",
            "9",
            "--workers",
            "2",
            "--out",
            "exp",
        ],
        dir.path(),
    );
    assert_ok(&out);
    let records = dir.path().join("exp/records.csv");
    assert!(records.exists());
    assert!(dir.path().join("exp/timings.csv").exists());

    let out = cqdds(
        &["report", "--records", "exp/records.csv", "--out", "exp"],
        dir.path(),
    );
    assert_ok(&out);
    for file in [
        "summary.csv",
        "ttest.csv",
        "effects.csv",
        "wtl.csv",
        "ranks.csv",
        "precision.csv",
    ] {
        let path = dir.path().join("exp").join(file);
        assert!(path.exists(), "{file} missing");
        let text = fs::read_to_string(path).unwrap();
        assert!(text.lines().count() > 1, "{file} has no data rows");
    }
    // 2 algorithms x 2 functions
    let summary = fs::read_to_string(dir.path().join("exp/summary.csv")).unwrap();
    assert_eq!(summary.lines().count(), 1 + 4);
}

#[test]
fn identical_seeds_give_byte_identical_records() {
    let dir = tempfile::tempdir().unwrap();
    for (out_dir, workers) in [("a", "1"), ("b", "4")] {
        let out = cqdds(
            &[
                "run",
                "--algo",
                "pso-damped",
                "--function",
                "F9",
                "--dim",
                "4",
                "--iters",
                "50",
                "--trials",
                "4",
                "--seed",
                "123",
                "--workers",
                workers,
                "--out",
                out_dir,
            ],
            dir.path(),
        );
        assert_ok(&out);
    }
    let a = fs::read(dir.path().join("a/records.csv")).unwrap();
    let b = fs::read(dir.path().join("b/records.csv")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn config_file_drives_run_with_flag_overrides() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("exp.conf"),
        "algo = qpso\nfunction = F16\niters = 40\ntrials = 2\nseed = 5\nout = from-config\n",
    )
    .unwrap();
    // --trials overrides the file's 2
    let out = cqdds(
        &["run", "--config", "exp.conf", "--trials", "3"],
        dir.path(),
    );
    assert_ok(&out);
    let records = fs::read_to_string(dir.path().join("from-config/records.csv")).unwrap();
    assert_eq!(records.lines().count(), 1 + 3);
}

#[test]
fn json_format_is_parseable() {
    let dir = tempfile::tempdir().unwrap();
    let out = cqdds(
        &[
            "run",
            "--algo",
            "qpso",
            "--function",
            "F16",
            "--iters",
            "40",
            "--trials",
            "2",
            "--seed",
            "5",
            "--out",
            "j",
            "--format",
            "json",
        ],
        dir.path(),
    );
    assert_ok(&out);
    let text = fs::read_to_string(dir.path().join("j/records.json")).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 2);
}

#[test]
fn trajectory_export_is_monotone_and_reparses() {
    let dir = tempfile::tempdir().unwrap();
    let out = cqdds(
        &[
            "trajectory",
            "--algo",
            "cqdds",
            "--function",
            "F1",
            "--dim",
            "8",
            "--iters",
            "300",
            "--seed",
            "42",
            "--trial",
            "1",
            "--out",
            "t",
        ],
        dir.path(),
    );
    assert_ok(&out);
    let path = dir.path().join("t/trajectory-cqdds-F1-trial1.csv");
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "iteration,cost,x1,x2");
    let costs: Vec<f64> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!(!costs.is_empty());
    assert!(
        costs.windows(2).all(|w| w[1] < w[0]),
        "costs not strictly decreasing"
    );
}

#[test]
fn dump_chaos_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["c1.csv", "c2.csv"] {
        let out = cqdds(
            &["dump-chaos", "--seed", "42", "--n", "1000", "--out", name],
            dir.path(),
        );
        assert_ok(&out);
    }
    let a = fs::read(dir.path().join("c1.csv")).unwrap();
    let b = fs::read(dir.path().join("c2.csv")).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().count(), 1 + 1000);
    for line in text.lines().skip(1) {
        let w: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert!((0.0..=1.0).contains(&w));
    }
}

#[test]
fn fixture_report_reproduces_reference_cells() {
    let dir = tempfile::tempdir().unwrap();
    let fixture = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../cqdds/fixtures/paper-tables.csv"
    );
    let out = cqdds(
        &["report", "--fixture", fixture, "--out", "ref"],
        dir.path(),
    );
    assert_ok(&out);
    let ttest = fs::read_to_string(dir.path().join("ref/ttest.csv")).unwrap();
    let f1_sca = ttest
        .lines()
        .find(|l| l.starts_with("F1,cqdds,sca,"))
        .expect("F1 cqdds-vs-sca row");
    let t: f64 = f1_sca.split(',').nth(3).unwrap().parse().unwrap();
    assert!((t - -1.8707).abs() < 5e-4, "{t}");

    let wtl = fs::read_to_string(dir.path().join("ref/wtl.csv")).unwrap();
    assert!(wtl.lines().any(|l| l == "mean,cqdds,10,0,13"));

    let ranks = fs::read_to_string(dir.path().join("ref/ranks.csv")).unwrap();
    let rank_line = ranks
        .lines()
        .find(|l| l.starts_with("mean,cqdds,"))
        .unwrap();
    let avg: f64 = rank_line.split(',').nth(5).unwrap().parse().unwrap();
    assert!((avg - 2.333).abs() < 1e-3, "{avg}");
}

#[test]
fn unknown_ids_fail_with_a_message() {
    let dir = tempfile::tempdir().unwrap();
    let out = cqdds(
        &["run", "--algo", "warp", "--function", "F1", "--out", "x"],
        dir.path(),
    );
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown algorithm"));

    let out = cqdds(
        &["run", "--algo", "sca", "--function", "F1", "--out", "x"],
        dir.path(),
    );
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("external reference"));
}
