//! End-to-end checks of the wenobench binary: argument handling, config-file
//! precedence, artifact layout, exit codes, and byte-level determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wenobench"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn wenobench")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn read(dir: &Path, name: &str) -> String {
    fs::read_to_string(dir.join(name))
        .unwrap_or_else(|e| panic!("missing artifact {name}: {e}"))
}

#[test]
fn run_writes_summary_and_field_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "run",
        "--problem",
        "square-wave",
        "--scheme",
        "weno-z",
        "--n",
        "200",
        "--cfl",
        "0.4",
        "--t-end",
        "2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));

    let field = read(dir.path(), "square-wave_weno-z_n200_field.csv");
    let lines: Vec<&str> = field.lines().collect();
    assert_eq!(lines.len(), 201, "header + one row per cell");
    assert_eq!(lines[0], "x,u,exact");

    let summary = read(dir.path(), "square-wave_weno-z_n200_summary.csv");
    assert!(summary.lines().count() >= 2);
    assert!(stdout(&out).contains("square-wave_weno-z_n200_field.csv"));
}

#[test]
fn unknown_scheme_exits_2_and_lists_ids() {
    let out = run(&[
        "run",
        "--problem",
        "square-wave",
        "--scheme",
        "weno-q",
        "--n",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr(&out);
    assert!(msg.contains("unknown scheme"), "stderr: {msg}");
    assert!(msg.contains("weno-z") && msg.contains("weno-nip"), "stderr: {msg}");
}

#[test]
fn mop_prefix_rejected_for_non_z_types() {
    let out = run(&[
        "run",
        "--problem",
        "square-wave",
        "--scheme",
        "mop-gmweno-js",
        "--n",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not defined"), "stderr: {}", stderr(&out));
}

#[test]
fn unknown_problem_exits_2_and_lists_ids() {
    let out = run(&["run", "--problem", "vortex", "--scheme", "weno-z", "--n", "50"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr(&out);
    assert!(msg.contains("unknown problem"), "stderr: {msg}");
    assert!(msg.contains("slp") && msg.contains("riemann2d-cfg9"), "stderr: {msg}");
}

#[test]
fn injected_nan_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "run",
        "--problem",
        "square-wave",
        "--scheme",
        "weno-z",
        "--n",
        "50",
        "--cfl",
        "0.4",
        "--t-end",
        "1",
        "--out",
        dir.path().to_str().unwrap(),
        "--inject-nan",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn config_file_values_are_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("case.cfg");
    fs::write(
        &cfg,
        "# benchmark case\n\
         [case]\n\
         problem = square-wave\n\
         scheme = weno-z\n\
         n = 100\n\
         cfl = 0.4\n\
         t_end = 0.5\n",
    )
    .unwrap();
    let out = run(&[
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--n",
        "50",
        "--print-config",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("problem = square-wave"), "stdout: {text}");
    assert!(text.contains("n = 50"), "flag must beat the file: {text}");
    assert!(text.contains("cfl = 0.4"), "stdout: {text}");
    // Defaults show through when neither file nor flag sets a key.
    assert!(text.contains("eps = 1e-40"), "stdout: {text}");
    assert!(text.contains("p = 2"), "stdout: {text}");
}

#[test]
fn reruns_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let out = run(&[
            "run",
            "--problem",
            "square-wave",
            "--scheme",
            "mop-gmweno-z",
            "--n",
            "64",
            "--cfl",
            "0.4",
            "--t-end",
            "0.5",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert!(out.status.success(), "stderr: {}", stderr(&out));
    }
    for name in [
        "square-wave_mop-gmweno-z_n64_summary.csv",
        "square-wave_mop-gmweno-z_n64_field.csv",
    ] {
        assert_eq!(read(a.path(), name), read(b.path(), name), "{name} differs");
    }
}

#[test]
fn sweep_writes_convergence_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "sweep",
        "--problem",
        "euler-sine",
        "--scheme",
        "weno-z",
        "--n-list",
        "10,20",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let csv = read(dir.path(), "euler-sine_sweep_errors.csv");
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 3, "header + one row per resolution");
    assert_eq!(
        lines[0],
        "scheme,n,l1,l1_order,linf,linf_order,chi1_pct,chiinf_pct"
    );
    assert!(lines[1].starts_with("weno-z,10,"));
    assert!(lines[2].starts_with("weno-z,20,"));
}

#[test]
fn outdir_env_var_is_the_fallback() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args([
            "run",
            "--problem",
            "square-wave",
            "--scheme",
            "weno-z",
            "--n",
            "50",
            "--cfl",
            "0.4",
            "--t-end",
            "0.5",
        ])
        .env("WENOBENCH_OUTDIR", dir.path())
        .output()
        .expect("spawn wenobench");
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(dir.path().join("square-wave_weno-z_n50_field.csv").exists());
}

#[test]
fn study_list_names_presets() {
    let out = run(&["study", "--list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("critical"), "stdout: {text}");
    assert!(text.contains("euler-ic1"), "stdout: {text}");
    assert_eq!(text.lines().count(), 8, "stdout: {text}");
}
