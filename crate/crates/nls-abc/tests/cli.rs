//! End-to-end tests of the `nls-abc` binary: exit codes, CSV layout, and
//! byte-level determinism of the outputs.

use std::path::Path;
use std::process::{Command, Output};

fn nls_abc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nls-abc")).args(args).output().expect("binary spawns")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

#[test]
fn run_writes_observables_and_reports_summary() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = dir.path().join("out");
    let output =
        nls_abc(&["run", "example1", "--t-final", "0.3", "--out-dir", out.to_str().unwrap()]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    let text = stdout_of(&output);
    assert!(text.contains("reflection ratio"), "summary missing: {text}");

    let csv = read(&out.join("observables.csv"));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("time,mass,reflection,boundary_error"));
    // Header plus levels 0..=30.
    assert_eq!(csv.lines().count(), 32);
    assert!(!csv.contains('\r'));
    assert!(out.join("final_abs.csv").is_file());
    assert!(out.join("final_full.csv").is_file());
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().expect("tempdir");
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for out in [&a, &b] {
        let output = nls_abc(&[
            "run",
            "example1",
            "--t-final",
            "0.3",
            "--snapshots",
            "0.1,0.3",
            "--out-dir",
            out.to_str().unwrap(),
        ]);
        assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    }
    for name in
        ["observables.csv", "final_full.csv", "snapshot_000010_abs.csv", "snapshot_000030_full.csv"]
    {
        let left = std::fs::read(a.join(name)).expect("first run output");
        let right = std::fs::read(b.join(name)).expect("second run output");
        assert_eq!(left, right, "{name} differs between reruns");
    }
}

#[test]
fn snapshot_files_have_the_documented_columns() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = dir.path().join("out");
    let output = nls_abc(&[
        "run",
        "example1",
        "--t-final",
        "0.2",
        "--snapshots",
        "0.2",
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));

    let abs = read(&out.join("snapshot_000020_abs.csv"));
    assert_eq!(abs.lines().next(), Some("x,abs"));
    // Header plus the 301 physical nodes.
    assert_eq!(abs.lines().count(), 302);

    let full = read(&out.join("snapshot_000020_full.csv"));
    assert_eq!(full.lines().next(), Some("x,re,im,abs"));
    assert_eq!(full.lines().count(), 302);
    let first = full.lines().nth(1).expect("data row");
    assert_eq!(first.split(',').count(), 4);
}

#[test]
fn flags_override_grid_and_boundary() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = dir.path().join("out");
    let output = nls_abc(&[
        "run",
        "example1",
        "--dx",
        "0.2",
        "--dt",
        "0.02",
        "--t-final",
        "0.1",
        "--order",
        "dirichlet",
        "--k0",
        "3.0",
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    let text = stdout_of(&output);
    assert!(text.contains("J = 150"), "dx flag ignored: {text}");
    assert!(text.contains("dt = 0.02"), "dt flag ignored: {text}");
    assert!(text.contains("T = 0.1"), "t-final flag ignored: {text}");
}

#[test]
fn config_file_plus_override_round_trip() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("custom.toml");
    std::fs::write(
        &path,
        r#"
preset = "example1"

[grid]
x_left = 0.0
x_right = 30.0
intervals = 150
dt = 0.02
steps = 10
"#,
    )
    .expect("write config");
    let out = dir.path().join("out");
    let output = nls_abc(&[
        "run",
        path.to_str().unwrap(),
        "--override",
        "boundary.k0_right=2.5",
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    assert!(stdout_of(&output).contains("J = 150"));
}

#[test]
fn invalid_time_step_exits_with_config_code() {
    let output = nls_abc(&["run", "example1", "--override", "grid.dt=-0.1"]);
    assert_eq!(output.status.code(), Some(2), "stderr: {}", stderr_of(&output));
    assert!(stderr_of(&output).contains("dt"), "stderr: {}", stderr_of(&output));
}

#[test]
fn unknown_preset_exits_with_config_code() {
    let output = nls_abc(&["run", "example9"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("example9"));
}

#[test]
fn missing_config_file_exits_with_config_code() {
    let output = nls_abc(&["run", "/no/such/config.toml"]);
    assert_eq!(output.status.code(), Some(2), "stderr: {}", stderr_of(&output));
}

#[test]
fn unwritable_output_directory_exits_with_io_code() {
    let dir = tempfile::tempdir().expect("tempdir");
    let blocker = dir.path().join("blocker");
    std::fs::write(&blocker, "not a directory").expect("write blocker");
    let out = blocker.join("out");
    let output =
        nls_abc(&["run", "example1", "--t-final", "0.05", "--out-dir", out.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1), "stderr: {}", stderr_of(&output));
}

#[test]
fn collapse_exits_with_stepping_code() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("collapse.toml");
    std::fs::write(
        &path,
        r#"
[physics]
hbar = 1.0
mass = 0.5
g = -20.0

[grid]
x_left = -5.0
x_right = 5.0
intervals = 200
dt = 0.001
steps = 2000

[nonlinearity]
kind = "quintic"

[potential]
kind = "zero"

[initial]
kind = "gaussian"
alpha = 1.0
x0 = 0.0

[boundary]
order = "abc3_nonlinear"
k0_left = 1.0
k0_right = 1.0
"#,
    )
    .expect("write config");
    let out = dir.path().join("out");
    let output = nls_abc(&["run", path.to_str().unwrap(), "--out-dir", out.to_str().unwrap()]);
    let code = output.status.code();
    assert!(
        code == Some(3) || code == Some(4),
        "expected stepping failure, got {code:?}; stderr: {}",
        stderr_of(&output)
    );
    assert!(stderr_of(&output).contains("step"), "stderr: {}", stderr_of(&output));
}

#[test]
fn sweep_writes_one_row_per_wavenumber() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = dir.path().join("out");
    let output = nls_abc(&[
        "sweep-k0",
        "example1",
        "--k0-list",
        "2.0,2.125",
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    let csv = read(&out.join("sweep.csv"));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "k0,g,reflection_ratio");
    assert_eq!(lines.len(), 3);
    let r: f64 = lines[1].split(',').nth(2).expect("ratio column").parse().expect("float");
    assert!(r < 1e-2, "matched wavenumber should absorb well, got {r}");
}

#[test]
fn converge_reports_second_order() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = dir.path().join("out");
    let output = nls_abc(&[
        "converge",
        "example1",
        "--dx-list",
        "0.4,0.2",
        "--times",
        "1",
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    let csv = read(&out.join("orders.csv"));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "dx_coarse,dx_fine,t,order");
    let order: f64 = lines[1].split(',').nth(3).expect("order column").parse().expect("float");
    assert!((1.5..=2.6).contains(&order), "order {order} outside the coarse-grid window");
    assert!(out.join("convergence.csv").is_file());
}

#[test]
fn stability_check_reports_both_orders() {
    let output = nls_abc(&["stability-check", "--k0", "2.0"]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    let text = stdout_of(&output);
    assert!(text.contains("order 2"), "missing order-2 row: {text}");
    assert!(text.contains("order 3"), "missing order-3 row: {text}");
    assert!(text.contains("well-posed"), "missing verdict: {text}");

    let gain = nls_abc(&["stability-check", "--k0", "2.0", "--v2", "0.5"]);
    assert!(gain.status.success());
    assert!(stdout_of(&gain).contains("NOT well-posed"));
}

#[test]
fn seed_flag_is_accepted() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = dir.path().join("out");
    let output = nls_abc(&[
        "run",
        "example1",
        "--t-final",
        "0.05",
        "--seed",
        "42",
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
}
