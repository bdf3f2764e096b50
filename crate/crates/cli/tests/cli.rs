use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_susyosc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn tables_lists_exact_denominators() {
    let r = rows(&stdout(&["--command", "tables"]));
    assert_eq!(r.len(), 7);
    assert_eq!(r[0][..2], ["0", "1"]);
    assert_eq!(r[1][..2], ["1", "153538560"]);
    assert_eq!(r[3][..2], ["3", "4064630429445322020854169600"]);
}

#[test]
fn energy_starts_at_the_ground_level() {
    let csv = stdout(&["--command", "fig3", "--grid-z", "0:100:3"]);
    assert!(csv.starts_with("# fig3: abs_z,energy\n"));
    let r = rows(&csv);
    assert_eq!(r[0][0].parse::<f64>().unwrap(), 0.0);
    assert_eq!(r[0][1].parse::<f64>().unwrap(), 11.0);
}

#[test]
fn output_is_reproducible() {
    let args = ["--command", "fig5", "--grid-z", "log:1:1e5:9"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn malformed_grid_is_rejected() {
    let out = run(&["--command", "fig3", "--grid-z", "5:1"]);
    assert!(!out.status.success());
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn unknown_command_is_an_error() {
    let out = run(&["--command", "fig99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn degenerate_seeds_fail_verification() {
    let out = run(&["--command", "verify", "--seeds", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vanishes"));
}

#[test]
fn mandel_parameter_is_sub_poissonian() {
    let r = rows(&stdout(&["--command", "fig11"]));
    assert_eq!(r[0][1].parse::<f64>().unwrap(), 0.0);
    assert!(r[1..].iter().all(|row| row[1].parse::<f64>().unwrap() < 0.0));
}

#[test]
fn wigner_probe_is_reported() {
    let json = stdout(&[
        "--command", "fig7", "--grid-x", "1:2:2", "--grid-p", "0:1:2", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&json).unwrap();
    let probe = &v["notes"]["probe"];
    assert_eq!(probe["x"], 1.9);
    assert_eq!(probe["p"], 0.8);
    assert!(probe["reference_truncation"].as_f64().unwrap() < 0.0);
    assert!(probe["converged"].as_f64().unwrap() < 0.0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn beamsplitter_table_sums_to_one() {
    let json = stdout(&["--command", "fig8", "--nmax", "10", "--format", "json"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 121);
    let total = v["notes"]["total"].as_f64().unwrap();
    let tail = v["notes"]["tail_bound"].as_f64().unwrap();
    assert!((total + tail - 1.0).abs() < 1e-10);
}

#[test]
fn output_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("susyosc-cli-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&["--command", "tables", "--out", p]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["--command", "tables"]));
    std::fs::remove_file(path).unwrap();
}
