//! Smoke tests of the installed binary: exit codes and report files.

use std::fs;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_branchcurve"))
}

#[test]
fn verify_quadric_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let surface = dir.path().join("quadric.txt");
    fs::write(&surface, "x3^2+x0*x1+x2^2\n").unwrap();
    let out = dir.path().join("report.json");
    let status = bin()
        .args([
            "verify",
            "--surface",
            surface.to_str().unwrap(),
            "--primes",
            "1",
            "--seed",
            "3",
            "--json",
            out.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["verdict"], "PASS");
    assert_eq!(report["runs"][0]["deg_b"], 2);
}

#[test]
fn singular_input_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let surface = dir.path().join("cone.txt");
    fs::write(&surface, "x0^2+x1^2+x2^2\n").unwrap();
    let status = bin()
        .args([
            "verify",
            "--surface",
            surface.to_str().unwrap(),
            "--primes",
            "1",
            "--json",
            dir.path().join("r.json").to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(4));
}

#[test]
fn invariants_and_foci_subcommands() {
    let status = bin()
        .args(["invariants", "--d", "4", "--json", "-"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("family.txt");
    fs::write(&fam, "parametric: 1, u, v, u*v\n0, 1, 1, u+v\n").unwrap();
    let output = bin()
        .args(["foci", "--family", fam.to_str().unwrap(), "--at", "1,1", "--json", "-"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(report["foci"]["structure"], "two_distinct_roots");
}

#[test]
fn profile_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let surface = dir.path().join("cubic.txt");
    fs::write(&surface, "x0^3+x1^3+x2^3+x3^3\n").unwrap();
    let output = bin()
        .args([
            "profile",
            "--surface",
            surface.to_str().unwrap(),
            "--seed",
            "42",
            "--point",
            "1,2,3",
            "--json",
            "-",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
}
