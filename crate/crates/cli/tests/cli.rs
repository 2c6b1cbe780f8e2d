use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn sti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sti"))
        .args(args)
        .env_remove("STI_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("sti-cli-{}-{name}", std::process::id()));
    p
}

#[test]
fn constants_reports_thresholds() {
    let v = stdout_json(&sti(&["constants"]));
    let g = v["gamma_crit"].as_f64().unwrap();
    assert!((g - 1.1496525950311107).abs() < 1e-11);
    assert!(v["gamma_crit_residual"].as_f64().unwrap().abs() < 1e-13);
    assert!((v["bb_bound"].as_f64().unwrap() - 1.2870022175865687).abs() < 1e-11);
    let table = v["table"].as_array().unwrap();
    assert_eq!(table.len(), 17);
    for row in table {
        assert!(row["gamma"].as_f64().unwrap() >= g - 1e-11);
        assert!(row["i_gamma"].as_f64().unwrap().is_finite());
        assert!(row["e_gamma"].as_f64().unwrap().is_finite());
    }
    // at Γ the curve has just appeared: its reach is zero
    assert_eq!(table[0]["i_gamma"].as_f64().unwrap(), 0.0);
}

#[test]
fn quad_reports_the_estimate() {
    let v = stdout_json(&sti(&["quad", "--nodes", "32"]));
    assert!((v["estimate"].as_f64().unwrap() - 0.786752632717).abs() < 1e-11);
    assert_eq!(v["method"], "quadrature");
    assert_eq!(v["nodes"], 32);
}

#[test]
fn prob_reports_a_bracket() {
    let v = stdout_json(&sti(&["prob", "--outer", "64", "--inner", "64"]));
    let lower = v["lower"].as_f64().unwrap();
    let upper = v["upper"].as_f64().unwrap();
    let estimate = v["estimate"].as_f64().unwrap();
    assert!(lower < estimate && estimate < upper);
    assert!(lower > 0.78 && upper < 0.79);
    assert!(upper - lower < 1e-2);
    assert_eq!(v["method"], "riemann-certified");
    assert_eq!(v["outer_resolution"], 64);
    assert_eq!(v["inner_resolution"], 64);
}

#[test]
fn mc_is_deterministic() {
    let a = sti(&["mc", "--samples", "100000", "--seed", "42"]);
    let b = sti(&["mc", "--samples", "100000", "--seed", "42"]);
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["p_hat"].as_f64().unwrap(), 0.78781);
    assert_eq!(v["obtuse_successes"], 0);
    assert_eq!(v["samples"], 100000);
    assert_eq!(v["seed"], 42);
    assert!(v["std_error"].as_f64().unwrap() > 0.0);
    assert!(v["conditional_p_hat"].as_f64().unwrap() > v["p_hat"].as_f64().unwrap());
}

#[test]
fn frame_writes_pgm_and_sidecar() {
    let out = tmp_path("clean.pgm");
    let v = stdout_json(&sti(&[
        "frame",
        "--gamma",
        "0.5",
        "--points",
        "64",
        "--out",
        out.to_str().unwrap(),
    ]));
    assert_eq!(v["negative_fraction"].as_f64().unwrap(), 0.0);
    assert_eq!(v["points"], 64);
    assert_eq!(v["pgm"].as_str().unwrap(), out.to_str().unwrap());

    let pgm = std::fs::read(&out).unwrap();
    assert!(pgm.starts_with(b"P5\n64 64\n255\n"));
    assert!(
        !pgm.contains(&0u8),
        "a fully-passing frame has no black pixel"
    );

    let sidecar: Value =
        serde_json::from_slice(&std::fs::read(out.with_extension("json")).unwrap()).unwrap();
    assert_eq!(sidecar["gamma"], 0.5);
    assert_eq!(sidecar["guide_lines"].as_array().unwrap().len(), 3);

    // a second run reproduces the file byte for byte
    let _ = stdout_json(&sti(&[
        "frame",
        "--gamma",
        "0.5",
        "--points",
        "64",
        "--out",
        out.to_str().unwrap(),
    ]));
    assert_eq!(std::fs::read(&out).unwrap(), pgm);

    std::fs::remove_file(&out).ok();
    std::fs::remove_file(out.with_extension("json")).ok();
}

#[test]
fn frame_accepts_degrees() {
    let out = tmp_path("deg.pgm");
    let v = stdout_json(&sti(&[
        "frame",
        "--degrees",
        "--gamma",
        "45",
        "--points",
        "64",
        "--out",
        out.to_str().unwrap(),
    ]));
    let gamma = v["gamma"].as_f64().unwrap();
    assert!((gamma - std::f64::consts::FRAC_PI_4).abs() < 1e-11);
    let sidecar: Value =
        serde_json::from_slice(&std::fs::read(out.with_extension("json")).unwrap()).unwrap();
    assert!((sidecar["gamma"].as_f64().unwrap() - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
    std::fs::remove_file(&out).ok();
    std::fs::remove_file(out.with_extension("json")).ok();
}

#[test]
fn verify_passes_and_reports() {
    let out = sti(&["verify", "--samples", "500"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 13);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("check area-identity: ok"));
    assert!(stderr.contains("check euclidean-limit: ok"));
}

#[test]
fn validation_errors_exit_one() {
    let out_path = tmp_path("invalid.pgm");
    let cases: Vec<Vec<&str>> = vec![
        vec!["prob", "--outer", "1"],
        vec!["quad", "--nodes", "2"],
        vec!["mc", "--samples", "0"],
        vec![
            "frame",
            "--gamma",
            "2.0",
            "--out",
            out_path.to_str().unwrap(),
        ],
        vec![
            "frame",
            "--gamma",
            "1.2",
            "--points",
            "8",
            "--out",
            out_path.to_str().unwrap(),
        ],
        vec![
            "frame",
            "--gamma",
            "1.2",
            "--out",
            "/nonexistent-sti-dir/x.pgm",
            "--points",
            "16",
        ],
        vec!["bogus"],
        vec!["prob", "--bogus"],
    ];
    for args in cases {
        let out = sti(&args);
        assert_eq!(out.status.code(), Some(1), "args {args:?}");
        assert!(!out.stderr.is_empty(), "args {args:?} left stderr empty");
    }
}

#[test]
fn help_and_version_exit_zero() {
    let help = sti(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    let text = String::from_utf8_lossy(&help.stdout);
    for sub in ["prob", "quad", "mc", "frame", "constants", "verify"] {
        assert!(text.contains(sub), "help misses {sub}");
    }
    assert_eq!(sti(&["--version"]).status.code(), Some(0));
}

#[test]
fn thread_cap_does_not_change_results() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_sti"))
            .args(["prob", "--outer", "32", "--inner", "32"])
            .env("STI_THREADS", threads)
            .output()
            .expect("binary runs")
    };
    let one = run("1");
    let four = run("4");
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);

    let bad = Command::new(env!("CARGO_BIN_EXE_sti"))
        .args(["constants"])
        .env("STI_THREADS", "abc")
        .output()
        .expect("binary runs");
    assert_eq!(bad.status.code(), Some(1));
}
