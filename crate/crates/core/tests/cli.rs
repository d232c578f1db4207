use std::process::{Command, Output};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonlocality-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn prbox_report() {
    let o = lab(&["prbox"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("F = 4.000000, class = superquantum"));
    assert!(s.contains("no-signaling: PASS"));
    assert!(s.contains("outcome independence: FAIL"));
    assert!(s.contains("parameter independence: PASS"));

    let o = lab(&["prbox", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["chsh"]["f"], 4.0);
    assert_eq!(v["chsh"]["class"], "superquantum");
    assert_eq!(v["outcome_independence"]["holds"], false);
}

#[test]
fn singlet_passes_and_is_deterministic() {
    let args = ["singlet", "--n", "1000000", "--seed", "7"];
    let a = lab(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert!(!stdout(&a).contains("FAIL"));
    let b = lab(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn singlet_output_independent_of_thread_count() {
    let args = [
        "singlet", "--n", "100000", "--seed", "3", "--pairs", "2", "--json",
    ];
    let one = Command::new(env!("CARGO_BIN_EXE_nonlocality-lab"))
        .args(args)
        .env("NONLOCALITY_LAB_THREADS", "1")
        .output()
        .unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_nonlocality-lab"))
        .args(args)
        .env("NONLOCALITY_LAB_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_nonlocality-lab"))
        .args(args)
        .env("NONLOCALITY_LAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lab(&["singlet", "--n", "0"]).status.code(), Some(2));
    assert_eq!(lab(&["singlet", "--n", "abc"]).status.code(), Some(2));
    assert_eq!(
        lab(&["crypto", "eval", "--alpha", "1.0", "--tau", "0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lab(&["crypto", "tau-average", "--alpha", "-0.1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lab(&["theorem", "--nmin", "1", "--nmax", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lab(&["theorem", "--nmin", "2", "--nmax", "17"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lab(&["crypto", "scan", "--grid", "1x5", "--out", "x.csv"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(lab(&[]).status.code(), Some(2));
}

#[test]
fn crypto_eval_near_singular_point() {
    let o = lab(&[
        "crypto",
        "eval",
        "--alpha",
        "0.5235987756",
        "--tau",
        "1.5607963268",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["f"].as_f64().unwrap().abs() > 3.8);
    assert_eq!(v["class"], "superquantum");
    assert_eq!(v["discrepancy"]["matching"], "normalized");
    assert!(v["closed_form"]["printed"].is_array());
}

#[test]
fn crypto_scan_writes_all_classes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.csv");
    let o = lab(&[
        "crypto",
        "scan",
        "--grid",
        "200x200",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("alpha,tau,f,class"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 40_000);
    for class in ["local", "quantum", "superquantum"] {
        assert!(
            rows.iter().any(|r| r.ends_with(&format!(",{class}"))),
            "{class}"
        );
    }

    let json = dir.path().join("fig1.json");
    let o = lab(&[
        "crypto",
        "scan",
        "--grid",
        "4x3",
        "--out",
        json.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["cells"].as_array().unwrap().len(), 12);
}

#[test]
fn crypto_tau_average_at_tsirelson_angle() {
    let o = lab(&["crypto", "tau-average", "--alpha", "0.3926990817"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("tau-average F = -2.828427"));
}

#[test]
fn theorem_runs() {
    let o = lab(&[
        "theorem", "--nmin", "2", "--nmax", "5", "--trials", "50", "--seed", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(!s.contains("FAIL"));
    assert!(s.contains("overall: PASS"));

    let o = lab(&["theorem", "--nmin", "2", "--nmax", "2", "--trials", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("N = 2: spectrum {-1, +1}, empty kernel"));

    let o = lab(&[
        "theorem", "--nmin", "2", "--nmax", "3", "--trials", "3", "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["bound"]["at_million"].as_f64().unwrap() < 3e-6);
    assert_eq!(v["pass"], true);
}
