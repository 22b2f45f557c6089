use std::fs;
use std::process::{Command, Output};

use zic_core::sweep::{read_csv, CSV_HEADER};
use zic_core::SweepRow;

fn zic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zic"))
        .args(args)
        .output()
        .expect("run zic")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .parse()
        .unwrap()
}

#[test]
fn single_user_report() {
    let o = zic(&["single-user", "--power", "3.5", "--eps", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!((field(&text, "theta_star") - 0.7624).abs() < 1e-4);
    assert!((field(&text, "nu_star") - 2.5911).abs() < 1e-4);
    assert!((field(&text, "rate") - 0.7031).abs() < 1e-4);

    let o = zic(&["single-user", "--power", "1", "--eps", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["theta_star"], 1.0);
    assert_eq!(v["nu_star"], 1.0);
    assert_eq!(v["rate"], 0.5);
}

#[test]
fn domain_and_usage_errors_exit_2() {
    let o = zic(&["single-user", "--power", "0", "--eps", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("power budget must be positive"));

    assert_eq!(zic(&["sweep", "--steps", "1"]).status.code(), Some(2));
    assert_eq!(zic(&["sweep", "--a-min", "2", "--a-max", "1"]).status.code(), Some(2));
    assert_eq!(zic(&["single-user", "--power", "1"]).status.code(), Some(2));
    assert_eq!(zic(&["scheme", "--a", "0.5", "--scheme", "IV"]).status.code(), Some(2));
}

#[test]
fn regime_report_symmetric() {
    let o = zic(&["regime", "--p1", "3.5", "--eps1", "2", "--p2", "3.5", "--eps2", "2", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["overlap_required"], true);
    assert!((v["very_strong_threshold"].as_f64().unwrap() - 2.30).abs() < 0.02);
    assert_eq!(v["no_overhead_threshold"], 4.5);
}

#[test]
fn regime_report_without_overlap() {
    let o = zic(&["regime", "--p1", "0.1", "--eps1", "50", "--p2", "0.1", "--eps2", "50"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("overlap_required = false"));
    assert!(text.contains("very_strong_threshold = null"));
}

#[test]
fn config_file_supplies_profiles() {
    let dir = std::env::temp_dir().join(format!("zic-cli-it-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sym.toml");
    fs::write(&path, "p1 = 3.5\neps1 = 2.0\np2 = 3.5\neps2 = 2.0\n").unwrap();
    let o = zic(&["regime", "--config", path.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["very_strong_threshold"].as_f64().unwrap() - 2.3014).abs() < 1e-3);

    // A flag wins over the file.
    let o = zic(&["regime", "--config", path.to_str().unwrap(), "--p1", "10", "--eps1", "0.5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rho"], 0.0);
    assert_eq!(v["very_strong_threshold"], 10.5);

    assert_eq!(zic(&["regime", "--config", "/nonexistent/zic.toml"]).status.code(), Some(2));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn scheme_subcommand() {
    let o = zic(&["scheme", "--a", "1", "--scheme", "I"]);
    assert!(o.status.success());
    assert!((field(&stdout(&o), "sum_rate") - 1.0).abs() < 1e-6);

    let o = zic(&["scheme", "--a", "3", "--scheme", "best", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["scheme"], "IV");
}

#[test]
fn sweep_csv_and_json_agree() {
    let base = ["sweep", "--a-min", "0.5", "--a-max", "1.5", "--steps", "5", "--fast"];
    let csv = zic(&base);
    assert!(csv.status.success());
    let text = stdout(&csv);
    assert_eq!(text.lines().next().unwrap(), CSV_HEADER.join(","));
    let from_csv = read_csv(text.as_bytes()).unwrap();
    assert_eq!(from_csv.len(), 5);

    let mut json_args = base.to_vec();
    json_args.extend(["--format", "json"]);
    let json = zic(&json_args);
    let from_json: Vec<SweepRow> = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(from_csv, from_json);

    for row in &from_csv {
        assert_eq!(row.scheme_iv.is_some(), row.a >= 1.0);
        assert_eq!(row.scheme_v.is_some(), row.a < 1.0);
    }
    // Null cells are empty fields.
    assert!(text.lines().nth(1).unwrap().contains(",,"));
}
