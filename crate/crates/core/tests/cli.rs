//! Command-line contract: outputs, formats and exit codes.

use std::process::Command;

use grunsky_bounds::cli::run_with;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(std::iter::once("grunsky").chain(args.iter().copied()), &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = run(args);
    assert_eq!(o.code, 0, "{}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn series_koebe_json_has_rational_omegas() {
    let v = json(&["series", "--fn", "koebe", "--order", "10", "--format", "json"]);
    assert_eq!(v["omega"]["1,1"], "1");
    assert_eq!(v["omega"]["3,3"], "1/3");
    assert_eq!(v["omega"]["1,3"], "0");
    assert_eq!(v["f"][10], "10");
    assert_eq!(v["univalence_verified"], true);
}

#[test]
fn series_identity_table_is_zero() {
    let v = json(&["series", "--fn", "identity", "--order", "5", "--format", "json"]);
    let omega = v["omega"].as_object().unwrap();
    assert!(!omega.is_empty());
    assert!(omega.values().all(|w| w == "0"));
}

#[test]
fn custom_koebe_prefix_matches_koebe() {
    let custom = json(&["series", "--fn", "custom", "--coeffs", "0,1,2,3,4,5", "--order", "5", "--format", "json"]);
    let koebe = json(&["series", "--fn", "koebe", "--order", "5", "--format", "json"]);
    for key in ["order", "f", "f2", "omega"] {
        assert_eq!(custom[key], koebe[key], "{key}");
    }
}

#[test]
fn series_accepts_rational_coefficients() {
    let v = json(&["series", "--fn", "custom", "--coeffs", "0,1,1/2,-1/3", "--order", "6", "--format", "json"]);
    assert_eq!(v["f"][2], "1/2");
    assert_eq!(v["f"][3], "-1/3");
    assert_eq!(v["omega"]["1,1"], "1/4");
}

#[test]
fn series_text_and_csv() {
    let o = run(&["series", "--fn", "geometric", "--order", "6"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("omega[1,1] = 1/2"), "{}", o.stdout);
    let o = run(&["series", "--fn", "koebe", "--order", "5", "--format", "csv"]);
    assert!(o.stdout.starts_with("kind,p,q,value\n"));
    assert!(o.stdout.contains("omega,3,3,1/3\n"));
}

#[test]
fn verify_all_checks_fifteen_identities() {
    let o = run(&["verify", "--fn", "all", "--order", "10"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("15 identities checked"), "{}", o.stdout);
    let v = json(&["verify", "--fn", "all", "--order", "10", "--format", "json"]);
    assert_eq!(v["identities_checked"], 15);
    assert_eq!(v["all_zero"], true);
}

#[test]
fn verify_identity_succeeds() {
    assert_eq!(run(&["verify", "--fn", "identity"]).code, 0);
}

#[test]
fn verify_custom_warns_about_univalence() {
    let o = run(&["verify", "--fn", "custom", "--coeffs", "0,1,9,0,0,0"]);
    assert!(o.stderr.contains("univalence"), "{}", o.stderr);
    assert!(o.stdout.contains("identity a2"));
}

#[test]
fn bound_gamma3_newton() {
    let v = json(&["bound", "--target", "gamma3", "--method", "newton", "--format", "json"]);
    let value = v["value"].as_f64().unwrap();
    assert!(value.to_string().starts_with("0.5566178"), "{value}");
    assert_eq!(v["edge"], "interior");
    assert!(v["enclosure"].is_null());
    assert_eq!(v["argmax"].as_array().unwrap().len(), 2);
}

#[test]
fn bound_h31_reports_components_and_both_labels() {
    let v = json(&["bound", "--target", "h31", "--method", "newton", "--format", "json"]);
    let c = &v["components"];
    assert!(c["b1"].as_f64().unwrap().to_string().starts_with("0.97723"));
    assert!(c["b2"].as_f64().unwrap().to_string().starts_with("0.85333"));
    assert!(v["value"].as_f64().unwrap().to_string().starts_with("1.8305"));
    assert_eq!(v["labels"]["theorem"], "1.83056");
    assert_eq!(v["labels"]["introduction"], "2.321434");
}

#[test]
fn bound_h22_certified_encloses_value() {
    let v = json(&["bound", "--target", "h22", "--method", "certified", "--eps", "1e-6", "--format", "json"]);
    let lo = v["enclosure"][0].as_f64().unwrap();
    let hi = v["enclosure"][1].as_f64().unwrap();
    let newton = grunsky_bounds::bound_optimizer::global_max(
        grunsky_bounds::bound_optimizer::BoundFunction::F4,
        1e-12,
    )
    .unwrap()
    .value;
    assert!(lo <= newton && newton <= hi, "[{lo}, {hi}] vs {newton}");
    assert!(lo.to_string().starts_with("1.3614356"), "{lo}");
    assert!(hi - lo <= 1e-6);
}

#[test]
fn bound_grid_method() {
    let v = json(&["bound", "--target", "diff43", "--method", "grid", "--format", "json"]);
    let value = v["value"].as_f64().unwrap();
    assert!((value - 1.751853).abs() < 1e-4, "{value}");
}

#[test]
fn bound_all_summary_table() {
    let o = run(&["bound", "--target", "all"]);
    assert_eq!(o.code, 0);
    let rows: Vec<&str> = o.stdout.lines().collect();
    for (target, value) in [
        ("gamma3", "0.556618"),
        ("diff43", "1.751853"),
        ("zalcman23", "2.100641"),
        ("h22", "1.361436"),
        ("h31", "1.830571"),
    ] {
        let row = rows.iter().find(|r| r.starts_with(target)).unwrap();
        assert!(row.contains(value), "{row}");
    }
    // The four single-objective constants are reproduced to their printed digits.
    assert_eq!(rows.iter().filter(|r| r.ends_with(" yes")).count(), 4);
    assert!(o.stdout.contains("2.321434"));
}

#[test]
fn bound_report_round_trips_to_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    let o = run(&["bound", "--target", "zalcman23", "--format", "json", "--out", first.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    let o = run(&[
        "bound",
        "--from-report",
        first.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        second.to_str().unwrap(),
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
}

#[test]
fn grid_f1_three_by_three() {
    let o = run(&["grid", "--target", "f1", "--nx", "3", "--ny", "3"]);
    assert_eq!(o.code, 0);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines[0], "x,y,value");
    assert_eq!(lines.len() - 1, 6);
    assert!(lines.contains(&"0,0,0.447213595"));
    let keys: Vec<(f64, f64)> = lines[1..]
        .iter()
        .map(|l| {
            let mut it = l.split(',').map(|t| t.parse::<f64>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]), "x-major ascending");
}

#[test]
fn grid_spot_rows() {
    let o = run(&["grid", "--target", "phi2", "--nx", "2", "--ny", "2"]);
    assert!(o.stdout.lines().any(|l| l == "0,0,0.447213595"));
    let o = run(&["grid", "--target", "f4", "--nx", "2", "--ny", "2"]);
    assert!(o.stdout.lines().any(|l| l == "1,0,1"));
}

#[test]
fn grid_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let o = run(&["grid", "--target", "f2", "--nx", "5", "--ny", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("x,y,value\n"));
    assert!(!csv.contains('\r'));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["series", "--order", "4"][..],
        &["series", "--order", "65"],
        &["series", "--fn", "custom", "--coeffs", "1,1,2"],
        &["series", "--fn", "custom"],
        &["series", "--fn", "custom", "--coeffs", "0,1,x"],
        &["series", "--fn", "custom", "--coeffs", "0,1,2,3,4,5,6", "--order", "5"],
        &["bound", "--target", "h22", "--eps", "0"],
        &["bound", "--target", "h22", "--eps", "-1e-3"],
        &["bound", "--target", "h99"],
        &["bound"],
        &["grid", "--target", "f9"],
        &["grid", "--target", "f1", "--nx", "1"],
        &["grid", "--target", "f1", "--format", "json"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).code, 2, "{args:?}");
    }
}

#[test]
fn unwritable_path_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("grid.csv");
    let o = run(&["grid", "--target", "f1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("cannot write"));
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("series"));
}

#[test]
fn binary_box_cap_override_exits_one() {
    let out = Command::new(env!("CARGO_BIN_EXE_grunsky"))
        .args(["bound", "--target", "h22", "--method", "certified"])
        .env("GRUNSKY_BOX_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeded 10 boxes"));

    let out = Command::new(env!("CARGO_BIN_EXE_grunsky"))
        .args(["bound", "--target", "h22", "--method", "certified"])
        .env("GRUNSKY_BOX_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn binary_exit_codes() {
    let status = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_grunsky")).args(args).output().unwrap().status.code()
    };
    assert_eq!(status(&["verify", "--fn", "koebe"]), Some(0));
    assert_eq!(status(&["series", "--order", "3"]), Some(2));
}
