use std::process::{Command, Output};

use serde_json::Value;

fn qsphere(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsphere"))
        .args(args)
        .env_remove("QSPHERE_SEED")
        .env_remove("QSPHERE_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn normal_form_of_sphere_product() {
    let o = qsphere(&["nf", "--algebra", "podles", "y1*y-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q^-2*y0^2 + q^-1*y0");
}

#[test]
fn specialised_normal_form() {
    let o = qsphere(&["--q", "2", "nf", "--algebra", "podles", "y1*y-1"]);
    assert_eq!(stdout(&o).trim(), "1/4*y0^2 + 1/2*y0");
}

#[test]
fn ext_report() {
    let o = qsphere(&["ext", "--N", "8", "--no-timings"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["check"], "ext");
    assert_eq!(v["result"]["dims"], serde_json::json!([0, 0, 1]));
    for g in ["y-1", "y0", "y1"] {
        assert_eq!(v["result"]["character"][g], "0");
    }
    assert_eq!(v["pass"], true);
    assert!(v["elapsed_ms"].is_null());
}

#[test]
fn coproduct_lines() {
    let o = qsphere(&["delta", "b"]);
    assert_eq!(stdout(&o), "a ⊗ b\nb ⊗ d\n");
    let o = qsphere(&["delta", "--algebra", "podles", "y1", "--format", "json"]);
    let v = json(&o);
    let lines = v["result"].as_array().unwrap();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "y1 ⊗ d^2");
}

#[test]
fn membership_queries() {
    assert_eq!(stdout(&qsphere(&["member", "c*a"])).trim(), "true");
    assert_eq!(stdout(&qsphere(&["member", "a"])).trim(), "false");
    assert_eq!(stdout(&qsphere(&["pi", "a*b + a^2"])).trim(), "z^2");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qsphere(&["bogus"]).status.code(), Some(2));
    assert_eq!(qsphere(&["ext", "--N", "many"]).status.code(), Some(2));
    assert_eq!(qsphere(&["nf", "a*"]).status.code(), Some(2));
    assert_eq!(qsphere(&["--q", "1", "nf", "a"]).status.code(), Some(2));
    assert_eq!(qsphere(&["--q", "-1", "nf", "a"]).status.code(), Some(2));
    assert_eq!(qsphere(&["ext", "--N", "1"]).status.code(), Some(2));
    assert_eq!(qsphere(&["transes-check", "--chi", "0,1,0"]).status.code(), Some(2));
}

#[test]
fn failing_check_exits_one() {
    let o = qsphere(&["zeta", "--jmax", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["result"]["full_column_rank"], true);
    assert_eq!(v["pass"], false);
}

#[test]
fn reports_are_deterministic() {
    let args = ["xi-check", "--trials", "6", "--no-timings"];
    let a = qsphere(&args);
    let b = qsphere(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = qsphere(&["xi-check", "--trials", "6", "--no-timings", "--seed", "7"]);
    assert_eq!(json(&c)["params"]["seed"], 7);
}

#[test]
fn environment_overrides_flags() {
    let o = Command::new(env!("CARGO_BIN_EXE_qsphere"))
        .args(["beta", "--N", "3", "--no-timings"])
        .env("QSPHERE_SEED", "9")
        .env("QSPHERE_TRIALS", "4")
        .env("QSPHERE_FORMAT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["params"]["seed"], 9);
    assert_eq!(v["params"]["trials"], 4);
}

#[test]
fn csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("qsphere-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h0.csv");
    let o = qsphere(&["h0-table", "--imax", "1", "--jmax", "1", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,j,level,domain_dim,dim,basis,expected,in_a0,matches"));
    assert!(text.contains("0,1,4,9,1,b*c,b*c,true,true"));
    assert_eq!(text.lines().count(), 7);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn specialised_checks_agree_with_symbolic() {
    for only in ["02", "03", "06", "11"] {
        let sym = json(&qsphere(&["verify-all", "--only", only, "--no-timings"]));
        let spec = json(&qsphere(&["--q", "3/2", "verify-all", "--only", only, "--no-timings"]));
        assert_eq!(sym[0]["pass"], spec[0]["pass"], "{only}");
        assert_eq!(spec[0]["params"]["mode"], "q=3/2");
    }
}

#[test]
fn verify_all_reports_every_check_in_order() {
    let o = qsphere(&["verify-all", "--seed", "42"]);
    let v = json(&o);
    let rows = v.as_array().unwrap();
    let names: Vec<&str> = rows.iter().map(|r| r["check"].as_str().unwrap()).collect();
    assert_eq!(names, qsphere::verify::CHECKS);
    let failing: Vec<&str> = rows.iter().filter(|r| r["pass"] == false).map(|r| r["check"].as_str().unwrap()).collect();
    // the displayed entry pattern of ζ does not hold; see README
    assert_eq!(failing, ["05_zeta_injectivity"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(rows.iter().all(|r| r["elapsed_ms"].is_u64()));
}
