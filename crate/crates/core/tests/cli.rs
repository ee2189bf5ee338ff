//! End-to-end tests of the command-line binary: exit-code contract, exact
//! decimal parsing, and certify/verify JSON round trips through files.

use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symquartic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("bad JSON: {e}\n{text}"))
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn exit_code_matrix() {
    // decide: 0 holds, 1 fails, 2 parse error
    let out = run(&["decide", "--a", "-1", "--b", "0", "--c", "1", "--domain", "nonneg"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_json(&out)["holds"], Value::Bool(true));

    let out = run(&["decide", "--a", "0", "--b", "0", "--c", "-4", "--domain", "real"]);
    assert_eq!(exit_code(&out), 1);
    let json = stdout_json(&out);
    assert_eq!(json["holds"], Value::Bool(false));
    assert!(json["counterexample"]["value"].is_string());

    let out = run(&["decide", "--a", "x", "--b", "0", "--c", "0", "--domain", "real"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stdout_json(&out)["error"].is_string());

    let out = run(&["decide", "--a", "0", "--b", "0", "--c", "0", "--domain", "bogus"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["decide", "--a", "0", "--b", "0", "--domain", "real"]);
    assert_eq!(exit_code(&out), 2, "missing flag is a usage error");

    let out = run(&["frobnicate"]);
    assert_eq!(exit_code(&out), 2, "unknown command is a usage error");

    let out = run(&[]);
    assert_eq!(exit_code(&out), 2, "no command is a usage error");

    // bmin / cmin / param / oracle: 0 on success, 2 on bad input
    let out = run(&["bmin", "--a", "2", "--c", "4"]);
    assert_eq!(exit_code(&out), 0);

    let out = run(&["cmin", "--a", "-6", "--b", "10"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_json(&out)["infeasible"], Value::Bool(true));

    let out = run(&["param", "--a", "2", "--t", "-1/2"]);
    assert_eq!(exit_code(&out), 2, "pole is a usage error");

    let out = run(&["oracle", "--a", "0", "--b", "0", "--c", "0", "--domain", "real", "--budget", "0"]);
    assert_eq!(exit_code(&out), 2, "zero budget is a usage error");

    let out = run(&["bmin", "--a", "2", "--c", "4", "--bogus", "1"]);
    assert_eq!(exit_code(&out), 2, "unknown flag is a usage error");
}

#[test]
fn decimal_inputs_parse_exactly() {
    let out = run(&["decide", "--a", "2", "--b", "2.09", "--c", "4", "--domain", "real"]);
    let json = stdout_json(&out);
    assert_eq!(json["inputs"]["b"], Value::String("209/100".into()));
    // 2.09 sits just below the exact threshold (5*sqrt(5)-7)/2, so it fails
    assert_eq!(exit_code(&out), 1);
    assert_eq!(json["holds"], Value::Bool(false));

    let out = run(&["decide", "--a", "2", "--b", "2.091", "--c", "4", "--domain", "real"]);
    let json = stdout_json(&out);
    assert_eq!(json["inputs"]["b"], Value::String("2091/1000".into()));
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn certify_verify_file_round_trip() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("cert.json");
    let path = path.to_str().unwrap();

    let out = run(&["certify", "--a", "2", "--b", "3", "--c", "8", "--domain", "real", "--out", path]);
    assert_eq!(exit_code(&out), 0);
    let cert_json = stdout_json(&out);
    assert_eq!(cert_json["kind"], Value::String("xyz-squares".into()));

    let out = run(&["verify", "--cert", path]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_json(&out)["valid"], Value::Bool(true));

    // verifying against a different target form is Invalid, exit 1
    let out = run(&["verify", "--cert", path, "--a", "2", "--b", "3", "--c", "7"]);
    assert_eq!(exit_code(&out), 1);
    assert_eq!(stdout_json(&out)["valid"], Value::Bool(false));

    // a negated multiplier turns Valid into Invalid, exit 1
    let original = std::fs::read_to_string(path).unwrap();
    let tampered = original.replacen("\"multiplier\":\"1\"", "\"multiplier\":\"-1\"", 1);
    assert_ne!(original, tampered, "fixture must contain a unit multiplier");
    let tampered_path = dir.path().join("tampered.json");
    std::fs::write(&tampered_path, tampered).unwrap();
    let out = run(&["verify", "--cert", tampered_path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let json = stdout_json(&out);
    assert_eq!(json["valid"], Value::Bool(false));
    assert!(json["reason"].as_str().unwrap().contains("negative"));

    // a truncated file is malformed, exit 2
    let truncated_path = dir.path().join("truncated.json");
    std::fs::write(&truncated_path, &original[..original.len() / 2]).unwrap();
    let out = run(&["verify", "--cert", truncated_path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);

    // a missing file is a usage error, exit 2
    let out = run(&["verify", "--cert", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn thirty_random_region_round_trips() {
    let dir = tempfile::tempdir().expect("temp dir");
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    let mut done = 0usize;
    while done < 30 {
        // draw (a, b, c) and a domain; keep only holding instances, spread
        // over the certificate regions by construction
        let region = done % 5;
        let (a, b, c, domain): (i64, i64, i64, &str) = match region {
            // reals, far linear region
            0 => (rng.gen_range(-3..=3), rng.gen_range(8..=20), rng.gen_range(-12..=-8), "real"),
            // reals, near the curved frontier
            1 => (rng.gen_range(0..=3), rng.gen_range(4..=9), rng.gen_range(2..=8), "real"),
            // octant, Schur region
            2 => (rng.gen_range(-1..=4), rng.gen_range(-2..=6), rng.gen_range(0..=8), "nonneg"),
            // octant, a < -1 with large b
            3 => (rng.gen_range(-4..=-2), rng.gen_range(16..=24), rng.gen_range(-4..=4), "nonneg"),
            // octant, curved frontier band
            _ => (rng.gen_range(-5..=-3), rng.gen_range(9..=14), rng.gen_range(-2..=6), "nonneg"),
        };
        let (a, b, c) = (a.to_string(), b.to_string(), c.to_string());
        let decide_out = run(&["decide", "--a", &a, "--b", &b, "--c", &c, "--domain", domain]);
        if exit_code(&decide_out) != 0 {
            continue; // not a holding instance; redraw
        }
        let path = dir.path().join(format!("cert{done}.json"));
        let path = path.to_str().unwrap();
        let cert_out = run(&["certify", "--a", &a, "--b", &b, "--c", &c, "--domain", domain, "--out", path]);
        assert_eq!(exit_code(&cert_out), 0, "certify failed for ({a},{b},{c}) on {domain}");
        let verify_out = run(&["verify", "--cert", path]);
        assert_eq!(exit_code(&verify_out), 0, "verify failed for ({a},{b},{c}) on {domain}");
        assert_eq!(stdout_json(&verify_out)["valid"], Value::Bool(true));
        done += 1;
    }
}

#[test]
fn decide_embeds_certificates_on_request() {
    let out = run(&["decide", "--a", "2", "--b", "2.2", "--c", "4", "--domain", "real", "--certify"]);
    assert_eq!(exit_code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(json["holds"], Value::Bool(true));
    let cert = &json["certificate"];
    assert_eq!(cert["kind"], Value::String("xyz-squares".into()));
    assert_eq!(cert["form"]["b"], Value::String("11/5".into()));
    assert!(cert["t"]["defining"].is_array(), "algebraic parameter expected");
}

#[test]
fn oracle_reports_are_deterministic_and_flag_failures() {
    let a = run(&["oracle", "--a", "0", "--b", "0", "--c", "-4", "--domain", "real", "--seed", "9"]);
    let b = run(&["oracle", "--a", "0", "--b", "0", "--c", "-4", "--domain", "real", "--seed", "9"]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout, "same seed must reproduce the report");
    let json = stdout_json(&a);
    assert_eq!(json["hint"], Value::String("likely-fails".into()));
    assert_eq!(json["counterexample"]["value"], Value::String("-9".into()));

    let out = run(&["oracle", "--a", "-1", "--b", "0", "--c", "1", "--domain", "nonneg"]);
    let json = stdout_json(&out);
    assert_eq!(json["hint"], Value::String("likely-holds".into()));
    assert!(json["min_estimate"].as_f64().unwrap().abs() < 1e-6);
}
