//! Black-box tests of the `thetamix` binary: exit-code contract, JSON
//! round-trip fidelity, file outputs and reproducibility.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn thetamix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetamix"))
        .args(args)
        .env_remove("THETAMIX_CONSTANTS")
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_str(out)).expect("stdout parses as JSON")
}

#[test]
fn constants_json_round_trips_exactly() {
    let out = thetamix(&["constants", "--json"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    // serde_json prints shortest-exact doubles, so parsed values equal the
    // library values bit for bit
    let sqrt_kappa = doc["derived"]["sqrt_kappa"]["value"].as_f64().unwrap();
    assert_eq!(sqrt_kappa.to_bits(), 5.703983843823599e-4f64.to_bits());
    let hbar = doc["fundamental"]["hbar"]["value"].as_f64().unwrap();
    assert_eq!(hbar.to_bits(), 1.054571817e-27f64.to_bits());
    assert_eq!(doc["fundamental"]["hbar"]["unit_si"], "J s");
    assert!(doc["fingerprint"].is_string());
}

#[test]
fn constants_human_table_lists_both_tables() {
    let out = thetamix(&["constants"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("fundamental constants"));
    assert!(text.contains("derived constants"));
    assert!(text.contains("sigma_per_theta"));
    assert!(text.contains("CODATA 2018"));
}

#[test]
fn constants_env_override_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("override.json");
    fs::write(&path, r#"{"alpha": 0.008}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_thetamix"))
        .args(["constants", "--json"])
        .env("THETAMIX_CONSTANTS", &path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(
        doc["fundamental"]["alpha"]["value"].as_f64().unwrap(),
        0.008
    );

    let baseline = json_of(&thetamix(&["constants", "--json"]));
    assert_ne!(doc["fingerprint"], baseline["fingerprint"]);

    // a broken override file is a runtime error
    fs::write(&path, r#"{"alpha": -3}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_thetamix"))
        .args(["constants"])
        .env("THETAMIX_CONSTANTS", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn earth_fit_matches_library_inversion() {
    let out = thetamix(&["earth-fit", "--field-v-per-m", "-100", "--json"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    let theta = doc["theta"].as_f64().unwrap();
    assert!((theta - -5.000240863750485e-10).abs() < 1e-22);
    let check = doc["field_check_v_per_m"].as_f64().unwrap();
    assert!((check - -100.0).abs() < 1e-10);
}

#[test]
fn potential_zero_separation_is_runtime_error() {
    let out = thetamix(&[
        "potential",
        "--m1",
        "1",
        "--e1",
        "0",
        "--m2",
        "1",
        "--e2",
        "0",
        "--r",
        "0",
        "--theta",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("non-positive separation"));
}

#[test]
fn potential_si_mode_converts_at_the_boundary() {
    // 1 kg / 1 kg neutral pair at 1 m: V = -G/1 J = -6.6743e-11 J
    let out = thetamix(&[
        "potential",
        "--m1",
        "1",
        "--e1",
        "0",
        "--m2",
        "1",
        "--e2",
        "0",
        "--r",
        "1",
        "--theta",
        "0",
        "--si",
        "--json",
    ]);
    assert!(out.status.success());
    let doc = json_of(&out);
    let v_joule = doc["potential_J"].as_f64().unwrap();
    assert!((v_joule - -6.6743e-11).abs() < 1e-24);
    assert_eq!(doc["attractive"], true);
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = thetamix(&["constants", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_str(&out);
    assert!(err.to_lowercase().contains("usage"), "{err}");
}

#[test]
fn missing_required_argument_is_usage_error() {
    let out = thetamix(&["boost", "--theta"]);
    assert_eq!(out.status.code(), Some(2));
    let out = thetamix(&["simulate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn boost_linear_without_pair_is_usage_error() {
    let out = thetamix(&["boost", "--linear", "--theta", "1e-9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("--linear requires"));
}

#[test]
fn boost_exact_json_carries_values_and_invariant() {
    // theta = 0 is the identity and the invariant is E^2 for Q = 0
    let out = thetamix(&[
        "boost", "--E", "2.5e-7", "--Q", "0", "--theta", "0", "--json",
    ]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["output"]["E_erg"].as_f64().unwrap(), 2.5e-7);
    assert_eq!(doc["output"]["Q_statC"].as_f64().unwrap(), 0.0);
    let before = doc["invariant_erg2"]["before"].as_f64().unwrap();
    assert_eq!(before.to_bits(), (2.5e-7f64 * 2.5e-7).to_bits());

    // a finite boost preserves the invariant to double precision
    let out = thetamix(&[
        "boost", "--E", "2.5e-7", "--Q", "0", "--theta", "1.5", "--json",
    ]);
    let doc = json_of(&out);
    let before = doc["invariant_erg2"]["before"].as_f64().unwrap();
    let after = doc["invariant_erg2"]["after"].as_f64().unwrap();
    assert!((after - before).abs() <= 1e-12 * before.abs());
    // E' = cosh(1.5) E when Q = 0
    let expected = 1.5f64.cosh() * 2.5e-7;
    let e_prime = doc["output"]["E_erg"].as_f64().unwrap();
    assert!((e_prime - expected).abs() <= 1e-15 * expected);
}

#[test]
fn boost_theta_overflow_is_runtime_error() {
    let out = thetamix(&["boost", "--E", "1", "--Q", "0", "--theta", "701"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("theta overflow"));
}

#[test]
fn help_exits_zero() {
    let out = thetamix(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    for sub in [
        "constants",
        "boost",
        "potential",
        "earth-fit",
        "dipole",
        "simulate",
        "sweep",
    ] {
        assert!(stdout_str(&out).contains(sub), "help lists {sub}");
    }
}

#[test]
fn sweep_endpoints_and_linearity() {
    let out = thetamix(&[
        "sweep",
        "--theta-min",
        "0",
        "--theta-max",
        "1",
        "--n",
        "3",
        "--target",
        "sigma",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "theta,sigma_statC_per_g");
    let rows: Vec<(f64, f64)> = lines
        .map(|line| {
            let (theta, value) = line.split_once(',').unwrap();
            (theta.parse().unwrap(), value.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0], (0.0, 0.0));
    assert_eq!(rows[2].0, 1.0);
    assert!((rows[2].1 - 4.5338718339119505e-4).abs() < 1e-18);
    // the target is linear in theta: midpoint equals the endpoint mean
    let mean = (rows[0].1 + rows[2].1) / 2.0;
    assert!((rows[1].1 - mean).abs() <= 1e-15 * mean.abs());
}

#[test]
fn sweep_bad_ranges_are_usage_errors() {
    let out = thetamix(&[
        "sweep",
        "--theta-min",
        "1",
        "--theta-max",
        "1",
        "--n",
        "3",
        "--target",
        "sigma",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("usage error"));
    let out = thetamix(&[
        "sweep",
        "--theta-min",
        "0",
        "--theta-max",
        "1",
        "--n",
        "1",
        "--target",
        "sigma",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_to_file_writes_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("sweep.csv");
    let out = thetamix(&[
        "sweep",
        "--theta-min",
        "-1e-9",
        "--theta-max",
        "1e-9",
        "--n",
        "5",
        "--target",
        "surface-field",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let manifest: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("sweep.csv.manifest.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(manifest["command"], "sweep");
    assert_eq!(manifest["inputs"]["target"], "surface_field_statV_per_cm");
    assert!(manifest["constants_fingerprint"].is_string());
    assert!(manifest["wall_time_s"].is_number());
    assert_eq!(manifest["outputs"][0], csv_path.to_str().unwrap());
    let text = fs::read_to_string(&csv_path).unwrap();
    assert_eq!(text.lines().count(), 6);
}

fn write_two_body_config(path: &Path) {
    fs::write(
        path,
        r#"{
  "dt_s": 0.5,
  "steps": 40,
  "output_every": 10,
  "theta": -5e-10,
  "softening_cm": 0.0,
  "particles": [
    {"label": "a", "m_g": 1e6, "e_statC": 3.0, "pos_cm": [5, 0, 0], "vel_cm_s": [0, 0.0577, 0]},
    {"label": "b", "m_g": 1e6, "e_statC": -2.0, "pos_cm": [-5, 0, 0], "vel_cm_s": [0, -0.0577, 0]}
  ]
}"#,
    )
    .unwrap();
}

#[test]
fn simulate_is_byte_reproducible_and_writes_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    write_two_body_config(&config);
    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    for (out_path, _) in [(&out_a, "a"), (&out_b, "b")] {
        let out = thetamix(&[
            "simulate",
            "--config",
            config.to_str().unwrap(),
            "--out",
            out_path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", stderr_str(&out));
    }
    let bytes_a = fs::read(&out_a).unwrap();
    let bytes_b = fs::read(&out_b).unwrap();
    assert_eq!(bytes_a, bytes_b, "repeated runs must be byte-identical");

    let text = String::from_utf8(bytes_a).unwrap();
    assert!(text.starts_with(
        "step,t_s,particle,x_cm,y_cm,z_cm,vx_cm_s,vy_cm_s,vz_cm_s,ke_erg,pe_erg,etot_erg\n"
    ));
    // initial snapshot plus four emitted ones, two particles each
    assert_eq!(text.lines().count(), 1 + 5 * 2);

    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("a.csv.manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["command"], "simulate");
    assert_eq!(manifest["outputs"][0], out_a.to_str().unwrap());
}

#[test]
fn simulate_bad_config_is_runtime_error() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    fs::write(&config, r#"{"dt_s": 0.0, "steps": 1, "particles": []}"#).unwrap();
    let out = thetamix(&[
        "simulate",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.path().join("x.csv").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("dt must be finite and positive"));

    let out = thetamix(&[
        "simulate",
        "--config",
        dir.path().join("missing.json").to_str().unwrap(),
        "--out",
        dir.path().join("x.csv").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dipole_reports_ratio_to_observed() {
    let out = thetamix(&["dipole", "--theta", "-5.000240863750485e-10"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("ratio to observed"));
    assert!(text.contains("computed comparison only"));
}

#[test]
fn custom_body_file_feeds_earth_fit_and_dipole() {
    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("body.json");
    fs::write(
        &body,
        r#"{"label":"moon","mass_g":7.342e25,"radius_cm":1.7374e8,"omega_per_s":2.6617e-6,"e_statC":0.0}"#,
    )
    .unwrap();
    let out = thetamix(&[
        "earth-fit",
        "--field-v-per-m",
        "-100",
        "--body",
        body.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["body"], "moon");
    let check = doc["field_check_v_per_m"].as_f64().unwrap();
    assert!((check - -100.0).abs() < 1e-10);

    let out = thetamix(&[
        "dipole",
        "--theta",
        "1e-10",
        "--body",
        body.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["body"], "moon");

    let out = thetamix(&["dipole", "--theta", "1e-10", "--body", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn same_argv_gives_byte_identical_stdout() {
    for args in [
        vec!["constants", "--json"],
        vec!["earth-fit", "--field-v-per-m", "-100", "--json"],
        vec![
            "sweep",
            "--theta-min",
            "0",
            "--theta-max",
            "1e-9",
            "--n",
            "7",
            "--target",
            "dipole",
        ],
    ] {
        let first = thetamix(&args);
        let second = thetamix(&args);
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
    }
}
