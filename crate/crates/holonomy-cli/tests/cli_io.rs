//! End-to-end runs of the `holonomy` binary: exit codes, wire formats,
//! file outputs, and input rejection.

use std::path::Path;
use std::process::{Command, Output};

use holonomy_core::groups::{b_theta, conj_su2, su2_from_rot3, v_phi_gamma, C64, SU2};
use serde_json::{json, Value};

fn holonomy(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holonomy"))
        .args(args)
        .current_dir(dir)
        .env_remove("HOLONOMY_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn su2_matrix_rows(u: &SU2) -> Value {
    let m = u.matrix();
    let entry = |c: C64| json!([c.re, c.im]);
    json!([
        [entry(m.0[0][0]), entry(m.0[0][1])],
        [entry(m.0[1][0]), entry(m.0[1][1])],
    ])
}

#[test]
fn classify_prints_the_dihedral_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = holonomy(
        dir.path(),
        &["classify", "--theta1", "pi", "--theta2", "pi*2/3", "--phi", "pi*1/2"],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out), "{\"kind\":\"dihedral\",\"order\":6}\n");
}

#[test]
fn classify_rejects_angle_garbage() {
    let dir = tempfile::tempdir().unwrap();
    let out = holonomy(
        dir.path(),
        &["classify", "--theta1", "tau", "--theta2", "pi", "--phi", "pi*1/2"],
    );
    assert_eq!(code(&out), 2);
    assert!(stdout_of(&out).is_empty());

    let out = holonomy(
        dir.path(),
        &["classify", "--theta1", "pi*1/0", "--theta2", "pi", "--phi", "pi*1/2"],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn certify_exit_codes_follow_the_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let acos_third = format!("{}", (1.0f64 / 3.0).acos());
    let acos_quarter = format!("{}", (1.0f64 / 4.0).acos());

    let holds = holonomy(
        dir.path(),
        &[
            "certify", "--selector", "abc",
            "--theta1", &acos_third, "--theta2", &acos_quarter, "--phi", "pi*1/2",
        ],
    );
    assert_eq!(code(&holds), 0, "stderr: {}", stderr_of(&holds));
    let certs: Value = serde_json::from_str(&stdout_of(&holds)).unwrap();
    let claims: Vec<&str> = certs
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["claim"].as_str().unwrap())
        .collect();
    assert_eq!(claims, ["condA", "condB", "condC", "thm_main", "thm_main2"]);
    for cert in certs.as_array().unwrap() {
        assert_eq!(cert["verdict"], "holds");
    }

    let fails = holonomy(
        dir.path(),
        &[
            "certify", "--selector", "abc",
            "--theta1", "pi", "--theta2", &acos_quarter, "--phi", "pi*1/2",
        ],
    );
    assert_eq!(code(&fails), 1);

    let numeric = holonomy(
        dir.path(),
        &[
            "certify", "--selector", "abc",
            "--theta1", "sqrt:2*pi", "--theta2", "sqrt:3*pi", "--phi", "pi*1/2",
        ],
    );
    assert_eq!(code(&numeric), 3);
}

#[test]
fn certify_verdict_spellings_are_snake_case() {
    let dir = tempfile::tempdir().unwrap();
    let out = holonomy(
        dir.path(),
        &[
            "certify", "--selector", "abc",
            "--theta1", "sqrt:2*pi", "--theta2", "sqrt:3*pi", "--phi", "pi*1/2",
        ],
    );
    let certs: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let verdicts: Vec<&str> = certs
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["verdict"].as_str().unwrap())
        .collect();
    assert!(verdicts.contains(&"numeric_only"));
}

#[test]
fn certify_cond1_uses_the_exact_angle_specs() {
    let dir = tempfile::tempdir().unwrap();
    let out = holonomy(
        dir.path(),
        &[
            "certify", "--selector", "cond1",
            "--theta1", "sqrt:2*pi", "--theta2", "pi*1/3", "--phi", "pi*1/2",
        ],
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let certs: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(certs[0]["claim"], "prop_cond1");
    assert_eq!(certs[0]["verdict"], "holds");
}

#[test]
fn certify_main3_reports_even_multiples() {
    let dir = tempfile::tempdir().unwrap();
    let out = holonomy(
        dir.path(),
        &[
            "certify", "--selector", "main3",
            "--theta1-plus", "pi*1/2", "--theta2-plus", "sqrt:3*pi", "--phi-plus", "pi*1/2",
            "--theta1-minus", "sqrt:2*pi", "--theta2-minus", "pi*1/2", "--phi-minus", "pi*1/2",
        ],
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let certs: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(certs[0]["claim"], "thm_main3");
    let w = &certs[0]["evidence"]["witnesses"];
    assert_eq!(w["n_plus"], 4);
    assert_eq!(w["n_minus"], 4);
    assert_eq!(w["lifted_gens"].as_array().unwrap().len(), 2);
}

#[test]
fn certify_main4_and_main5_from_gens_files() {
    let dir = tempfile::tempdir().unwrap();
    let b1 = b_theta(2.0 * (0.25f64).acos());
    let b2 = conj_su2(
        &su2_from_rot3(&v_phi_gamma(std::f64::consts::PI / 3.0, 0.0)),
        &b_theta(std::f64::consts::SQRT_2 * std::f64::consts::PI),
    );
    let su2_path = dir.path().join("su2.json");
    std::fs::write(
        &su2_path,
        json!({"kind": "su2", "matrices": [su2_matrix_rows(&b1), su2_matrix_rows(&b2)]})
            .to_string(),
    )
    .unwrap();
    let out = holonomy(
        dir.path(),
        &["certify", "--selector", "main4", "--gens", su2_path.to_str().unwrap()],
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let certs: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(certs[0]["claim"], "thm_main4");

    // The same pair as u2 matrices has zero central phase: main5 fails.
    let u2_path = dir.path().join("u2.json");
    std::fs::write(
        &u2_path,
        json!({"kind": "u2", "matrices": [su2_matrix_rows(&b1), su2_matrix_rows(&b2)]})
            .to_string(),
    )
    .unwrap();
    let out = holonomy(
        dir.path(),
        &["certify", "--selector", "main5", "--gens", u2_path.to_str().unwrap()],
    );
    assert_eq!(code(&out), 1, "stderr: {}", stderr_of(&out));
    let certs: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(certs[0]["claim"], "thm_main5");
    assert_eq!(certs[0]["verdict"], "fails");
}

#[test]
fn certify_main4_rejects_wrong_kind_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("so3.json");
    std::fs::write(
        &path,
        json!({"kind": "so3", "matrices": [
            [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        ]})
        .to_string(),
    )
    .unwrap();
    let out = holonomy(
        dir.path(),
        &["certify", "--selector", "main4", "--gens", path.to_str().unwrap()],
    );
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("su2"));
}

#[test]
fn orbit_writes_csv_and_report_consistently() {
    let dir = tempfile::tempdir().unwrap();
    let out = holonomy(
        dir.path(),
        &[
            "orbit",
            "--theta1", "sqrt:2*pi", "--theta2", "sqrt:3*pi", "--phi", "pi*1/2",
            "--omega", "1,0,0",
            "--max-size", "2000", "--max-depth", "30",
        ],
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));

    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("orbit_report.json")).unwrap())
            .unwrap();
    let csv = std::fs::read_to_string(dir.path().join("orbit_points.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows.len() as u64, report["size"].as_u64().unwrap());
    for row in &rows {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 3);
        for c in cols {
            c.parse::<f64>().unwrap();
        }
    }
    // Base point starts the file, in fixed 17-significant-digit form.
    assert_eq!(rows[0], "1.0000000000000000e0,0.0000000000000000e0,0.0000000000000000e0");

    // These two axes generate a dense subgroup, so the orbit fills the sphere.
    assert_eq!(report["confinement"]["kind"], "full");
    assert!(report["covering_radius"].as_f64().unwrap() < 1.0);
}

#[test]
fn orbit_respects_custom_output_paths() {
    let dir = tempfile::tempdir().unwrap();
    let out = holonomy(
        dir.path(),
        &[
            "orbit",
            "--theta1", "pi*2/3", "--theta2", "pi*2/3", "--phi", "pi*1/2",
            "--points", "p.csv", "--report", "r.json",
            "--max-size", "500",
        ],
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    assert!(dir.path().join("p.csv").exists());
    assert!(dir.path().join("r.json").exists());
    assert!(!dir.path().join("orbit_points.csv").exists());
    let report = std::fs::read_to_string(dir.path().join("r.json")).unwrap();
    assert!(report.ends_with('\n'));
}

#[test]
fn orbit_rejects_a_zero_base_point() {
    let dir = tempfile::tempdir().unwrap();
    let out = holonomy(
        dir.path(),
        &[
            "orbit",
            "--theta1", "pi*2/3", "--theta2", "pi*2/3", "--phi", "pi*1/2",
            "--omega", "0,0,0",
        ],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn ball_reports_saturation_of_a_finite_group() {
    let dir = tempfile::tempdir().unwrap();
    let out = holonomy(
        dir.path(),
        &["ball", "--theta1", "pi", "--theta2", "pi*2/3", "--phi", "pi*1/2"],
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let report: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["size"], 6);
    assert_eq!(report["saturated"], true);
    assert!(report.get("cr_by_depth").is_none());

    let with_snapshots = holonomy(
        dir.path(),
        &[
            "ball", "--theta1", "pi", "--theta2", "pi*2/3", "--phi", "pi*1/2",
            "--snapshots",
        ],
    );
    let report: Value = serde_json::from_str(&stdout_of(&with_snapshots)).unwrap();
    let profile = report["cr_by_depth"].as_array().unwrap();
    assert!(!profile.is_empty());
    let values: Vec<f64> = profile.iter().map(|v| v.as_f64().unwrap()).collect();
    for w in values.windows(2) {
        assert!(w[1] <= w[0] + 1e-12);
    }
}

#[test]
fn transport_flat_connection_fixes_vectors() {
    let dir = tempfile::tempdir().unwrap();
    let conn_path = dir.path().join("flat.json");
    let zero4: [[f64; 4]; 4] = [[0.0; 4]; 4];
    std::fs::write(
        &conn_path,
        json!({"fiber": "real4", "p1": zero4, "p2": zero4}).to_string(),
    )
    .unwrap();
    let out = holonomy(
        dir.path(),
        &[
            "transport",
            "--connection", conn_path.to_str().unwrap(),
            "--word", "x:1,y:-2",
            "--vector", "[0.5,-0.5,0.5,0.5]",
        ],
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let moved: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let v: Vec<f64> = moved
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert_eq!(v, [0.5, -0.5, 0.5, 0.5]);

    let bad_word = holonomy(
        dir.path(),
        &[
            "transport",
            "--connection", conn_path.to_str().unwrap(),
            "--word", "x:1,q:2",
            "--vector", "[1,0,0,0]",
        ],
    );
    assert_eq!(code(&bad_word), 2);
    assert!(stderr_of(&bad_word).contains("q:2"));
}

#[test]
fn transport_rejects_non_skew_connection_files() {
    let dir = tempfile::tempdir().unwrap();
    let conn_path = dir.path().join("bad.json");
    let zero: [[f64; 4]; 4] = [[0.0; 4]; 4];
    let mut p1 = [[0.0f64; 4]; 4];
    p1[0][0] = 1.0;
    std::fs::write(
        &conn_path,
        json!({"fiber": "real4", "p1": p1, "p2": zero}).to_string(),
    )
    .unwrap();
    let out = holonomy(
        dir.path(),
        &[
            "transport",
            "--connection", conn_path.to_str().unwrap(),
            "--vector", "[1,0,0,0]",
        ],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn thread_cap_env_is_validated() {
    let dir = tempfile::tempdir().unwrap();
    let ok = Command::new(env!("CARGO_BIN_EXE_holonomy"))
        .args(["classify", "--theta1", "pi", "--theta2", "pi*2/3", "--phi", "pi*1/2"])
        .current_dir(dir.path())
        .env("HOLONOMY_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));

    let bad = Command::new(env!("CARGO_BIN_EXE_holonomy"))
        .args(["classify", "--theta1", "pi", "--theta2", "pi*2/3", "--phi", "pi*1/2"])
        .current_dir(dir.path())
        .env("HOLONOMY_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("HOLONOMY_THREADS"));
}

#[test]
fn gens_file_and_angles_are_mutually_exclusive() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    std::fs::write(
        &path,
        json!({"kind": "so3", "matrices": [
            [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        ]})
        .to_string(),
    )
    .unwrap();
    let out = holonomy(
        dir.path(),
        &[
            "ball",
            "--gens", path.to_str().unwrap(),
            "--theta1", "pi", "--theta2", "pi", "--phi", "pi*1/2",
        ],
    );
    assert_eq!(code(&out), 2);

    let neither = holonomy(dir.path(), &["ball", "--theta1", "pi"]);
    assert_eq!(code(&neither), 2);
}

#[test]
fn orbit_rejects_non_sphere_generator_files() {
    let dir = tempfile::tempdir().unwrap();
    let b = b_theta(1.0);
    let path = dir.path().join("su2.json");
    std::fs::write(
        &path,
        json!({"kind": "su2", "matrices": [su2_matrix_rows(&b)]}).to_string(),
    )
    .unwrap();
    let out = holonomy(dir.path(), &["orbit", "--gens", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("so3"));
}

#[test]
fn malformed_gens_files_name_the_offender() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("skew.json");
    std::fs::write(
        &path,
        json!({"kind": "so3", "matrices": [
            [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            [[2.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        ]})
        .to_string(),
    )
    .unwrap();
    let out = holonomy(dir.path(), &["ball", "--gens", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("matrix 1"));
}

#[test]
fn repeat_runs_are_byte_identical() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let args = [
        "orbit",
        "--theta1", "sqrt:2*pi", "--theta2", "sqrt:3*pi", "--phi", "pi*1/2",
        "--max-size", "1500",
    ];
    let a = holonomy(dir_a.path(), &args);
    let b = holonomy(dir_b.path(), &args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    for name in ["orbit_points.csv", "orbit_report.json"] {
        let left = std::fs::read(dir_a.path().join(name)).unwrap();
        let right = std::fs::read(dir_b.path().join(name)).unwrap();
        assert_eq!(left, right, "{name} differs between runs");
    }
}
