//! End-to-end tests of the command-line interface: argument handling,
//! configuration layering, output formats, and the exit-code contract
//! (0 = checks passed, 1 = a check ran and failed, 2 = unusable input).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cmc-bounds"));
    // The suite must not inherit a configuration from the caller's shell.
    cmd.env_remove("CMC_BOUNDS_CONFIG");
    cmd
}

fn assets() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("assets")
}

/// Per-test scratch file under the target-local temp directory.
fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cmc-bounds-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch directory is writable");
    dir.join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process exited normally")
}

#[test]
fn bounds_prints_constants_and_inequalities() {
    let out = bin().args(["bounds", "--I", "2"]).output().unwrap();
    let text = stdout(&out);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(text.contains("constant"), "missing constants header:\n{text}");
    assert!(text.contains("inequality"), "missing inequality header:\n{text}");
    assert!(text.contains("lambda"), "missing the scale factor:\n{text}");
    assert!(text.contains("C_A"), "missing the universal area constant:\n{text}");
}

#[test]
fn bounds_json_is_machine_readable() {
    let out = bin()
        .args(["bounds", "--I", "1", "--g", "3", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let constants = value["constants"].as_array().expect("constants array");
    assert!(!constants.is_empty());
    for entry in value["inequalities"].as_array().expect("inequalities array") {
        assert!(entry["name"].is_string());
        assert!(entry["status"].is_string());
    }
}

#[test]
fn scalar_floor_enables_the_compact_family() {
    let out = bin()
        .args(["bounds", "--I", "1", "--c", "3.0"])
        .output()
        .unwrap();
    let text = stdout(&out);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(text.contains("R_c"), "missing the stability radius:\n{text}");
    assert!(text.contains("A2"), "missing the compact area ceiling:\n{text}");
    assert!(
        text.contains("compactness under the scalar floor"),
        "missing the compactness row:\n{text}"
    );
}

#[test]
fn rejected_parameters_exit_two() {
    let out = bin().args(["bounds", "--r0=-1"]).output().unwrap();
    assert_eq!(exit_code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("error:"), "unexpected stderr: {err}");
    assert!(err.contains("invalid parameters"), "unexpected stderr: {err}");
}

#[test]
fn unknown_flags_exit_two() {
    let out = bin().args(["bounds", "--not-a-flag"]).output().unwrap();
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn mesh_check_accepts_the_bundled_sphere() {
    let sphere = assets().join("sphere.off");
    let out = bin()
        .arg("mesh-check")
        .arg(&sphere)
        .output()
        .unwrap();
    let text = stdout(&out);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(text.contains("euler characteristic"), "missing analysis:\n{text}");
    assert!(text.contains("inequality"), "missing bounds report:\n{text}");
    assert!(!text.contains("VIOLATED"), "sphere should satisfy every bound:\n{text}");
}

#[test]
fn mesh_check_json_bundles_warnings_analysis_and_bounds() {
    let sphere = assets().join("sphere.off");
    let out = bin()
        .arg("mesh-check")
        .arg(&sphere)
        .args(["--format", "json"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert!(value["warnings"].is_array());
    assert_eq!(value["analysis"]["summary"]["genus"], 0);
    assert!(value["bounds"]["inequalities"].is_array());
}

#[test]
fn obj_meshes_go_through_the_same_pipeline() {
    use cmc_bounds::mesh::{load_mesh, write_obj};

    let loaded = load_mesh(&assets().join("sphere.off")).unwrap();
    let path = scratch("sphere-roundtrip.obj");
    std::fs::write(&path, write_obj(&loaded.surface)).unwrap();

    let out = bin().arg("mesh-check").arg(&path).output().unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("euler characteristic"));
}

#[test]
fn explicit_index_bound_below_the_measurement_is_an_error() {
    // A bare `mesh-check` borrows the measured index, but a user-stated
    // ceiling the surface exceeds makes the parameter set unusable.
    let sphere = assets().join("sphere.off");
    let out = bin()
        .arg("mesh-check")
        .arg(&sphere)
        .args(["--I", "0"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("exceeds"), "stderr: {}", stderr(&out));
}

#[test]
fn broken_meshes_exit_two() {
    let path = scratch("broken.off");
    // The single face references a vertex that does not exist.
    std::fs::write(&path, "OFF\n2 1 0\n0 0 0\n1 0 0\n3 0 1 5\n").unwrap();
    let out = bin().arg("mesh-check").arg(&path).output().unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("error:"), "stderr: {}", stderr(&out));
}

#[test]
fn missing_files_exit_two() {
    let out = bin()
        .args(["mesh-check", "definitely-not-here.off"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn structure_check_validates_the_bundled_document() {
    let config = assets().join("config.toml");
    let out = bin()
        .arg("structure-check")
        .arg(&config)
        .args(["--I", "2"])
        .output()
        .unwrap();
    let text = stdout(&out);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(text.contains("overall: valid"), "document should pass:\n{text}");
    assert!(text.contains("euler_floor"), "missing a named check:\n{text}");

    let out = bin()
        .arg("structure-check")
        .arg(&config)
        .args(["--I", "2", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(value["passed"], true);
    assert!(!value["checks"].as_array().unwrap().is_empty());
}

#[test]
fn failing_structure_documents_exit_one() {
    // Six boundary circles of spinning on an index-2 region breaks the
    // per-region spinning ceiling (at most 3 I - 1 = 5) and nothing else.
    let path = scratch("overspun.toml");
    std::fs::write(
        &path,
        "[structure]\n\
         delta = 0.5\n\
         delta1 = 0.05\n\
         [[structure.region]]\n\
         I = 2\n\
         e = 1\n\
         m = 6\n\
         g = 0\n\
         orientable = true\n\
         r_F = 0.2\n\
         kappa = 37.69911184307752\n",
    )
    .unwrap();
    let out = bin()
        .arg("structure-check")
        .arg(&path)
        .args(["--I", "2"])
        .output()
        .unwrap();
    let text = stdout(&out);
    assert_eq!(exit_code(&out), 1, "stderr: {}", stderr(&out));
    assert!(text.contains("overall: INVALID"), "should fail:\n{text}");
    assert!(text.contains("spinning_ceiling"), "missing the culprit:\n{text}");
    assert!(text.contains("FAILED"), "missing the verdict:\n{text}");
}

#[test]
fn inconsistent_structure_documents_exit_two() {
    // Region indices summing past the global ceiling make the document
    // unusable rather than merely failing a check.
    let path = scratch("oversubscribed.toml");
    std::fs::write(
        &path,
        "[structure]\n\
         delta = 0.5\n\
         delta1 = 0.05\n\
         [[structure.region]]\n\
         I = 2\n\
         e = 2\n\
         m = 2\n\
         r_F = 0.2\n\
         kappa = 12.566370614359172\n",
    )
    .unwrap();
    let out = bin()
        .arg("structure-check")
        .arg(&path)
        .args(["--I", "1"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(
        stderr(&out).contains("invalid structure data"),
        "stderr: {}",
        stderr(&out)
    );
}

#[test]
fn structure_section_can_come_from_the_config() {
    let config = assets().join("config.toml");
    let out = bin()
        .arg("--config")
        .arg(&config)
        .arg("structure-check")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("overall: valid"));
}

#[test]
fn missing_structure_everywhere_exits_two() {
    let out = bin().arg("structure-check").output().unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(
        stderr(&out).contains("no structure document"),
        "stderr: {}",
        stderr(&out)
    );
}

#[test]
fn config_env_var_supplies_the_default() {
    let out = bin()
        .env("CMC_BOUNDS_CONFIG", assets().join("config.toml"))
        .arg("structure-check")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("overall: valid"));
}

#[test]
fn config_flag_overrides_the_env_var() {
    // The env var names a file that does not exist; the flag must win.
    let out = bin()
        .env("CMC_BOUNDS_CONFIG", "no-such-config.toml")
        .arg("--config")
        .arg(assets().join("config.toml"))
        .arg("structure-check")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));

    // Without the flag the bad env var is a real error.
    let out = bin()
        .env("CMC_BOUNDS_CONFIG", "no-such-config.toml")
        .arg("structure-check")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn reports_can_be_written_to_a_file() {
    let path = scratch("report.txt");
    let out = bin()
        .args(["bounds", "--I", "1", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).is_empty(), "report should go to the file only");
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("inequality"));
}

#[test]
fn unwritable_output_paths_exit_two() {
    let out = bin()
        .args(["bounds", "--I", "1", "--out", "missing-dir/sub/report.txt"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("cannot write"), "stderr: {}", stderr(&out));
}

#[test]
fn verify_runs_the_cross_checks() {
    let out = bin().arg("verify").output().unwrap();
    let text = stdout(&out);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(text.contains("cross-checks passed"), "missing summary:\n{text}");
    assert!(!text.contains("FAIL"), "a cross-check failed:\n{text}");

    // An extra curve grows the suite.
    let base_cases = text.lines().count();
    let out = bin()
        .args(["verify", "--curve"])
        .arg(assets().join("curve.csv"))
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).lines().count() > base_cases);
}

#[test]
fn verify_rejects_malformed_curves() {
    // Equidistant pushes need strictly negative curvature throughout.
    let path = scratch("positive-curvature.csv");
    std::fs::write(&path, "s,kappa\n0.0,1.0\n0.5,1.0\n1.0,1.0\n").unwrap();
    let out = bin().args(["verify", "--curve"]).arg(&path).output().unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("error:"), "stderr: {}", stderr(&out));
}
