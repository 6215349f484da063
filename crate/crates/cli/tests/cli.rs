use std::fs;
use std::process::{Command, Output};

fn duplicial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duplicial"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_ground_ring_passes() {
    let out = duplicial(&["check", "--builtin", "ground-ring", "--ring", "Q", "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("0 failed"), "{text}");
    assert!(text.contains("Cyclic"));
}

#[test]
fn dump_kappa_of_the_ground_ring_is_zero() {
    let out = duplicial(&["dump", "--builtin", "ground-ring", "--op", "kappa", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "[0]");
}

#[test]
fn output_is_deterministic() {
    let run = || {
        stdout(&duplicial(&[
            "check",
            "--builtin",
            "dual-numbers",
            "--ring",
            "Z/7",
            "--max-degree",
            "3",
            "--format",
            "structured",
        ]))
    };
    let a = run();
    assert!(!a.is_empty());
    assert_eq!(a, run());
}

#[test]
fn corrupted_module_file_exits_3_with_named_identity() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("module.json");
    let out = duplicial(&[
        "build",
        "--builtin",
        "ground-ring",
        "--ring",
        "Q",
        "--max-degree",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    // negate one degeneracy entry
    let mut json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    json["degen"][1][0][0][0] = serde_json::Value::String("-1".into());
    fs::write(&path, serde_json::to_string(&json).unwrap()).unwrap();

    let out = duplicial(&["check", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert!(text.contains("FAIL"), "{text}");
    assert!(text.contains("rel:"), "a structural relation must be named: {text}");
}

#[test]
fn malformed_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(&path, "{ not json").unwrap();
    let out = duplicial(&["check", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_ring_or_degree_exit_4() {
    let out = duplicial(&["check", "--builtin", "ground-ring", "--ring", "Z/1"]);
    assert_eq!(out.status.code(), Some(4));
    let out = duplicial(&["dump", "--builtin", "ground-ring", "--op", "kappa", "--degree", "9"]);
    assert_eq!(out.status.code(), Some(4));
    let out = duplicial(&["dump", "--builtin", "ground-ring", "--op", "nope", "--degree", "0"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn duchain_file_reconstruction_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("duchain.json");
    // V_0 = V_1 = Q with b_1 = 1, d_0 = 1: duplicial but not paracyclic
    // a 1x0 matrix is one empty row; a 0x1 matrix is an empty list of rows
    let duchain = serde_json::json!({
        "ring": "Q",
        "n_max": 2,
        "ranks": [1, 1, 0],
        "b": [[["1"]], [[]]],
        "d": [[["1"]], []],
    });
    fs::write(&path, serde_json::to_string(&duchain).unwrap()).unwrap();
    let out = duplicial(&["check", "--duchain", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("Duplicial"), "{text}");
}

#[test]
fn scalar_twist_check_reports_variants_and_passes() {
    let out = duplicial(&[
        "check",
        "--builtin",
        "scalar-twisted-u",
        "--twist",
        "2",
        "--max-degree",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[variant]"));
    assert!(text.contains("Paracyclic"));
}

#[test]
fn decompose_prints_components() {
    let out = duplicial(&[
        "decompose",
        "--builtin",
        "simplex-1",
        "--max-degree",
        "2",
        "--degree",
        "1",
        "--element",
        "1,0,0",
        "--format",
        "structured",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["degree"], 1);
    assert!(json["components"].as_array().unwrap().len() == 2);
}

#[test]
fn homology_mixed_window() {
    let out = duplicial(&[
        "homology",
        "--builtin",
        "ground-ring",
        "--max-degree",
        "7",
        "--flavor",
        "bB",
        "--weight",
        "2",
        "--format",
        "structured",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let free: Vec<u64> = json["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["free_rank"].as_u64().unwrap())
        .collect();
    assert_eq!(&free[..3], &[1, 0, 1]);
}
