//! End-to-end checks of the frobex binary: exit codes, determinism, and
//! byte-exact agreement with the committed golden files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn frobex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn goldens_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("goldens")
}

#[test]
fn classify_kc2_reports_four_classes_and_exits_zero() {
    let out = frobex(&["classify", "--family", "kC2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4 isomorphism classes"), "{text}");
    assert!(text.contains("0 unresolved"), "{text}");
}

#[test]
fn classify_output_is_deterministic() {
    let a = frobex(&["classify", "--family", "kC2", "--format", "json"]);
    let b = frobex(&["classify", "--family", "kC2", "--format", "json"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_good_and_corrupted_algebras() {
    let golden = goldens_dir().join("algebra_kC2.json");
    let out = frobex(&["verify", golden.to_str().unwrap()]);
    assert!(out.status.success());

    // corrupt one structure constant and expect exit 1 with a named axiom
    let text = std::fs::read_to_string(&golden).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["m"][0][3] = serde_json::Value::String("2".into());
    let tmp = std::env::temp_dir().join("frobex_bad_algebra.json");
    std::fs::write(&tmp, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let out = frobex(&["verify", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"), "{text}");
    assert!(text.contains("frobenius law"), "{text}");
}

#[test]
fn verify_extended_and_hopf_goldens() {
    for name in ["extended_kC2_0.json", "hopf_C2.json"] {
        let golden = goldens_dir().join(name);
        let out = frobex(&["verify", golden.to_str().unwrap()]);
        assert!(out.status.success(), "{name}");
    }
    let golden = goldens_dir().join("hopf_C2.json");
    let out = frobex(&["hopf-check", golden.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn functor_check_runs_from_a_file() {
    let golden = goldens_dir().join("extended_kC2_0.json");
    let out = frobex(&[
        "functor-check",
        "--kind",
        "tensor",
        "--algebra",
        golden.to_str().unwrap(),
        "--dims",
        "1,2",
        "--seed",
        "42",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("seed 42"), "{text}");
}

#[test]
fn goldens_regenerate_byte_identical() {
    let tmp = std::env::temp_dir().join("frobex_goldens_regen");
    let _ = std::fs::remove_dir_all(&tmp);
    let out = frobex(&["goldens", "--dir", tmp.to_str().unwrap()]);
    assert!(out.status.success());
    for entry in std::fs::read_dir(goldens_dir()).unwrap() {
        let entry = entry.unwrap();
        let name = entry.file_name();
        let committed = std::fs::read(entry.path()).unwrap();
        let regenerated = std::fs::read(tmp.join(&name)).unwrap();
        assert_eq!(
            committed,
            regenerated,
            "golden {} drifted",
            name.to_string_lossy()
        );
    }
}

#[test]
fn catalog_dump_parses_back() {
    let out = frobex(&["catalog", "klein-four"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["algebra"]["dim"], 4);
    assert_eq!(v["extensions"].as_array().unwrap().len(), 43);
}

#[test]
fn classify_with_conductor_override_and_lattice_file() {
    let lat = std::env::temp_dir().join("frobex_lattice.json");
    std::fs::write(
        &lat,
        r#"{"description": "tiny", "scalars": ["0", "1", "-1"]}"#,
    )
    .unwrap();
    let out = frobex(&[
        "classify",
        "--family",
        "k",
        "--field-conductor",
        "4",
        "--lattice",
        lat.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["structures"].as_array().unwrap().len(), 2);
}

#[test]
fn unknown_family_is_a_clean_error() {
    let out = frobex(&["classify", "--family", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}
