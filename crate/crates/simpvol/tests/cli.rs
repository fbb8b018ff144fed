//! End-to-end tests of the command-line binary: generation round
//! trips, validation reports, exit codes on malformed input and bad
//! arguments.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use simpvol::Pseudomanifold;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_simpvol"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmpfile(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("simpvol-cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn generate_and_check_round_trip() {
    let path = tmpfile("product2.json");
    let out = run(&[
        "gen",
        "product",
        "--genus",
        "2",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");

    // file parses back to the generator output
    let text = fs::read_to_string(&path).unwrap();
    let parsed = Pseudomanifold::from_json(&text).unwrap();
    let direct = simpvol::generators::product_surface_interval(2).unwrap();
    assert_eq!(parsed, direct);
    // canonical serialization is byte-for-byte stable
    assert_eq!(text, parsed.to_json());

    let out = run(&["check", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("simplices:      16"));
    assert!(text.contains("orientable:     true"));
    assert!(text.contains("genus 2"));
}

#[test]
fn check_reports_json() {
    let path = tmpfile("handlebody3.json");
    assert!(run(&["gen", "handlebody", "--genus", "3", "-o", path.to_str().unwrap()])
        .status
        .success());
    let out = run(&["check", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["simplices"], 7);
    assert_eq!(v["euler"], -2);
    assert_eq!(v["manifold"], true);
}

#[test]
fn every_generator_output_checks_clean() {
    for (args, name) in [
        (vec!["gen", "cone", "--dim", "3"], "cone.json"),
        (vec!["gen", "solid-torus"], "st.json"),
        (vec!["gen", "handlebody", "--genus", "2"], "h2.json"),
        (vec!["gen", "product", "--genus", "3"], "p3.json"),
    ] {
        let path = tmpfile(name);
        let mut full = args.clone();
        full.push("-o");
        full.push(path.to_str().unwrap());
        assert!(run(&full).status.success(), "{args:?}");
        let out = run(&["check", path.to_str().unwrap()]);
        assert!(out.status.success(), "check {name}: {out:?}");
    }
}

#[test]
fn malformed_files_exit_one() {
    let fixtures = [
        (
            "self_gluing.json",
            r#"{"dimension": 3, "simplices": 1,
                "gluings": [{"a": [0, 0], "b": [0, 0], "map": [0, 1, 2, 3]}]}"#,
            "glued to itself",
        ),
        (
            "double_pairing.json",
            r#"{"dimension": 3, "simplices": 3,
                "gluings": [{"a": [0, 0], "b": [1, 0], "map": [0, 1, 2, 3]},
                            {"a": [0, 0], "b": [2, 0], "map": [0, 1, 2, 3]}]}"#,
            "in two pairs",
        ),
        (
            "bad_index.json",
            r#"{"dimension": 3, "simplices": 1,
                "gluings": [{"a": [0, 0], "b": [5, 1], "map": [1, 0, 2, 3]}]}"#,
            "out of range",
        ),
    ];
    for (name, text, diagnostic) in fixtures {
        let path = tmpfile(name);
        fs::write(&path, text).unwrap();
        let out = run(&["check", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{name}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains(diagnostic), "{name}: {err}");
    }
}

#[test]
fn missing_file_exits_one() {
    let out = run(&["check", "/nonexistent/path.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_arguments_exit_two() {
    // unknown flag
    assert_eq!(run(&["check", "--frobnicate", "x"]).status.code(), Some(2));
    // bounds needs a file or explicit dimension and norm
    assert_eq!(run(&["bounds"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--dim", "3"]).status.code(), Some(2));
    // domain violations in arguments
    assert_eq!(
        run(&["gen", "product", "--genus", "0", "-o", "/tmp/x.json"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["hyp", "truncated", "--genus", "1"]).status.code(), Some(2));
}

#[test]
fn bounds_evaluation() {
    let out = run(&[
        "bounds",
        "--dim",
        "3",
        "--boundary-norm",
        "4",
        "--aspherical",
        "--boundary-irreducible",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("value:      5"), "{text}");
    assert!(text.contains("aspherical"), "{text}");

    // derived from a file: genus-2 product has boundary norm 8
    let path = tmpfile("p2_bounds.json");
    assert!(run(&["gen", "product", "--genus", "2", "-o", path.to_str().unwrap()])
        .status
        .success());
    let out = run(&["bounds", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("value:      6"), "{text}");
}

#[test]
fn certify_product() {
    let path = tmpfile("p2_certify.json");
    assert!(run(&["gen", "product", "--genus", "2", "-o", path.to_str().unwrap()])
        .status
        .success());
    let out = run(&[
        "certify",
        path.to_str().unwrap(),
        "--degree",
        "1",
        "--boundary-norm",
        "8",
        "--components",
        "2",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["e_nice"], 8);
    assert_eq!(v["t"][0], 4);
}

#[test]
fn hyp_commands() {
    let out = run(&["hyp", "lob", "--theta", "1.0471975511965976"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0.338314"), "{text}");

    let out = run(&["hyp", "tet", "--angles", "1.0471975512,1.0471975512,1.0471975512"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1.01494"), "{text}");

    let out = run(&["hyp", "table", "--max-genus", "4", "--json"]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);
    assert!((rows[0]["refined"].as_f64().unwrap() - 6.4619).abs() < 1e-3);

    let out = run(&["hyp", "bound", "--vol", "100.0", "--boundary-norm", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("98.5278"), "{text}");

    // deterministic byte-for-byte output
    let a = run(&["hyp", "table", "--max-genus", "6"]);
    let b = run(&["hyp", "table", "--max-genus", "6"]);
    assert_eq!(a.stdout, b.stdout);
}
