//! End-to-end tests of the `nsplit` binary and the bundled spec files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nsplit::corpus;
use nsplit::Rat;
use nsplit_cli::spec::{parse_spec, spec_from_example};

const BUNDLED: [&str; 5] = [
    "twilled-p1",
    "sl2-id-nijenhuis",
    "nilcubic-reynolds",
    "diagonal-rb1",
    "uppertri-relative-rb0",
];

fn specs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs")
}

fn nsplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsplit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

/// Rewrites the bundled spec files from the corpus. Run with
/// `cargo test -p nsplit-cli regenerate_bundled_specs -- --ignored`.
#[test]
#[ignore]
fn regenerate_bundled_specs() {
    for name in BUNDLED {
        let example = corpus::example::<Rat>(name).expect("bundled example exists");
        let spec = spec_from_example(&example);
        let json = format!("{}\n", serde_json::to_string_pretty(&spec).unwrap());
        std::fs::write(specs_dir().join(format!("{name}.json")), json).unwrap();
    }
}

#[test]
fn bundled_specs_round_trip() {
    for name in BUNDLED {
        let path = specs_dir().join(format!("{name}.json"));
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|_| panic!("missing bundled spec {name}"));
        let parsed = parse_spec(&text).expect("bundled spec parses");
        let reserialized = serde_json::to_string_pretty(&parsed).unwrap();
        let reparsed = parse_spec(&reserialized).expect("re-serialized spec parses");
        assert_eq!(parsed, reparsed, "round trip differs for {name}");
    }
}

#[test]
fn bundled_specs_match_the_corpus() {
    for name in BUNDLED {
        let path = specs_dir().join(format!("{name}.json"));
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = parse_spec(&text).unwrap();
        let example = corpus::example::<Rat>(name).unwrap();
        let algebra = parsed.algebra().unwrap();
        assert!(
            algebra.products_equal(&example.algebra),
            "bundled algebra differs from corpus for {name}"
        );
        assert_eq!(parsed, spec_from_example(&example));
    }
}

#[test]
fn split_outputs_the_associative_ns_system() {
    let out = nsplit(&["split", "--catalog", "associative", "--scheme", "ns"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("category: associative"));
    assert!(text.contains("{1}"));
    assert!(text.contains("{3}"));
    assert!(text.contains("star:"));
    assert!(text.contains("extra:"));

    // Deterministic output, byte for byte.
    let again = nsplit(&["split", "--catalog", "associative", "--scheme", "ns"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn split_json_carries_all_three_renderings() {
    let out = nsplit(&[
        "split",
        "--catalog",
        "leibniz",
        "--scheme",
        "ns",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["scheme"], "ns");
    let derived = &value["sources"][0]["derived"];
    assert_eq!(derived.as_array().unwrap().len(), 3);
    for key in ["text", "tex", "json"] {
        assert!(derived[0]["relation"][key] != serde_json::Value::Null);
    }
    assert!(value["sources"][0]["extra"]["text"].is_string());
}

#[test]
fn split_reduces_the_lie_system() {
    let out = nsplit(&[
        "split",
        "--catalog",
        "lie",
        "--scheme",
        "ns",
        "--reduce-anticommutative",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("anticommutative reduction"));
    assert!(text.contains("a v b + b v a"));
    assert_eq!(text.matches("\n  [").count(), 3, "three reduced relations");
}

#[test]
fn split_nap_dendriform_has_two_records() {
    let out = nsplit(&["split", "--catalog", "nap", "--scheme", "dendriform"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("\n  {").count(), 2);
}

#[test]
fn split_accepts_a_custom_presentation() {
    // Right-nilpotent relation (ab)c = 0, written out explicitly.
    let spec = serde_json::json!({
        "version": 1,
        "category": {
            "op": "mu",
            "relations": [{
                "arity": 3,
                "terms": [{ "coeff": "1", "monomial": ["mu", ["mu", 1, 2], 3] }],
            }],
        },
    });
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("custom.json");
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).unwrap();

    let out = nsplit(&[
        "split",
        "--spec",
        path.to_str().unwrap(),
        "--scheme",
        "ns",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("source 1: (a*b)*c"));
    // (a≺b)≺c from the subset-{1} assignment.
    assert!(text.contains("(a<b)<c"));
}

#[test]
fn split_rejects_unknown_inputs() {
    let out = nsplit(&["split", "--catalog", "jordan", "--scheme", "ns"]);
    assert_eq!(out.status.code(), Some(2));
    let out = nsplit(&["split", "--catalog", "lie", "--scheme", "pentadendriform"]);
    assert_eq!(out.status.code(), Some(2));
    // Usage error from the argument parser.
    let out = nsplit(&["split", "--catalog", "lie", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_bundled_examples_pass() {
    for name in [
        "uppertri-id-nijenhuis",
        "sl2-id-nijenhuis",
        "twilled-p1",
        "nilcubic-shift",
        "nilcubic-reynolds",
        "diagonal-rb1",
        "uppertri-relative-rb0",
    ] {
        let out = nsplit(&["check", "--example", name]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
        assert!(stdout(&out).contains("result: PASS"));
    }
}

#[test]
fn check_bundled_spec_files_pass() {
    for name in BUNDLED {
        let path = specs_dir().join(format!("{name}.json"));
        let out = nsplit(&["check", "--spec", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
    }
}

#[test]
fn check_failure_prints_witness_and_exits_1() {
    // Corrupt the Reynolds operator in a temp copy of the bundled spec.
    let text =
        std::fs::read_to_string(specs_dir().join("nilcubic-reynolds.json")).unwrap();
    let mut spec: serde_json::Value = serde_json::from_str(&text).unwrap();
    spec["operator"]["matrix"][0][0] = serde_json::Value::String("5".into());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).unwrap();

    let out = nsplit(&["check", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("violation:"));
    assert!(text.contains("result: FAIL"));
}

#[test]
fn malformed_spec_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("truncated.json");
    std::fs::write(&path, "{\"version\": 1, \"alg").unwrap();
    let out = nsplit(&["check", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Unknown fields are rejected.
    let path = dir.path().join("unknown-field.json");
    std::fs::write(&path, "{\"version\": 1, \"extra\": {}}").unwrap();
    let out = nsplit(&["check", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Wrong version.
    let path = dir.path().join("version.json");
    std::fs::write(&path, "{\"version\": 7}").unwrap();
    let out = nsplit(&["check", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_oracles_on_bundled_examples() {
    let out = nsplit(&[
        "verify",
        "--example",
        "twilled-p1",
        "--oracle",
        "xstar",
        "--max-len",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("result: PASS"));

    let out = nsplit(&[
        "verify",
        "--example",
        "twilled-p1",
        "--oracle",
        "pairsij",
        "--max-pow",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = nsplit(&["verify", "--example", "twilled-p1-ns", "--oracle", "cross-check"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("symbolic relations: PASS"));
    assert!(stdout(&out).contains("doubled membership: PASS"));
}

#[test]
fn verify_rejects_non_nijenhuis_operator() {
    // The Reynolds operator is not Nijenhuis on the nilpotent algebra? It is
    // diag(−2, −1/2): N(x)N(x) = 4x², N(N(x)x + xN(x) − N(xx)) = N(−4x² + x²/2)
    // = (−7/2)(−1/2)x² = 7/4 x² ≠ 4x². The oracle refuses to run.
    let out = nsplit(&[
        "verify",
        "--example",
        "nilcubic-reynolds",
        "--oracle",
        "xstar",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("Nijenhuis"));
}

#[test]
fn catalog_lists_everything() {
    let out = nsplit(&["catalog"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in [
        "associative",
        "lie",
        "leibniz",
        "pre-lie",
        "nap",
        "commutative-associative",
    ] {
        assert!(text.contains(name), "missing presentation {name}");
    }
    for name in [
        "upper-triangular-2x2",
        "sl2",
        "diagonal-2d",
        "nilpotent-cubic",
        "leibniz-2d",
        "twilled-4d",
    ] {
        assert!(text.contains(name), "missing algebra {name}");
    }

    let out = nsplit(&["catalog", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(value["presentations"].as_array().unwrap().len() >= 6);
    assert!(value["algebras"].as_array().unwrap().len() >= 5);
    assert!(value["examples"].as_array().unwrap().len() >= 5);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let out = nsplit(&[
        "split",
        "--catalog",
        "associative",
        "--scheme",
        "dendriform",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("scheme: dendriform"));
}

#[test]
fn verify_jobs_flag_gives_identical_results() {
    let serial = nsplit(&[
        "verify", "--example", "twilled-p1", "--oracle", "xstar", "--max-len", "3",
        "--jobs", "1",
    ]);
    let parallel = nsplit(&[
        "verify", "--example", "twilled-p1", "--oracle", "xstar", "--max-len", "3",
        "--jobs", "3",
    ]);
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);
}
