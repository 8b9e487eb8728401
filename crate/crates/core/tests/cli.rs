use std::path::PathBuf;
use std::process::Command;

use lsx::cli::{run, Invocation};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn validator() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/lsx-report-1.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn json(args: &[&str]) -> (Invocation, Value) {
    let mut full = vec!["lsx", "--json"];
    full.extend_from_slice(args);
    let out = run(full);
    let doc: Value =
        serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    let errors: Vec<String> = validator()
        .iter_errors(&doc)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    assert_eq!(doc["exit_code"], out.code);
    (out, doc)
}

fn text_verdicts(stdout: &str) -> Vec<(String, bool)> {
    stdout
        .lines()
        .filter_map(|l| l.strip_prefix("verdict "))
        .map(|l| {
            let (k, v) = l.rsplit_once(' ').unwrap();
            (k.to_string(), v == "true")
        })
        .collect()
}

#[test]
fn every_command_validates() {
    let g5 = fixture("g5.ls");
    let lonely = fixture("lonely.ls");
    let arrow = fixture("imp2.arrow");
    let id2 = fixture("id2.ls");
    let chain4 = fixture("chain4.ls");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["classify", &g5], 0),
        (vec!["check", &g5, "--property", "monotone"], 1),
        (
            vec!["check", &g5, "--property", "saturated", "--gamma", "0,1"],
            0,
        ),
        (
            vec![
                "check",
                &g5,
                "--property",
                "alpha-saturated",
                "--gamma",
                "0,1",
                "--alpha",
                "2",
            ],
            0,
        ),
        (vec!["enumerate", &g5, "--kind", "strongly-closed"], 0),
        (
            vec![
                "enumerate",
                &id2,
                "--kind",
                "arrow-saturated",
                "--arrow",
                &arrow,
            ],
            0,
        ),
        (vec!["verify", &g5], 0),
        (vec!["verify", &lonely], 1),
        (
            vec![
                "corpus",
                "--generator",
                "arbitrary,monotone",
                "--count",
                "20",
                "--size-min",
                "2",
                "--size-max",
                "4",
            ],
            1,
        ),
        (vec!["gallery", "list"], 0),
        (vec!["gallery", "run", "all"], 0),
        (vec!["bival", &chain4, "--emit", "scs", "--compare"], 0),
        (vec!["bival", &g5, "--emit", "scs", "--compare"], 1),
        (vec!["bival", &lonely, "--emit", "relmax", "--compare"], 1),
        (vec!["classify", "/nonexistent.ls"], 2),
    ];
    for (args, code) in cases {
        let (out, _) = json(&args);
        assert_eq!(out.code, code, "{args:?}: {}{}", out.stdout, out.stderr);
    }
}

#[test]
fn text_and_json_agree() {
    let g5 = fixture("g5.ls");
    for args in [
        vec!["classify", g5.as_str()],
        vec!["verify", g5.as_str()],
        vec!["gallery", "run", "G6"],
    ] {
        let mut full = vec!["lsx"];
        full.extend_from_slice(&args);
        let text = run(full);
        let (out, doc) = json(&args);
        assert_eq!(text.code, out.code);
        let from_json: Vec<(String, bool)> = doc["verdicts"]
            .as_object()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), v.as_bool().unwrap()))
            .collect();
        assert_eq!(text_verdicts(&text.stdout), from_json, "{args:?}");
    }
}

#[test]
fn g5_classification() {
    let (_, doc) = json(&["classify", &fixture("g5.ls")]);
    let v = &doc["verdicts"];
    assert_eq!(v["tarski"], false);
    for c in ["lindI", "lindII", "lindIII", "lindIV", "reflexive", "cut"] {
        assert_eq!(v[c], true, "{c}");
    }
    assert_eq!(doc["structure"]["n"], 3);
}

#[test]
fn documented_invocations() {
    let out = run(["lsx", "gallery", "run", "G6"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let out = run([
        "lsx",
        "corpus",
        "--generator",
        "bivaluation",
        "--count",
        "100",
        "--size-min",
        "3",
        "--size-max",
        "6",
        "--seed",
        "42",
        "--theorems",
        "all",
    ]);
    assert_eq!(out.code, 0, "{}", out.stdout);
}

#[test]
fn errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let big = dir.path().join("big.ls");
    std::fs::write(
        &big,
        "structure big\nelements 11\nmode rule\nrule identity\n",
    )
    .unwrap();
    let (out, doc) = json(&["classify", &big.to_string_lossy()]);
    assert_eq!(out.code, 2);
    assert!(doc["error"].as_str().unwrap().contains("budget"));

    let g5 = fixture("g5.ls");
    for args in [
        vec!["lsx"],
        vec!["lsx", "frobnicate"],
        vec!["lsx", "check", &g5],
        vec!["lsx", "check", &g5, "--property", "no-such-property"],
        vec![
            "lsx",
            "check",
            &g5,
            "--property",
            "saturated",
            "--gamma",
            "0,7",
        ],
        vec!["lsx", "verify", &g5, "--theorems", "T99"],
        vec!["lsx", "gallery", "run", "G9"],
        vec![
            "lsx",
            "corpus",
            "--generator",
            "bivaluation",
            "--count",
            "5",
            "--size-min",
            "4",
            "--size-max",
            "2",
        ],
    ] {
        let out = run(args.clone());
        assert_eq!(out.code, 2, "{args:?}: {}{}", out.stdout, out.stderr);
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(run(["lsx", "--help"]).code, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lsx");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["classify", &fixture("g5.ls")]), Some(0));
    assert_eq!(status(&["verify", &fixture("lonely.ls")]), Some(1));
    assert_eq!(status(&["classify", "/nonexistent.ls"]), Some(2));
}

#[test]
fn sequential_flag_matches() {
    let g5 = fixture("g5.ls");
    let (_, a) = json(&["classify", &g5]);
    let (_, b) = json(&["--sequential", "classify", &g5]);
    assert_eq!(a["verdicts"], b["verdicts"]);
    assert_eq!(a["witnesses"], b["witnesses"]);
}
