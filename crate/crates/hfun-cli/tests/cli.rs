//! End-to-end CLI tests: exit-code contract, output determinism, and the
//! mutation check (a perturbed fixture constant must fail `verify`).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_hfun")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary must run")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin())
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary must run")
}

fn write_spec(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const EXP_NEG: &str = r#"{"m":1,"n":0,"upper":[],"lower":[[0.0,0.0,1.0]]}"#;
const COSH_CHAIN: &str =
    r#"{"m":1,"n":1,"upper":[[0.0,0.0,1.0]],"lower":[[0.0,0.0,1.0],[0.0,0.0,2.0]]}"#;

#[test]
fn eval_prints_expected_json_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "exp.json", EXP_NEG);
    let out = run(&["eval", spec.to_str().unwrap(), "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.starts_with("{\"re\":3.6787944117144"),
        "unexpected output: {text}"
    );
    assert!(text.contains("\"method\":\"series_left\""));
    // byte-identical on repeat
    let again = run(&["eval", spec.to_str().unwrap(), "1"]);
    assert_eq!(text, String::from_utf8(again.stdout).unwrap());
}

#[test]
fn eval_complex_argument_and_method_selection() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "exp.json", EXP_NEG);
    // principal-branch complex argument
    let out = run(&["eval", spec.to_str().unwrap(), "0.5+0.5i"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"re\":5.3228073021"), "got {text}");
    // forced quadrature agrees with the series route
    let out = run(&["eval", spec.to_str().unwrap(), "1", "--method", "mb"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"method\":\"mellin_barnes\""));
    assert!(text.contains("\"re\":3.678794411714"), "got {text}");
}

#[test]
fn eval_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // malformed JSON -> 2
    let bad = write_spec(dir.path(), "bad.json", "{not json");
    let out = run(&["eval", bad.to_str().unwrap(), "1"]);
    assert_eq!(out.status.code(), Some(2));
    // invalid spec (zero scale) -> 2
    let invalid = write_spec(
        dir.path(),
        "invalid.json",
        r#"{"m":1,"n":0,"upper":[],"lower":[[0.0,0.0,0.0]]}"#,
    );
    let out = run(&["eval", invalid.to_str().unwrap(), "1"]);
    assert_eq!(out.status.code(), Some(2));
    // bad complex literal -> 2
    let spec = write_spec(dir.path(), "exp.json", EXP_NEG);
    let out = run(&["eval", spec.to_str().unwrap(), "1+?i"]);
    assert_eq!(out.status.code(), Some(2));
    // z = 0 with positive delta -> domain error -> 3
    let out = run(&["eval", spec.to_str().unwrap(), "0"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("convergence domain"), "stderr: {err}");
    // quadrature on a non-decaying integrand -> 3
    let cosh = write_spec(dir.path(), "cosh.json", COSH_CHAIN);
    let out = run(&["eval", cosh.to_str().unwrap(), "-1", "--method", "mb"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn series_cap_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "exp.json", EXP_NEG);
    let out = Command::new(bin())
        .env("HFUN_MAX_TERMS", "5")
        .args(["eval", spec.to_str().unwrap(), "30"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "tiny term cap must fail");
    let out = run(&["eval", spec.to_str().unwrap(), "30"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn split_structure_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cosh = write_spec(dir.path(), "cosh.json", COSH_CHAIN);
    let out = run(&[
        "split",
        cosh.to_str().unwrap(),
        "new",
        "--alpha",
        "0",
        "--lambda",
        "1",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"weight\":[1.0000000000000000e0,0.0000000000000000e0]"));
    assert!(text.contains("\"argument_factor\":[-1.0000000000000000e0"));
    // doubled leading pairs in the term specs
    assert!(text.contains("\"upper\":[[0.0000000000000000e0,0.0000000000000000e0,2.0000000000000000e0]]"));

    // wrong leading pair -> structure error -> 2, message names the slot
    let out = run(&[
        "split",
        cosh.to_str().unwrap(),
        "new",
        "--alpha",
        "0.5",
        "--lambda",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("first upper pair"), "stderr: {err}");

    // append split on any spec: weights +-e^{+-i pi alpha}/(2 pi i)
    let out = run(&[
        "split",
        cosh.to_str().unwrap(),
        "akr",
        "--alpha",
        "0.5",
        "--lambda",
        "0.16666666666666666",
    ]);
    assert!(out.status.success());

    // missing parameters -> 2
    let out = run(&["split", cosh.to_str().unwrap(), "akr"]);
    assert_eq!(out.status.code(), Some(2));

    // reduce-new on a spec without trailing pairs -> 2
    let out = run(&["split", cosh.to_str().unwrap(), "reduce-new"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mlsum_values_and_exit_codes() {
    let out = run(&["mlsum", "2", "1", "2", "0", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"re\":1.5430806348"), "got {text}");
    let disc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(disc["max_pairwise_discrepancy"].as_f64().unwrap() < 1e-8);

    // beta = 0 collapses to 1 on every route
    let out = run(&["mlsum", "1", "0", "1", "0", "7"]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    for path in ["direct", "via_pfq", "via_h"] {
        let re = v[path]["re"].as_f64().unwrap();
        assert!((re - 1.0).abs() < 1e-12, "{path} gave {re}");
    }

    // gamma = 0 -> invalid parameters -> 2
    let out = run(&["mlsum", "1", "1", "0", "0", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_passes_and_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["verify", "--suite", "all", "--out", "rep"]);
    assert_eq!(out.status.code(), Some(0), "verify all must pass on a correct build");
    let json = std::fs::read_to_string(dir.path().join("rep.json")).unwrap();
    let reports: serde_json::Value = serde_json::from_str(&json).unwrap();
    let arr = reports.as_array().unwrap();
    assert!(arr.len() >= 20, "expected many reports, got {}", arr.len());
    // sorted by name
    let names: Vec<&str> = arr
        .iter()
        .map(|r| r["identity_name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    let csv = std::fs::read_to_string(dir.path().join("rep.csv")).unwrap();
    assert!(csv.starts_with("identity_name,max_rel_discrepancy,pass\n"));

    // byte-identical on repeat
    let out2 = run_in(dir.path(), &["verify", "--suite", "all", "--out", "rep2"]);
    assert_eq!(out2.status.code(), Some(0));
    let json2 = std::fs::read_to_string(dir.path().join("rep2.json")).unwrap();
    assert_eq!(json, json2);

    // threshold zero must fail: discrepancies are nonzero in floating point
    let out = run_in(
        dir.path(),
        &["verify", "--suite", "gamma", "--threshold", "0", "--out", "repz"],
    );
    assert_eq!(out.status.code(), Some(1));
}

/// Walks a JSON value and perturbs the first site `pick` accepts,
/// returning true when a mutation happened.
fn mutate_first(value: &mut serde_json::Value, pick: &mut dyn FnMut(&mut serde_json::Value) -> bool) -> bool {
    if pick(value) {
        return true;
    }
    match value {
        serde_json::Value::Array(items) => {
            for item in items {
                if mutate_first(item, pick) {
                    return true;
                }
            }
            false
        }
        serde_json::Value::Object(map) => {
            for (_, v) in map.iter_mut() {
                if mutate_first(v, pick) {
                    return true;
                }
            }
            false
        }
        _ => false,
    }
}

#[test]
fn verify_mutation_check() {
    // Perturbing any single fixture constant by 1e-3 must flip the exit
    // code of `verify` to 1.
    let catalog_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../hfun/data/catalog.json");
    let pristine = std::fs::read_to_string(catalog_path).unwrap();
    let dir = tempfile::tempdir().unwrap();

    // sanity: the pristine catalog passes through --catalog as well
    let clean = dir.path().join("clean.json");
    std::fs::write(&clean, &pristine).unwrap();
    let out = run_in(
        dir.path(),
        &["verify", "--suite", "catalog", "--catalog", clean.to_str().unwrap(), "--out", "c"],
    );
    assert_eq!(out.status.code(), Some(0));

    type Mutation = (&'static str, Box<dyn FnMut(&mut serde_json::Value) -> bool>);
    let mutations: Vec<Mutation> = vec![
        (
            "h-spec scale",
            Box::new(|v| {
                // first lower-row scale inside an hfun spec
                if let Some(spec) = v.get_mut("spec") {
                    if let Some(row) = spec.get_mut("lower").and_then(|l| l.get_mut(1)) {
                        let s = row[2].as_f64().unwrap();
                        row[2] = serde_json::json!(s + 1e-3 * s.abs().max(1.0));
                        return true;
                    }
                }
                false
            }),
        ),
        (
            "symbolic constant factor",
            Box::new(|v| {
                if v.get("op").and_then(|o| o.as_str()) == Some("const")
                    && v.get("den").and_then(|d| d.as_i64()) == Some(2)
                {
                    v["factor"] = serde_json::json!(1.0 + 1e-3);
                    return true;
                }
                false
            }),
        ),
        (
            "ml-sum delta",
            Box::new(|v| {
                if v.get("op").and_then(|o| o.as_str()) == Some("ml_sum") {
                    let d = v["delta"].as_f64().unwrap();
                    v["delta"] = serde_json::json!(d + 1e-3);
                    return true;
                }
                false
            }),
        ),
    ];

    for (i, (what, mut pick)) in mutations.into_iter().enumerate() {
        let mut value: serde_json::Value = serde_json::from_str(&pristine).unwrap();
        assert!(
            mutate_first(&mut value, pick.as_mut()),
            "mutation '{what}' found no target"
        );
        let path = dir.path().join(format!("mut{i}.json"));
        std::fs::write(&path, serde_json::to_string(&value).unwrap()).unwrap();
        let out = run_in(
            dir.path(),
            &[
                "verify",
                "--suite",
                "all",
                "--catalog",
                path.to_str().unwrap(),
                "--out",
                &format!("m{i}"),
            ],
        );
        assert_eq!(
            out.status.code(),
            Some(1),
            "mutation '{what}' was not detected"
        );
    }
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = run(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
