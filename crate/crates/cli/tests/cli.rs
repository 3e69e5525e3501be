use std::process::{Command, Output};

use pseudosym_cli::ReportDocument;
use pseudosym_core::catalog::{builtin, CatalogParams};

fn pseudosym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudosym")).args(args).output().unwrap()
}

fn machine(args: &[&str]) -> (String, ReportDocument) {
    let mut all = vec!["--format", "machine"];
    all.extend_from_slice(args);
    let out = pseudosym(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let doc = ReportDocument::from_json(&text).unwrap();
    (text, doc)
}

#[test]
fn robinson_trautman_deszcz_function() {
    let (_, doc) = machine(&[
        "--metric",
        "robinson-trautman-jet",
        "--checks",
        "pseudosymmetry",
    ]);
    assert_eq!(doc.schema, "pseudosym-report/1");
    let v = doc.verdict("deszcz-pseudosymmetric").unwrap();
    assert_eq!(v.status, "holds-with-data");
    assert_eq!(v.datum("L"), Some("(q - 2*b*r^2)/r^3"));
}

#[test]
fn minkowski_never_fails() {
    let (_, doc) = machine(&["--metric", "minkowski", "--checks", "all"]);
    assert!(!doc.verdicts.is_empty());
    for v in &doc.verdicts {
        assert!(
            ["holds", "holds-with-data", "vacuous"].contains(&v.status.as_str())
                || (v.status == "inconclusive" && !v.notes.is_empty()),
            "{} is {}",
            v.name,
            v.status
        );
    }
}

#[test]
fn machine_output_is_deterministic_and_round_trips() {
    let args = ["--metric", "som-raychaudhuri", "--seed", "7", "--trials", "3"];
    let (a, doc) = machine(&args);
    let (b, _) = machine(&args);
    assert_eq!(a, b);
    assert_eq!(doc.to_json(), a);
    assert_eq!(doc.settings.seed, 7);
    assert_eq!(doc.settings.trials, 3);
    assert!(doc.timing.is_none());

    // data strings re-parse to the engine's expressions
    let built = builtin("som-raychaudhuri", &CatalogParams::default()).unwrap();
    let ctx = built.metric.context();
    for v in &doc.verdicts {
        for (label, e) in v.expressions(ctx).unwrap() {
            assert_eq!(ctx.format(&e), v.datum(&label).unwrap());
        }
    }
}

#[test]
fn text_format_lists_every_verdict() {
    let (_, doc) = machine(&["--metric", "som-raychaudhuri", "--checks", "einstein,roter"]);
    let out = pseudosym(&["--metric", "som-raychaudhuri", "--checks", "einstein,roter"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, doc.to_text());
    for v in &doc.verdicts {
        assert!(text.lines().any(|l| l.starts_with(&v.name) && l.contains(&v.status)), "{}", v.name);
    }
}

#[test]
fn timing_is_opt_in() {
    let (_, doc) = machine(&["--metric", "minkowski", "--checks", "einstein", "--timing"]);
    assert!(doc.timing.is_some());
}

#[test]
fn writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = pseudosym(&[
        "--metric",
        "minkowski",
        "--checks",
        "einstein",
        "--format",
        "machine",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc = ReportDocument::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.metric, "minkowski");
}

#[test]
fn metric_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sr.toml");
    std::fs::write(
        &path,
        r#"
name = "som-raychaudhuri-file"
coordinates = ["t", "r", "z", "phi"]
parameters = ["a"]
nonvanishing = ["r"]

[metric]
"t,t" = "1"
"t,phi" = "a*r^2"
"r,r" = "-1"
"z,z" = "-1"
"phi,phi" = "-(r^2 - a^2*r^4)"
"#,
    )
    .unwrap();
    let checks = "ricci-generalized-pseudosymmetric,ein-level";
    let (_, doc) = machine(&["--metric", path.to_str().unwrap(), "--checks", checks]);
    assert_eq!(doc.metric, "som-raychaudhuri-file");
    let (_, reference) = machine(&["--metric", "som-raychaudhuri", "--checks", checks]);
    assert_eq!(doc.verdicts, reference.verdicts);
}

#[test]
fn parameter_overrides_reach_the_catalog() {
    let (_, doc) = machine(&[
        "--metric",
        "robinson-trautman-jet",
        "--checks",
        "deszcz-pseudosymmetric",
        "--param",
        "b=0",
    ]);
    assert_eq!(doc.verdicts[0].datum("L"), Some("q/r^3"));
}

fn failure(args: &[&str]) -> String {
    let out = pseudosym(args);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    String::from_utf8(out.stderr).unwrap()
}

#[test]
fn errors_exit_nonzero_with_a_diagnostic() {
    let err = failure(&["--metric", "missing.file"]);
    assert!(err.contains("--metric") && err.contains("missing.file"), "{err}");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "name = \"bad\"\ncoordinates = [\"x\", \"y\", \"z\"]\n[metric]\n\"x,w\" = \"1\"\n").unwrap();
    let err = failure(&["--metric", path.to_str().unwrap()]);
    assert!(err.contains("[metric]"), "{err}");

    let err = failure(&["--metric", "minkowski", "--param", "a"]);
    assert!(err.contains("--param"), "{err}");
    let err = failure(&["--metric", "robinson-trautman-jet", "--param", "zz=1"]);
    assert!(err.contains("--metric"), "{err}");
    let err = failure(&["--metric", "minkowski", "--format", "yaml"]);
    assert!(err.contains("--format"), "{err}");
    let err = failure(&["--metric", "minkowski", "--jet-depth", "0"]);
    assert!(err.contains("--jet-depth"), "{err}");
}
