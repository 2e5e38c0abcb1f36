//! The `tlmp` binary: exit codes, reports and written bundles.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name).display().to_string()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", self.stdout))
    }
}

fn tlmp(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_tlmp")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn tlmp_json(args: &[&str]) -> Run {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    tlmp(&all)
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p: PathBuf = dir.join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p.display().to_string()
}

#[test]
fn jacobi_on_a4_passes_and_on_perturbed_a4_fails_with_a_witness() {
    let ok = tlmp_json(&["verify", "jacobi", &fixture("a4.json")]);
    assert_eq!(ok.code, 0, "{}", ok.stdout);
    assert_eq!(ok.json()["status"], "pass");
    let bad = tlmp_json(&["verify", "jacobi", &fixture("a4-perturbed.json")]);
    assert_eq!(bad.code, 1);
    let doc = bad.json();
    assert_eq!(doc["status"], "fail");
    assert_eq!(doc["failure"]["label"], "fundamental identity");
    assert_eq!(doc["failure"]["witness"]["args"].as_array().unwrap().len(), 5);
    assert_ne!(doc["failure"]["witness"]["lhs"], doc["failure"]["witness"]["rhs"]);
    let text = tlmp(&["verify", "jacobi", &fixture("a4-perturbed.json")]);
    assert_eq!(text.code, 1);
    assert!(text.stdout.starts_with("status: FAIL"));
    assert!(text.stdout.contains("FAIL fundamental identity"));
}

#[test]
fn malformed_input_exits_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let trunc = dir.path().join("trunc.json");
    std::fs::write(&trunc, "{\"kind\": \"algebra\", \"payload\": {\"dim\": ").unwrap();
    let r = tlmp_json(&["verify", "jacobi", trunc.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert_eq!(r.json()["status"], "error");
    assert!(r.stderr.contains("malformed JSON"));
    assert_eq!(tlmp_json(&["verify", "jacobi", "/nonexistent/a4.json"]).code, 2);
    // Right file, wrong kind.
    assert_eq!(tlmp_json(&["verify", "jacobi", &fixture("zero-pair.json")]).code, 2);
    // Shape mismatch between representation and pair.
    let r = tlmp_json(&["verify", "representation", &fixture("a4-split-adjoint-rep.json"), "--pair", &fixture("line-pair.json")]);
    assert_eq!(r.code, 2);
    // Missing context flag.
    assert_eq!(tlmp_json(&["verify", "representation", &fixture("zero-rep.json")]).code, 2);
    // Usage errors.
    assert_eq!(tlmp(&["verify", "nonsense", &fixture("a4.json")]).code, 2);
    assert_eq!(tlmp(&["cohomology", "--pair", "x", "--rep", "y", "--degree", "3"]).code, 2);
}

#[test]
fn matched_pair_failures_name_the_compatibility_identity() {
    let ok = tlmp_json(&["verify", "matched-pair", &fixture("a4-split-pair.json")]);
    assert_eq!(ok.code, 0);
    let bad = tlmp_json(&["verify", "matched-pair", &fixture("a4-split-perturbed-pair.json")]);
    assert_eq!(bad.code, 1);
    assert!(bad.json()["failure"]["label"].as_str().unwrap().starts_with("MP"));
}

#[test]
fn representation_deformation_and_extension_fixtures_verify() {
    for args in [
        vec!["verify", "representation", "REP:a4-split-adjoint-rep.json", "--pair", "PAIR:a4-split-pair.json"],
        vec!["verify", "representation", "REP:zero-rep.json", "--pair", "PAIR:zero-pair.json"],
        vec!["verify", "deformation", "D:a4-split-deformation.json", "--pair", "PAIR:a4-split-pair.json"],
        vec!["verify", "extension", "E:zero-unit-nu-extension.json"],
        vec!["verify", "morphism", "A:zero-aut-alpha1-double.json", "--pair", "P:zero-pair.json", "--rep", "R:zero-rep.json"],
    ] {
        let resolved: Vec<String> =
            args.iter().map(|a| a.split_once(':').map(|(_, f)| fixture(f)).unwrap_or_else(|| a.to_string())).collect();
        let refs: Vec<&str> = resolved.iter().map(String::as_str).collect();
        let r = tlmp_json(&refs);
        assert_eq!(r.code, 0, "{args:?}: {}", r.stdout);
    }
    // α1 = 2·id is not an automorphism of the A4 split pair.
    let dir = tempfile::tempdir().unwrap();
    let aut = write(dir.path(), "aut.json", &json!({
        "kind": "aut_pair",
        "payload": { "alpha1": [["2", "0"], ["0", "2"]], "alpha2": [["1", "0"], ["0", "1"]] },
    }));
    let r = tlmp_json(&["verify", "morphism", &aut, "--pair", &fixture("a4-split-pair.json")]);
    assert_eq!(r.code, 1);
    assert!(r.json()["failure"]["label"].as_str().unwrap().starts_with("alpha: "));
}

#[test]
fn bicross_of_the_zero_fixture_is_the_abelian_direct_sum() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bicross.json");
    let r = tlmp_json(&["build", "bicross", "--pair", &fixture("zero-pair.json"), "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let b: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(b["kind"], "algebra");
    assert_eq!(b["payload"]["dim"], 4);
    assert_eq!(b["payload"]["brackets"], json!([]));
    // Without --out the bundle is embedded, byte-for-byte the same.
    let embedded = tlmp_json(&["build", "bicross", "--pair", &fixture("zero-pair.json")]).json();
    assert_eq!(embedded["bundle"], b);
    // The built algebra verifies.
    assert_eq!(tlmp_json(&["verify", "jacobi", out.to_str().unwrap()]).code, 0);
}

#[test]
fn semidirect_build_produces_a_matched_pair() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sd.json");
    let r = tlmp_json(&[
        "build",
        "semidirect",
        "--pair",
        &fixture("rho-only-pair.json"),
        "--rep",
        &fixture("rho-only-adjoint-rep.json"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(tlmp_json(&["verify", "matched-pair", out.to_str().unwrap()]).code, 0);
}

#[test]
fn extension_build_matches_the_fixture_and_rejects_non_cocycles() {
    let r = tlmp_json(&[
        "build",
        "extension",
        "--pair",
        &fixture("zero-pair.json"),
        "--rep",
        &fixture("zero-rep.json"),
        "--cocycle",
        &fixture("zero-unit-nu.json"),
    ]);
    assert_eq!(r.code, 0);
    let shipped: Value = serde_json::from_str(&std::fs::read_to_string(fixture("zero-unit-nu-extension.json")).unwrap()).unwrap();
    assert_eq!(r.json()["bundle"]["payload"], shipped["payload"]);
    let bad = tlmp_json(&[
        "build",
        "extension",
        "--pair",
        &fixture("rho-only-pair.json"),
        "--rep",
        &fixture("rho-only-adjoint-rep.json"),
        "--cocycle",
        &fixture("rho-only-non-cocycle.json"),
    ]);
    assert_eq!(bad.code, 1);
    let doc = bad.json();
    assert!(doc["failure"]["label"].as_str().unwrap().starts_with("2co-"), "{doc}");
    assert!(doc["failure"]["witness"].is_object());
    assert!(bad.stderr.contains("2co-"));
    // Building over an invalid pair fails before anything is written.
    let bad = tlmp_json(&["build", "bicross", "--pair", &fixture("a4-split-perturbed-pair.json")]);
    assert_eq!(bad.code, 1);
    assert!(bad.json()["bundle"].is_null());
}

#[test]
fn cohomology_dimensions_of_the_zero_fixtures() {
    let zp = fixture("zero-pair.json");
    let zr = fixture("zero-rep.json");
    let d2 = tlmp_json(&["cohomology", "--pair", &zp, "--rep", &zr, "--degree", "2"]).json();
    assert_eq!(d2["dims"], json!({ "C": 4, "Z": 4, "B": 0, "H": 4 }));
    let d1 = tlmp_json(&["cohomology", "--pair", &zp, "--rep", &zr, "--degree", "1"]).json();
    assert_eq!(d1["dims"]["Z"], 4);
    let line = tlmp_json(&["cohomology", "--pair", &fixture("line-pair.json"), "--rep", &fixture("line-rep.json"), "--degree", "2"]);
    assert_eq!(line.json()["dims"], json!({ "C": 0, "Z": 0, "B": 0, "H": 0 }));
    let with_basis = tlmp_json(&["cohomology", "--basis", "--pair", &zp, "--rep", &zr, "--degree", "2"]).json();
    assert_eq!(with_basis["basis"]["H"].as_array().unwrap().len(), 4);
    assert_eq!(with_basis["basis"]["B"].as_array().unwrap().len(), 0);
    assert!(d2.get("basis").is_none());
    // An invalid pair is a mathematical failure.
    let bad = tlmp_json(&["cohomology", "--pair", &fixture("a4-split-perturbed-pair.json"), "--rep", &zr, "--degree", "2"]);
    assert_eq!(bad.code, 1);
}

#[test]
fn cocycle_actions() {
    let (zp, zr, nu) = (fixture("zero-pair.json"), fixture("zero-rep.json"), fixture("zero-unit-nu.json"));
    assert_eq!(tlmp_json(&["cocycle", "check", "--pair", &zp, "--rep", &zr, "--cochain", &nu]).code, 0);
    let cob = tlmp_json(&["cocycle", "coboundary", "--pair", &zp, "--rep", &zr, "--cochain", &nu]);
    assert_eq!(cob.code, 1);
    assert_eq!(cob.json()["error"], "not a coboundary");
    let same = tlmp_json(&["cocycle", "cohomologous", "--pair", &zp, "--rep", &zr, "--cochain", &nu, "--other", &nu]);
    assert_eq!(same.code, 0);
    assert_eq!(same.json()["witness"], json!({ "N1": [["0", "0"]], "N2": [["0", "0"]] }));
    let bad = tlmp_json(&[
        "cocycle",
        "check",
        "--pair",
        &fixture("rho-only-pair.json"),
        "--rep",
        &fixture("rho-only-adjoint-rep.json"),
        "--cochain",
        &fixture("rho-only-non-cocycle.json"),
    ]);
    assert_eq!(bad.code, 1);
}

#[test]
fn wells_actions_on_the_unit_nu_extension() {
    let ext = fixture("zero-unit-nu-extension.json");
    let id = fixture("zero-aut-identity.json");
    let double = fixture("zero-aut-alpha1-double.json");
    let class = tlmp_json(&["wells", "class", "--ext", &ext, "--aut", &id]).json();
    assert_eq!(class["zero"], true);
    let induce = tlmp_json(&["wells", "induce", "--ext", &ext, "--aut", &id]);
    assert_eq!(induce.code, 0);
    assert_eq!(induce.json()["certificate"], json!({ "zeta": [["0", "0"]], "eta": [["0", "0"]] }));
    let class = tlmp_json(&["wells", "class", "--ext", &ext, "--aut", &double]);
    assert_eq!(class.code, 0);
    let doc = class.json();
    assert_eq!(doc["zero"], false);
    assert_eq!(doc["representative"]["nu"], json!([{ "pair": [0, 1], "on": 0, "value": ["-3/4"] }]));
    let induce = tlmp_json(&["wells", "induce", "--ext", &ext, "--aut", &double]);
    assert_eq!(induce.code, 1);
    let doc = induce.json();
    assert_eq!(doc["status"], "obstructed");
    assert_eq!(doc["certificate"]["rank_gap"], 1);
    assert_eq!(tlmp_json(&["wells", "lift", "--ext", &ext, "--aut", &double]).code, 1);
    let exact = tlmp_json(&["wells", "exact", "--ext", &ext]);
    assert_eq!(exact.code, 0);
    assert_eq!(exact.json()["z1_dim"], 4);
}

#[test]
fn lifted_automorphisms_pass_the_extension_automorphism_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("gamma.json");
    let ext = fixture("zero-unit-nu-extension.json");
    let id = fixture("zero-aut-identity.json");
    let r = tlmp_json(&["wells", "lift", "--ext", &ext, "--aut", &id, "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = tlmp_json(&["verify", "extension-automorphism", out.to_str().unwrap(), "--ext", &ext, "--aut", &id]);
    assert_eq!(v.code, 0, "{}", v.stdout);
    let v = tlmp_json(&["verify", "extension-automorphism", out.to_str().unwrap(), "--ext", &ext]);
    assert_eq!(v.json()["restriction"]["alpha1"], json!([["1", "0"], ["0", "1"]]));
    // A map that moves the fiber out of itself is rejected.
    let swap = write(dir.path(), "swap.json", &json!({
        "kind": "total_aut",
        "payload": {
            "gamma1": [["0", "0", "1"], ["0", "1", "0"], ["1", "0", "0"]],
            "gamma2": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        },
    }));
    assert_eq!(tlmp_json(&["verify", "extension-automorphism", &swap, "--ext", &ext]).code, 1);
}

#[test]
fn incompatible_pairs_are_reported_as_not_compatible() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write(dir.path(), "zero.json", &json!({ "kind": "cochain2", "payload": {} }));
    let ext = dir.path().join("ext.json");
    let r = tlmp_json(&[
        "build",
        "extension",
        "--pair",
        &fixture("rho-only-pair.json"),
        "--rep",
        &fixture("rho-only-adjoint-rep.json"),
        "--cocycle",
        &zero,
        "--out",
        ext.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    // β2 = diag(2, 1) breaks the invariance of ρ_W = ρ.
    let aut = write(dir.path(), "aut.json", &json!({
        "kind": "aut_pair",
        "payload": {
            "alpha1": [["1", "0"], ["0", "1"]],
            "alpha2": [["1", "0"], ["0", "1"]],
            "beta1": [["1", "0"], ["0", "1"]],
            "beta2": [["2", "0"], ["0", "1"]],
        },
    }));
    for action in ["class", "induce", "lift"] {
        let r = tlmp_json(&["wells", action, "--ext", ext.to_str().unwrap(), "--aut", &aut]);
        assert_eq!(r.code, 1, "{action}");
        assert!(r.json()["error"].as_str().unwrap().starts_with("not compatible"), "{action}");
    }
    // A base map that is not an automorphism is not compatible either.
    let aut = write(dir.path(), "aut2.json", &json!({
        "kind": "aut_pair",
        "payload": {
            "alpha1": [["2", "0"], ["0", "2"]],
            "alpha2": [["1", "0"], ["0", "1"]],
            "beta1": [["1", "0"], ["0", "1"]],
            "beta2": [["1", "0"], ["0", "1"]],
        },
    }));
    let r = tlmp_json(&["wells", "class", "--ext", ext.to_str().unwrap(), "--aut", &aut]);
    assert_eq!(r.code, 1);
    assert!(r.json()["error"].as_str().unwrap().starts_with("not compatible"));
}

#[test]
fn randomized_reports_depend_only_on_the_seed() {
    let a = tlmp_json(&["report", "random", "--count", "4", "--seed", "9"]);
    let b = tlmp_json(&["report", "random", "--count", "4", "--seed", "9"]);
    let c = tlmp_json(&["report", "random", "--count", "4", "--seed", "10"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    let fx = tlmp_json(&["report", "fixtures"]);
    assert_eq!(fx.code, 0);
    let zero = &fx.json()["instances"][0];
    assert_eq!(zero["name"], "zero");
    assert_eq!(zero["dims"], json!({ "C1": 4, "Z1": 4, "C2": 4, "Z2": 4, "B2": 0, "H2": 4 }));
}

#[test]
fn fixtures_command_regenerates_the_shipped_files() {
    let dir = tempfile::tempdir().unwrap();
    let r = tlmp_json(&["fixtures", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(r.code, 0);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let entry = entry.unwrap();
        let name = entry.file_name().into_string().unwrap();
        assert_eq!(std::fs::read(entry.path()).unwrap(), std::fs::read(fixture(&name)).unwrap(), "{name}");
    }
}
