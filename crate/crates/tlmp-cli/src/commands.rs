//! The command implementations.
//!
//! Every command produces a JSON document and an exit code. The document
//! always has `command` and `status` fields; `status` is `pass`, `fail`
//! (exit 1), `obstructed` (exit 1) or `error` (exit 2).

use std::path::{Path, PathBuf};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tlmp_core::cohomology::{
    cohomologous, d1, d1_matrix, d2_matrix, is_coboundary2, is_cocycle2, second_cohomology, verify_deformation, Cochain1,
    Cochain2, CochainShape,
};
use tlmp_core::exactlinalg::sub_vec;
use tlmp_core::extension::{build_extension, extension_report, extract_cocycle, induced_representation, AbelianExtension, Section};
use tlmp_core::fixtures::corpus;
use tlmp_core::matched::{bicrossed_product, verify_matched_pair, verify_mp_morphism, MatchedPair};
use tlmp_core::random::{random_cocycle, random_matched_pair, random_representation};
use tlmp_core::report::{Check, Report};
use tlmp_core::representation::{semidirect_product, verify_mp_representation, MPRepresentation};
use tlmp_core::structure::{verify_jacobi, ThreeLie};
use tlmp_core::wells::{
    compatible_report, decide_extensible, exact_sequence_report, lift, restrict, verify_lift, wells_class, AutPair, Decision,
};
use tlmp_core::Rational;

use crate::bundle::{Bundle, Kind};
use crate::cli::{BuildWhat, CocycleAction, ReportWhat, VerifyWhat, WellsAction};
use crate::error::{CliError, CliResult, EXIT_FAIL, EXIT_PASS};
use crate::fixtures::fixture_bundles;
use crate::json::{
    algebra_from_json, algebra_to_json, aut_pair_from_json, aut_pair_to_json, certificate_to_json, check_to_json,
    cochain1_to_json, cochain2_from_json, cochain2_to_json, extension_from_json, extension_to_json,
    pair_from_json, pair_to_json, rep_from_json, report_to_json, section_from_json, shape_to_json,
    total_aut_from_json, total_aut_to_json, ExtensionParts,
};

/// Options shared by all commands.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub basis: bool,
    pub seed: u64,
}

/// A finished command: its report document and exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub doc: Value,
    pub code: i32,
}

impl Outcome {
    fn pass(doc: Value) -> Self {
        Outcome { doc: with_status(doc, "pass"), code: EXIT_PASS }
    }

    fn fail(doc: Value) -> Self {
        Outcome { doc: with_status(doc, "fail"), code: EXIT_FAIL }
    }

    /// The document for an error raised while running `command`.
    pub fn from_error(command: &str, e: &CliError) -> Self {
        let status = match e {
            CliError::Input(_) => "error",
            CliError::Math(_) => "fail",
        };
        Outcome { doc: json!({ "command": command, "status": status, "error": e.to_string() }), code: e.exit_code() }
    }
}

fn with_status(mut doc: Value, status: &str) -> Value {
    doc["status"] = Value::String(status.to_string());
    doc
}

/// Pass/fail outcome from a report, with the first failure lifted into a
/// `failure` field.
fn verdict(mut doc: Value, report: &Report) -> Outcome {
    doc["report"] = report_to_json(report);
    match report.first_failure() {
        None => Outcome::pass(doc),
        Some(f) => {
            doc["failure"] = failure_json(f);
            Outcome::fail(doc)
        }
    }
}

fn failure_json(f: &Check) -> Value {
    let mut v = check_to_json(f);
    v["message"] = Value::String(match &f.witness {
        Some(w) => format!("{} fails {}", f.label, crate::json::describe_witness(w)),
        None => format!("{} fails", f.label),
    });
    v
}

/// Runs `report`; a failure becomes an early [`Outcome`] naming the check.
fn require(doc: &Value, what: &str, report: Report) -> Result<(), Outcome> {
    match report.first_failure() {
        None => Ok(()),
        Some(f) => {
            let mut d = doc.clone();
            d["failure"] = failure_json(f);
            d["error"] = Value::String(format!("{what} is invalid: {} fails", f.label));
            Err(Outcome::fail(d))
        }
    }
}

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

fn load_algebra(path: &Path) -> CliResult<ThreeLie> {
    let b = Bundle::load_kind(path, &[Kind::Algebra])?;
    algebra_from_json(&b.payload, &ctx(path))
}

fn load_pair(path: &Path) -> CliResult<MatchedPair> {
    let b = Bundle::load_kind(path, &[Kind::MatchedPair])?;
    pair_from_json(&b.payload, &ctx(path))
}

fn load_rep(path: &Path, p: &MatchedPair) -> CliResult<MPRepresentation> {
    let b = Bundle::load_kind(path, &[Kind::Representation])?;
    rep_from_json(&b.payload, p, &ctx(path))
}

fn load_cochain2(path: &Path, s: CochainShape, kinds: &[Kind]) -> CliResult<Cochain2> {
    let b = Bundle::load_kind(path, kinds)?;
    cochain2_from_json(&b.payload, s, &ctx(path))
}

fn load_extension_parts(path: &Path) -> CliResult<ExtensionParts> {
    let b = Bundle::load_kind(path, &[Kind::Extension])?;
    extension_from_json(&b.payload, &ctx(path))
}

fn load_extension(path: &Path) -> CliResult<AbelianExtension> {
    let x = load_extension_parts(path)?;
    AbelianExtension::new(x.base, x.total, x.i1, x.i2, x.j1, x.j2).map_err(|e| match e {
        tlmp_core::Error::Axiom { label } => CliError::math(format!("{}: not an abelian extension: {label} fails", path.display())),
        other => other.into(),
    })
}

fn load_aut(path: &Path, s: CochainShape, optional_fiber: bool) -> CliResult<AutPair> {
    let b = Bundle::load_kind(path, &[Kind::AutPair])?;
    aut_pair_from_json(&b.payload, s, optional_fiber, &ctx(path))
}

fn load_section(path: &Path, e: &AbelianExtension) -> CliResult<Section> {
    let b = Bundle::load_kind(path, &[Kind::Section])?;
    let (s1, s2) = section_from_json(
        &b.payload,
        (e.base().g_dim(), e.base().h_dim()),
        (e.total().g_dim(), e.total().h_dim()),
        &ctx(path),
    )?;
    let s = Section { s1, s2 };
    e.check_section(&s)?;
    Ok(s)
}

fn ctx(path: &Path) -> String {
    path.display().to_string()
}

fn required<'a>(p: &'a Option<PathBuf>, flag: &str, what: &str) -> CliResult<&'a Path> {
    p.as_deref().ok_or_else(|| CliError::input(format!("{what} needs --{flag}")))
}

/// Verified pair and representation; a failing verification is returned
/// as an early outcome.
fn verified_inputs(doc: &Value, pair: &Path, rep: &Path) -> CliResult<Result<(MatchedPair, MPRepresentation), Outcome>> {
    let p = load_pair(pair)?;
    let r = load_rep(rep, &p)?;
    if let Err(o) = require(doc, "matched pair", verify_matched_pair(&p)?) {
        return Ok(Err(o));
    }
    if let Err(o) = require(doc, "representation", verify_mp_representation(&p, &r)?) {
        return Ok(Err(o));
    }
    Ok(Ok((p, r)))
}

macro_rules! early {
    ($e:expr) => {
        match $e? {
            Ok(v) => v,
            Err(outcome) => return Ok(outcome),
        }
    };
}

fn write_or_embed(mut doc: Value, bundle: Bundle, out: Option<&Path>) -> CliResult<Value> {
    match out {
        Some(path) => {
            bundle.write(path)?;
            doc["written"] = Value::String(path.display().to_string());
        }
        None => doc["bundle"] = bundle.to_json(),
    }
    Ok(doc)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

pub struct VerifyArgs<'a> {
    pub what: VerifyWhat,
    pub target: &'a Path,
    pub pair: &'a Option<PathBuf>,
    pub rep: &'a Option<PathBuf>,
    pub ext: &'a Option<PathBuf>,
    pub aut: &'a Option<PathBuf>,
}

pub fn verify(a: VerifyArgs<'_>) -> CliResult<Outcome> {
    let subject = match a.what {
        VerifyWhat::Jacobi => "jacobi",
        VerifyWhat::MatchedPair => "matched-pair",
        VerifyWhat::Representation => "representation",
        VerifyWhat::Morphism => "morphism",
        VerifyWhat::Deformation => "deformation",
        VerifyWhat::Extension => "extension",
        VerifyWhat::ExtensionAutomorphism => "extension-automorphism",
    };
    let doc = json!({ "command": "verify", "subject": subject });
    let report = match a.what {
        VerifyWhat::Jacobi => verify_jacobi(&load_algebra(a.target)?),
        VerifyWhat::MatchedPair => verify_matched_pair(&load_pair(a.target)?)?,
        VerifyWhat::Representation => {
            let p = load_pair(required(a.pair, "pair", "verify representation")?)?;
            let r = load_rep(a.target, &p)?;
            let mut rep = Report::new("representation");
            rep.absorb("pair", verify_matched_pair(&p)?);
            rep.absorb("representation", verify_mp_representation(&p, &r)?);
            rep
        }
        VerifyWhat::Morphism => verify_morphism(a.target, required(a.pair, "pair", "verify morphism")?, a.rep.as_deref())?,
        VerifyWhat::Deformation => {
            let p = load_pair(required(a.pair, "pair", "verify deformation")?)?;
            let d = load_cochain2(a.target, CochainShape::adjoint(&p), &[Kind::Deformation, Kind::Cochain2])?;
            let mut rep = Report::new("infinitesimal deformation");
            rep.absorb("pair", verify_matched_pair(&p)?);
            rep.absorb("deformation", verify_deformation(&p, &d)?);
            rep
        }
        VerifyWhat::Extension => {
            let x = load_extension_parts(a.target)?;
            let mut rep = Report::new("abelian extension");
            rep.absorb("base", verify_matched_pair(&x.base)?);
            rep.absorb("extension", extension_report(&x.base, &x.total, &x.i1, &x.i2, &x.j1, &x.j2)?);
            rep
        }
        VerifyWhat::ExtensionAutomorphism => {
            let e = load_extension(required(a.ext, "ext", "verify extension-automorphism")?)?;
            let b = Bundle::load_kind(a.target, &[Kind::TotalAut])?;
            let gamma = total_aut_from_json(&b.payload, (e.total().g_dim(), e.total().h_dim()), &ctx(a.target))?;
            let aut = match a.aut {
                Some(path) => load_aut(path, e.shape(), false)?,
                None => match restrict(&e, &gamma) {
                    Ok(aut) => aut,
                    Err(err) => {
                        let mut d = doc;
                        d["error"] = Value::String(err.to_string());
                        return Ok(Outcome::fail(d));
                    }
                },
            };
            let mut d = doc;
            d["restriction"] = aut_pair_to_json(&aut);
            return Ok(verdict(d, &verify_lift(&e, &aut, &gamma)?));
        }
    };
    Ok(verdict(doc, &report))
}

fn verify_morphism(target: &Path, pair: &Path, rep: Option<&Path>) -> CliResult<Report> {
    let p = load_pair(pair)?;
    let (r, s) = match rep {
        Some(path) => {
            let r = load_rep(path, &p)?;
            let s = CochainShape::of(&p, &r);
            (Some(r), s)
        }
        None => (None, CochainShape { g: p.g_dim(), h: p.h_dim(), v: 0, w: 0 }),
    };
    let b = Bundle::load_kind(target, &[Kind::AutPair])?;
    let aut = if r.is_some() {
        aut_pair_from_json(&b.payload, s, false, &ctx(target))?
    } else {
        let o = crate::json::object(&b.payload, &ctx(target))?;
        if o.contains_key("beta1") || o.contains_key("beta2") {
            return Err(CliError::input("fiber components beta1/beta2 need --rep"));
        }
        aut_pair_from_json(&b.payload, s, true, &ctx(target))?
    };
    let mut report = Report::new("morphism");
    report.absorb("pair", verify_matched_pair(&p)?);
    report.absorb("alpha", verify_mp_morphism(&aut.alpha1, &aut.alpha2, &p, &p)?);
    let bit = |b: bool| vec![Rational::from_integer(i64::from(b).into())];
    for (label, m) in [("alpha1", &aut.alpha1), ("alpha2", &aut.alpha2), ("beta1", &aut.beta1), ("beta2", &aut.beta2)] {
        report.push(Check::from_equality(format!("{label} invertible"), bit(m.is_invertible()), bit(true)));
    }
    if let Some(r) = r {
        if report.passed() {
            report.absorb("compatible", compatible_report(&p, &r, &aut)?);
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

pub fn build(what: BuildWhat, pair: &Path, rep: Option<&Path>, cocycle: Option<&Path>, out: Option<&Path>) -> CliResult<Outcome> {
    let subject = match what {
        BuildWhat::Bicross => "bicross",
        BuildWhat::Semidirect => "semidirect",
        BuildWhat::Extension => "extension",
    };
    let doc = json!({ "command": "build", "subject": subject });
    let p = load_pair(pair)?;
    if let Err(o) = require(&doc, "matched pair", verify_matched_pair(&p)?) {
        return Ok(o);
    }
    let bundle = match what {
        BuildWhat::Bicross => {
            let alg = bicrossed_product(&p)?;
            Bundle::new(Kind::Algebra, algebra_to_json(&alg), Some("bicrossed product".to_string()))
        }
        BuildWhat::Semidirect | BuildWhat::Extension => {
            let r = load_rep(required(&rep.map(Path::to_path_buf), "rep", "this construction")?, &p)?;
            if let Err(o) = require(&doc, "representation", verify_mp_representation(&p, &r)?) {
                return Ok(o);
            }
            if what == BuildWhat::Semidirect {
                let sp = semidirect_product(&p, &r)?;
                Bundle::new(Kind::MatchedPair, pair_to_json(&sp), Some("semidirect product".to_string()))
            } else {
                let cpath = required(&cocycle.map(Path::to_path_buf), "cocycle", "build extension")?.to_path_buf();
                let c = load_cochain2(&cpath, CochainShape::of(&p, &r), &[Kind::Cochain2])?;
                if let Err(o) = require(&doc, "2-cochain", is_cocycle2(&p, &r, &c)?) {
                    return Ok(o);
                }
                let e = build_extension(&p, &r, &c)?;
                Bundle::new(
                    Kind::Extension,
                    extension_to_json(e.base(), e.total(), [e.i1(), e.i2(), e.j1(), e.j2()]),
                    Some("abelian extension".to_string()),
                )
            }
        }
    };
    Ok(Outcome::pass(write_or_embed(doc, bundle, out)?))
}

// ---------------------------------------------------------------------------
// cohomology and cocycles
// ---------------------------------------------------------------------------

pub fn cohomology(pair: &Path, rep: &Path, degree: u8, opts: Options) -> CliResult<Outcome> {
    let mut doc = json!({ "command": "cohomology", "degree": degree });
    let (p, r) = early!(verified_inputs(&doc, pair, rep));
    let s = CochainShape::of(&p, &r);
    let sc = second_cohomology(&p, &r)?;
    doc["shape"] = shape_to_json(s);
    if degree == 1 {
        doc["dims"] = json!({ "C": sc.c1_dim, "Z": sc.z1.dim(), "B": 0, "H": sc.h1_dim() });
        if opts.basis {
            doc["basis"] = json!({
                "H": sc.z1.basis().iter().map(|v| Cochain1::from_coords(s, v).map(|c| cochain1_to_json(&c))).collect::<Result<Vec<_>, _>>()?,
            });
        }
    } else {
        doc["dims"] = json!({ "C": sc.c2_dim, "Z": sc.z2.dim(), "B": sc.b2.dim(), "H": sc.h2_dim() });
        if opts.basis {
            let dump = |vs: &[Vec<Rational>]| -> CliResult<Vec<Value>> {
                vs.iter().map(|v| Ok(cochain2_to_json(&Cochain2::from_coords(s, v)?))).collect()
            };
            doc["basis"] = json!({
                "Z": dump(sc.z2.basis())?,
                "B": dump(sc.b2.basis())?,
                "H": dump(&sc.representatives)?,
            });
        }
    }
    Ok(Outcome::pass(doc))
}

pub fn cocycle(action: CocycleAction, pair: &Path, rep: &Path, cochain: &Path, other: Option<&Path>) -> CliResult<Outcome> {
    let subject = match action {
        CocycleAction::Check => "check",
        CocycleAction::Coboundary => "coboundary",
        CocycleAction::Cohomologous => "cohomologous",
    };
    let mut doc = json!({ "command": "cocycle", "subject": subject });
    let (p, r) = early!(verified_inputs(&doc, pair, rep));
    let s = CochainShape::of(&p, &r);
    let c = load_cochain2(cochain, s, &[Kind::Cochain2])?;
    let report = is_cocycle2(&p, &r, &c)?;
    if action == CocycleAction::Check {
        return Ok(verdict(doc, &report));
    }
    if let Err(o) = require(&doc, "2-cochain", report) {
        return Ok(o);
    }
    let witness = match action {
        CocycleAction::Coboundary => is_coboundary2(&p, &r, &c)?,
        _ => {
            let opath = required(&other.map(Path::to_path_buf), "other", "cocycle cohomologous")?.to_path_buf();
            let c2 = load_cochain2(&opath, s, &[Kind::Cochain2])?;
            if let Err(o) = require(&doc, "second 2-cochain", is_cocycle2(&p, &r, &c2)?) {
                return Ok(o);
            }
            cohomologous(&p, &r, &c, &c2)?
        }
    };
    match witness {
        Some(t) => {
            // Re-apply the differential to confirm the witness.
            let image = d1(&p, &r, &t)?.coords();
            let target = match action {
                CocycleAction::Coboundary => c.coords(),
                _ => {
                    let c2 = load_cochain2(other.expect("checked above"), s, &[Kind::Cochain2])?;
                    sub_vec(&c.coords(), &c2.coords())
                }
            };
            if image != target {
                return Err(CliError::math("internal witness check failed"));
            }
            doc["witness"] = cochain1_to_json(&t);
            Ok(Outcome::pass(doc))
        }
        None => {
            doc["error"] = Value::String(match action {
                CocycleAction::Coboundary => "not a coboundary".to_string(),
                _ => "not cohomologous".to_string(),
            });
            Ok(Outcome::fail(doc))
        }
    }
}

// ---------------------------------------------------------------------------
// wells
// ---------------------------------------------------------------------------

pub fn wells(action: WellsAction, ext: &Path, aut: Option<&Path>, section: Option<&Path>, out: Option<&Path>) -> CliResult<Outcome> {
    let subject = match action {
        WellsAction::Class => "class",
        WellsAction::Induce => "induce",
        WellsAction::Lift => "lift",
        WellsAction::Exact => "exact",
    };
    let mut doc = json!({ "command": "wells", "subject": subject });
    let e = load_extension(ext)?;
    let sec = section.map(|p| load_section(p, &e)).transpose()?;
    let s = e.shape();
    if action == WellsAction::Exact {
        let extra = match aut {
            Some(path) => vec![("supplied".to_string(), load_aut(path, s, false)?)],
            None => Vec::new(),
        };
        let x = exact_sequence_report(&e, &extra)?;
        doc["z1_dim"] = json!(x.z1_dim);
        doc["kernel_dim_roundtrip"] = json!(x.kernel_dim_roundtrip);
        doc["kernel_dim_direct"] = json!(x.kernel_dim_direct);
        doc["skipped_probes"] = json!(x.skipped_probes);
        doc["probes"] = Value::Array(
            x.probes
                .iter()
                .map(|p| {
                    json!({
                        "label": p.label,
                        "compatible": p.compatible,
                        "wells_zero": p.wells_zero,
                        "extensible": p.extensible,
                        "consistent": p.consistent,
                    })
                })
                .collect(),
        );
        return Ok(if x.passed() { Outcome::pass(doc) } else { Outcome::fail(doc) });
    }
    let aut = load_aut(required(&aut.map(Path::to_path_buf), "aut", "this action")?, s, false)?;
    let r = induced_representation(&e, sec.as_ref())?;
    let compat = match compatible_report(e.base(), &r, &aut) {
        Ok(rep) => rep,
        Err(err @ (tlmp_core::Error::Axiom { .. } | tlmp_core::Error::Singular(_))) => {
            doc["error"] = Value::String(format!("not compatible: {err}"));
            return Ok(Outcome::fail(doc));
        }
        Err(err) => return Err(err.into()),
    };
    if let Some(f) = compat.first_failure() {
        doc["failure"] = failure_json(f);
        doc["error"] = Value::String(format!("not compatible: {} fails", f.label));
        return Ok(Outcome::fail(doc));
    }
    match action {
        WellsAction::Class => {
            let w = wells_class(&e, &aut, sec.as_ref())?;
            doc["representative"] = cochain2_to_json(&w.cochain);
            doc["zero"] = json!(w.is_zero());
            doc["trivializer"] = w.trivializer.as_ref().map(cochain1_to_json).unwrap_or(Value::Null);
            Ok(Outcome::pass(doc))
        }
        WellsAction::Induce | WellsAction::Lift => {
            let decision = decide_extensible(&e, &aut, sec.as_ref())?;
            doc["certificate"] = certificate_to_json(&decision);
            let (zeta, eta) = match &decision {
                Decision::Extensible { zeta, eta } => (zeta, eta),
                Decision::Obstructed { .. } => {
                    doc["error"] = Value::String("not inducible: the Wells class is nonzero".to_string());
                    return Ok(Outcome { doc: with_status(doc, "obstructed"), code: EXIT_FAIL });
                }
            };
            if action == WellsAction::Induce {
                return Ok(Outcome::pass(doc));
            }
            let gamma = lift(&e, &aut, zeta, eta, sec.as_ref())?;
            let back = restrict(&e, &gamma)?;
            if back != aut {
                return Err(CliError::math("lift does not restrict back to the automorphism pair"));
            }
            doc["verification"] = report_to_json(&verify_lift(&e, &aut, &gamma)?);
            let bundle = Bundle::new(Kind::TotalAut, total_aut_to_json(&gamma), Some("lifted automorphism".to_string()));
            Ok(Outcome::pass(write_or_embed(doc, bundle, out)?))
        }
        WellsAction::Exact => unreachable!("handled above"),
    }
}

// ---------------------------------------------------------------------------
// report and fixtures
// ---------------------------------------------------------------------------

/// Complex checks on one verified instance: `d2 d1 = 0`, the cohomology
/// dimensions, and the extension round trip for a random cocycle.
fn instance_summary(p: &MatchedPair, r: &MPRepresentation, rng: &mut ChaCha8Rng) -> CliResult<(Value, bool)> {
    let s = CochainShape::of(p, r);
    let pair_ok = verify_matched_pair(p)?.passed();
    let rep_ok = verify_mp_representation(p, r)?.passed();
    let dd = d2_matrix(p, r)?.mul(&d1_matrix(p, r)?)?;
    let dd_zero = dd.is_zero();
    let sc = second_cohomology(p, r)?;
    let c = random_cocycle(rng, p, r)?;
    let e = build_extension(p, r, &c)?;
    let round_trip = extract_cocycle(&e, None)? == c;
    let ok = pair_ok && rep_ok && dd_zero && round_trip;
    let v = json!({
        "shape": shape_to_json(s),
        "pair_valid": pair_ok,
        "rep_valid": rep_ok,
        "d2_d1_zero": dd_zero,
        "dims": { "C1": sc.c1_dim, "Z1": sc.z1.dim(), "C2": sc.c2_dim, "Z2": sc.z2.dim(), "B2": sc.b2.dim(), "H2": sc.h2_dim() },
        "extension_round_trip": round_trip,
    });
    Ok((v, ok))
}

pub fn report(what: ReportWhat, count: usize, opts: Options) -> CliResult<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut doc = json!({ "command": "report", "seed": opts.seed });
    let mut all_ok = true;
    let mut items = Vec::new();
    match what {
        ReportWhat::Fixtures => {
            doc["subject"] = json!("fixtures");
            for (name, p, r) in corpus() {
                let (mut v, ok) = instance_summary(&p, &r, &mut rng)?;
                v["name"] = json!(name);
                all_ok &= ok;
                items.push(v);
            }
        }
        ReportWhat::Random => {
            doc["subject"] = json!("random");
            doc["count"] = json!(count);
            for i in 0..count {
                let p = random_matched_pair(&mut rng);
                let r = random_representation(&mut rng, &p);
                let (mut v, ok) = instance_summary(&p, &r, &mut rng)?;
                v["index"] = json!(i);
                all_ok &= ok;
                items.push(v);
            }
        }
    }
    doc["instances"] = Value::Array(items);
    Ok(if all_ok { Outcome::pass(doc) } else { Outcome::fail(doc) })
}

pub fn fixtures(out_dir: &Path) -> CliResult<Outcome> {
    std::fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    for (name, b) in fixture_bundles() {
        b.write(&out_dir.join(name))?;
        written.push(json!(name));
    }
    Ok(Outcome::pass(json!({ "command": "fixtures", "written": written })))
}
