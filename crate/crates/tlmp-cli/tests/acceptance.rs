//! Acceptance suite: ten end-to-end criteria, one `PASS`/`FAIL` line each.
//!
//! Runs without the libtest harness so the lines always reach the console;
//! the process exits nonzero if any criterion fails. Every comparison is
//! exact (rational arithmetic, byte equality).

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tlmp_core::cohomology::{
    compare_deformation_with_d2, d1, d1_matrix, d2_matrix, second_cohomology, z2_basis, Cochain1, Cochain2, CochainShape,
    DEFORMATION_LABELS,
};
use tlmp_core::exactlinalg::{add_vec, int, solve, sub_vec, SolveOutcome};
use tlmp_core::extension::{build_extension, extract_cocycle, induced_representation, standard_section, Section};
use tlmp_core::fixtures::{corpus, unit_nu, zero_fixture};
use tlmp_core::matched::{bicrossed_product, verify_matched_pair, MatchedPair};
use tlmp_core::random::{
    int_in, perturb_pair, random_cochain2, random_cocycle, random_matched_pair, random_matrix, random_representation,
    small_rational, sparse_rational,
};
use tlmp_core::representation::{semidirect_product, verify_mp_representation, MPRepresentation};
use tlmp_core::structure::{verify_3lie_rep, verify_jacobi, Alt3, LinMap, ThreeLie, TriAction};
use tlmp_core::wells::{
    aut_to_z1, decide_extensible, exact_sequence_report, lift, restrict, verify_lift, wells_class, z1_to_aut, AutPair,
    Decision, TotalAut,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_valid(rng: &mut ChaCha8Rng, max_g: usize, max_h: usize) -> MatchedPair {
    loop {
        let p = random_matched_pair(rng);
        if p.g_dim() <= max_g && p.h_dim() <= max_h {
            return p;
        }
    }
}

fn dd_zero(p: &MatchedPair, r: &MPRepresentation) -> bool {
    d2_matrix(p, r).unwrap().mul(&d1_matrix(p, r).unwrap()).unwrap().is_zero()
}

/// d2 · d1 = 0 on the corpus and on at least 50 random verified instances
/// with all dimensions ≤ 2.
fn criterion_1() -> Outcome {
    for (name, p, r) in corpus() {
        ensure(dd_zero(&p, &r), || format!("d2 d1 != 0 on fixture {name}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let mut count = 0;
    while count < 60 {
        let p = small_valid(&mut rng, 2, 2);
        let r = random_representation(&mut rng, &p);
        if r.v_dim() > 2 || r.w_dim() > 2 {
            continue;
        }
        ensure(verify_matched_pair(&p).unwrap().passed(), || "generator produced an invalid pair".into())?;
        ensure(verify_mp_representation(&p, &r).unwrap().passed(), || "generator produced an invalid rep".into())?;
        ensure(dd_zero(&p, &r), || format!("d2 d1 != 0 on random instance {count}"))?;
        count += 1;
    }
    Ok(format!("{} fixtures + {count} random instances", corpus().len()))
}

fn random_alt3(rng: &mut ChaCha8Rng, n: usize) -> Alt3 {
    let coords: Vec<_> = (0..Alt3::coord_len(n, n)).map(|_| sparse_rational(rng)).collect();
    Alt3::from_coords(n, n, &coords).unwrap()
}

fn random_action(rng: &mut ChaCha8Rng, n: usize, m: usize) -> TriAction {
    let coords: Vec<_> = (0..TriAction::coord_len(n, m, m)).map(|_| sparse_rational(rng)).collect();
    TriAction::from_coords(n, m, m, &coords).unwrap()
}

/// The compatibility identities hold ⟺ the bicrossed product satisfies the
/// fundamental identity and both actions are representations; 120 mixed
/// instances with dims ≤ 3.
fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    let (mut valid, mut invalid) = (0, 0);
    for i in 0..120 {
        let p = match i % 4 {
            0 => {
                let p = small_valid(&mut rng, 3, 3);
                perturb_pair(&mut rng, &p).unwrap_or(p)
            }
            1 => {
                let n = int_in(&mut rng, 1, 3) as usize;
                let m = int_in(&mut rng, 1, 3) as usize;
                let g = ThreeLie::new(ThreeLie::default_names("e", n), random_alt3(&mut rng, n)).unwrap();
                let h = ThreeLie::new(ThreeLie::default_names("f", m), random_alt3(&mut rng, m)).unwrap();
                let (rho, psi) = (random_action(&mut rng, n, m), random_action(&mut rng, m, n));
                MatchedPair::new(g, h, rho, psi).unwrap()
            }
            _ => small_valid(&mut rng, 3, 3),
        };
        let direct = verify_matched_pair(&p).unwrap().passed();
        let via_bicross = verify_jacobi(&bicrossed_product(&p).unwrap()).passed()
            && verify_3lie_rep(&p.g, &p.rho).unwrap().passed()
            && verify_3lie_rep(&p.h, &p.psi).unwrap().passed();
        ensure(direct == via_bicross, || format!("discrepancy on instance {i}: direct {direct}, bicross {via_bicross}"))?;
        if direct {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    ensure(valid >= 20 && invalid >= 20, || format!("unbalanced sample: {valid} valid, {invalid} invalid"))?;
    Ok(format!("120 instances ({valid} valid, {invalid} invalid), 0 discrepancies"))
}

/// A verified pair with a verified representation yields a semidirect
/// product that is a matched pair; at least 50 instances.
fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    let mut count = 0;
    let mut drawn = 0;
    while count < 50 {
        drawn += 1;
        ensure(drawn < 200, || "too few verified instances".into())?;
        let p = small_valid(&mut rng, 3, 2);
        let r = random_representation(&mut rng, &p);
        if verify_matched_pair(&p).unwrap().passed() && verify_mp_representation(&p, &r).unwrap().passed() {
            let sp = semidirect_product(&p, &r).unwrap();
            let rep = verify_matched_pair(&sp).unwrap();
            ensure(rep.passed(), || format!("instance {count}: {:?}", rep.first_failure().map(|c| &c.label)))?;
            count += 1;
        }
    }
    Ok(format!("{count} instances"))
}

/// The coboundary with adjoint coefficients reproduces the deformation
/// residuals entrywise on all basis tuples of every fixture pair.
fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    let mut pairs: Vec<MatchedPair> = corpus().into_iter().map(|(_, p, _)| p).collect();
    pairs.dedup();
    let mut comparisons = 0;
    for p in &pairs {
        for _ in 0..3 {
            let d = random_cochain2(&mut rng, CochainShape::adjoint(p));
            for (i, label) in DEFORMATION_LABELS.iter().enumerate() {
                let diff = compare_deformation_with_d2(p, &d, i).unwrap();
                ensure(diff.is_none(), || format!("{label} differs: {diff:?}"))?;
                comparisons += 1;
            }
        }
    }
    Ok(format!("{} pairs, {comparisons} component comparisons", pairs.len()))
}

/// Building an extension from a cocycle and reading it back with the
/// standard section is the identity; another section changes the cocycle by
/// a verified coboundary. 20 cocycles per fixture.
fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    let mut total = 0;
    for (name, p, r) in corpus() {
        let s = CochainShape::of(&p, &r);
        let z = z2_basis(&p, &r).unwrap();
        let d1m = d1_matrix(&p, &r).unwrap();
        for k in 0..20 {
            let mut coords = vec![int(0); s.c2_dim()];
            for b in z.basis() {
                let c = small_rational(&mut rng);
                for (x, y) in coords.iter_mut().zip(b) {
                    *x += &c * y;
                }
            }
            let c = Cochain2::from_coords(s, &coords).unwrap();
            let e = build_extension(&p, &r, &c).unwrap();
            let back = extract_cocycle(&e, Some(&standard_section(&p, &r))).unwrap();
            ensure(back == c, || format!("{name} #{k}: round trip changed the cocycle"))?;
            let base = e.default_section().unwrap();
            let s1 = base.s1.matrix().add(&e.i1().matrix().mul(&random_matrix(&mut rng, s.v, s.g)).unwrap()).unwrap();
            let s2 = base.s2.matrix().add(&e.i2().matrix().mul(&random_matrix(&mut rng, s.w, s.h)).unwrap()).unwrap();
            let sec = Section { s1: LinMap::new(s1), s2: LinMap::new(s2) };
            ensure(induced_representation(&e, Some(&sec)).unwrap() == r, || format!("{name} #{k}: representation moved"))?;
            let c2 = extract_cocycle(&e, Some(&sec)).unwrap();
            let diff = sub_vec(&c.coords(), &c2.coords());
            let t = match solve(&d1m, &diff).unwrap() {
                SolveOutcome::Solved(t) => Cochain1::from_coords(s, &t).unwrap(),
                SolveOutcome::Infeasible { .. } => return Err(format!("{name} #{k}: section change is not a coboundary")),
            };
            ensure(d1(&p, &r, &t).unwrap().coords() == diff, || format!("{name} #{k}: witness fails d1"))?;
            total += 1;
        }
    }
    Ok(format!("{total} cocycles over {} fixtures", corpus().len()))
}

/// Cohomology numbers of the zero fixture.
fn criterion_6() -> Outcome {
    let (p, r) = zero_fixture();
    let sc = second_cohomology(&p, &r).unwrap();
    let got = (sc.c1_dim, sc.z1.dim(), sc.c2_dim, sc.z2.dim(), sc.b2.dim(), sc.h2_dim());
    ensure(got == (4, 4, 4, 4, 0, 4), || format!("got {got:?}"))?;
    Ok("C1=4 Z1=4 C2=4 Z2=4 B2=0 H2=4".into())
}

/// The Wells obstruction fixture and the identity lift.
fn criterion_7() -> Outcome {
    let (p, r) = zero_fixture();
    let s = CochainShape::of(&p, &r);
    let e = build_extension(&p, &r, &unit_nu()).unwrap();
    let probe = AutPair { alpha1: LinMap::new(tlmp_core::RationalMatrix::scalar(2, int(2))), ..AutPair::identity(s) };
    let w = wells_class(&e, &probe, None).unwrap();
    let mut expected = Cochain2::zero(s);
    expected.nu.set(0, 1, 0, &[tlmp_core::exactlinalg::frac(-3, 4)]).unwrap();
    ensure(w.cochain == expected, || format!("representative {:?}", w.cochain))?;
    ensure(!w.is_zero(), || "class should be nonzero".into())?;
    match decide_extensible(&e, &probe, None).unwrap() {
        Decision::Obstructed { obstruction, rank_gap } => {
            ensure(obstruction == expected, || "obstruction differs from the representative".into())?;
            ensure(rank_gap >= 1, || "rank gap must be positive".into())?;
        }
        Decision::Extensible { .. } => return Err("scaling probe reported inducible".into()),
    }
    let id = AutPair::identity(s);
    let (zeta, eta) = match decide_extensible(&e, &id, None).unwrap() {
        Decision::Extensible { zeta, eta } => (zeta, eta),
        Decision::Obstructed { .. } => return Err("identity reported obstructed".into()),
    };
    ensure(zeta.is_zero() && eta.is_zero(), || "identity witness should be (0, 0)".into())?;
    let gamma = lift(&e, &id, &zeta, &eta, None).unwrap();
    ensure(verify_lift(&e, &id, &gamma).unwrap().passed(), || "lift fails total verification".into())?;
    ensure(restrict(&e, &gamma).unwrap() == id, || "lift does not restrict back".into())?;
    Ok("representative -3/4 nu, obstructed; identity lifts with (0,0) and restricts back".into())
}

/// Extensions used by criteria 8 and 9: each fixture with the zero cocycle
/// and a random one.
fn fixture_extensions(seed: u64) -> Vec<(String, tlmp_core::extension::AbelianExtension)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (name, p, r) in corpus() {
        let zero = Cochain2::zero(CochainShape::of(&p, &r));
        out.push((format!("{name}/zero"), build_extension(&p, &r, &zero).unwrap()));
        let c = random_cocycle(&mut rng, &p, &r).unwrap();
        out.push((format!("{name}/random"), build_extension(&p, &r, &c).unwrap()));
    }
    out.push(("zero/unit-nu".into(), {
        let (p, r) = zero_fixture();
        build_extension(&p, &r, &unit_nu()).unwrap()
    }));
    out
}

/// Inducible ⟺ compatible and Wells class zero, over fixtures × probes.
fn criterion_8() -> Outcome {
    let mut probes = 0;
    let mut inducible = 0;
    let mut obstructed = 0;
    for (name, e) in fixture_extensions(1008) {
        let rep = exact_sequence_report(&e, &[]).unwrap();
        for pr in &rep.probes {
            ensure(pr.consistent, || format!("{name}: probe `{}` inconsistent: {pr:?}", pr.label))?;
            let expected = pr.compatible && pr.wells_zero == Some(true);
            ensure(pr.extensible.unwrap_or(false) == expected, || format!("{name}: probe `{}` disagrees", pr.label))?;
            probes += 1;
            match pr.extensible {
                Some(true) => inducible += 1,
                Some(false) => obstructed += 1,
                None => {}
            }
        }
    }
    ensure(inducible > 0 && obstructed > 0, || "both verdicts must occur".into())?;
    Ok(format!("{probes} probe runs ({inducible} inducible, {obstructed} obstructed), 0 discrepancies"))
}

fn compose_total(a: &TotalAut, b: &TotalAut) -> TotalAut {
    TotalAut { gamma1: a.gamma1.compose(&b.gamma1).unwrap(), gamma2: a.gamma2.compose(&b.gamma2).unwrap() }
}

/// dim ker(restriction) = dim Z¹; the correspondence is bijective and
/// turns sums into compositions.
fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    let mut checked = 0;
    for (name, e) in fixture_extensions(1090) {
        let rep = exact_sequence_report(&e, &[]).unwrap();
        ensure(rep.z1_dim == rep.kernel_dim_roundtrip && rep.z1_dim == rep.kernel_dim_direct, || {
            format!("{name}: Z1 {} vs kernel {} / {}", rep.z1_dim, rep.kernel_dim_roundtrip, rep.kernel_dim_direct)
        })?;
        let s = e.shape();
        let r = induced_representation(&e, None).unwrap();
        let z1 = tlmp_core::cohomology::z1_basis(e.base(), &r).unwrap();
        let combo = |rng: &mut ChaCha8Rng| {
            let mut v = vec![int(0); s.c1_dim()];
            for b in z1.basis() {
                let k = small_rational(rng);
                for (x, y) in v.iter_mut().zip(b) {
                    *x += &k * y;
                }
            }
            Cochain1::from_coords(s, &v).unwrap()
        };
        let (z, w) = (combo(&mut rng), combo(&mut rng));
        let (gz, gw) = (z1_to_aut(&e, &z).unwrap(), z1_to_aut(&e, &w).unwrap());
        ensure(aut_to_z1(&e, &gz).unwrap() == z, || format!("{name}: aut_to_z1 ∘ z1_to_aut is not the identity"))?;
        let sum = Cochain1::from_coords(s, &add_vec(&z.coords(), &w.coords())).unwrap();
        ensure(z1_to_aut(&e, &sum).unwrap() == compose_total(&gz, &gw), || format!("{name}: sum is not composition"))?;
        ensure(restrict(&e, &gz).unwrap() == AutPair::identity(s), || format!("{name}: image not in the kernel"))?;
        checked += 1;
    }
    Ok(format!("{checked} extensions"))
}

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Every fixture command run twice gives byte-identical JSON reports.
fn criterion_10() -> Outcome {
    let f = |name: &str| fixtures_dir().join(name).display().to_string();
    let mut runs: Vec<Vec<String>> = vec![
        vec!["verify".into(), "jacobi".into(), f("a4.json")],
        vec!["verify".into(), "jacobi".into(), f("a4-perturbed.json")],
        vec!["report".into(), "fixtures".into()],
        vec!["report".into(), "random".into(), "--count".into(), "5".into(), "--seed".into(), "11".into()],
    ];
    for pair in ["zero-pair.json", "line-pair.json", "a4-split-pair.json", "a4-split-perturbed-pair.json", "rho-only-pair.json"] {
        runs.push(vec!["verify".into(), "matched-pair".into(), f(pair)]);
        runs.push(vec!["build".into(), "bicross".into(), "--pair".into(), f(pair)]);
    }
    for (pair, rep) in [
        ("zero-pair.json", "zero-rep.json"),
        ("line-pair.json", "line-rep.json"),
        ("a4-split-pair.json", "a4-split-adjoint-rep.json"),
        ("rho-only-pair.json", "rho-only-adjoint-rep.json"),
    ] {
        runs.push(vec!["verify".into(), "representation".into(), f(rep), "--pair".into(), f(pair)]);
        runs.push(vec!["build".into(), "semidirect".into(), "--pair".into(), f(pair), "--rep".into(), f(rep)]);
        for degree in ["1", "2"] {
            runs.push(vec![
                "cohomology".into(),
                "--basis".into(),
                "--pair".into(),
                f(pair),
                "--rep".into(),
                f(rep),
                "--degree".into(),
                degree.into(),
            ]);
        }
    }
    let z = |rest: &[&str]| -> Vec<String> { rest.iter().map(|s| s.to_string()).collect() };
    runs.push(z(&["cocycle", "check", "--pair", &f("zero-pair.json"), "--rep", &f("zero-rep.json"), "--cochain", &f("zero-unit-nu.json")]));
    runs.push(z(&[
        "build",
        "extension",
        "--pair",
        &f("rho-only-pair.json"),
        "--rep",
        &f("rho-only-adjoint-rep.json"),
        "--cocycle",
        &f("rho-only-non-cocycle.json"),
    ]));
    runs.push(z(&["verify", "deformation", &f("a4-split-deformation.json"), "--pair", &f("a4-split-pair.json")]));
    runs.push(z(&["verify", "extension", &f("zero-unit-nu-extension.json")]));
    for aut in ["zero-aut-identity.json", "zero-aut-alpha1-double.json"] {
        for action in ["class", "induce", "lift"] {
            runs.push(z(&["wells", action, "--ext", &f("zero-unit-nu-extension.json"), "--aut", &f(aut)]));
        }
    }
    runs.push(z(&["wells", "exact", "--ext", &f("zero-unit-nu-extension.json")]));
    let bin = env!("CARGO_BIN_EXE_tlmp");
    for args in &runs {
        let go = || Command::new(bin).args(args).arg("--format").arg("json").output().expect("binary runs");
        let (a, b) = (go(), go());
        ensure(a.stdout == b.stdout && a.status.code() == b.status.code(), || format!("nondeterministic: tlmp {}", args.join(" ")))?;
        ensure(serde_json::from_slice::<serde_json::Value>(&a.stdout).is_ok(), || format!("not JSON: tlmp {}", args.join(" ")))?;
        ensure(matches!(a.status.code(), Some(0 | 1)), || format!("unexpected exit {:?}: tlmp {}", a.status.code(), args.join(" ")))?;
    }
    Ok(format!("{} commands, each run twice", runs.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("d2 d1 = 0 on fixtures and random instances", criterion_1),
        ("compatibility identities ⟺ bicrossed fundamental identity + actions", criterion_2),
        ("semidirect product of a representation is a matched pair", criterion_3),
        ("adjoint coboundary reproduces the deformation residuals", criterion_4),
        ("extension round trip and change of section", criterion_5),
        ("zero-fixture cohomology numbers", criterion_6),
        ("Wells obstruction fixture and identity lift", criterion_7),
        ("inducible ⟺ compatible and Wells class zero", criterion_8),
        ("kernel of restriction ≅ Z1", criterion_9),
        ("CLI determinism", criterion_10),
    ];
    let mut failures = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {}: {title} — {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {}: {title} — {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
