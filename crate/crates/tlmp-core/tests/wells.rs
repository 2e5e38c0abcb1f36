//! Automorphisms of extensions: compatible pairs, the Wells obstruction,
//! lifting, restriction and the kernel of restriction.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tlmp_core::cohomology::{cohomologous, is_cocycle2, z1_basis, Cochain1, Cochain2, CochainShape};
use tlmp_core::exactlinalg::{frac, int, scale_vec, sub_vec, RationalMatrix};
use tlmp_core::extension::{build_extension, extract_cocycle, AbelianExtension, Section};
use tlmp_core::fixtures::{corpus, unit_nu, zero_fixture};
use tlmp_core::matched::MatchedPair;
use tlmp_core::random::{random_cochain1, random_cocycle, random_matrix};
use tlmp_core::representation::MPRepresentation;
use tlmp_core::structure::{LinMap, ThreeLie, TriAction};
use tlmp_core::wells::{
    aut_to_z1, compatible_report, decide_extensible, exact_sequence_report, in_compatible_set, lift, restrict,
    standard_probes, transform_cocycle, verify_lift, wells_class, witness_from_trivializer, z1_to_aut, AutPair,
    Decision, TotalAut,
};
use tlmp_core::Error;

fn scaled(n: usize, num: i64, den: i64) -> LinMap {
    LinMap::new(RationalMatrix::scalar(n, frac(num, den)))
}

fn doubling_probe(s: CochainShape) -> AutPair {
    AutPair { alpha1: scaled(s.g, 2, 1), ..AutPair::identity(s) }
}

fn unit_nu_extension() -> AbelianExtension {
    let (p, r) = zero_fixture();
    build_extension(&p, &r, &unit_nu()).unwrap()
}

fn compose(a: &AutPair, b: &AutPair) -> AutPair {
    AutPair {
        alpha1: a.alpha1.compose(&b.alpha1).unwrap(),
        alpha2: a.alpha2.compose(&b.alpha2).unwrap(),
        beta1: a.beta1.compose(&b.beta1).unwrap(),
        beta2: a.beta2.compose(&b.beta2).unwrap(),
    }
}

fn compose_total(a: &TotalAut, b: &TotalAut) -> TotalAut {
    TotalAut { gamma1: a.gamma1.compose(&b.gamma1).unwrap(), gamma2: a.gamma2.compose(&b.gamma2).unwrap() }
}

#[test]
fn transform_examples() {
    let s = CochainShape { g: 2, h: 2, v: 1, w: 1 };
    let c = unit_nu();
    assert_eq!(transform_cocycle(s, &c, &AutPair::identity(s)).unwrap(), c);
    let t = transform_cocycle(s, &c, &doubling_probe(s)).unwrap();
    assert_eq!(t.coords(), scale_vec(&frac(1, 4), &c.coords()));
}

#[test]
fn transform_is_a_group_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let (p, r) = zero_fixture();
    let s = CochainShape::of(&p, &r);
    let c = random_cocycle(&mut rng, &p, &r).unwrap();
    let probes = standard_probes(s);
    for (_, a) in probes.iter().take(12) {
        for (_, b) in probes.iter().skip(3).take(6) {
            let twice = transform_cocycle(s, &transform_cocycle(s, &c, a).unwrap(), b).unwrap();
            let once = transform_cocycle(s, &c, &compose(b, a)).unwrap();
            assert_eq!(twice, once);
        }
    }
}

#[test]
fn compatible_transforms_preserve_cocycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(62);
    for (name, p, r) in corpus() {
        let s = CochainShape::of(&p, &r);
        let c = random_cocycle(&mut rng, &p, &r).unwrap();
        for (label, aut) in standard_probes(s) {
            if tlmp_core::wells::check_aut_pair(&p, s, &aut).is_err() {
                continue;
            }
            if compatible_report(&p, &r, &aut).unwrap().passed() {
                let t = transform_cocycle(s, &c, &aut).unwrap();
                assert!(is_cocycle2(&p, &r, &t).unwrap().passed(), "{name} / {label}");
            }
        }
    }
}

#[test]
fn compatibility_fails_by_a_factor_of_one_quarter_on_a_scaled_module() {
    // g = h = ℚ² abelian with zero actions; W = ℚ with ρ_W(e1,e2) = 1.
    let p = MatchedPair::trivial(ThreeLie::abelian(2), ThreeLie::abelian(2));
    let mut r = MPRepresentation::zero(&p, 1, 1);
    let mut rw = TriAction::zero(2, 1, 1);
    rw.set(0, 1, 0, &[int(1)]).unwrap();
    r.rho_w = rw;
    assert!(tlmp_core::representation::verify_mp_representation(&p, &r).unwrap().passed());
    let s = CochainShape::of(&p, &r);
    let rep = compatible_report(&p, &r, &doubling_probe(s)).unwrap();
    let f = rep.first_failure().unwrap();
    assert_eq!(f.label, "rhoW");
    let w = f.witness.as_ref().unwrap();
    assert_eq!(w.lhs, scale_vec(&frac(1, 4), &w.rhs));
    assert!(compatible_report(&p, &r, &AutPair::identity(s)).unwrap().passed());
}

#[test]
fn zero_fixture_accepts_every_invertible_pair() {
    let (p, r) = zero_fixture();
    let s = CochainShape::of(&p, &r);
    for (_, aut) in standard_probes(s) {
        assert!(compatible_report(&p, &r, &aut).unwrap().passed());
    }
}

#[test]
fn wells_obstruction_fixture() {
    let e = unit_nu_extension();
    let s = e.shape();
    let probe = doubling_probe(s);
    assert!(in_compatible_set(&e, &probe).unwrap().passed());
    let w = wells_class(&e, &probe, None).unwrap();
    assert_eq!(w.cochain.coords(), scale_vec(&frac(-3, 4), &unit_nu().coords()));
    assert!(!w.is_zero());
    match decide_extensible(&e, &probe, None).unwrap() {
        Decision::Obstructed { obstruction, rank_gap } => {
            assert_eq!(obstruction, w.cochain);
            assert!(rank_gap > 0);
        }
        d => panic!("expected an obstruction, got {d:?}"),
    }
    // Identity: extensible with (0, 0), and the lift is the identity.
    let id = AutPair::identity(s);
    let wid = wells_class(&e, &id, None).unwrap();
    assert!(wid.is_zero() && wid.cochain.is_zero());
    match decide_extensible(&e, &id, None).unwrap() {
        Decision::Extensible { zeta, eta } => {
            assert!(zeta.is_zero() && eta.is_zero());
            let g = lift(&e, &id, &zeta, &eta, None).unwrap();
            assert!(verify_lift(&e, &id, &g).unwrap().passed());
            assert_eq!(g.gamma1, LinMap::identity(3));
            assert_eq!(g.gamma2, LinMap::identity(3));
            assert_eq!(restrict(&e, &g).unwrap(), id);
        }
        d => panic!("expected extensible, got {d:?}"),
    }
}

#[test]
fn trivial_extension_lifts_every_compatible_pair_with_zero_witness() {
    let (p, r) = zero_fixture();
    let s = CochainShape::of(&p, &r);
    let e = build_extension(&p, &r, &Cochain2::zero(s)).unwrap();
    for (label, aut) in standard_probes(s) {
        assert!(wells_class(&e, &aut, None).unwrap().is_zero(), "{label}");
        match decide_extensible(&e, &aut, None).unwrap() {
            Decision::Extensible { zeta, eta } => {
                assert!(zeta.is_zero() && eta.is_zero(), "{label}");
                let g = lift(&e, &aut, &zeta, &eta, None).unwrap();
                assert_eq!(restrict(&e, &g).unwrap(), aut);
            }
            d => panic!("{label}: {d:?}"),
        }
    }
}

#[test]
fn incompatible_pairs_are_rejected() {
    let p = MatchedPair::trivial(ThreeLie::abelian(2), ThreeLie::abelian(2));
    let mut r = MPRepresentation::zero(&p, 1, 1);
    r.rho_w.set(0, 1, 0, &[int(1)]).unwrap();
    let s = CochainShape::of(&p, &r);
    let e = build_extension(&p, &r, &Cochain2::zero(s)).unwrap();
    let probe = doubling_probe(s);
    assert!(matches!(decide_extensible(&e, &probe, None), Err(Error::NotCompatible { .. })));
    assert!(matches!(wells_class(&e, &probe, None), Err(Error::NotCompatible { .. })));
}

#[test]
fn extensibility_agrees_with_vanishing_wells_class_on_all_fixtures() {
    let mut rng = ChaCha8Rng::seed_from_u64(63);
    for (name, p, r) in corpus() {
        for k in 0..2 {
            let c = if k == 0 { Cochain2::zero(CochainShape::of(&p, &r)) } else { random_cocycle(&mut rng, &p, &r).unwrap() };
            let e = build_extension(&p, &r, &c).unwrap();
            let report = exact_sequence_report(&e, &[]).unwrap();
            assert!(report.passed(), "{name}: {report:?}");
            assert!(report.probes.iter().any(|pr| pr.extensible == Some(true)));
        }
    }
}

#[test]
fn exact_sequence_on_the_zero_fixture() {
    let (p, r) = zero_fixture();
    let s = CochainShape::of(&p, &r);
    let trivial = build_extension(&p, &r, &Cochain2::zero(s)).unwrap();
    let rep = exact_sequence_report(&trivial, &[]).unwrap();
    assert_eq!((rep.z1_dim, rep.kernel_dim_roundtrip, rep.kernel_dim_direct), (4, 4, 4));
    assert!(rep.probes.iter().all(|pr| pr.extensible == Some(true)));
    let rep = exact_sequence_report(&unit_nu_extension(), &[]).unwrap();
    assert!(rep.passed());
    let get = |l: &str| rep.probes.iter().find(|pr| pr.label == l).unwrap().clone();
    assert_eq!(get("identity").extensible, Some(true));
    assert_eq!(get("alpha1 scaled by 2").extensible, Some(false));
    assert_eq!(get("alpha1 scaled by 2").wells_zero, Some(false));
}

#[test]
fn zero_dimensional_fiber_has_injective_restriction() {
    let p = tlmp_core::fixtures::a4_split_pair();
    let r = MPRepresentation::zero(&p, 0, 0);
    let s = CochainShape::of(&p, &r);
    let e = build_extension(&p, &r, &Cochain2::zero(s)).unwrap();
    let rep = exact_sequence_report(&e, &[]).unwrap();
    assert_eq!((rep.z1_dim, rep.kernel_dim_roundtrip, rep.kernel_dim_direct), (0, 0, 0));
    assert!(rep.passed());
}

#[test]
fn wells_class_is_independent_of_the_section() {
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    for (name, p, r) in corpus().into_iter().take(4) {
        let c = random_cocycle(&mut rng, &p, &r).unwrap();
        let e = build_extension(&p, &r, &c).unwrap();
        let s = e.shape();
        let base = e.default_section().unwrap();
        let sec = |rng: &mut ChaCha8Rng| Section {
            s1: LinMap::new(base.s1.matrix().add(&e.i1().matrix().mul(&random_matrix(rng, s.v, s.g)).unwrap()).unwrap()),
            s2: LinMap::new(base.s2.matrix().add(&e.i2().matrix().mul(&random_matrix(rng, s.w, s.h)).unwrap()).unwrap()),
        };
        let (sa, sb) = (sec(&mut rng), sec(&mut rng));
        for (label, aut) in standard_probes(s) {
            if tlmp_core::wells::check_aut_pair(&p, s, &aut).is_err() || !compatible_report(&p, &r, &aut).unwrap().passed() {
                continue;
            }
            let wa = wells_class(&e, &aut, Some(&sa)).unwrap();
            let wb = wells_class(&e, &aut, Some(&sb)).unwrap();
            assert_eq!(wa.is_zero(), wb.is_zero(), "{name} / {label}");
            assert!(cohomologous(&p, &r, &wa.cochain, &wb.cochain).unwrap().is_some(), "{name} / {label}");
            // The lifting system gives the same verdict for every section.
            let da = decide_extensible(&e, &aut, Some(&sa)).unwrap();
            assert_eq!(da.is_extensible(), wa.is_zero(), "{name} / {label}");
            if let Decision::Extensible { zeta, eta } = da {
                let g = lift(&e, &aut, &zeta, &eta, Some(&sa)).unwrap();
                assert_eq!(restrict(&e, &g).unwrap(), aut);
            }
        }
    }
}

#[test]
fn trivializer_gives_a_lifting_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(65);
    for (name, p, r) in corpus() {
        let c = random_cocycle(&mut rng, &p, &r).unwrap();
        let e = build_extension(&p, &r, &c).unwrap();
        let s = e.shape();
        for (label, aut) in standard_probes(s).into_iter().take(20) {
            if tlmp_core::wells::check_aut_pair(&p, s, &aut).is_err() || !compatible_report(&p, &r, &aut).unwrap().passed() {
                continue;
            }
            let w = wells_class(&e, &aut, None).unwrap();
            if let Some(n) = &w.trivializer {
                let (zeta, eta) = witness_from_trivializer(n, &aut).unwrap();
                let g = lift(&e, &aut, &zeta, &eta, None).unwrap();
                assert!(verify_lift(&e, &aut, &g).unwrap().passed(), "{name} / {label}");
            }
        }
    }
}

#[test]
fn restriction_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(66);
    for (name, p, r) in corpus().into_iter().take(4) {
        let c = random_cocycle(&mut rng, &p, &r).unwrap();
        let e = build_extension(&p, &r, &c).unwrap();
        let s = e.shape();
        let mut lifts = Vec::new();
        for (_, aut) in standard_probes(s) {
            if tlmp_core::wells::check_aut_pair(&p, s, &aut).is_err() || !compatible_report(&p, &r, &aut).unwrap().passed() {
                continue;
            }
            if let Decision::Extensible { zeta, eta } = decide_extensible(&e, &aut, None).unwrap() {
                lifts.push((aut.clone(), lift(&e, &aut, &zeta, &eta, None).unwrap()));
            }
            if lifts.len() >= 6 {
                break;
            }
        }
        for (a, ga) in &lifts {
            for (b, gb) in &lifts {
                let gab = compose_total(ga, gb);
                assert_eq!(restrict(&e, &gab).unwrap(), compose(a, b), "{name}");
            }
        }
    }
}

#[test]
fn cocycles_and_kernel_automorphisms_correspond() {
    let mut rng = ChaCha8Rng::seed_from_u64(67);
    for (name, p, r) in corpus() {
        let c = random_cocycle(&mut rng, &p, &r).unwrap();
        let e = build_extension(&p, &r, &c).unwrap();
        let s = e.shape();
        assert_eq!(z1_to_aut(&e, &Cochain1::zero(s)).unwrap(), TotalAut {
            gamma1: LinMap::identity(e.total().g_dim()),
            gamma2: LinMap::identity(e.total().h_dim()),
        });
        let z1 = z1_basis(&p, &r).unwrap();
        let combos: Vec<Cochain1> = (0..3)
            .map(|_| {
                let mut v = vec![int(0); s.c1_dim()];
                for b in z1.basis() {
                    let k = tlmp_core::random::small_rational(&mut rng);
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += &k * y;
                    }
                }
                Cochain1::from_coords(s, &v).unwrap()
            })
            .collect();
        for z in &combos {
            let g = z1_to_aut(&e, z).unwrap();
            assert!(verify_lift(&e, &AutPair::identity(s), &g).unwrap().passed(), "{name}");
            assert_eq!(restrict(&e, &g).unwrap(), AutPair::identity(s));
            assert_eq!(&aut_to_z1(&e, &g).unwrap(), z, "{name}");
            for z2 in &combos {
                let sum = Cochain1::from_coords(s, &tlmp_core::exactlinalg::add_vec(&z.coords(), &z2.coords())).unwrap();
                let lhs = z1_to_aut(&e, &sum).unwrap();
                let rhs = compose_total(&g, &z1_to_aut(&e, z2).unwrap());
                assert_eq!(lhs, rhs, "{name}");
            }
        }
        // A non-cocycle is rejected; a non-kernel automorphism is rejected.
        let bad = random_cochain1(&mut rng, s);
        let d = tlmp_core::cohomology::d1(&p, &r, &bad).unwrap();
        if !d.is_zero() {
            assert!(matches!(z1_to_aut(&e, &bad), Err(Error::NotCocycle1)));
        }
    }
    let e = unit_nu_extension();
    let s = e.shape();
    let aut = AutPair { beta1: scaled(1, 2, 1), ..AutPair::identity(s) };
    if let Decision::Extensible { zeta, eta } = decide_extensible(&e, &aut, None).unwrap() {
        let g = lift(&e, &aut, &zeta, &eta, None).unwrap();
        assert!(matches!(aut_to_z1(&e, &g), Err(Error::NotInKernel)));
    } else {
        panic!("scaling V is extensible on the unit extension");
    }
}

#[test]
fn zero_fixture_cocycles_give_unipotent_block_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(68);
    let (p, r) = zero_fixture();
    let s = CochainShape::of(&p, &r);
    let e = build_extension(&p, &r, &Cochain2::zero(s)).unwrap();
    for _ in 0..5 {
        let z = random_cochain1(&mut rng, s);
        let g = z1_to_aut(&e, &z).unwrap();
        let m = g.gamma1.matrix();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j {
                    int(1)
                } else if i == 2 {
                    z.n1.get(0, j).clone()
                } else {
                    int(0)
                };
                assert_eq!(m.get(i, j), &want);
            }
        }
    }
}

#[test]
fn fiber_violations_are_reported() {
    let e = unit_nu_extension();
    // Swap a base and a fiber coordinate: not fiber preserving.
    let mut m = RationalMatrix::identity(3);
    m.set(0, 0, int(0));
    m.set(2, 2, int(0));
    m.set(0, 2, int(1));
    m.set(2, 0, int(1));
    let g = TotalAut { gamma1: LinMap::new(m), gamma2: LinMap::identity(3) };
    assert!(restrict(&e, &g).is_err());
    let c = extract_cocycle(&e, None).unwrap();
    assert_eq!(sub_vec(&c.coords(), &unit_nu().coords()), vec![int(0); 4]);
}
