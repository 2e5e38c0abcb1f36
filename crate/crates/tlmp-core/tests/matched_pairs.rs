//! Matched pairs: the compatibility identities agree with the fundamental
//! identity of the bicrossed product, on valid and perturbed instances.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tlmp_core::exactlinalg::int;
use tlmp_core::fixtures::{a4, a4_split_pair, rho_only_pair, three_dim, with_abelian};
use tlmp_core::matched::{bicrossed_product, verify_matched_pair, verify_mp_morphism, MatchedPair};
use tlmp_core::random::{int_in, perturb_pair, random_invertible, random_matched_pair, sparse_rational};
use tlmp_core::structure::{verify_3lie_rep, verify_jacobi, Alt3, LinMap, ThreeLie, TriAction};

fn random_alt3(rng: &mut ChaCha8Rng, n: usize) -> Alt3 {
    let coords: Vec<_> = (0..Alt3::coord_len(n, n)).map(|_| sparse_rational(rng)).collect();
    Alt3::from_coords(n, n, &coords).unwrap()
}

fn random_action(rng: &mut ChaCha8Rng, n: usize, m: usize) -> TriAction {
    let coords: Vec<_> = (0..TriAction::coord_len(n, m, m)).map(|_| sparse_rational(rng)).collect();
    TriAction::from_coords(n, m, m, &coords).unwrap()
}

/// A matched pair with dims ≤ 3: valid, perturbed, or fully random.
fn mixed_instance(rng: &mut ChaCha8Rng, i: usize) -> MatchedPair {
    match i % 4 {
        0 => {
            let p = small_valid(rng);
            perturb_pair(rng, &p).unwrap_or(p)
        }
        1 => {
            let n = int_in(rng, 1, 3) as usize;
            let m = int_in(rng, 1, 3) as usize;
            let g = ThreeLie::new(ThreeLie::default_names("e", n), random_alt3(rng, n)).unwrap();
            let h = ThreeLie::new(ThreeLie::default_names("f", m), random_alt3(rng, m)).unwrap();
            let (rho, psi) = (random_action(rng, n, m), random_action(rng, m, n));
            MatchedPair::new(g, h, rho, psi).unwrap()
        }
        _ => small_valid(rng),
    }
}

fn small_valid(rng: &mut ChaCha8Rng) -> MatchedPair {
    loop {
        let p = random_matched_pair(rng);
        if p.g_dim() <= 3 && p.h_dim() <= 3 {
            return p;
        }
    }
}

fn bicross_criterion(p: &MatchedPair) -> bool {
    let b = bicrossed_product(p).unwrap();
    verify_jacobi(&b).passed()
        && verify_3lie_rep(&p.g, &p.rho).unwrap().passed()
        && verify_3lie_rep(&p.h, &p.psi).unwrap().passed()
}

#[test]
fn a4_satisfies_the_fundamental_identity() {
    assert!(verify_jacobi(&a4()).passed());
}

#[test]
fn perturbed_a4_fails_with_a_witness() {
    let alg = a4();
    let mut br = alg.bracket().clone();
    br.set(0, 1, 2, &[int(1), int(0), int(0), int(1)]).unwrap();
    let bad = ThreeLie::new(alg.basis().to_vec(), br).unwrap();
    let rep = verify_jacobi(&bad);
    assert!(!rep.passed());
    let f = rep.first_failure().unwrap();
    let w = f.witness.as_ref().unwrap();
    assert_ne!(w.lhs, w.rhs);
    assert_eq!(w.args.len(), 5);
}

#[test]
fn fixtures_are_matched_pairs() {
    for p in [a4_split_pair(), rho_only_pair(), with_abelian(a4(), 1), with_abelian(three_dim([1, 2, 3]), 2)] {
        assert!(verify_matched_pair(&p).unwrap().passed());
        assert!(verify_matched_pair(&p.mirror()).unwrap().passed());
    }
}

#[test]
fn a4_split_pair_bicrossed_product_is_a4() {
    let b = bicrossed_product(&a4_split_pair()).unwrap();
    assert_eq!(b.bracket(), a4().bracket());
}

#[test]
fn compatibility_identities_agree_with_bicrossed_fundamental_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let (mut valid, mut invalid) = (0, 0);
    for i in 0..120 {
        let p = mixed_instance(&mut rng, i);
        let direct = verify_matched_pair(&p).unwrap().passed();
        assert_eq!(direct, bicross_criterion(&p), "instance {i}");
        if direct {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    assert!(valid >= 20 && invalid >= 20, "valid {valid}, invalid {invalid}");
}

#[test]
fn each_failing_compatibility_identity_is_reported_with_a_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..60 {
        let p = small_valid(&mut rng);
        if let Some(q) = perturb_pair(&mut rng, &p) {
            let rep = verify_matched_pair(&q).unwrap();
            for c in rep.checks.iter().filter(|c| !c.passed) {
                assert!(c.witness.is_some());
                seen.insert(c.label.clone());
            }
        }
    }
    assert!(seen.iter().any(|l| l.starts_with("MP")), "{seen:?}");
}

#[test]
fn transported_pairs_are_isomorphic_via_the_basis_change() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let p = a4_split_pair();
    for _ in 0..5 {
        let (pg, qh) = (random_invertible(&mut rng, 2), random_invertible(&mut rng, 2));
        let q = tlmp_core::fixtures::transport_pair(&p, &pg, &qh).unwrap();
        assert!(verify_matched_pair(&q).unwrap().passed());
        let rep = verify_mp_morphism(&LinMap::new(pg.clone()), &LinMap::new(qh.clone()), &p, &q).unwrap();
        assert!(rep.passed());
        if rng.next_u32() % 2 == 0 {
            let bad = verify_mp_morphism(&LinMap::new(pg.scale(&int(2))), &LinMap::new(qh), &p, &q).unwrap();
            assert!(!bad.passed());
        }
    }
}
