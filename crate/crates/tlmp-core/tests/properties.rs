//! Structural invariants as properties over seeded random instances.

use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tlmp_core::cohomology::{d1, d2, is_cocycle2, Cochain1, Cochain2, CochainShape};
use tlmp_core::extension::{build_extension, extract_cocycle};
use tlmp_core::matched::{bicrossed_product, verify_matched_pair};
use tlmp_core::random::{
    random_cochain1, random_cochain2, random_cocycle, random_invertible, random_matched_pair, random_representation,
    transport_rep,
};
use tlmp_core::representation::verify_mp_representation;
use tlmp_core::structure::{verify_jacobi, Alt3, TriAction};

fn small_instance(seed: u64) -> (ChaCha8Rng, tlmp_core::matched::MatchedPair, tlmp_core::representation::MPRepresentation) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = loop {
        let p = random_matched_pair(&mut rng);
        if p.g_dim() <= 3 && p.h_dim() <= 2 {
            break p;
        }
    };
    let r = random_representation(&mut rng, &p);
    (rng, p, r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generated_pairs_and_representations_are_valid(seed in any::<u64>()) {
        let (_, p, r) = small_instance(seed);
        prop_assert!(verify_matched_pair(&p).unwrap().passed());
        prop_assert!(verify_jacobi(&bicrossed_product(&p).unwrap()).passed());
        prop_assert!(verify_mp_representation(&p, &r).unwrap().passed());
    }

    #[test]
    fn coboundaries_are_cocycles(seed in any::<u64>()) {
        let (mut rng, p, r) = small_instance(seed);
        let z = random_cochain1(&mut rng, CochainShape::of(&p, &r));
        prop_assert!(d2(&p, &r, &d1(&p, &r, &z).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn d1_and_d2_are_linear(seed in any::<u64>()) {
        let (mut rng, p, r) = small_instance(seed);
        let s = CochainShape::of(&p, &r);
        let (a, b) = (random_cochain1(&mut rng, s), random_cochain1(&mut rng, s));
        let sum = Cochain1::from_coords(s, &tlmp_core::exactlinalg::add_vec(&a.coords(), &b.coords())).unwrap();
        let lhs = d1(&p, &r, &sum).unwrap().coords();
        let rhs = tlmp_core::exactlinalg::add_vec(&d1(&p, &r, &a).unwrap().coords(), &d1(&p, &r, &b).unwrap().coords());
        prop_assert_eq!(lhs, rhs);
        let (c, e) = (random_cochain2(&mut rng, s), random_cochain2(&mut rng, s));
        let sum = Cochain2::from_coords(s, &tlmp_core::exactlinalg::add_vec(&c.coords(), &e.coords())).unwrap();
        let lhs = d2(&p, &r, &sum).unwrap().coords();
        let rhs = tlmp_core::exactlinalg::add_vec(&d2(&p, &r, &c).unwrap().coords(), &d2(&p, &r, &e).unwrap().coords());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cochain_coordinates_round_trip(seed in any::<u64>()) {
        let (mut rng, p, r) = small_instance(seed);
        let s = CochainShape::of(&p, &r);
        let c = random_cochain2(&mut rng, s);
        prop_assert_eq!(Cochain2::from_coords(s, &c.coords()).unwrap(), c);
        let z = random_cochain1(&mut rng, s);
        prop_assert_eq!(Cochain1::from_coords(s, &z.coords()).unwrap(), z);
    }

    #[test]
    fn extensions_round_trip(seed in any::<u64>()) {
        let (mut rng, p, r) = small_instance(seed);
        let c = random_cocycle(&mut rng, &p, &r).unwrap();
        prop_assert!(is_cocycle2(&p, &r, &c).unwrap().passed());
        let e = build_extension(&p, &r, &c).unwrap();
        prop_assert_eq!(extract_cocycle(&e, None).unwrap(), c);
    }

    #[test]
    fn transported_representations_stay_valid(seed in any::<u64>()) {
        let (mut rng, p, r) = small_instance(seed);
        let pv = random_invertible(&mut rng, r.v_dim());
        let qw = random_invertible(&mut rng, r.w_dim());
        let t = transport_rep(&p, &r, &pv, &qw).unwrap();
        prop_assert!(verify_mp_representation(&p, &t).unwrap().passed());
    }

    #[test]
    fn alternating_storage_is_antisymmetric(coords in proptest::collection::vec(-3i64..=3, 8)) {
        // n = 4, m = 2: four increasing triples, two outputs each.
        let coords: Vec<_> = coords.into_iter().map(tlmp_core::exactlinalg::int).collect();
        let a = Alt3::from_coords(4, 2, &coords).unwrap();
        for (i, j, k) in [(0, 1, 2), (0, 2, 3), (1, 2, 3), (0, 1, 3)] {
            let v = a.get(i, j, k).to_vec();
            let neg: Vec<_> = v.iter().map(|x| -x).collect();
            prop_assert_eq!(a.get(j, i, k), neg.as_slice());
            prop_assert_eq!(a.get(i, k, j), neg.as_slice());
            prop_assert_eq!(a.get(k, i, j), v.as_slice());
        }
        prop_assert!(a.get(1, 1, 2).iter().all(|x| *x == tlmp_core::exactlinalg::int(0)));
        prop_assert_eq!(a.coords(), coords);
    }

    #[test]
    fn action_storage_is_antisymmetric(coords in proptest::collection::vec(-3i64..=3, 12)) {
        // n = 3 (three pairs), t = 2, m = 2.
        let coords: Vec<_> = coords.into_iter().map(tlmp_core::exactlinalg::int).collect();
        let d = TriAction::from_coords(3, 2, 2, &coords).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            for s in 0..2 {
                let v = d.get(i, j, s).to_vec();
                let neg: Vec<_> = v.iter().map(|x| -x).collect();
                prop_assert_eq!(d.get(j, i, s), neg.as_slice());
            }
        }
        prop_assert_eq!(d.coords(), coords);
    }
}
