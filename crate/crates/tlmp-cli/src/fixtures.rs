//! Named fixture bundles shipped with the tool.
//!
//! [`fixture_bundles`] generates every fixture deterministically; the files
//! under `fixtures/` are its output (`tlmp fixtures --out-dir fixtures`).

use tlmp_core::cohomology::{z2_basis, Cochain2, CochainShape};
use tlmp_core::exactlinalg::{int, RationalMatrix};
use tlmp_core::extension::build_extension;
use tlmp_core::fixtures::{a4, a4_split_pair, rho_only_pair, unit_nu, zero_fixture};
use tlmp_core::matched::MatchedPair;
use tlmp_core::representation::{adjoint_representation_unchecked, MPRepresentation};
use tlmp_core::structure::{LinMap, ThreeLie};
use tlmp_core::wells::AutPair;

use crate::bundle::{Bundle, Kind};
use crate::json::{
    algebra_to_json, aut_pair_to_json, cochain2_to_json, extension_to_json, pair_to_json, rep_to_json,
};

/// `A4` with `[e1,e2,e3] = e1 + e4`: fails the fundamental identity.
pub fn a4_perturbed() -> ThreeLie {
    let alg = a4();
    let mut br = alg.bracket().clone();
    br.set(0, 1, 2, &[int(1), int(0), int(0), int(1)]).expect("in range");
    ThreeLie::new(alg.basis().to_vec(), br).expect("shape")
}

/// The `A4` split pair with `ρ(e1,e2)e3 = e3 + e4`: not a matched pair.
pub fn a4_split_perturbed() -> MatchedPair {
    let mut p = a4_split_pair();
    p.rho.set(0, 1, 0, &[int(1), int(1)]).expect("in range");
    p
}

/// `g = h = ℚ`, zero actions, zero representation on `V = W = ℚ`.
pub fn line_fixture() -> (MatchedPair, MPRepresentation) {
    let p = MatchedPair::trivial(ThreeLie::abelian(1), ThreeLie::abelian(1));
    let r = MPRepresentation::zero(&p, 1, 1);
    (p, r)
}

/// The first unit 2-cochain (in coordinate order) that is not a cocycle
/// for the adjoint representation of the `ρ`-only pair.
pub fn rho_only_non_cocycle() -> Cochain2 {
    let p = rho_only_pair();
    let r = adjoint_representation_unchecked(&p);
    let s = CochainShape::of(&p, &r);
    (0..s.c2_dim())
        .map(|i| Cochain2::from_coords(s, &tlmp_core::exactlinalg::unit_vec(s.c2_dim(), i)).expect("length"))
        .find(|c| !tlmp_core::cohomology::is_cocycle2(&p, &r, c).expect("shapes").passed())
        .expect("the differential of the rho-only adjoint complex is nonzero")
}

/// The probe `α1 = 2·id`, identity elsewhere, on the zero fixture.
pub fn alpha1_double(s: CochainShape) -> AutPair {
    AutPair { alpha1: LinMap::new(RationalMatrix::scalar(s.g, int(2))), ..AutPair::identity(s) }
}

/// Every shipped fixture as `(file name, bundle)`, in a fixed order.
pub fn fixture_bundles() -> Vec<(&'static str, Bundle)> {
    let mut out = Vec::new();
    let meta = |s: &str| Some(s.to_string());
    out.push(("a4.json", Bundle::new(Kind::Algebra, algebra_to_json(&a4()), meta("simple 4-dimensional 3-Lie algebra A4"))));
    out.push((
        "a4-perturbed.json",
        Bundle::new(Kind::Algebra, algebra_to_json(&a4_perturbed()), meta("A4 with [e1,e2,e3] = e1 + e4; not a 3-Lie algebra")),
    ));
    let split = a4_split_pair();
    out.push((
        "a4-split-pair.json",
        Bundle::new(Kind::MatchedPair, pair_to_json(&split), meta("A4 split into two abelian planes")),
    ));
    out.push((
        "a4-split-adjoint-rep.json",
        Bundle::new(
            Kind::Representation,
            rep_to_json(&adjoint_representation_unchecked(&split)),
            meta("adjoint representation of the A4 split pair"),
        ),
    ));
    out.push((
        "a4-split-perturbed-pair.json",
        Bundle::new(
            Kind::MatchedPair,
            pair_to_json(&a4_split_perturbed()),
            meta("A4 split pair with rho(e1,e2)e3 = e3 + e4; not a matched pair"),
        ),
    ));
    let split_adj = adjoint_representation_unchecked(&split);
    let z = z2_basis(&split, &split_adj).expect("valid fixture");
    let def = Cochain2::from_coords(CochainShape::of(&split, &split_adj), &z.basis()[0]).expect("length");
    out.push((
        "a4-split-deformation.json",
        Bundle::new(
            Kind::Deformation,
            cochain2_to_json(&def),
            meta("first basis cocycle of the adjoint complex of the A4 split pair"),
        ),
    ));
    let (zp, zr) = zero_fixture();
    out.push(("zero-pair.json", Bundle::new(Kind::MatchedPair, pair_to_json(&zp), meta("g = h = Q^2 abelian, zero actions"))));
    out.push(("zero-rep.json", Bundle::new(Kind::Representation, rep_to_json(&zr), meta("zero representation on V = W = Q"))));
    out.push((
        "zero-unit-nu.json",
        Bundle::new(Kind::Cochain2, cochain2_to_json(&unit_nu()), meta("nu(e1,e2)e1 = w, all else zero")),
    ));
    let e = build_extension(&zp, &zr, &unit_nu()).expect("unit nu is a cocycle");
    out.push((
        "zero-unit-nu-extension.json",
        Bundle::new(
            Kind::Extension,
            extension_to_json(e.base(), e.total(), [e.i1(), e.i2(), e.j1(), e.j2()]),
            meta("abelian extension of the zero fixture by the unit nu cocycle"),
        ),
    ));
    let s = CochainShape::of(&zp, &zr);
    out.push((
        "zero-aut-identity.json",
        Bundle::new(Kind::AutPair, aut_pair_to_json(&AutPair::identity(s)), meta("identity automorphism pair")),
    ));
    out.push((
        "zero-aut-alpha1-double.json",
        Bundle::new(Kind::AutPair, aut_pair_to_json(&alpha1_double(s)), meta("alpha1 = 2 id, identity elsewhere")),
    ));
    let (lp, lr) = line_fixture();
    out.push(("line-pair.json", Bundle::new(Kind::MatchedPair, pair_to_json(&lp), meta("g = h = Q, zero actions"))));
    out.push(("line-rep.json", Bundle::new(Kind::Representation, rep_to_json(&lr), meta("zero representation on V = W = Q"))));
    let rp = rho_only_pair();
    out.push((
        "rho-only-pair.json",
        Bundle::new(Kind::MatchedPair, pair_to_json(&rp), meta("abelian planes with rho(e1,e2)e1 = e2, psi = 0")),
    ));
    out.push((
        "rho-only-adjoint-rep.json",
        Bundle::new(
            Kind::Representation,
            rep_to_json(&adjoint_representation_unchecked(&rp)),
            meta("adjoint representation of the rho-only pair"),
        ),
    ));
    out.push((
        "rho-only-non-cocycle.json",
        Bundle::new(
            Kind::Cochain2,
            cochain2_to_json(&rho_only_non_cocycle()),
            meta("a unit 2-cochain that is not a cocycle for the rho-only adjoint representation"),
        ),
    ));
    out
}
