//! Extensibility of automorphism pairs and the Wells exact sequence.
//!
//! Let `E` be an abelian extension of `(g, h)` by `(V, W)` with induced
//! representation `r` and cocycle `c` (relative to a section). A pair
//! `(α, β) = ((α1, α2), (β1, β2))` of automorphisms of the base matched pair
//! and of the fiber spaces *extends* if some automorphism `γ` of the total
//! matched pair restricts to `β` on the fiber and induces `α` on the base.
//!
//! * [`in_compatible_set`] checks that `(α, β)` transports `r` to itself;
//! * [`wells_class`] computes `c_{(α,β)} − c`, whose cohomology class is the
//!   obstruction (the Wells map);
//! * [`decide_extensible`] solves the linear system whose solutions `(ζ, η)`
//!   are exactly the fiber corrections of lifts, returning either `(ζ, η)` or
//!   the obstruction together with the rank gap of the system;
//! * [`lift`] builds and verifies `γ`, [`restrict`] goes back;
//! * [`z1_to_aut`], [`aut_to_z1`] identify the automorphisms restricting to
//!   the identity with 1-cocycles, and [`exact_sequence_report`] checks the
//!   whole sequence `0 → Z¹ → Aut(E) → 𝒞 → H²` on a battery of probes.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use crate::cohomology::{cohomologous, d1, Cochain1, Cochain2, CochainShape};
use crate::error::{Error, Result};
use crate::exactlinalg::{
    frac, int, kernel_basis, solve, sub_vec, unit_vec, Rational, RationalMatrix, SolveOutcome, Vector,
};
use crate::extension::{extract_cocycle, induced_representation, AbelianExtension, Section};
use crate::matched::{verify_mp_morphism, MatchedPair};
use crate::report::{check_identity, var, var_after, Check, Report};
use crate::representation::{lin, MPRepresentation};
use crate::structure::{increasing_pairs, increasing_triples, Alt3, LinMap, TriAction};

/// A pair of automorphisms of the base `(α1 ∈ GL(g), α2 ∈ GL(h))` and of the
/// fiber `(β1 ∈ GL(V), β2 ∈ GL(W))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutPair {
    pub alpha1: LinMap,
    pub alpha2: LinMap,
    pub beta1: LinMap,
    pub beta2: LinMap,
}

impl AutPair {
    pub fn identity(s: CochainShape) -> Self {
        AutPair {
            alpha1: LinMap::identity(s.g),
            alpha2: LinMap::identity(s.h),
            beta1: LinMap::identity(s.v),
            beta2: LinMap::identity(s.w),
        }
    }
}

/// An automorphism `(γ1, γ2)` of the total matched pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TotalAut {
    pub gamma1: LinMap,
    pub gamma2: LinMap,
}

struct Inverses {
    a1: RationalMatrix,
    a2: RationalMatrix,
}

fn mv(m: &RationalMatrix, v: &[Rational]) -> Vector {
    m.mul_vec(v).expect("shapes validated")
}

fn check_square(name: &'static str, m: &LinMap, n: usize) -> Result<RationalMatrix> {
    if (m.domain_dim(), m.codomain_dim()) != (n, n) {
        return Err(Error::Shape(format!("{name} must be {n}×{n}")));
    }
    m.matrix().inverse().ok_or(Error::Singular(name))
}

/// Checks shapes and invertibility, and that `(α1, α2)` is an automorphism
/// of the base matched pair (failures: [`Error::Axiom`]).
pub fn check_aut_pair(p: &MatchedPair, s: CochainShape, aut: &AutPair) -> Result<()> {
    inverses(s, aut)?;
    let rep = verify_mp_morphism(&aut.alpha1, &aut.alpha2, p, p)?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::Axiom { label: format!("base automorphism: {}", f.label) });
    }
    Ok(())
}

fn inverses(s: CochainShape, aut: &AutPair) -> Result<Inverses> {
    let a1 = check_square("alpha1", &aut.alpha1, s.g)?;
    let a2 = check_square("alpha2", &aut.alpha2, s.h)?;
    check_square("beta1", &aut.beta1, s.v)?;
    check_square("beta2", &aut.beta2, s.w)?;
    Ok(Inverses { a1, a2 })
}

/// Checks membership of `(α, β)` in the compatible set for the
/// representation `r`: each of `ρ_V, ρ_W, ψ_V, ψ_W, α, β` is invariant under
/// the transport `T ↦ β T(α⁻¹ ·, α⁻¹ ·) β⁻¹` (stated here in the equivalent
/// inverse-free form, e.g. `β1 ρ_V(x1,x2) v = ρ_V(α1x1, α1x2) β1 v`).
pub fn compatible_report(p: &MatchedPair, r: &MPRepresentation, aut: &AutPair) -> Result<Report> {
    let s = CochainShape::of(p, r);
    check_aut_pair(p, s, aut)?;
    let (a1, a2, b1, b2) = (aut.alpha1.matrix(), aut.alpha2.matrix(), aut.beta1.matrix(), aut.beta2.matrix());
    let mut rep = Report::new("compatible pair");
    let (n, m, dv, dw) = (s.g, s.h, s.v, s.w);
    rep.push(check_identity("rhoV", &[var("x1", n), var_after("x2", n, 0), var("v", dv)], |x| {
        (mv(b1, &r.rv(&x[0], &x[1], &x[2])), r.rv(&mv(a1, &x[0]), &mv(a1, &x[1]), &mv(b1, &x[2])))
    }));
    rep.push(check_identity("rhoW", &[var("x1", n), var_after("x2", n, 0), var("w", dw)], |x| {
        (mv(b2, &r.rw(&x[0], &x[1], &x[2])), r.rw(&mv(a1, &x[0]), &mv(a1, &x[1]), &mv(b2, &x[2])))
    }));
    rep.push(check_identity("psiV", &[var("a1", m), var_after("a2", m, 0), var("v", dv)], |x| {
        (mv(b1, &r.pv(&x[0], &x[1], &x[2])), r.pv(&mv(a2, &x[0]), &mv(a2, &x[1]), &mv(b1, &x[2])))
    }));
    rep.push(check_identity("psiW", &[var("a1", m), var_after("a2", m, 0), var("w", dw)], |x| {
        (mv(b2, &r.pw(&x[0], &x[1], &x[2])), r.pw(&mv(a2, &x[0]), &mv(a2, &x[1]), &mv(b2, &x[2])))
    }));
    rep.push(check_identity("alpha", &[var("v", dv), var("x", n), var("a", m)], |x| {
        (mv(b2, &r.al(&x[0], &x[1], &x[2])), r.al(&mv(b1, &x[0]), &mv(a1, &x[1]), &mv(a2, &x[2])))
    }));
    rep.push(check_identity("beta", &[var("w", dw), var("a", m), var("x", n)], |x| {
        (mv(b1, &r.be(&x[0], &x[1], &x[2])), r.be(&mv(b2, &x[0]), &mv(a2, &x[1]), &mv(a1, &x[2])))
    }));
    Ok(rep)
}

/// [`compatible_report`] for the representation induced by an extension.
pub fn in_compatible_set(e: &AbelianExtension, aut: &AutPair) -> Result<Report> {
    let r = induced_representation(e, None)?;
    compatible_report(e.base(), &r, aut)
}

/// The transported cochain `c_{(α,β)}`:
/// `ω′(x) = β1 ω(α1⁻¹x)`, `θ′(a) = β2 θ(α2⁻¹a)`,
/// `ν′(x1,x2)a = β2 ν(α1⁻¹x1, α1⁻¹x2) α2⁻¹a`,
/// `φ′(a1,a2)x = β1 φ(α2⁻¹a1, α2⁻¹a2) α1⁻¹x`.
pub fn transform_cocycle(s: CochainShape, c: &Cochain2, aut: &AutPair) -> Result<Cochain2> {
    c.check_shape(s)?;
    let inv = inverses(s, aut)?;
    let (b1, b2) = (aut.beta1.matrix(), aut.beta2.matrix());
    let gi: Vec<Vector> = (0..s.g).map(|i| inv.a1.column(i)).collect();
    let hi: Vec<Vector> = (0..s.h).map(|i| inv.a2.column(i)).collect();
    Ok(Cochain2 {
        omega: Alt3::from_fn(s.g, s.v, |i, j, k| Ok(mv(b1, &c.omega.eval(&gi[i], &gi[j], &gi[k]))))?,
        theta: Alt3::from_fn(s.h, s.w, |i, j, k| Ok(mv(b2, &c.theta.eval(&hi[i], &hi[j], &hi[k]))))?,
        nu: TriAction::from_fn(s.g, s.h, s.w, |i, j, t| Ok(mv(b2, &c.nu.eval(&gi[i], &gi[j], &hi[t]))))?,
        phi: TriAction::from_fn(s.h, s.g, s.v, |i, j, t| Ok(mv(b1, &c.phi.eval(&hi[i], &hi[j], &gi[t]))))?,
    })
}

/// The Wells cochain `c_{(α,β)} − c` and, when its class vanishes, a
/// 1-cochain `N` with `d1 N = c_{(α,β)} − c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WellsClass {
    pub cochain: Cochain2,
    pub trivializer: Option<Cochain1>,
}

impl WellsClass {
    pub fn is_zero(&self) -> bool {
        self.trivializer.is_some()
    }
}

/// Computes the Wells obstruction of a compatible pair (relative to the
/// given section, or a default one).
pub fn wells_class(e: &AbelianExtension, aut: &AutPair, section: Option<&Section>) -> Result<WellsClass> {
    let r = induced_representation(e, section)?;
    let rep = compatible_report(e.base(), &r, aut)?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::NotCompatible { label: f.label.clone() });
    }
    let s = e.shape();
    let c = extract_cocycle(e, section)?;
    let t = transform_cocycle(s, &c, aut)?;
    let diff = Cochain2::from_coords(s, &sub_vec(&t.coords(), &c.coords()))?;
    let trivializer = cohomologous(e.base(), &r, &t, &c)?;
    Ok(WellsClass { cochain: diff, trivializer })
}

/// Outcome of [`decide_extensible`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Decision {
    /// A solution `(ζ : g → V, η : h → W)` of the lifting system.
    Extensible { zeta: RationalMatrix, eta: RationalMatrix },
    /// The Wells cochain (a non-trivial class) and the rank gap of the
    /// lifting system.
    Obstructed { obstruction: Cochain2, rank_gap: usize },
}

impl Decision {
    pub fn is_extensible(&self) -> bool {
        matches!(self, Decision::Extensible { .. })
    }
}

/// The lifting system in `(ζ, η)` (coordinates as for 1-cochains):
///
/// * `Σ_cyc ρ_V(α1x2, α1x3) ζx1 − ζ[x1,x2,x3] = β1ω(x) − ω(α1x)`
/// * `Σ_cyc ψ_W(α2a2, α2a3) ηa1 − η[a1,a2,a3] = β2θ(a) − θ(α2a)`
/// * `ρ_W(α1x1,α1x2)ηa − ηρ(x1,x2)a + α(ζx1,α1x2)α2a − α(ζx2,α1x1)α2a
///    = β2ν(x1,x2)a − ν(α1x1,α1x2)α2a`
/// * `ψ_V(α2a1,α2a2)ζx − ζψ(a1,a2)x + β(ηa1,α2a2)α1x − β(ηa2,α2a1)α1x
///    = β1φ(a1,a2)x − φ(α2a1,α2a2)α1x`
///
/// on increasing argument tuples. Returns the matrix and right-hand side.
pub fn lifting_system(
    p: &MatchedPair,
    r: &MPRepresentation,
    c: &Cochain2,
    aut: &AutPair,
) -> Result<(RationalMatrix, Vector)> {
    let s = CochainShape::of(p, r);
    c.check_shape(s)?;
    inverses(s, aut)?;
    let (a1, a2, b1, b2) = (aut.alpha1.matrix(), aut.alpha2.matrix(), aut.beta1.matrix(), aut.beta2.matrix());
    let gu: Vec<Vector> = (0..s.g).map(|i| unit_vec(s.g, i)).collect();
    let hu: Vec<Vector> = (0..s.h).map(|i| unit_vec(s.h, i)).collect();
    let ag: Vec<Vector> = gu.iter().map(|x| mv(a1, x)).collect();
    let ah: Vec<Vector> = hu.iter().map(|x| mv(a2, x)).collect();
    // Left side for a given (ζ, η).
    let lhs = |z: &Cochain1| -> Vector {
        let (zeta, eta) = (&z.n1, &z.n2);
        let mut out = Vec::new();
        for [i, j, k] in increasing_triples(s.g) {
            out.extend(lin(
                s.v,
                &[
                    (1, &r.rv(&ag[j], &ag[k], &zeta.column(i))),
                    (1, &r.rv(&ag[k], &ag[i], &zeta.column(j))),
                    (1, &r.rv(&ag[i], &ag[j], &zeta.column(k))),
                    (-1, &mv(zeta, &p.g.br(&gu[i], &gu[j], &gu[k]))),
                ],
            ));
        }
        for [i, j, k] in increasing_triples(s.h) {
            out.extend(lin(
                s.w,
                &[
                    (1, &r.pw(&ah[j], &ah[k], &eta.column(i))),
                    (1, &r.pw(&ah[k], &ah[i], &eta.column(j))),
                    (1, &r.pw(&ah[i], &ah[j], &eta.column(k))),
                    (-1, &mv(eta, &p.h.br(&hu[i], &hu[j], &hu[k]))),
                ],
            ));
        }
        for [i, j] in increasing_pairs(s.g) {
            for t in 0..s.h {
                out.extend(lin(
                    s.w,
                    &[
                        (1, &r.rw(&ag[i], &ag[j], &eta.column(t))),
                        (-1, &mv(eta, &p.rho(&gu[i], &gu[j], &hu[t]))),
                        (1, &r.al(&zeta.column(i), &ag[j], &ah[t])),
                        (-1, &r.al(&zeta.column(j), &ag[i], &ah[t])),
                    ],
                ));
            }
        }
        for [i, j] in increasing_pairs(s.h) {
            for t in 0..s.g {
                out.extend(lin(
                    s.v,
                    &[
                        (1, &r.pv(&ah[i], &ah[j], &zeta.column(t))),
                        (-1, &mv(zeta, &p.psi(&hu[i], &hu[j], &gu[t]))),
                        (1, &r.be(&eta.column(i), &ah[j], &ag[t])),
                        (-1, &r.be(&eta.column(j), &ah[i], &ag[t])),
                    ],
                ));
            }
        }
        out
    };
    let mut rhs = Vec::new();
    for [i, j, k] in increasing_triples(s.g) {
        rhs.extend(sub_vec(&mv(b1, c.omega.get(i, j, k)), &c.omega.eval(&ag[i], &ag[j], &ag[k])));
    }
    for [i, j, k] in increasing_triples(s.h) {
        rhs.extend(sub_vec(&mv(b2, c.theta.get(i, j, k)), &c.theta.eval(&ah[i], &ah[j], &ah[k])));
    }
    for [i, j] in increasing_pairs(s.g) {
        for t in 0..s.h {
            rhs.extend(sub_vec(&mv(b2, c.nu.get(i, j, t)), &c.nu.eval(&ag[i], &ag[j], &ah[t])));
        }
    }
    for [i, j] in increasing_pairs(s.h) {
        for t in 0..s.g {
            rhs.extend(sub_vec(&mv(b1, c.phi.get(i, j, t)), &c.phi.eval(&ah[i], &ah[j], &ag[t])));
        }
    }
    let cols: Vec<Vector> = (0..s.c1_dim())
        .map(|k| lhs(&Cochain1::from_coords(s, &unit_vec(s.c1_dim(), k)).expect("shape agrees")))
        .collect();
    let mat = RationalMatrix::from_columns(rhs.len(), &cols)?;
    Ok((mat, rhs))
}

/// Decides whether a compatible pair extends to an automorphism of the
/// total matched pair. Incompatible pairs are rejected with
/// [`Error::NotCompatible`].
pub fn decide_extensible(e: &AbelianExtension, aut: &AutPair, section: Option<&Section>) -> Result<Decision> {
    let r = induced_representation(e, section)?;
    let rep = compatible_report(e.base(), &r, aut)?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::NotCompatible { label: f.label.clone() });
    }
    let s = e.shape();
    let c = extract_cocycle(e, section)?;
    let (mat, rhs) = lifting_system(e.base(), &r, &c, aut)?;
    match solve(&mat, &rhs)? {
        SolveOutcome::Solved(x) => {
            let z = Cochain1::from_coords(s, &x)?;
            Ok(Decision::Extensible { zeta: z.n1, eta: z.n2 })
        }
        SolveOutcome::Infeasible { rank, augmented_rank } => {
            let t = transform_cocycle(s, &c, aut)?;
            let obstruction = Cochain2::from_coords(s, &sub_vec(&t.coords(), &c.coords()))?;
            Ok(Decision::Obstructed { obstruction, rank_gap: augmented_rank - rank })
        }
    }
}

/// Checks that `γ` is an automorphism of the total matched pair that
/// restricts to `β` on the fiber and induces `α` on the base.
pub fn verify_lift(e: &AbelianExtension, aut: &AutPair, gamma: &TotalAut) -> Result<Report> {
    let t = e.total();
    let mut rep = Report::new("lifted automorphism");
    rep.absorb("total morphism", verify_mp_morphism(&gamma.gamma1, &gamma.gamma2, t, t)?);
    let flat = |m: &LinMap| m.matrix().entries().to_vec();
    let bit = |b: bool| alloc::vec![Rational::from_integer(i64::from(b).into())];
    rep.push(Check::from_equality("gamma1 invertible", bit(gamma.gamma1.is_invertible()), bit(true)));
    rep.push(Check::from_equality("gamma2 invertible", bit(gamma.gamma2.is_invertible()), bit(true)));
    rep.push(Check::from_equality(
        "gamma1 i1 = i1 beta1",
        flat(&gamma.gamma1.compose(e.i1())?),
        flat(&e.i1().compose(&aut.beta1)?),
    ));
    rep.push(Check::from_equality(
        "gamma2 i2 = i2 beta2",
        flat(&gamma.gamma2.compose(e.i2())?),
        flat(&e.i2().compose(&aut.beta2)?),
    ));
    rep.push(Check::from_equality(
        "j1 gamma1 = alpha1 j1",
        flat(&e.j1().compose(&gamma.gamma1)?),
        flat(&aut.alpha1.compose(e.j1())?),
    ));
    rep.push(Check::from_equality(
        "j2 gamma2 = alpha2 j2",
        flat(&e.j2().compose(&gamma.gamma2)?),
        flat(&aut.alpha2.compose(e.j2())?),
    ));
    Ok(rep)
}

/// Builds the lift `γ1 = i1β1L1(I − s1j1) + i1ζj1 + s1α1j1` (and likewise
/// `γ2`) from a solution of the lifting system, and verifies it.
pub fn lift(
    e: &AbelianExtension,
    aut: &AutPair,
    zeta: &RationalMatrix,
    eta: &RationalMatrix,
    section: Option<&Section>,
) -> Result<TotalAut> {
    let sec = match section {
        Some(s) => {
            e.check_section(s)?;
            s.clone()
        }
        None => e.default_section()?,
    };
    let s = e.shape();
    inverses(s, aut)?;
    if (zeta.rows(), zeta.cols(), eta.rows(), eta.cols()) != (s.v, s.g, s.w, s.h) {
        return Err(Error::Shape("witness (zeta, eta) has the wrong shape".into()));
    }
    let (l1, l2) = e.fiber_readers();
    let build = |i: &LinMap, j: &LinMap, l: &RationalMatrix, sec: &LinMap, beta: &LinMap, alpha: &LinMap, z: &RationalMatrix| -> Result<LinMap> {
        let dim = j.domain_dim();
        let (im, jm, sm) = (i.matrix(), j.matrix(), sec.matrix());
        let proj = l.mul(&RationalMatrix::identity(dim).sub(&sm.mul(jm)?)?)?;
        let m = im
            .mul(&beta.matrix().mul(&proj)?)?
            .add(&im.mul(&z.mul(jm)?)?)?
            .add(&sm.mul(&alpha.matrix().mul(jm)?)?)?;
        Ok(LinMap::new(m))
    };
    let gamma = TotalAut {
        gamma1: build(e.i1(), e.j1(), l1, &sec.s1, &aut.beta1, &aut.alpha1, zeta)?,
        gamma2: build(e.i2(), e.j2(), l2, &sec.s2, &aut.beta2, &aut.alpha2, eta)?,
    };
    let rep = verify_lift(e, aut, &gamma)?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::Certificate(format!("lift fails {}", f.label)));
    }
    Ok(gamma)
}

/// Restricts an automorphism of the total matched pair to the pair
/// `(α, β)` it induces on base and fiber.
pub fn restrict(e: &AbelianExtension, gamma: &TotalAut) -> Result<AutPair> {
    let t = e.total();
    let (tn, tm) = (t.g_dim(), t.h_dim());
    if (gamma.gamma1.domain_dim(), gamma.gamma1.codomain_dim()) != (tn, tn)
        || (gamma.gamma2.domain_dim(), gamma.gamma2.codomain_dim()) != (tm, tm)
    {
        return Err(Error::Shape("total automorphism has the wrong shape".into()));
    }
    if !gamma.gamma1.is_invertible() {
        return Err(Error::Singular("gamma1"));
    }
    if !gamma.gamma2.is_invertible() {
        return Err(Error::Singular("gamma2"));
    }
    let rep = verify_mp_morphism(&gamma.gamma1, &gamma.gamma2, t, t)?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::Axiom { label: f.label.clone() });
    }
    let gi1 = gamma.gamma1.compose(e.i1())?;
    let gi2 = gamma.gamma2.compose(e.i2())?;
    if !e.j1().compose(&gi1)?.matrix().is_zero() || !e.j2().compose(&gi2)?.matrix().is_zero() {
        return Err(Error::FiberNotPreserved);
    }
    let (l1, l2) = e.fiber_readers();
    let sec = e.default_section()?;
    let alpha1 = e.j1().compose(&gamma.gamma1)?.compose(&sec.s1)?;
    let alpha2 = e.j2().compose(&gamma.gamma2)?.compose(&sec.s2)?;
    // Self-check: the induced base pair does not depend on the section.
    let shifted = |s: &LinMap, i: &LinMap| -> Result<LinMap> {
        let ones = RationalMatrix::from_entries(i.domain_dim(), s.domain_dim(), alloc::vec![Rational::one(); i.domain_dim() * s.domain_dim()])?;
        Ok(LinMap::new(s.matrix().add(&i.matrix().mul(&ones)?)?))
    };
    let (t1, t2) = (shifted(&sec.s1, e.i1())?, shifted(&sec.s2, e.i2())?);
    if e.j1().compose(&gamma.gamma1)?.compose(&t1)? != alpha1 || e.j2().compose(&gamma.gamma2)?.compose(&t2)? != alpha2 {
        return Err(Error::Internal("restriction depends on the section".into()));
    }
    Ok(AutPair { alpha1, alpha2, beta1: LinMap::new(l1.mul(gi1.matrix())?), beta2: LinMap::new(l2.mul(gi2.matrix())?) })
}

/// `(ζ, η) ↦ (I + i1ζj1, I + i2ηj2)` for a 1-cocycle `(ζ, η)`.
pub fn z1_to_aut(e: &AbelianExtension, z: &Cochain1) -> Result<TotalAut> {
    let r = induced_representation(e, None)?;
    if !d1(e.base(), &r, z)?.is_zero() {
        return Err(Error::NotCocycle1);
    }
    let bump = |i: &LinMap, j: &LinMap, m: &RationalMatrix| -> Result<LinMap> {
        let dim = j.domain_dim();
        Ok(LinMap::new(RationalMatrix::identity(dim).add(&i.matrix().mul(&m.mul(j.matrix())?)?)?))
    };
    Ok(TotalAut { gamma1: bump(e.i1(), e.j1(), &z.n1)?, gamma2: bump(e.i2(), e.j2(), &z.n2)? })
}

/// Inverse of [`z1_to_aut`] on automorphisms restricting to the identity:
/// `ζ = L1(γ1s1 − s1)`, `η = L2(γ2s2 − s2)`.
pub fn aut_to_z1(e: &AbelianExtension, gamma: &TotalAut) -> Result<Cochain1> {
    let restricted = restrict(e, gamma)?;
    if restricted != AutPair::identity(e.shape()) {
        return Err(Error::NotInKernel);
    }
    let sec = e.default_section()?;
    let (l1, l2) = e.fiber_readers();
    let part = |gm: &LinMap, s: &LinMap, l: &RationalMatrix| -> Result<RationalMatrix> {
        l.mul(&gm.matrix().mul(s.matrix())?.sub(s.matrix())?)
    };
    Cochain1::new(e.shape(), part(&gamma.gamma1, &sec.s1, l1)?, part(&gamma.gamma2, &sec.s2, l2)?)
}

/// Result of one probe of [`exact_sequence_report`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProbeOutcome {
    pub label: String,
    pub compatible: bool,
    /// Wells class vanishes (only computed for compatible probes).
    pub wells_zero: Option<bool>,
    /// Lifting system solvable (only computed for compatible probes).
    pub extensible: Option<bool>,
    /// `extensible ⟺ (compatible ∧ wells_zero)`, and every lift verified
    /// and restricted back to the probe.
    pub consistent: bool,
}

/// Summary of the exactness checks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactSequenceReport {
    pub z1_dim: usize,
    /// Dimension of the kernel of restriction, from the round trip
    /// `aut_to_z1 ∘ z1_to_aut` on a basis of `Z¹`.
    pub kernel_dim_roundtrip: usize,
    /// Dimension of the solution space of the homogeneous lifting system at
    /// the identity.
    pub kernel_dim_direct: usize,
    pub probes: Vec<ProbeOutcome>,
    pub skipped_probes: usize,
}

impl ExactSequenceReport {
    pub fn passed(&self) -> bool {
        self.z1_dim == self.kernel_dim_roundtrip
            && self.z1_dim == self.kernel_dim_direct
            && self.probes.iter().all(|p| p.consistent)
    }
}

const PERMUTATION_CAP: usize = 24;

fn permutations(n: usize, cap: usize) -> Vec<Vec<usize>> {
    // Heap's algorithm, in a deterministic order, capped.
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = alloc::vec![0usize; n];
    out.push(a.clone());
    let mut i = 0;
    while i < n && out.len() < cap {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn permutation_matrix(perm: &[usize]) -> LinMap {
    let n = perm.len();
    let mut m = RationalMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        m.set(j, i, Rational::one());
    }
    LinMap::new(m)
}

/// The probe pairs used by [`exact_sequence_report`]: the identity, base
/// permutations with identity on the fiber, fiber permutations with
/// identity on the base, and scalings by `−1, 2, 1/2` of each component and
/// of all four at once.
pub fn standard_probes(s: CochainShape) -> Vec<(String, AutPair)> {
    let id = AutPair::identity(s);
    let mut out = alloc::vec![(String::from("identity"), id.clone())];
    let (pg, ph) = (permutations(s.g, PERMUTATION_CAP), permutations(s.h, PERMUTATION_CAP));
    let mut count = 0;
    'base: for p1 in &pg {
        for p2 in &ph {
            if count >= PERMUTATION_CAP {
                break 'base;
            }
            if p1.iter().enumerate().all(|(i, &j)| i == j) && p2.iter().enumerate().all(|(i, &j)| i == j) {
                continue;
            }
            count += 1;
            out.push((
                format!("base permutation {p1:?} {p2:?}"),
                AutPair { alpha1: permutation_matrix(p1), alpha2: permutation_matrix(p2), ..id.clone() },
            ));
        }
    }
    let (pv, pw) = (permutations(s.v, PERMUTATION_CAP), permutations(s.w, PERMUTATION_CAP));
    count = 0;
    'fiber: for p1 in &pv {
        for p2 in &pw {
            if count >= PERMUTATION_CAP {
                break 'fiber;
            }
            if p1.iter().enumerate().all(|(i, &j)| i == j) && p2.iter().enumerate().all(|(i, &j)| i == j) {
                continue;
            }
            count += 1;
            out.push((
                format!("fiber permutation {p1:?} {p2:?}"),
                AutPair { beta1: permutation_matrix(p1), beta2: permutation_matrix(p2), ..id.clone() },
            ));
        }
    }
    for (name, lambda) in [("-1", int(-1)), ("2", int(2)), ("1/2", frac(1, 2))] {
        let sc = |n: usize| LinMap::new(RationalMatrix::scalar(n, lambda.clone()));
        out.push((format!("alpha1 scaled by {name}"), AutPair { alpha1: sc(s.g), ..id.clone() }));
        out.push((format!("alpha2 scaled by {name}"), AutPair { alpha2: sc(s.h), ..id.clone() }));
        out.push((format!("beta1 scaled by {name}"), AutPair { beta1: sc(s.v), ..id.clone() }));
        out.push((format!("beta2 scaled by {name}"), AutPair { beta2: sc(s.w), ..id.clone() }));
        out.push((
            format!("all scaled by {name}"),
            AutPair { alpha1: sc(s.g), alpha2: sc(s.h), beta1: sc(s.v), beta2: sc(s.w) },
        ));
    }
    out
}

/// Checks exactness of `0 → Z¹ → Aut(E) → 𝒞 → H²` on the standard probes
/// plus any extra ones supplied.
pub fn exact_sequence_report(e: &AbelianExtension, extra: &[(String, AutPair)]) -> Result<ExactSequenceReport> {
    let s = e.shape();
    let p = e.base();
    let r = induced_representation(e, None)?;
    let c = extract_cocycle(e, None)?;
    // Z¹ and the kernel of restriction.
    let z1 = crate::cohomology::z1_basis(p, &r)?;
    let mut images = Vec::new();
    for z in z1.basis() {
        let zc = Cochain1::from_coords(s, z)?;
        let g = z1_to_aut(e, &zc)?;
        let back = aut_to_z1(e, &g)?;
        if back != zc {
            return Err(Error::Internal("Z¹ round trip is not the identity".into()));
        }
        let d1m = g.gamma1.matrix().sub(&RationalMatrix::identity(g.gamma1.domain_dim()))?;
        let d2m = g.gamma2.matrix().sub(&RationalMatrix::identity(g.gamma2.domain_dim()))?;
        images.push(d1m.entries().iter().chain(d2m.entries()).cloned().collect::<Vector>());
    }
    let kernel_dim_roundtrip = if images.is_empty() {
        0
    } else {
        RationalMatrix::from_rows(images[0].len(), images)?.rank()
    };
    let (hom, _) = lifting_system(p, &r, &Cochain2::zero(s), &AutPair::identity(s))?;
    let kernel_dim_direct = kernel_basis(&hom).dim();

    let mut probes = Vec::new();
    let mut skipped = 0;
    let all: Vec<(String, AutPair)> = standard_probes(s).into_iter().chain(extra.iter().cloned()).collect();
    for (label, aut) in all {
        if check_aut_pair(p, s, &aut).is_err() {
            skipped += 1;
            continue;
        }
        let compatible = compatible_report(p, &r, &aut)?.passed();
        if !compatible {
            probes.push(ProbeOutcome { label, compatible, wells_zero: None, extensible: None, consistent: true });
            continue;
        }
        let t = transform_cocycle(s, &c, &aut)?;
        let wells_zero = cohomologous(p, &r, &t, &c)?.is_some();
        let decision = decide_extensible(e, &aut, None)?;
        let mut consistent = decision.is_extensible() == wells_zero;
        if let Decision::Extensible { zeta, eta } = &decision {
            match lift(e, &aut, zeta, eta, None) {
                Ok(g) => consistent &= restrict(e, &g)? == aut,
                Err(_) => consistent = false,
            }
        }
        probes.push(ProbeOutcome {
            label,
            compatible,
            wells_zero: Some(wells_zero),
            extensible: Some(decision.is_extensible()),
            consistent,
        });
    }
    Ok(ExactSequenceReport { z1_dim: z1.dim(), kernel_dim_roundtrip, kernel_dim_direct, probes, skipped_probes: skipped })
}

/// The witness `(ζ, η) = (N1α1, N2α2)` obtained from a trivializer `N` of
/// the Wells class.
pub fn witness_from_trivializer(n: &Cochain1, aut: &AutPair) -> Result<(RationalMatrix, RationalMatrix)> {
    Ok((n.n1.mul(aut.alpha1.matrix())?, n.n2.mul(aut.alpha2.matrix())?))
}
