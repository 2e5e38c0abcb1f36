//! Abelian extensions of matched pairs.
//!
//! An abelian extension of `(g, h; ρ, ψ)` by `(V, W)` is a matched pair
//! `(ĝ, ĥ; ρ̂, ψ̂)` together with short exact sequences
//! `0 → V →ⁱ¹ ĝ →ʲ¹ g → 0` and `0 → W →ⁱ² ĥ →ʲ² h → 0` such that `(j1, j2)`
//! is a morphism of matched pairs and the fiber is abelian (every bracket or
//! action with two arguments in the fiber vanishes).
//!
//! Choosing a section `(s1, s2)` of `(j1, j2)` reads off a representation of
//! the base on the fiber (independent of the section) and a 2-cocycle whose
//! class is independent of the section; conversely [`build_extension`]
//! realises any 2-cocycle on `ĝ = g ⊕ V`, `ĥ = h ⊕ W` (base coordinates
//! first).

use alloc::format;
use alloc::vec::Vec;

use num_traits::One;

use crate::cohomology::{cohomologous, require_cocycle2, Cochain1, Cochain2, CochainShape};
use crate::error::{Error, Result};
use crate::exactlinalg::{add_scaled, unit_vec, Rational, RationalMatrix, Vector};
use crate::matched::{verify_matched_pair, verify_mp_morphism, MatchedPair};
use crate::report::{check_identity, var, Check, Report};
use crate::representation::{semidirect_product, MPRepresentation, Pairing};
use crate::structure::{split, Alt3, LinMap, ThreeLie, TriAction};

/// A section `(s1 : g → ĝ, s2 : h → ĥ)` of `(j1, j2)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Section {
    pub s1: LinMap,
    pub s2: LinMap,
}

/// A validated abelian extension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianExtension {
    base: MatchedPair,
    total: MatchedPair,
    i1: LinMap,
    i2: LinMap,
    j1: LinMap,
    j2: LinMap,
    l1: RationalMatrix,
    l2: RationalMatrix,
}

fn mv(m: &RationalMatrix, v: &[Rational]) -> Vector {
    m.mul_vec(v).expect("shapes validated")
}

/// Checks every defining property of an abelian extension and reports each
/// one separately. Shape mismatches are errors.
pub fn extension_report(
    base: &MatchedPair,
    total: &MatchedPair,
    i1: &LinMap,
    i2: &LinMap,
    j1: &LinMap,
    j2: &LinMap,
) -> Result<Report> {
    let (n, m) = (base.g_dim(), base.h_dim());
    let (tn, tm) = (total.g_dim(), total.h_dim());
    if (j1.domain_dim(), j1.codomain_dim()) != (tn, n) {
        return Err(Error::Shape(format!("j1 must map dimension {tn} to {n}")));
    }
    if (j2.domain_dim(), j2.codomain_dim()) != (tm, m) {
        return Err(Error::Shape(format!("j2 must map dimension {tm} to {m}")));
    }
    if i1.codomain_dim() != tn || i2.codomain_dim() != tm {
        return Err(Error::Shape("i1, i2 must map into the total algebras".into()));
    }
    let (dv, dw) = (i1.domain_dim(), i2.domain_dim());
    let mut rep = Report::new("abelian extension");
    rep.absorb("total", verify_matched_pair(total)?);
    rep.absorb("j", verify_mp_morphism(j1, j2, total, base)?);
    let ji1 = j1.compose(i1)?;
    let ji2 = j2.compose(i2)?;
    rep.push(Check::from_equality("j1 i1 = 0", ji1.matrix().entries().to_vec(), RationalMatrix::zeros(n, dv).entries().to_vec()));
    rep.push(Check::from_equality("j2 i2 = 0", ji2.matrix().entries().to_vec(), RationalMatrix::zeros(m, dw).entries().to_vec()));
    let rank_eq = |label: &str, got: usize, want: usize| {
        let to = |x: usize| alloc::vec![Rational::from_integer(x.into())];
        Check::from_equality(label, to(got), to(want))
    };
    rep.push(rank_eq("i1 injective", i1.matrix().rank(), dv));
    rep.push(rank_eq("i2 injective", i2.matrix().rank(), dw));
    rep.push(rank_eq("j1 surjective", j1.matrix().rank(), n));
    rep.push(rank_eq("j2 surjective", j2.matrix().rank(), m));
    rep.push(rank_eq("exact at total g", tn, n + dv));
    rep.push(rank_eq("exact at total h", tm, m + dw));
    // abelian fiber
    let (i1m, i2m) = (i1.matrix(), i2.matrix());
    let fv = |v: &Vector| mv(i1m, v);
    let fw = |w: &Vector| mv(i2m, w);
    rep.push(check_identity("[V,V,g] = 0", &[var("v1", dv), var("v2", dv), var("y", tn)], |a| {
        let r = total.g.br(&fv(&a[0]), &fv(&a[1]), &a[2]);
        let z = alloc::vec![Rational::from_integer(0.into()); r.len()];
        (r, z)
    }));
    rep.push(check_identity("[W,W,h] = 0", &[var("w1", dw), var("w2", dw), var("b", tm)], |a| {
        let r = total.h.br(&fw(&a[0]), &fw(&a[1]), &a[2]);
        let z = alloc::vec![Rational::from_integer(0.into()); r.len()];
        (r, z)
    }));
    rep.push(check_identity("rho(V,V) = 0", &[var("v1", dv), var("v2", dv), var("b", tm)], |a| {
        let r = total.rho(&fv(&a[0]), &fv(&a[1]), &a[2]);
        let z = alloc::vec![Rational::from_integer(0.into()); r.len()];
        (r, z)
    }));
    rep.push(check_identity("rho(g,V)W = 0", &[var("y", tn), var("v", dv), var("w", dw)], |a| {
        let r = total.rho(&a[0], &fv(&a[1]), &fw(&a[2]));
        let z = alloc::vec![Rational::from_integer(0.into()); r.len()];
        (r, z)
    }));
    rep.push(check_identity("psi(W,W) = 0", &[var("w1", dw), var("w2", dw), var("y", tn)], |a| {
        let r = total.psi(&fw(&a[0]), &fw(&a[1]), &a[2]);
        let z = alloc::vec![Rational::from_integer(0.into()); r.len()];
        (r, z)
    }));
    rep.push(check_identity("psi(h,W)V = 0", &[var("b", tm), var("w", dw), var("v", dv)], |a| {
        let r = total.psi(&a[0], &fw(&a[1]), &fv(&a[2]));
        let z = alloc::vec![Rational::from_integer(0.into()); r.len()];
        (r, z)
    }));
    Ok(rep)
}

impl AbelianExtension {
    /// Validates and wraps an abelian extension; the first failing property
    /// is returned as [`Error::Axiom`].
    pub fn new(base: MatchedPair, total: MatchedPair, i1: LinMap, i2: LinMap, j1: LinMap, j2: LinMap) -> Result<Self> {
        let rep = extension_report(&base, &total, &i1, &i2, &j1, &j2)?;
        if let Some(f) = rep.first_failure() {
            return Err(Error::Axiom { label: f.label.clone() });
        }
        let l1 = i1.matrix().left_inverse().ok_or(Error::Singular("i1"))?;
        let l2 = i2.matrix().left_inverse().ok_or(Error::Singular("i2"))?;
        Ok(AbelianExtension { base, total, i1, i2, j1, j2, l1, l2 })
    }

    pub fn base(&self) -> &MatchedPair {
        &self.base
    }

    pub fn total(&self) -> &MatchedPair {
        &self.total
    }

    pub fn i1(&self) -> &LinMap {
        &self.i1
    }

    pub fn i2(&self) -> &LinMap {
        &self.i2
    }

    pub fn j1(&self) -> &LinMap {
        &self.j1
    }

    pub fn j2(&self) -> &LinMap {
        &self.j2
    }

    pub fn v_dim(&self) -> usize {
        self.i1.domain_dim()
    }

    pub fn w_dim(&self) -> usize {
        self.i2.domain_dim()
    }

    /// Left inverses of `i1` and `i2` used to read fiber coordinates.
    pub fn fiber_readers(&self) -> (&RationalMatrix, &RationalMatrix) {
        (&self.l1, &self.l2)
    }

    /// Coordinates in `V` of a vector of `ĝ` known to lie in `i1(V)`.
    pub fn fiber_v(&self, y: &[Rational]) -> Result<Vector> {
        if !self.j1.apply(y)?.iter().all(num_traits::Zero::is_zero) {
            return Err(Error::NotInFiber("V"));
        }
        self.l1.mul_vec(y)
    }

    /// Coordinates in `W` of a vector of `ĥ` known to lie in `i2(W)`.
    pub fn fiber_w(&self, y: &[Rational]) -> Result<Vector> {
        if !self.j2.apply(y)?.iter().all(num_traits::Zero::is_zero) {
            return Err(Error::NotInFiber("W"));
        }
        self.l2.mul_vec(y)
    }

    /// A section of `(j1, j2)` obtained from right inverses.
    pub fn default_section(&self) -> Result<Section> {
        let s1 = self.j1.matrix().right_inverse().ok_or(Error::Singular("j1"))?;
        let s2 = self.j2.matrix().right_inverse().ok_or(Error::Singular("j2"))?;
        Ok(Section { s1: LinMap::new(s1), s2: LinMap::new(s2) })
    }

    /// Checks `j1 s1 = id`, `j2 s2 = id`.
    pub fn check_section(&self, s: &Section) -> Result<()> {
        let (n, m) = (self.base.g_dim(), self.base.h_dim());
        if (s.s1.domain_dim(), s.s1.codomain_dim()) != (n, self.total.g_dim())
            || (s.s2.domain_dim(), s.s2.codomain_dim()) != (m, self.total.h_dim())
        {
            return Err(Error::Shape("section has the wrong shape".into()));
        }
        if self.j1.compose(&s.s1)? != LinMap::identity(n) || self.j2.compose(&s.s2)? != LinMap::identity(m) {
            return Err(Error::Invalid("not a section: j s ≠ id".into()));
        }
        Ok(())
    }

    fn section_or_default(&self, s: Option<&Section>) -> Result<Section> {
        match s {
            Some(s) => {
                self.check_section(s)?;
                Ok(s.clone())
            }
            None => self.default_section(),
        }
    }

    pub fn shape(&self) -> CochainShape {
        CochainShape { g: self.base.g_dim(), h: self.base.h_dim(), v: self.v_dim(), w: self.w_dim() }
    }
}

/// The representation induced on the fiber:
/// `ρ_V(x1,x2)v = [s1x1,s1x2,i1v]`, `ρ_W(x1,x2)w = ρ̂(s1x1,s1x2)i2w`,
/// `ψ_V(a1,a2)v = ψ̂(s2a1,s2a2)i1v`, `ψ_W(a1,a2)w = [s2a1,s2a2,i2w]`,
/// `α(v,x)a = ρ̂(i1v,s1x)s2a`, `β(w,a)x = ψ̂(i2w,s2a)s1x`, read in the fiber.
pub fn induced_representation(e: &AbelianExtension, s: Option<&Section>) -> Result<MPRepresentation> {
    let s = e.section_or_default(s)?;
    let (n, m, dv, dw) = (e.base.g_dim(), e.base.h_dim(), e.v_dim(), e.w_dim());
    let t = &e.total;
    let (s1, s2) = (s.s1.matrix(), s.s2.matrix());
    let (i1, i2) = (e.i1.matrix(), e.i2.matrix());
    let sx: Vec<Vector> = (0..n).map(|i| s1.column(i)).collect();
    let sa: Vec<Vector> = (0..m).map(|i| s2.column(i)).collect();
    let iv: Vec<Vector> = (0..dv).map(|i| i1.column(i)).collect();
    let iw: Vec<Vector> = (0..dw).map(|i| i2.column(i)).collect();
    let rho_v = TriAction::from_fn(n, dv, dv, |i, j, k| e.fiber_v(&t.g.br(&sx[i], &sx[j], &iv[k])))?;
    let rho_w = TriAction::from_fn(n, dw, dw, |i, j, k| e.fiber_w(&t.rho(&sx[i], &sx[j], &iw[k])))?;
    let psi_v = TriAction::from_fn(m, dv, dv, |i, j, k| e.fiber_v(&t.psi(&sa[i], &sa[j], &iv[k])))?;
    let psi_w = TriAction::from_fn(m, dw, dw, |i, j, k| e.fiber_w(&t.h.br(&sa[i], &sa[j], &iw[k])))?;
    let alpha = Pairing::from_fn(dv, n, m, dw, |i, j, k| e.fiber_w(&t.rho(&iv[i], &sx[j], &sa[k])))?;
    let beta = Pairing::from_fn(dw, m, n, dv, |i, j, k| e.fiber_v(&t.psi(&iw[i], &sa[j], &sx[k])))?;
    MPRepresentation::new(&e.base, dv, dw, rho_v, rho_w, psi_v, psi_w, alpha, beta)
}

/// The 2-cocycle of an extension relative to a section:
/// `ω(x) = [s1x1,s1x2,s1x3] − s1[x]`, `θ` likewise,
/// `ν(x1,x2)a = ρ̂(s1x1,s1x2)s2a − s2ρ(x1,x2)a`,
/// `φ(a1,a2)x = ψ̂(s2a1,s2a2)s1x − s1ψ(a1,a2)x`, read in the fiber.
pub fn extract_cocycle(e: &AbelianExtension, s: Option<&Section>) -> Result<Cochain2> {
    let s = e.section_or_default(s)?;
    let (n, m, dv, dw) = (e.base.g_dim(), e.base.h_dim(), e.v_dim(), e.w_dim());
    let (t, b) = (&e.total, &e.base);
    let (s1, s2) = (s.s1.matrix(), s.s2.matrix());
    let gu: Vec<Vector> = (0..n).map(|i| unit_vec(n, i)).collect();
    let hu: Vec<Vector> = (0..m).map(|i| unit_vec(m, i)).collect();
    let sx: Vec<Vector> = (0..n).map(|i| s1.column(i)).collect();
    let sa: Vec<Vector> = (0..m).map(|i| s2.column(i)).collect();
    let minus = -Rational::one();
    let diff = |mut x: Vector, y: Vector| {
        add_scaled(&mut x, &minus, &y);
        x
    };
    let omega = Alt3::from_fn(n, dv, |i, j, k| {
        e.fiber_v(&diff(t.g.br(&sx[i], &sx[j], &sx[k]), mv(s1, &b.g.br(&gu[i], &gu[j], &gu[k]))))
    })?;
    let theta = Alt3::from_fn(m, dw, |i, j, k| {
        e.fiber_w(&diff(t.h.br(&sa[i], &sa[j], &sa[k]), mv(s2, &b.h.br(&hu[i], &hu[j], &hu[k]))))
    })?;
    let nu = TriAction::from_fn(n, m, dw, |i, j, k| {
        e.fiber_w(&diff(t.rho(&sx[i], &sx[j], &sa[k]), mv(s2, &b.rho(&gu[i], &gu[j], &hu[k]))))
    })?;
    let phi = TriAction::from_fn(m, n, dv, |i, j, k| {
        e.fiber_v(&diff(t.psi(&sa[i], &sa[j], &sx[k]), mv(s1, &b.psi(&hu[i], &hu[j], &gu[k]))))
    })?;
    Ok(Cochain2 { omega, theta, nu, phi })
}

/// The twisted semidirect product realising a 2-cochain on `g ⊕ V`,
/// `h ⊕ W`: the semidirect structure plus `ω`, `θ`, `ν`, `φ` added in the
/// fiber. No cocycle check is performed.
pub fn twisted_product(p: &MatchedPair, r: &MPRepresentation, c: &Cochain2) -> Result<MatchedPair> {
    let s = CochainShape::of(p, r);
    c.check_shape(s)?;
    let sd = semidirect_product(p, r)?;
    let (n, m) = (s.g, s.h);
    let (tn, tm) = (n + s.v, m + s.w);
    let gu: Vec<Vector> = (0..tn).map(|i| unit_vec(tn, i)).collect();
    let hu: Vec<Vector> = (0..tm).map(|i| unit_vec(tm, i)).collect();
    let twist = |mut base: Vector, offset: usize, extra: Vector| {
        for (k, x) in extra.into_iter().enumerate() {
            base[offset + k] += x;
        }
        base
    };
    let gb = Alt3::from_fn(tn, tn, |i, j, k| {
        let (x1, x2, x3) = (split(&gu[i], n).0, split(&gu[j], n).0, split(&gu[k], n).0);
        Ok(twist(sd.g.br(&gu[i], &gu[j], &gu[k]), n, c.omega.eval(x1, x2, x3)))
    })?;
    let hb = Alt3::from_fn(tm, tm, |i, j, k| {
        let (a1, a2, a3) = (split(&hu[i], m).0, split(&hu[j], m).0, split(&hu[k], m).0);
        Ok(twist(sd.h.br(&hu[i], &hu[j], &hu[k]), m, c.theta.eval(a1, a2, a3)))
    })?;
    let rho = TriAction::from_fn(tn, tm, tm, |i, j, t| {
        let (x1, x2, a) = (split(&gu[i], n).0, split(&gu[j], n).0, split(&hu[t], m).0);
        Ok(twist(sd.rho(&gu[i], &gu[j], &hu[t]), m, c.nu.eval(x1, x2, a)))
    })?;
    let psi = TriAction::from_fn(tm, tn, tn, |i, j, t| {
        let (a1, a2, x) = (split(&hu[i], m).0, split(&hu[j], m).0, split(&gu[t], n).0);
        Ok(twist(sd.psi(&hu[i], &hu[j], &gu[t]), n, c.phi.eval(a1, a2, x)))
    })?;
    let g = ThreeLie::new(sd.g.basis().to_vec(), gb)?;
    let h = ThreeLie::new(sd.h.basis().to_vec(), hb)?;
    MatchedPair::new(g, h, rho, psi)
}

/// The standard inclusion `[0; I]` and projection `[I 0]` for
/// `base ⊕ fiber` coordinates.
pub fn standard_maps(base_dim: usize, fiber_dim: usize) -> (LinMap, LinMap) {
    let t = base_dim + fiber_dim;
    let mut i = RationalMatrix::zeros(t, fiber_dim);
    for k in 0..fiber_dim {
        i.set(base_dim + k, k, Rational::one());
    }
    let mut j = RationalMatrix::zeros(base_dim, t);
    for k in 0..base_dim {
        j.set(k, k, Rational::one());
    }
    (LinMap::new(i), LinMap::new(j))
}

/// The standard section `[I; 0]`.
pub fn standard_section(p: &MatchedPair, r: &MPRepresentation) -> Section {
    let emb = |n: usize, f: usize| {
        let mut s = RationalMatrix::zeros(n + f, n);
        for k in 0..n {
            s.set(k, k, Rational::one());
        }
        LinMap::new(s)
    };
    Section { s1: emb(p.g_dim(), r.v_dim()), s2: emb(p.h_dim(), r.w_dim()) }
}

/// Builds the abelian extension determined by a 2-cocycle; a cochain that
/// violates a cocycle equation is rejected with [`Error::NotCocycle`].
pub fn build_extension(p: &MatchedPair, r: &MPRepresentation, c: &Cochain2) -> Result<AbelianExtension> {
    require_cocycle2(p, r, c)?;
    let total = twisted_product(p, r, c)?;
    let (i1, j1) = standard_maps(p.g_dim(), r.v_dim());
    let (i2, j2) = standard_maps(p.h_dim(), r.w_dim());
    AbelianExtension::new(p.clone(), total, i1, i2, j1, j2)
}

/// An isomorphism of extensions `(f : ĝ → ĝ′, g : ĥ → ĥ′)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtensionIso {
    pub f: LinMap,
    pub g: LinMap,
}

/// Checks that `(f, g)` is an isomorphism of extensions `e → e′` inducing the
/// identity on base and fiber.
pub fn verify_extension_iso(e: &AbelianExtension, e2: &AbelianExtension, iso: &ExtensionIso) -> Result<Report> {
    let mut rep = Report::new("extension isomorphism");
    rep.absorb("morphism", verify_mp_morphism(&iso.f, &iso.g, &e.total, &e2.total)?);
    let flat = |m: &LinMap| m.matrix().entries().to_vec();
    let one = |b: bool| alloc::vec![Rational::from_integer(i64::from(b).into())];
    rep.push(Check::from_equality("f invertible", one(iso.f.is_invertible()), one(true)));
    rep.push(Check::from_equality("g invertible", one(iso.g.is_invertible()), one(true)));
    rep.push(Check::from_equality("f i1 = i1'", flat(&iso.f.compose(&e.i1)?), flat(&e2.i1)));
    rep.push(Check::from_equality("g i2 = i2'", flat(&iso.g.compose(&e.i2)?), flat(&e2.i2)));
    rep.push(Check::from_equality("j1' f = j1", flat(&e2.j1.compose(&iso.f)?), flat(&e.j1)));
    rep.push(Check::from_equality("j2' g = j2", flat(&e2.j2.compose(&iso.g)?), flat(&e.j2)));
    Ok(rep)
}

/// Decides whether two extensions of the same base by the same fiber are
/// isomorphic (inducing the identity on base and fiber). The returned
/// isomorphism has been verified.
pub fn extensions_isomorphic(e: &AbelianExtension, e2: &AbelianExtension) -> Result<Option<ExtensionIso>> {
    if e.base != e2.base {
        return Err(Error::Invalid("extensions have different bases".into()));
    }
    if (e.v_dim(), e.w_dim()) != (e2.v_dim(), e2.w_dim()) {
        return Err(Error::Invalid("extensions have different fiber dimensions".into()));
    }
    let (s, s2) = (e.default_section()?, e2.default_section()?);
    let r = induced_representation(e, Some(&s))?;
    let r2 = induced_representation(e2, Some(&s2))?;
    if r != r2 {
        return Ok(None);
    }
    let c = extract_cocycle(e, Some(&s))?;
    let c2 = extract_cocycle(e2, Some(&s2))?;
    let Some(t) = cohomologous(&e.base, &r, &c, &c2)? else {
        return Ok(None);
    };
    let iso = ExtensionIso {
        f: shift_map(&e.j1, &e.l1, &s.s1, &e2.i1, &s2.s1, &t.n1)?,
        g: shift_map(&e.j2, &e.l2, &s.s2, &e2.i2, &s2.s2, &t.n2)?,
    };
    let rep = verify_extension_iso(e, e2, &iso)?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::Certificate(format!("constructed isomorphism fails {}", f.label)));
    }
    Ok(Some(iso))
}

/// `F = s′ j + i′ (L (I − s j)) + i′ T j`: sends `s x + i v` to
/// `s′ x + i′ (v + T x)`.
fn shift_map(
    j: &LinMap,
    l: &RationalMatrix,
    s: &LinMap,
    i2: &LinMap,
    s2: &LinMap,
    t: &RationalMatrix,
) -> Result<LinMap> {
    let dim = j.domain_dim();
    let sj = s.matrix().mul(j.matrix())?;
    let proj = l.mul(&RationalMatrix::identity(dim).sub(&sj)?)?;
    let f = s2.matrix().mul(j.matrix())?.add(&i2.matrix().mul(&proj)?)?.add(&i2.matrix().mul(&t.mul(j.matrix())?)?)?;
    Ok(LinMap::new(f))
}

/// The isomorphism `(x, v) ↦ (x, v + T1 x)`, `(a, w) ↦ (a, w + T2 a)` from
/// the extension of `c` to that of `c − d1 T` (standard coordinates).
pub fn shift_isomorphism(p: &MatchedPair, r: &MPRepresentation, t: &Cochain1) -> ExtensionIso {
    let block = |n: usize, f: usize, tm: &RationalMatrix| {
        let mut m = RationalMatrix::identity(n + f);
        for row in 0..f {
            for col in 0..n {
                m.set(n + row, col, tm.get(row, col).clone());
            }
        }
        LinMap::new(m)
    };
    ExtensionIso { f: block(p.g_dim(), r.v_dim(), &t.n1), g: block(p.h_dim(), r.w_dim(), &t.n2) }
}
