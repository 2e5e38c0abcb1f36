//! Matched pairs of 3-Lie algebras and their bicrossed products.
//!
//! A matched pair `(g, h; ρ, ψ)` consists of representations `ρ` of `g` on
//! `h` and `ψ` of `h` on `g` subject to six compatibility identities
//! (`MP1`–`MP6` below). Equivalently, the bicrossed bracket on `g ⊕ h`
//!
//! `[(x1,a1),(x2,a2),(x3,a3)] = ([x] + ψ(a2,a3)x1 + ψ(a3,a1)x2 + ψ(a1,a2)x3,
//!                               [a] + ρ(x2,x3)a1 + ρ(x3,x1)a2 + ρ(x1,x2)a3)`
//!
//! satisfies the fundamental identity.

use alloc::format;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactlinalg::{add_scaled, unit_vec, Rational, Vector};
use crate::report::{check_identity, var, Report, Var};
use crate::structure::{concat, split, verify_3lie_rep, verify_jacobi, verify_morphism, Alt3, LinMap, ThreeLie, TriAction};

/// A matched pair of 3-Lie algebras. The identities are not checked on
/// construction (use [`verify_matched_pair`]); only shapes are.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatchedPair {
    pub g: ThreeLie,
    pub h: ThreeLie,
    /// `ρ : ∧²g → gl(h)`.
    pub rho: TriAction,
    /// `ψ : ∧²h → gl(g)`.
    pub psi: TriAction,
}

impl MatchedPair {
    pub fn new(g: ThreeLie, h: ThreeLie, rho: TriAction, psi: TriAction) -> Result<Self> {
        let (n, k) = (g.dim(), h.dim());
        if (rho.n(), rho.t(), rho.m()) != (n, k, k) {
            return Err(Error::Shape(format!(
                "rho has shape ({},{},{}), expected ({n},{k},{k})",
                rho.n(),
                rho.t(),
                rho.m()
            )));
        }
        if (psi.n(), psi.t(), psi.m()) != (k, n, n) {
            return Err(Error::Shape(format!(
                "psi has shape ({},{},{}), expected ({k},{n},{n})",
                psi.n(),
                psi.t(),
                psi.m()
            )));
        }
        Ok(MatchedPair { g, h, rho, psi })
    }

    /// The pair `(g, h)` with zero actions.
    pub fn trivial(g: ThreeLie, h: ThreeLie) -> Self {
        let (n, k) = (g.dim(), h.dim());
        MatchedPair { g, h, rho: TriAction::zero(n, k, k), psi: TriAction::zero(k, n, n) }
    }

    pub fn g_dim(&self) -> usize {
        self.g.dim()
    }

    pub fn h_dim(&self) -> usize {
        self.h.dim()
    }

    /// `ρ(x1, x2) a`.
    pub fn rho(&self, x1: &[Rational], x2: &[Rational], a: &[Rational]) -> Vector {
        self.rho.eval(x1, x2, a)
    }

    /// `ψ(a1, a2) x`.
    pub fn psi(&self, a1: &[Rational], a2: &[Rational], x: &[Rational]) -> Vector {
        self.psi.eval(a1, a2, x)
    }

    /// The mirrored pair `(h, g; ψ, ρ)`.
    pub fn mirror(&self) -> MatchedPair {
        MatchedPair { g: self.h.clone(), h: self.g.clone(), rho: self.psi.clone(), psi: self.rho.clone() }
    }
}

fn sum(terms: &[(i64, Vector)], len: usize) -> Vector {
    let mut out = crate::exactlinalg::zero_vec(len);
    for (c, v) in terms {
        add_scaled(&mut out, &Rational::from_integer((*c).into()), v);
    }
    out
}

/// Labels of the six compatibility identities, in order.
pub const MP_LABELS: [&str; 6] = ["MP1", "MP2", "MP3", "MP4", "MP5", "MP6"];

/// Both sides of compatibility identity `k ∈ 1..=6` at the given arguments.
///
/// Argument conventions (`x` in `g`, `a` in `h`):
/// * `MP1(a4,a5,x1,x2,x3)`: `ψ(a4,a5)[x1,x2,x3] = [ψ(a4,a5)x1,x2,x3] + [x1,ψ(a4,a5)x2,x3] + [x1,x2,ψ(a4,a5)x3]`
/// * `MP2(x1,x2,a3,a5,x4)`: `ψ(ρ(x1,x2)a3,a5)x4 = ψ(ρ(x1,x4)a5,a3)x2 − ψ(ρ(x2,x4)a5,a3)x1 + [x1,x2,ψ(a3,a5)x4]`
/// * `MP3(a2,a3,x1,x4,x5)`: `[ψ(a2,a3)x1,x4,x5] = ψ(a2,a3)[x1,x4,x5] + ψ(ρ(x4,x5)a2,a3)x1 + ψ(a2,ρ(x4,x5)a3)x1`
/// * `MP4`–`MP6`: the same with the roles of `(g, ρ)` and `(h, ψ)` exchanged.
pub fn mp_identity(p: &MatchedPair, k: usize, args: [&[Rational]; 5]) -> (Vector, Vector) {
    match k {
        1..=3 => mp_identity_g(&p.g, &p.rho, &p.psi, k, args),
        4..=6 => mp_identity_g(&p.h, &p.psi, &p.rho, k - 3, args),
        _ => panic!("compatibility identity index {k} out of range"),
    }
}

fn mp_identity_g(g: &ThreeLie, rho: &TriAction, psi: &TriAction, k: usize, args: [&[Rational]; 5]) -> (Vector, Vector) {
    let n = g.dim();
    match k {
        1 => {
            let [a4, a5, x1, x2, x3] = args;
            let lhs = psi.eval(a4, a5, &g.br(x1, x2, x3));
            let rhs = sum(
                &[
                    (1, g.br(&psi.eval(a4, a5, x1), x2, x3)),
                    (1, g.br(x1, &psi.eval(a4, a5, x2), x3)),
                    (1, g.br(x1, x2, &psi.eval(a4, a5, x3))),
                ],
                n,
            );
            (lhs, rhs)
        }
        2 => {
            let [x1, x2, a3, a5, x4] = args;
            let lhs = psi.eval(&rho.eval(x1, x2, a3), a5, x4);
            let rhs = sum(
                &[
                    (1, psi.eval(&rho.eval(x1, x4, a5), a3, x2)),
                    (-1, psi.eval(&rho.eval(x2, x4, a5), a3, x1)),
                    (1, g.br(x1, x2, &psi.eval(a3, a5, x4))),
                ],
                n,
            );
            (lhs, rhs)
        }
        3 => {
            let [a2, a3, x1, x4, x5] = args;
            let lhs = g.br(&psi.eval(a2, a3, x1), x4, x5);
            let rhs = sum(
                &[
                    (1, psi.eval(a2, a3, &g.br(x1, x4, x5))),
                    (1, psi.eval(&rho.eval(x4, x5, a2), a3, x1)),
                    (1, psi.eval(a2, &rho.eval(x4, x5, a3), x1)),
                ],
                n,
            );
            (lhs, rhs)
        }
        _ => unreachable!(),
    }
}

/// Variable lists for the six compatibility identities.
pub(crate) fn mp_vars(k: usize, n: usize, m: usize) -> [Var; 5] {
    match k {
        1 => [var("a4", m), var("a5", m), var("x1", n), var("x2", n), var("x3", n)],
        2 => [var("x1", n), var("x2", n), var("a3", m), var("a5", m), var("x4", n)],
        3 => [var("a2", m), var("a3", m), var("x1", n), var("x4", n), var("x5", n)],
        4 => [var("x4", n), var("x5", n), var("a1", m), var("a2", m), var("a3", m)],
        5 => [var("a1", m), var("a2", m), var("x3", n), var("x5", n), var("a4", m)],
        6 => [var("x2", n), var("x3", n), var("a1", m), var("a4", m), var("a5", m)],
        _ => unreachable!(),
    }
}

/// Checks a matched pair: the fundamental identity in `g` and `h`, the
/// representation property of `ρ` and `ψ`, and `MP1`–`MP6`.
pub fn verify_matched_pair(p: &MatchedPair) -> Result<Report> {
    let (n, m) = (p.g_dim(), p.h_dim());
    let mut r = Report::new("matched pair");
    r.absorb("g", verify_jacobi(&p.g));
    r.absorb("h", verify_jacobi(&p.h));
    r.absorb("rho", verify_3lie_rep(&p.g, &p.rho)?);
    r.absorb("psi", verify_3lie_rep(&p.h, &p.psi)?);
    for k in 1..=6 {
        let vars = mp_vars(k, n, m);
        r.push(check_identity(MP_LABELS[k - 1], &vars, |a| mp_identity(p, k, [&a[0], &a[1], &a[2], &a[3], &a[4]])));
    }
    Ok(r)
}

/// The bicrossed product `g ⋈ h` on `g ⊕ h` (coordinates of `g` first).
pub fn bicrossed_product(p: &MatchedPair) -> Result<ThreeLie> {
    let (n, m) = (p.g_dim(), p.h_dim());
    let total = n + m;
    let units: Vec<Vector> = (0..total).map(|i| unit_vec(total, i)).collect();
    let one = Rational::one();
    let b = Alt3::from_fn(total, total, |i, j, k| {
        let (x1, a1) = split(&units[i], n);
        let (x2, a2) = split(&units[j], n);
        let (x3, a3) = split(&units[k], n);
        let mut gx = p.g.br(x1, x2, x3);
        add_scaled(&mut gx, &one, &p.psi(a2, a3, x1));
        add_scaled(&mut gx, &one, &p.psi(a3, a1, x2));
        add_scaled(&mut gx, &one, &p.psi(a1, a2, x3));
        let mut ha = p.h.br(a1, a2, a3);
        add_scaled(&mut ha, &one, &p.rho(x2, x3, a1));
        add_scaled(&mut ha, &one, &p.rho(x3, x1, a2));
        add_scaled(&mut ha, &one, &p.rho(x1, x2, a3));
        Ok(concat(&gx, &ha))
    })?;
    let mut names = p.g.basis().to_vec();
    names.extend(p.h.basis().iter().cloned());
    ThreeLie::new(names, b)
}

/// Checks that `(f, g)` is a morphism of matched pairs `p → q`: both maps
/// are 3-Lie morphisms and they intertwine the actions.
pub fn verify_mp_morphism(f: &LinMap, g: &LinMap, p: &MatchedPair, q: &MatchedPair) -> Result<Report> {
    let mut r = Report::new("matched pair morphism");
    r.absorb("f", verify_morphism(f, &p.g, &q.g)?);
    r.absorb("g", verify_morphism(g, &p.h, &q.h)?);
    let (n, m) = (p.g_dim(), p.h_dim());
    let (fm, gm) = (f.matrix(), g.matrix());
    let ap = |mat: &crate::exactlinalg::RationalMatrix, v: &[Rational]| mat.mul_vec(v).expect("shape checked");
    let vars = [var("x1", n), var("x2", n), var("a", m)];
    r.push(check_identity("rho intertwined", &vars, |a| {
        (ap(gm, &p.rho(&a[0], &a[1], &a[2])), q.rho(&ap(fm, &a[0]), &ap(fm, &a[1]), &ap(gm, &a[2])))
    }));
    let vars = [var("a1", m), var("a2", m), var("x", n)];
    r.push(check_identity("psi intertwined", &vars, |a| {
        (ap(fm, &p.psi(&a[0], &a[1], &a[2])), q.psi(&ap(gm, &a[0]), &ap(gm, &a[1]), &ap(fm, &a[2])))
    }));
    Ok(r)
}
