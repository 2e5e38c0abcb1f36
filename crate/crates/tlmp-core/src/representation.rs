//! Representations of matched pairs of 3-Lie algebras.
//!
//! A representation of `(g, h; ρ, ψ)` on `(V, W)` consists of
//! representations `ρ_V, ρ_W` of `g` on `V, W`, `ψ_V, ψ_W` of `h` on
//! `V, W`, and two pairings `α : V ⊗ g → Hom(h, W)`, `β : W ⊗ h → Hom(g, V)`,
//! such that `(g ⋉ V, h ⋉ W; ρ ⋉ α, ψ ⋉ β)` is again a matched pair, where
//!
//! `(ρ⋉α)((x1,v1),(x2,v2))(a,w) = (ρ(x1,x2)a, ρ_W(x1,x2)w + α(v1,x2)a − α(v2,x1)a)`
//! `(ψ⋉β)((a1,w1),(a2,w2))(x,v) = (ψ(a1,a2)x, ψ_V(a1,a2)v + β(w1,a2)x − β(w2,a1)x)`.
//!
//! [`verify_mp_representation`] checks this through 24 identities, one per
//! compatibility identity of the semidirect pair with exactly one argument
//! taken from the fiber, plus the representation property of the six
//! actions involved.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::{add_scaled, nonzeros, sub_vec, unit_vec, zero_vec, Rational, Vector};
use crate::matched::{verify_matched_pair, MatchedPair};
use crate::report::{check_identity, var, var0, Report, Var};
use crate::structure::{concat, semidirect_algebra, split, verify_3lie_rep, ThreeLie, TriAction};

/// A trilinear map `ℚᵖ ⊗ ℚ^q ⊗ ℚʳ → ℚᵐ` without symmetry, written
/// `P(u, y) z`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pairing {
    p: usize,
    q: usize,
    r: usize,
    m: usize,
    data: Vec<Rational>,
}

impl Pairing {
    pub fn zero(p: usize, q: usize, r: usize, m: usize) -> Self {
        Pairing { p, q, r, m, data: alloc::vec![Rational::zero(); p * q * r * m] }
    }

    pub fn from_fn<F>(p: usize, q: usize, r: usize, m: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize, usize) -> Result<Vector>,
    {
        let mut t = Pairing::zero(p, q, r, m);
        for i in 0..p {
            for j in 0..q {
                for k in 0..r {
                    let v = f(i, j, k)?;
                    t.set(i, j, k, &v)?;
                }
            }
        }
        Ok(t)
    }

    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (self.p, self.q, self.r, self.m)
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        ((i * self.q + j) * self.r + k) * self.m
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        let o = self.offset(i, j, k);
        &self.data[o..o + self.m]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: &[Rational]) -> Result<()> {
        if i >= self.p || j >= self.q || k >= self.r {
            return Err(Error::Invalid(format!("pairing index ({i},{j},{k}) out of range")));
        }
        if value.len() != self.m {
            return Err(Error::dimension("pairing value", self.m, value.len()));
        }
        let o = self.offset(i, j, k);
        self.data[o..o + self.m].clone_from_slice(value);
        Ok(())
    }

    /// `P(u, y) z` (unchecked lengths).
    pub fn eval(&self, u: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let mut out = zero_vec(self.m);
        for (i, a) in nonzeros(u) {
            for (j, b) in nonzeros(y) {
                let ab = a * b;
                for (k, c) in nonzeros(z) {
                    add_scaled(&mut out, &(&ab * c), self.get(i, j, k));
                }
            }
        }
        out
    }

    /// Coordinates in lexicographic order of `(i, j, k, output)`.
    pub fn coords(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_coords(p: usize, q: usize, r: usize, m: usize, coords: &[Rational]) -> Result<Self> {
        if coords.len() != p * q * r * m {
            return Err(Error::dimension("pairing coordinates", p * q * r * m, coords.len()));
        }
        Ok(Pairing { p, q, r, m, data: coords.to_vec() })
    }

    /// Nonzero entries `((i, j, k), value)`.
    pub fn entries(&self) -> Vec<([usize; 3], Vector)> {
        let mut out = Vec::new();
        for i in 0..self.p {
            for j in 0..self.q {
                for k in 0..self.r {
                    let v = self.get(i, j, k);
                    if !v.iter().all(Zero::is_zero) {
                        out.push(([i, j, k], v.to_vec()));
                    }
                }
            }
        }
        out
    }
}

/// A representation of a matched pair on `(V, W)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPRepresentation {
    v_dim: usize,
    w_dim: usize,
    /// `ρ_V : ∧²g → gl(V)`.
    pub rho_v: TriAction,
    /// `ρ_W : ∧²g → gl(W)`.
    pub rho_w: TriAction,
    /// `ψ_V : ∧²h → gl(V)`.
    pub psi_v: TriAction,
    /// `ψ_W : ∧²h → gl(W)`.
    pub psi_w: TriAction,
    /// `α(v, x) a ∈ W`.
    pub alpha: Pairing,
    /// `β(w, a) x ∈ V`.
    pub beta: Pairing,
}

impl MPRepresentation {
    /// Checks shapes against the pair; the identities are checked by
    /// [`verify_mp_representation`].
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        p: &MatchedPair,
        v_dim: usize,
        w_dim: usize,
        rho_v: TriAction,
        rho_w: TriAction,
        psi_v: TriAction,
        psi_w: TriAction,
        alpha: Pairing,
        beta: Pairing,
    ) -> Result<Self> {
        let r = MPRepresentation { v_dim, w_dim, rho_v, rho_w, psi_v, psi_w, alpha, beta };
        r.check_shapes(p)?;
        Ok(r)
    }

    /// The zero representation on `(ℚ^{v_dim}, ℚ^{w_dim})`.
    pub fn zero(p: &MatchedPair, v_dim: usize, w_dim: usize) -> Self {
        let (n, k) = (p.g_dim(), p.h_dim());
        MPRepresentation {
            v_dim,
            w_dim,
            rho_v: TriAction::zero(n, v_dim, v_dim),
            rho_w: TriAction::zero(n, w_dim, w_dim),
            psi_v: TriAction::zero(k, v_dim, v_dim),
            psi_w: TriAction::zero(k, w_dim, w_dim),
            alpha: Pairing::zero(v_dim, n, k, w_dim),
            beta: Pairing::zero(w_dim, k, n, v_dim),
        }
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn w_dim(&self) -> usize {
        self.w_dim
    }

    /// Verifies that every tensor has the shape dictated by `p` and the
    /// fiber dimensions.
    pub fn check_shapes(&self, p: &MatchedPair) -> Result<()> {
        let (n, k, dv, dw) = (p.g_dim(), p.h_dim(), self.v_dim, self.w_dim);
        let shape = |name: &str, a: &TriAction, want: (usize, usize, usize)| -> Result<()> {
            if (a.n(), a.t(), a.m()) != want {
                return Err(Error::Shape(format!("{name} has shape ({},{},{}), expected {:?}", a.n(), a.t(), a.m(), want)));
            }
            Ok(())
        };
        shape("rhoV", &self.rho_v, (n, dv, dv))?;
        shape("rhoW", &self.rho_w, (n, dw, dw))?;
        shape("psiV", &self.psi_v, (k, dv, dv))?;
        shape("psiW", &self.psi_w, (k, dw, dw))?;
        if self.alpha.dims() != (dv, n, k, dw) {
            return Err(Error::Shape(format!("alpha has shape {:?}, expected {:?}", self.alpha.dims(), (dv, n, k, dw))));
        }
        if self.beta.dims() != (dw, k, n, dv) {
            return Err(Error::Shape(format!("beta has shape {:?}, expected {:?}", self.beta.dims(), (dw, k, n, dv))));
        }
        Ok(())
    }

    pub fn rv(&self, x1: &[Rational], x2: &[Rational], v: &[Rational]) -> Vector {
        self.rho_v.eval(x1, x2, v)
    }

    pub fn rw(&self, x1: &[Rational], x2: &[Rational], w: &[Rational]) -> Vector {
        self.rho_w.eval(x1, x2, w)
    }

    pub fn pv(&self, a1: &[Rational], a2: &[Rational], v: &[Rational]) -> Vector {
        self.psi_v.eval(a1, a2, v)
    }

    pub fn pw(&self, a1: &[Rational], a2: &[Rational], w: &[Rational]) -> Vector {
        self.psi_w.eval(a1, a2, w)
    }

    /// `α(v, x) a`.
    pub fn al(&self, v: &[Rational], x: &[Rational], a: &[Rational]) -> Vector {
        self.alpha.eval(v, x, a)
    }

    /// `β(w, a) x`.
    pub fn be(&self, w: &[Rational], a: &[Rational], x: &[Rational]) -> Vector {
        self.beta.eval(w, a, x)
    }
}

/// Signed linear combination helper.
pub(crate) fn lin(len: usize, terms: &[(i64, &Vector)]) -> Vector {
    let mut out = zero_vec(len);
    for (c, v) in terms {
        add_scaled(&mut out, &Rational::from_integer((*c).into()), v);
    }
    out
}

/// Number of identities in [`representation_identity`].
pub const REP_IDENTITY_COUNT: usize = 24;

/// Label of identity `k` (1-based).
pub fn rep_identity_label(k: usize) -> alloc::string::String {
    format!("R{k}")
}

/// Variables of identity `k` in the order expected by
/// [`representation_identity`].
pub(crate) fn rep_identity_vars(k: usize, n: usize, m: usize, dv: usize, dw: usize) -> Vec<Var> {
    let x = |s| var(s, n);
    let a = |s| var(s, m);
    match k {
        1 => alloc::vec![x("x2"), x("x3"), a("a1"), a("a2"), var("v1", dv)],
        2 => alloc::vec![x("x1"), x("x3"), a("a1"), a("a2"), var("v2", dv)],
        3 => alloc::vec![x("x1"), x("x2"), a("a1"), a("a2"), var("v3", dv)],
        4 | 8 | 10 => alloc::vec![x("x1"), x("x2"), x("x3"), var0("a1", m), var0("a2", m), var0("w1", dw), var0("w2", dw)],
        5 | 9 => alloc::vec![x("x2"), x("x3"), a("a1"), a("a2"), var("v1", dv)],
        6 | 11 => alloc::vec![x("x1"), x("x3"), a("a1"), a("a2"), var("v2", dv)],
        7 | 12 => alloc::vec![x("x1"), x("x2"), a("a1"), a("a2"), var("v3", dv)],
        13 | 17 | 21 => alloc::vec![x("x1"), x("x2"), a("a2"), a("a3"), var("w1", dw)],
        14 | 18 | 23 => alloc::vec![x("x1"), x("x2"), a("a1"), a("a3"), var("w2", dw)],
        15 | 19 | 24 => alloc::vec![x("x1"), x("x2"), a("a1"), a("a2"), var("w3", dw)],
        16 | 20 | 22 => alloc::vec![a("a1"), a("a2"), a("a3"), var0("x1", n), var0("x2", n), var0("v1", dv), var0("v2", dv)],
        _ => panic!("representation identity index {k} out of range"),
    }
}

/// Both sides of representation identity `k ∈ 1..=24`; `args` follow
/// [`rep_identity_vars`].
///
/// Identities 1–12 take values in `V`, 13–24 in `W`; each is the component
/// of a compatibility identity of the semidirect pair in which exactly one
/// argument comes from `V` or `W`.
pub fn representation_identity(p: &MatchedPair, r: &MPRepresentation, k: usize, args: &[Vector]) -> (Vector, Vector) {
    let (dv, dw) = (r.v_dim, r.w_dim);
    let g = |x: &Vector, y: &Vector, z: &Vector| p.g.br(x, y, z);
    let h = |x: &Vector, y: &Vector, z: &Vector| p.h.br(x, y, z);
    let rho = |x1: &Vector, x2: &Vector, a: &Vector| p.rho(x1, x2, a);
    let psi = |a1: &Vector, a2: &Vector, x: &Vector| p.psi(a1, a2, x);
    let rv = |x1: &Vector, x2: &Vector, v: &Vector| r.rv(x1, x2, v);
    let rw = |x1: &Vector, x2: &Vector, w: &Vector| r.rw(x1, x2, w);
    let pv = |a1: &Vector, a2: &Vector, v: &Vector| r.pv(a1, a2, v);
    let pw = |a1: &Vector, a2: &Vector, w: &Vector| r.pw(a1, a2, w);
    let al = |v: &Vector, x: &Vector, a: &Vector| r.al(v, x, a);
    let be = |w: &Vector, a: &Vector, x: &Vector| r.be(w, a, x);
    match k {
        1..=3 => {
            let (y1, y2, a1, a2, v) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = pv(a1, a2, &rv(y1, y2, v));
            let rhs = lin(
                dv,
                &[(1, &rv(&psi(a1, a2, y1), y2, v)), (1, &rv(y1, &psi(a1, a2, y2), v)), (1, &rv(y1, y2, &pv(a1, a2, v)))],
            );
            (lhs, rhs)
        }
        4 | 8 | 10 => {
            let (x1, x2, x3, a1, a2, w1, w2) = (&args[0], &args[1], &args[2], &args[3], &args[4], &args[5], &args[6]);
            let bb = |y: &Vector| sub_vec(&be(w1, a2, y), &be(w2, a1, y));
            match k {
                4 => {
                    let lhs = bb(&g(x1, x2, x3));
                    let rhs = lin(dv, &[(1, &rv(x2, x3, &bb(x1))), (1, &rv(x3, x1, &bb(x2))), (1, &rv(x1, x2, &bb(x3)))]);
                    (lhs, rhs)
                }
                8 => {
                    let lhs = rv(x1, x2, &bb(x3));
                    let rhs = lin(
                        dv,
                        &[
                            (1, &be(&rw(x1, x2, w1), a2, x3)),
                            (-1, &be(w2, &rho(x1, x2, a1), x3)),
                            (-1, &be(&rw(x1, x3, w2), a1, x2)),
                            (1, &be(w1, &rho(x1, x3, a2), x2)),
                            (1, &be(&rw(x2, x3, w2), a1, x1)),
                            (-1, &be(w1, &rho(x2, x3, a2), x1)),
                        ],
                    );
                    (lhs, rhs)
                }
                _ => {
                    let lhs = rv(x2, x3, &bb(x1));
                    let rhs = lin(
                        dv,
                        &[
                            (1, &bb(&g(x1, x2, x3))),
                            (-1, &be(w2, &rho(x2, x3, a1), x1)),
                            (1, &be(w1, &rho(x2, x3, a2), x1)),
                            (1, &be(&rw(x2, x3, w1), a2, x1)),
                            (-1, &be(&rw(x2, x3, w2), a1, x1)),
                        ],
                    );
                    (lhs, rhs)
                }
            }
        }
        5 => {
            let (x2, x3, a1, a2, v1) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = rv(x2, &psi(a1, a2, x3), v1);
            let rhs = lin(
                dv,
                &[
                    (1, &pv(&rho(x2, x3, a2), a1, v1)),
                    (1, &be(&al(v1, x2, a1), a2, x3)),
                    (-1, &be(&al(v1, x3, a2), a1, x2)),
                ],
            );
            (lhs, rhs)
        }
        6 => {
            let (x1, x3, a1, a2, v2) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = rv(x1, &psi(a1, a2, x3), v2);
            let rhs = lin(
                dv,
                &[
                    (1, &pv(&rho(x1, x3, a2), a1, v2)),
                    (1, &be(&al(v2, x1, a1), a2, x3)),
                    (-1, &be(&al(v2, x3, a2), a1, x1)),
                ],
            );
            (lhs, rhs)
        }
        7 => {
            let (x1, x2, a1, a2, v3) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = rv(x1, x2, &pv(a1, a2, v3));
            let rhs = lin(
                dv,
                &[
                    (1, &pv(&rho(x1, x2, a1), a2, v3)),
                    (1, &be(&al(v3, x1, a2), a1, x2)),
                    (-1, &be(&al(v3, x2, a2), a1, x1)),
                ],
            );
            (lhs, rhs)
        }
        9 => {
            let (x2, x3, a1, a2, v1) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = rv(x2, x3, &pv(a1, a2, v1));
            let rhs = lin(
                dv,
                &[
                    (1, &pv(a1, a2, &rv(x2, x3, v1))),
                    (1, &pv(&rho(x2, x3, a1), a2, v1)),
                    (1, &pv(a1, &rho(x2, x3, a2), v1)),
                ],
            );
            (lhs, rhs)
        }
        11 | 12 => {
            // 11: (x1, x3, a1, a2, v2); 12: (x1, x2, a1, a2, v3) — same shape.
            let (x1, y, a1, a2, v) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = rv(&psi(a1, a2, x1), y, v);
            let rhs = lin(
                dv,
                &[(1, &pv(a1, a2, &rv(x1, y, v))), (-1, &be(&al(v, y, a1), a2, x1)), (1, &be(&al(v, y, a2), a1, x1))],
            );
            (lhs, rhs)
        }
        13..=15 => {
            let (x1, x2, b1, b2, w) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = rw(x1, x2, &pw(b1, b2, w));
            let rhs = lin(
                dw,
                &[(1, &pw(&rho(x1, x2, b1), b2, w)), (1, &pw(b1, &rho(x1, x2, b2), w)), (1, &pw(b1, b2, &rw(x1, x2, w)))],
            );
            (lhs, rhs)
        }
        16 | 20 | 22 => {
            let (a1, a2, a3, x1, x2, v1, v2) = (&args[0], &args[1], &args[2], &args[3], &args[4], &args[5], &args[6]);
            let aa = |b: &Vector| sub_vec(&al(v1, x2, b), &al(v2, x1, b));
            match k {
                16 => {
                    let lhs = aa(&h(a1, a2, a3));
                    let rhs = lin(dw, &[(1, &pw(a2, a3, &aa(a1))), (1, &pw(a3, a1, &aa(a2))), (1, &pw(a1, a2, &aa(a3)))]);
                    (lhs, rhs)
                }
                20 => {
                    let lhs = pw(a1, a2, &aa(a3));
                    let rhs = lin(
                        dw,
                        &[
                            (1, &al(&pv(a1, a2, v1), x2, a3)),
                            (-1, &al(v2, &psi(a1, a2, x1), a3)),
                            (-1, &al(&pv(a1, a3, v2), x1, a2)),
                            (1, &al(v1, &psi(a1, a3, x2), a2)),
                            (1, &al(&pv(a2, a3, v2), x1, a1)),
                            (-1, &al(v1, &psi(a2, a3, x2), a1)),
                        ],
                    );
                    (lhs, rhs)
                }
                _ => {
                    let lhs = pw(a2, a3, &aa(a1));
                    let rhs = lin(
                        dw,
                        &[
                            (1, &aa(&h(a1, a2, a3))),
                            (-1, &al(v2, &psi(a2, a3, x1), a1)),
                            (1, &al(v1, &psi(a2, a3, x2), a1)),
                            (1, &al(&pv(a2, a3, v1), x2, a1)),
                            (-1, &al(&pv(a2, a3, v2), x1, a1)),
                        ],
                    );
                    (lhs, rhs)
                }
            }
        }
        17 => {
            let (x1, x2, a2, a3, w1) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = pw(a2, &rho(x1, x2, a3), w1);
            let rhs = lin(
                dw,
                &[
                    (1, &rw(&psi(a2, a3, x2), x1, w1)),
                    (1, &al(&be(w1, a2, x1), x2, a3)),
                    (-1, &al(&be(w1, a3, x2), x1, a2)),
                ],
            );
            (lhs, rhs)
        }
        18 => {
            let (x1, x2, a1, a3, w2) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = pw(a1, &rho(x1, x2, a3), w2);
            let rhs = lin(
                dw,
                &[
                    (1, &rw(&psi(a1, a3, x2), x1, w2)),
                    (1, &al(&be(w2, a1, x1), x2, a3)),
                    (-1, &al(&be(w2, a3, x2), x1, a1)),
                ],
            );
            (lhs, rhs)
        }
        19 => {
            let (x1, x2, a1, a2, w3) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = pw(a1, a2, &rw(x1, x2, w3));
            let rhs = lin(
                dw,
                &[
                    (1, &rw(&psi(a1, a2, x1), x2, w3)),
                    (1, &al(&be(w3, a1, x2), x1, a2)),
                    (-1, &al(&be(w3, a2, x2), x1, a1)),
                ],
            );
            (lhs, rhs)
        }
        21 => {
            let (x1, x2, a2, a3, w1) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = pw(a2, a3, &rw(x1, x2, w1));
            let rhs = lin(
                dw,
                &[
                    (1, &rw(x1, x2, &pw(a2, a3, w1))),
                    (1, &rw(&psi(a2, a3, x1), x2, w1)),
                    (1, &rw(x1, &psi(a2, a3, x2), w1)),
                ],
            );
            (lhs, rhs)
        }
        23 | 24 => {
            // 23: (x1, x2, a1, a3, w2); 24: (x1, x2, a1, a2, w3) — same shape.
            let (x1, x2, a1, b, w) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
            let lhs = pw(&rho(x1, x2, a1), b, w);
            let rhs = lin(
                dw,
                &[(1, &rw(x1, x2, &pw(a1, b, w))), (-1, &al(&be(w, b, x1), x2, a1)), (1, &al(&be(w, b, x2), x1, a1))],
            );
            (lhs, rhs)
        }
        _ => panic!("representation identity index {k} out of range"),
    }
}

/// Checks all conditions for `r` to be a representation of `p`: the 24
/// mixed identities, the representation property of `ρ_V, ρ_W, ψ_V, ψ_W`,
/// and of the two semidirect actions `ρ ⋉ α` and `ψ ⋉ β`.
pub fn verify_mp_representation(p: &MatchedPair, r: &MPRepresentation) -> Result<Report> {
    r.check_shapes(p)?;
    let (n, m, dv, dw) = (p.g_dim(), p.h_dim(), r.v_dim, r.w_dim);
    let mut rep = Report::new("matched pair representation");
    for k in 1..=REP_IDENTITY_COUNT {
        let vars = rep_identity_vars(k, n, m, dv, dw);
        rep.push(check_identity(rep_identity_label(k), &vars, |a| representation_identity(p, r, k, a)));
    }
    rep.absorb("rhoV", verify_3lie_rep(&p.g, &r.rho_v)?);
    rep.absorb("rhoW", verify_3lie_rep(&p.g, &r.rho_w)?);
    rep.absorb("psiV", verify_3lie_rep(&p.h, &r.psi_v)?);
    rep.absorb("psiW", verify_3lie_rep(&p.h, &r.psi_w)?);
    let sd = semidirect_product(p, r)?;
    rep.absorb("rho-semidirect", verify_3lie_rep(&sd.g, &sd.rho)?);
    rep.absorb("psi-semidirect", verify_3lie_rep(&sd.h, &sd.psi)?);
    Ok(rep)
}

/// The semidirect matched pair `(g ⋉ V, h ⋉ W; ρ ⋉ α, ψ ⋉ β)`.
pub fn semidirect_product(p: &MatchedPair, r: &MPRepresentation) -> Result<MatchedPair> {
    r.check_shapes(p)?;
    let (n, m, dv, dw) = (p.g_dim(), p.h_dim(), r.v_dim, r.w_dim);
    let gv = semidirect_algebra(&p.g, &r.rho_v, ThreeLie::default_names("v", dv))?;
    let hw = semidirect_algebra(&p.h, &r.psi_w, ThreeLie::default_names("w", dw))?;
    let one = Rational::one();
    let gu: Vec<Vector> = (0..n + dv).map(|i| unit_vec(n + dv, i)).collect();
    let hu: Vec<Vector> = (0..m + dw).map(|i| unit_vec(m + dw, i)).collect();
    let rho = TriAction::from_fn(n + dv, m + dw, m + dw, |i, j, s| {
        let (x1, v1) = split(&gu[i], n);
        let (x2, v2) = split(&gu[j], n);
        let (a, w) = split(&hu[s], m);
        let mut fib = r.rw(x1, x2, w);
        add_scaled(&mut fib, &one, &r.al(v1, x2, a));
        add_scaled(&mut fib, &-&one, &r.al(v2, x1, a));
        Ok(concat(&p.rho(x1, x2, a), &fib))
    })?;
    let psi = TriAction::from_fn(m + dw, n + dv, n + dv, |i, j, s| {
        let (a1, w1) = split(&hu[i], m);
        let (a2, w2) = split(&hu[j], m);
        let (x, v) = split(&gu[s], n);
        let mut fib = r.pv(a1, a2, v);
        add_scaled(&mut fib, &one, &r.be(w1, a2, x));
        add_scaled(&mut fib, &-&one, &r.be(w2, a1, x));
        Ok(concat(&p.psi(a1, a2, x), &fib))
    })?;
    MatchedPair::new(gv, hw, rho, psi)
}

/// The adjoint representation of a matched pair on `(g, h)`:
/// `ρ_V = ad_g`, `ψ_W = ad_h`, `ψ_V = ψ`, `ρ_W = ρ`, `α(v,x)a = ρ(v,x)a`,
/// `β(w,a)x = ψ(w,a)x`. Requires `p` to be a matched pair.
pub fn adjoint_representation(p: &MatchedPair) -> Result<MPRepresentation> {
    let report = verify_matched_pair(p)?;
    if let Some(c) = report.first_failure() {
        return Err(Error::Axiom { label: c.label.clone() });
    }
    Ok(adjoint_representation_unchecked(p))
}

/// The adjoint tensors without checking that `p` is a matched pair.
pub fn adjoint_representation_unchecked(p: &MatchedPair) -> MPRepresentation {
    let (n, m) = (p.g_dim(), p.h_dim());
    let ad = |alg: &ThreeLie| {
        let k = alg.dim();
        TriAction::from_fn(k, k, k, |i, j, s| Ok(alg.bracket().get(i, j, s).to_vec())).expect("shapes agree")
    };
    let alpha = Pairing::from_fn(n, n, m, m, |i, j, k| Ok(p.rho.get(i, j, k).to_vec())).expect("shapes agree");
    let beta = Pairing::from_fn(m, m, n, n, |i, j, k| Ok(p.psi.get(i, j, k).to_vec())).expect("shapes agree");
    MPRepresentation {
        v_dim: n,
        w_dim: m,
        rho_v: ad(&p.g),
        rho_w: p.rho.clone(),
        psi_v: p.psi.clone(),
        psi_w: ad(&p.h),
        alpha,
        beta,
    }
}
