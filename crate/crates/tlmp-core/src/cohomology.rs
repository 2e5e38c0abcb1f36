//! Low-degree cohomology of a matched pair with coefficients in a
//! representation, and infinitesimal deformations.
//!
//! * A 1-cochain is a pair `(N1 : g → V, N2 : h → W)`.
//! * A 2-cochain is a quadruple `(ω, θ, ν, φ)` with `ω : ∧³g → V`,
//!   `θ : ∧³h → W`, `ν : ∧²g → Hom(h, W)` and `φ : ∧²h → Hom(g, V)`.
//! * [`d1`] sends a 1-cochain to the defect of the shifted section in the
//!   corresponding split extension; [`d2`] has twelve components, one for
//!   each identity a twisted semidirect product must satisfy (the fundamental
//!   identity in each factor, the six compatibility identities and the two
//!   representation identities of each action).
//!
//! Coordinates of cochains are listed component by component, each over
//! increasing index tuples in lexicographic order followed by the output
//! coefficient index (see [`Cochain1::coords`], [`Cochain2::coords`]).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlinalg::{
    complement_representatives, image_basis, kernel_basis, member, solve, sub_vec, unit_vec, zero_vec, Rational,
    RationalMatrix, Subspace, Vector,
};
use crate::matched::MatchedPair;
use crate::report::{check_identity, for_each_tuple, var, var_after, Report, Var};
use crate::representation::{adjoint_representation_unchecked, lin, MPRepresentation, Pairing};
use crate::structure::{Alt3, ThreeLie, TriAction};

/// Dimensions `(dim g, dim h, dim V, dim W)` fixing the cochain spaces.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CochainShape {
    pub g: usize,
    pub h: usize,
    pub v: usize,
    pub w: usize,
}

impl CochainShape {
    pub fn of(p: &MatchedPair, r: &MPRepresentation) -> Self {
        CochainShape { g: p.g_dim(), h: p.h_dim(), v: r.v_dim(), w: r.w_dim() }
    }

    /// Shape of deformation cochains (adjoint coefficients).
    pub fn adjoint(p: &MatchedPair) -> Self {
        CochainShape { g: p.g_dim(), h: p.h_dim(), v: p.g_dim(), w: p.h_dim() }
    }

    pub fn c1_dim(&self) -> usize {
        self.g * self.v + self.h * self.w
    }

    pub fn c2_dim(&self) -> usize {
        Alt3::coord_len(self.g, self.v)
            + Alt3::coord_len(self.h, self.w)
            + TriAction::coord_len(self.g, self.h, self.w)
            + TriAction::coord_len(self.h, self.g, self.v)
    }
}

/// A 1-cochain `(N1 : g → V, N2 : h → W)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain1 {
    /// `dim V × dim g` matrix.
    pub n1: RationalMatrix,
    /// `dim W × dim h` matrix.
    pub n2: RationalMatrix,
}

impl Cochain1 {
    pub fn zero(s: CochainShape) -> Self {
        Cochain1 { n1: RationalMatrix::zeros(s.v, s.g), n2: RationalMatrix::zeros(s.w, s.h) }
    }

    pub fn new(s: CochainShape, n1: RationalMatrix, n2: RationalMatrix) -> Result<Self> {
        if (n1.rows(), n1.cols()) != (s.v, s.g) {
            return Err(Error::Shape(format!("N1 is {}×{}, expected {}×{}", n1.rows(), n1.cols(), s.v, s.g)));
        }
        if (n2.rows(), n2.cols()) != (s.w, s.h) {
            return Err(Error::Shape(format!("N2 is {}×{}, expected {}×{}", n2.rows(), n2.cols(), s.w, s.h)));
        }
        Ok(Cochain1 { n1, n2 })
    }

    pub fn shape_matches(&self, s: CochainShape) -> bool {
        (self.n1.rows(), self.n1.cols(), self.n2.rows(), self.n2.cols()) == (s.v, s.g, s.w, s.h)
    }

    /// Coordinates: `N1(e_x)_c` for `x` then `c`, followed by `N2` likewise.
    pub fn coords(&self) -> Vector {
        let mut out = Vec::with_capacity(self.n1.rows() * self.n1.cols() + self.n2.rows() * self.n2.cols());
        for m in [&self.n1, &self.n2] {
            for x in 0..m.cols() {
                for c in 0..m.rows() {
                    out.push(m.get(c, x).clone());
                }
            }
        }
        out
    }

    pub fn from_coords(s: CochainShape, coords: &[Rational]) -> Result<Self> {
        if coords.len() != s.c1_dim() {
            return Err(Error::dimension("1-cochain coordinates", s.c1_dim(), coords.len()));
        }
        let mut c = Cochain1::zero(s);
        let mut idx = 0;
        for m in [&mut c.n1, &mut c.n2] {
            for x in 0..m.cols() {
                for r in 0..m.rows() {
                    m.set(r, x, coords[idx].clone());
                    idx += 1;
                }
            }
        }
        Ok(c)
    }

    fn mirror(&self) -> Cochain1 {
        Cochain1 { n1: self.n2.clone(), n2: self.n1.clone() }
    }
}

/// A 2-cochain `(ω, θ, ν, φ)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain2 {
    /// `ω : ∧³g → V`.
    pub omega: Alt3,
    /// `θ : ∧³h → W`.
    pub theta: Alt3,
    /// `ν(x1, x2) a ∈ W`.
    pub nu: TriAction,
    /// `φ(a1, a2) x ∈ V`.
    pub phi: TriAction,
}

impl Cochain2 {
    pub fn zero(s: CochainShape) -> Self {
        Cochain2 {
            omega: Alt3::zero(s.g, s.v),
            theta: Alt3::zero(s.h, s.w),
            nu: TriAction::zero(s.g, s.h, s.w),
            phi: TriAction::zero(s.h, s.g, s.v),
        }
    }

    pub fn shape_matches(&self, s: CochainShape) -> bool {
        (self.omega.n(), self.omega.m()) == (s.g, s.v)
            && (self.theta.n(), self.theta.m()) == (s.h, s.w)
            && (self.nu.n(), self.nu.t(), self.nu.m()) == (s.g, s.h, s.w)
            && (self.phi.n(), self.phi.t(), self.phi.m()) == (s.h, s.g, s.v)
    }

    pub fn check_shape(&self, s: CochainShape) -> Result<()> {
        if self.shape_matches(s) {
            Ok(())
        } else {
            Err(Error::Shape(format!("2-cochain does not have shape {s:?}")))
        }
    }

    /// Coordinates of `ω`, `θ`, `ν`, `φ` in this order.
    pub fn coords(&self) -> Vector {
        let mut out = self.omega.coords();
        out.extend(self.theta.coords());
        out.extend(self.nu.coords());
        out.extend(self.phi.coords());
        out
    }

    pub fn from_coords(s: CochainShape, coords: &[Rational]) -> Result<Self> {
        if coords.len() != s.c2_dim() {
            return Err(Error::dimension("2-cochain coordinates", s.c2_dim(), coords.len()));
        }
        let l1 = Alt3::coord_len(s.g, s.v);
        let l2 = l1 + Alt3::coord_len(s.h, s.w);
        let l3 = l2 + TriAction::coord_len(s.g, s.h, s.w);
        Ok(Cochain2 {
            omega: Alt3::from_coords(s.g, s.v, &coords[..l1])?,
            theta: Alt3::from_coords(s.h, s.w, &coords[l1..l2])?,
            nu: TriAction::from_coords(s.g, s.h, s.w, &coords[l2..l3])?,
            phi: TriAction::from_coords(s.h, s.g, s.v, &coords[l3..])?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(Zero::is_zero)
    }

    /// `self + c · other` computed coordinatewise.
    pub fn add_scaled(&self, c: &Rational, other: &Cochain2, s: CochainShape) -> Result<Cochain2> {
        let mut x = self.coords();
        let y = other.coords();
        if x.len() != y.len() {
            return Err(Error::Shape("2-cochains of different shapes".into()));
        }
        for (a, b) in x.iter_mut().zip(&y) {
            *a += c * b;
        }
        Cochain2::from_coords(s, &x)
    }

    fn mirror(&self) -> Cochain2 {
        Cochain2 { omega: self.theta.clone(), theta: self.omega.clone(), nu: self.phi.clone(), phi: self.nu.clone() }
    }
}

/// All the structure needed to evaluate coboundaries, seen from the `g`
/// side; [`View::mirror`] exchanges the roles of `g` and `h`.
#[derive(Clone, Copy)]
struct View<'a> {
    g: &'a ThreeLie,
    h: &'a ThreeLie,
    rho: &'a TriAction,
    psi: &'a TriAction,
    rv: &'a TriAction,
    rw: &'a TriAction,
    pv: &'a TriAction,
    pw: &'a TriAction,
    al: &'a Pairing,
    be: &'a Pairing,
    dv: usize,
    dw: usize,
}

impl<'a> View<'a> {
    fn new(p: &'a MatchedPair, r: &'a MPRepresentation) -> Self {
        View {
            g: &p.g,
            h: &p.h,
            rho: &p.rho,
            psi: &p.psi,
            rv: &r.rho_v,
            rw: &r.rho_w,
            pv: &r.psi_v,
            pw: &r.psi_w,
            al: &r.alpha,
            be: &r.beta,
            dv: r.v_dim(),
            dw: r.w_dim(),
        }
    }

    fn mirror(self) -> Self {
        View {
            g: self.h,
            h: self.g,
            rho: self.psi,
            psi: self.rho,
            rv: self.pw,
            rw: self.pv,
            pv: self.rw,
            pw: self.rv,
            al: self.be,
            be: self.al,
            dv: self.dw,
            dw: self.dv,
        }
    }

    fn gb(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        self.g.br(x, y, z)
    }

    fn hb(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        self.h.br(x, y, z)
    }

    fn rho(&self, x1: &[Rational], x2: &[Rational], a: &[Rational]) -> Vector {
        self.rho.eval(x1, x2, a)
    }

    fn psi(&self, a1: &[Rational], a2: &[Rational], x: &[Rational]) -> Vector {
        self.psi.eval(a1, a2, x)
    }

    fn rv(&self, x1: &[Rational], x2: &[Rational], v: &[Rational]) -> Vector {
        self.rv.eval(x1, x2, v)
    }

    fn rw(&self, x1: &[Rational], x2: &[Rational], w: &[Rational]) -> Vector {
        self.rw.eval(x1, x2, w)
    }

    fn pv(&self, a1: &[Rational], a2: &[Rational], v: &[Rational]) -> Vector {
        self.pv.eval(a1, a2, v)
    }

    fn pw(&self, a1: &[Rational], a2: &[Rational], w: &[Rational]) -> Vector {
        self.pw.eval(a1, a2, w)
    }

    fn al(&self, v: &[Rational], x: &[Rational], a: &[Rational]) -> Vector {
        self.al.eval(v, x, a)
    }

    fn be(&self, w: &[Rational], a: &[Rational], x: &[Rational]) -> Vector {
        self.be.eval(w, a, x)
    }
}

// ---------------------------------------------------------------------------
// D1

fn apply(m: &RationalMatrix, v: &[Rational]) -> Vector {
    m.mul_vec(v).expect("cochain shape checked")
}

/// `ω`-component of `d1`, seen from the `g` side.
fn d1_omega(s: &View, c: &Cochain1, x1: &Vector, x2: &Vector, x3: &Vector) -> Vector {
    let n = |x: &Vector| apply(&c.n1, x);
    lin(
        s.dv,
        &[
            (1, &s.rv(x2, x3, &n(x1))),
            (1, &s.rv(x3, x1, &n(x2))),
            (1, &s.rv(x1, x2, &n(x3))),
            (-1, &n(&s.gb(x1, x2, x3))),
        ],
    )
}

/// `ν`-component of `d1`, seen from the `g` side.
fn d1_nu(s: &View, c: &Cochain1, x1: &Vector, x2: &Vector, a: &Vector) -> Vector {
    lin(
        s.dw,
        &[
            (1, &s.rw(x1, x2, &apply(&c.n2, a))),
            (-1, &apply(&c.n2, &s.rho(x1, x2, a))),
            (1, &s.al(&apply(&c.n1, x1), x2, a)),
            (-1, &s.al(&apply(&c.n1, x2), x1, a)),
        ],
    )
}

fn units(n: usize) -> Vec<Vector> {
    (0..n).map(|i| unit_vec(n, i)).collect()
}

/// The coboundary of a 1-cochain:
///
/// * `ω(x1,x2,x3) = ρ_V(x2,x3)N1x1 + ρ_V(x3,x1)N1x2 + ρ_V(x1,x2)N1x3 − N1[x1,x2,x3]`
/// * `θ` likewise with `ψ_W`, `N2` and the bracket of `h`;
/// * `ν(x1,x2)a = ρ_W(x1,x2)N2a − N2ρ(x1,x2)a + α(N1x1,x2)a − α(N1x2,x1)a`
/// * `φ(a1,a2)x = ψ_V(a1,a2)N1x − N1ψ(a1,a2)x + β(N2a1,a2)x − β(N2a2,a1)x`.
pub fn d1(p: &MatchedPair, r: &MPRepresentation, c: &Cochain1) -> Result<Cochain2> {
    let s = CochainShape::of(p, r);
    if !c.shape_matches(s) {
        return Err(Error::Shape(format!("1-cochain does not have shape {s:?}")));
    }
    Ok(d1_view(View::new(p, r), s, c))
}

fn d1_view(v: View, s: CochainShape, c: &Cochain1) -> Cochain2 {
    let mv = v.mirror();
    let mc = c.mirror();
    let (gu, hu) = (units(s.g), units(s.h));
    let omega = Alt3::from_fn(s.g, s.v, |i, j, k| Ok(d1_omega(&v, c, &gu[i], &gu[j], &gu[k]))).expect("shapes agree");
    let theta = Alt3::from_fn(s.h, s.w, |i, j, k| Ok(d1_omega(&mv, &mc, &hu[i], &hu[j], &hu[k]))).expect("shapes agree");
    let nu = TriAction::from_fn(s.g, s.h, s.w, |i, j, t| Ok(d1_nu(&v, c, &gu[i], &gu[j], &hu[t]))).expect("shapes agree");
    let phi =
        TriAction::from_fn(s.h, s.g, s.v, |i, j, t| Ok(d1_nu(&mv, &mc, &hu[i], &hu[j], &gu[t]))).expect("shapes agree");
    Cochain2 { omega, theta, nu, phi }
}

/// Matrix of `d1` in cochain coordinates (`dim C² × dim C¹`).
pub fn d1_matrix(p: &MatchedPair, r: &MPRepresentation) -> Result<RationalMatrix> {
    let s = CochainShape::of(p, r);
    let view = View::new(p, r);
    let cols: Vec<Vector> = (0..s.c1_dim())
        .map(|k| {
            let c = Cochain1::from_coords(s, &unit_vec(s.c1_dim(), k)).expect("shape agrees");
            d1_view(view, s, &c).coords()
        })
        .collect();
    RationalMatrix::from_columns(s.c2_dim(), &cols)
}

// ---------------------------------------------------------------------------
// D2

/// Labels of the twelve components of `d2`, in coordinate order.
pub const D2_LABELS: [&str; 12] = [
    "2co-1",
    "2co-2",
    "2co-3",
    "2co-4",
    "2co-5",
    "2co-6",
    "2co-7",
    "2co-8",
    "2co-rho-1",
    "2co-rho-2",
    "2co-psi-1",
    "2co-psi-2",
];

/// For each component: the `g`-side formula it is computed from and whether
/// the view is mirrored.
fn d2_kind(k: usize) -> (usize, bool) {
    match k {
        0 => (0, false),  // 2co-1
        1 => (1, false),  // 2co-2
        2 => (1, true),   // 2co-3
        3 => (2, false),  // 2co-4
        4 => (2, true),   // 2co-5
        5 => (3, false),  // 2co-6
        6 => (3, true),   // 2co-7
        7 => (0, true),   // 2co-8
        8 => (4, false),  // 2co-rho-1
        9 => (5, false),  // 2co-rho-2
        10 => (4, true),  // 2co-psi-1
        11 => (5, true),  // 2co-psi-2
        _ => panic!("coboundary component index {k} out of range"),
    }
}

/// Canonical variables of a `g`-side formula (`n = dim g`, `m = dim h`),
/// named for the unmirrored case.
fn base_vars(f: usize, n: usize, m: usize, mirrored: bool) -> Vec<Var> {
    // Names: `x*` for arguments in the acting-side algebra, `a*` for the other.
    let (xs, as_): ([&'static str; 5], [&'static str; 5]) = if mirrored {
        (["a1", "a2", "a3", "a4", "a5"], ["x1", "x2", "x3", "x4", "x5"])
    } else {
        (["x1", "x2", "x3", "x4", "x5"], ["a1", "a2", "a3", "a4", "a5"])
    };
    match f {
        // (x1 < x2, x3 < x4 < x5)
        0 => alloc::vec![var(xs[0], n), var_after(xs[1], n, 0), var(xs[2], n), var_after(xs[3], n, 2), var_after(xs[4], n, 3)],
        // (x1 < x2, a1 < a2 < a3)
        1 => alloc::vec![var(xs[0], n), var_after(xs[1], n, 0), var(as_[0], m), var_after(as_[1], m, 2), var_after(as_[2], m, 3)],
        // (x1 < x2, x3, a1, a2)
        2 => alloc::vec![var(xs[0], n), var_after(xs[1], n, 0), var(xs[2], n), var(as_[0], m), var(as_[1], m)],
        // (a1 < a2, x1, x2 < x3)
        3 => alloc::vec![var(as_[0], m), var_after(as_[1], m, 0), var(xs[0], n), var(xs[1], n), var_after(xs[2], n, 3)],
        // (x1 < x2, x3 < x4, a)
        4 => alloc::vec![var(xs[0], n), var_after(xs[1], n, 0), var(xs[2], n), var_after(xs[3], n, 2), var(as_[0], m)],
        // (x1 < x2 < x3, x4, a)
        5 => alloc::vec![var(xs[0], n), var_after(xs[1], n, 0), var_after(xs[2], n, 1), var(xs[3], n), var(as_[0], m)],
        _ => unreachable!(),
    }
}

/// Canonical argument variables of component `k` of `d2`: one
/// representative per orbit of the antisymmetries it enjoys.
pub(crate) fn d2_vars(k: usize, s: CochainShape) -> Vec<Var> {
    let (f, mirrored) = d2_kind(k);
    let (n, m) = if mirrored { (s.h, s.g) } else { (s.g, s.h) };
    base_vars(f, n, m, mirrored)
}

/// All argument variables of component `k` (no ordering constraints).
pub(crate) fn d2_vars_full(k: usize, s: CochainShape) -> Vec<Var> {
    d2_vars(k, s).into_iter().map(|v| Var { after: None, ..v }).collect()
}

/// Output dimension of component `k`.
pub fn d2_component_dim(k: usize, s: CochainShape) -> usize {
    let (f, mirrored) = d2_kind(k);
    let on_v = matches!(f, 0 | 2 | 3) ^ mirrored;
    if on_v {
        s.v
    } else {
        s.w
    }
}

/// Argument names of component `k` in evaluation order.
pub fn d2_arg_names(k: usize) -> Vec<&'static str> {
    let s = CochainShape { g: 1, h: 1, v: 1, w: 1 };
    d2_vars(k, s).into_iter().map(|v| v.name).collect()
}

/// Argument spaces of component `k`: `false` for `g`, `true` for `h`.
pub fn d2_arg_spaces(k: usize) -> Vec<bool> {
    let s = CochainShape { g: 1, h: 2, v: 1, w: 1 };
    d2_vars(k, s).into_iter().map(|v| v.dim == 2).collect()
}

struct CView<'a> {
    s: View<'a>,
    c: &'a Cochain2,
}

impl CView<'_> {
    fn om(&self, x1: &[Rational], x2: &[Rational], x3: &[Rational]) -> Vector {
        self.c.omega.eval(x1, x2, x3)
    }

    fn th(&self, a1: &[Rational], a2: &[Rational], a3: &[Rational]) -> Vector {
        self.c.theta.eval(a1, a2, a3)
    }

    fn nu(&self, x1: &[Rational], x2: &[Rational], a: &[Rational]) -> Vector {
        self.c.nu.eval(x1, x2, a)
    }

    fn ph(&self, a1: &[Rational], a2: &[Rational], x: &[Rational]) -> Vector {
        self.c.phi.eval(a1, a2, x)
    }
}

/// Evaluates the `g`-side formula `f` (residual = right side − left side).
fn d2_formula(cv: &CView, f: usize, a: &[Vector]) -> Vector {
    let s = &cv.s;
    match f {
        0 => {
            let (x1, x2, x3, x4, x5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                s.dv,
                &[
                    (1, &s.rv(x4, x5, &cv.om(x1, x2, x3))),
                    (1, &s.rv(x5, x3, &cv.om(x1, x2, x4))),
                    (1, &s.rv(x3, x4, &cv.om(x1, x2, x5))),
                    (1, &cv.om(&s.gb(x1, x2, x3), x4, x5)),
                    (1, &cv.om(x3, &s.gb(x1, x2, x4), x5)),
                    (1, &cv.om(x3, x4, &s.gb(x1, x2, x5))),
                    (-1, &s.rv(x1, x2, &cv.om(x3, x4, x5))),
                    (-1, &cv.om(x1, x2, &s.gb(x3, x4, x5))),
                ],
            )
        }
        1 => {
            let (x1, x2, a1, a2, a3) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                s.dw,
                &[
                    (1, &s.pw(a2, a3, &cv.nu(x1, x2, a1))),
                    (1, &s.pw(a3, a1, &cv.nu(x1, x2, a2))),
                    (1, &s.pw(a1, a2, &cv.nu(x1, x2, a3))),
                    (1, &cv.th(&s.rho(x1, x2, a1), a2, a3)),
                    (1, &cv.th(a1, &s.rho(x1, x2, a2), a3)),
                    (1, &cv.th(a1, a2, &s.rho(x1, x2, a3))),
                    (-1, &s.rw(x1, x2, &cv.th(a1, a2, a3))),
                    (-1, &cv.nu(x1, x2, &s.hb(a1, a2, a3))),
                ],
            )
        }
        2 => {
            let (x1, x2, x3, a1, a2) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                s.dv,
                &[
                    (1, &s.be(&cv.nu(x1, x3, a2), a1, x2)),
                    (1, &cv.ph(&s.rho(x1, x3, a2), a1, x2)),
                    (-1, &s.be(&cv.nu(x2, x3, a2), a1, x1)),
                    (-1, &cv.ph(&s.rho(x2, x3, a2), a1, x1)),
                    (1, &s.rv(x1, x2, &cv.ph(a1, a2, x3))),
                    (1, &cv.om(x1, x2, &s.psi(a1, a2, x3))),
                    (-1, &s.be(&cv.nu(x1, x2, a1), a2, x3)),
                    (-1, &cv.ph(&s.rho(x1, x2, a1), a2, x3)),
                ],
            )
        }
        3 => {
            let (a1, a2, x1, x2, x3) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                s.dv,
                &[
                    (1, &s.pv(a1, a2, &cv.om(x1, x2, x3))),
                    (1, &cv.ph(a1, a2, &s.gb(x1, x2, x3))),
                    (1, &cv.ph(&s.rho(x2, x3, a1), a2, x1)),
                    (1, &s.be(&cv.nu(x2, x3, a1), a2, x1)),
                    (1, &cv.ph(a1, &s.rho(x2, x3, a2), x1)),
                    (-1, &s.be(&cv.nu(x2, x3, a2), a1, x1)),
                    (-1, &cv.om(&s.psi(a1, a2, x1), x2, x3)),
                    (-1, &s.rv(x2, x3, &cv.ph(a1, a2, x1))),
                ],
            )
        }
        4 => {
            let (x1, x2, x3, x4, b) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                s.dw,
                &[
                    (1, &cv.nu(&s.gb(x1, x2, x3), x4, b)),
                    (1, &s.al(&cv.om(x1, x2, x3), x4, b)),
                    (1, &cv.nu(x3, &s.gb(x1, x2, x4), b)),
                    (-1, &s.al(&cv.om(x1, x2, x4), x3, b)),
                    (1, &s.rw(x3, x4, &cv.nu(x1, x2, b))),
                    (1, &cv.nu(x3, x4, &s.rho(x1, x2, b))),
                    (-1, &s.rw(x1, x2, &cv.nu(x3, x4, b))),
                    (-1, &cv.nu(x1, x2, &s.rho(x3, x4, b))),
                ],
            )
        }
        5 => {
            let (x1, x2, x3, x4, b) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            let mut terms: Vec<(i64, Vector)> = Vec::new();
            for (xi, xj, xk) in [(x2, x3, x1), (x3, x1, x2), (x1, x2, x3)] {
                terms.push((1, s.rw(xi, xj, &cv.nu(xk, x4, b))));
                terms.push((1, cv.nu(xi, xj, &s.rho(xk, x4, b))));
            }
            terms.push((-1, cv.nu(&s.gb(x1, x2, x3), x4, b)));
            terms.push((-1, s.al(&cv.om(x1, x2, x3), x4, b)));
            let refs: Vec<(i64, &Vector)> = terms.iter().map(|(c, v)| (*c, v)).collect();
            lin(s.dw, &refs)
        }
        _ => unreachable!(),
    }
}

fn d2_eval(view: View, c: &Cochain2, mc: &Cochain2, k: usize, args: &[Vector]) -> Vector {
    let (f, mirrored) = d2_kind(k);
    if mirrored {
        d2_formula(&CView { s: view.mirror(), c: mc }, f, args)
    } else {
        d2_formula(&CView { s: view, c }, f, args)
    }
}

/// Value of component `k` of `d2 c` at the given arguments (ordered as in
/// [`d2_arg_names`]); any arguments are accepted, not only canonical ones.
pub fn d2_component_value(
    p: &MatchedPair,
    r: &MPRepresentation,
    c: &Cochain2,
    k: usize,
    args: &[Vector],
) -> Result<Vector> {
    let s = CochainShape::of(p, r);
    c.check_shape(s)?;
    if k >= D2_LABELS.len() {
        return Err(Error::Invalid(format!("coboundary component index {k} out of range")));
    }
    let vars = d2_vars(k, s);
    if args.len() != vars.len() {
        return Err(Error::dimension("coboundary arguments", vars.len(), args.len()));
    }
    for (a, v) in args.iter().zip(&vars) {
        if a.len() != v.dim {
            return Err(Error::dimension("coboundary argument", v.dim, a.len()));
        }
    }
    Ok(d2_eval(View::new(p, r), c, &c.mirror(), k, args))
}

/// One component of a 3-cochain: values on the canonical argument tuples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component3 {
    pub label: &'static str,
    pub arg_names: Vec<&'static str>,
    pub tuples: Vec<Vec<usize>>,
    pub values: Vec<Vector>,
}

/// The image of a 2-cochain under `d2`: twelve components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain3Image {
    pub components: Vec<Component3>,
}

impl Cochain3Image {
    /// Concatenated values, component by component.
    pub fn coords(&self) -> Vector {
        self.components.iter().flat_map(|c| c.values.iter().flatten().cloned()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.values.iter().flatten().all(Zero::is_zero))
    }
}

fn d2_view(view: View, s: CochainShape, c: &Cochain2) -> Cochain3Image {
    let mc = c.mirror();
    let components = (0..D2_LABELS.len())
        .map(|k| {
            let (f, mirrored) = d2_kind(k);
            let cv = if mirrored { CView { s: view.mirror(), c: &mc } } else { CView { s: view, c } };
            let vars = d2_vars(k, s);
            let mut tuples = Vec::new();
            let mut values = Vec::new();
            for_each_tuple(&vars, |choice, args| {
                tuples.push(choice.iter().map(|x| x.expect("basis variable")).collect());
                values.push(d2_formula(&cv, f, args));
                true
            });
            Component3 { label: D2_LABELS[k], arg_names: vars.iter().map(|v| v.name).collect(), tuples, values }
        })
        .collect();
    Cochain3Image { components }
}

/// The coboundary of a 2-cochain, on canonical argument tuples.
pub fn d2(p: &MatchedPair, r: &MPRepresentation, c: &Cochain2) -> Result<Cochain3Image> {
    let s = CochainShape::of(p, r);
    c.check_shape(s)?;
    Ok(d2_view(View::new(p, r), s, c))
}

/// Matrix of `d2` (`dim C³ × dim C²`, rows ordered as
/// [`Cochain3Image::coords`]).
pub fn d2_matrix(p: &MatchedPair, r: &MPRepresentation) -> Result<RationalMatrix> {
    let s = CochainShape::of(p, r);
    let view = View::new(p, r);
    let cols: Vec<Vector> = (0..s.c2_dim())
        .map(|k| {
            let c = Cochain2::from_coords(s, &unit_vec(s.c2_dim(), k)).expect("shape agrees");
            d2_view(view, s, &c).coords()
        })
        .collect();
    let rows = d2_view(view, s, &Cochain2::zero(s)).coords().len();
    RationalMatrix::from_columns(rows, &cols)
}

/// Checks the twelve cocycle equations, reporting the first violating
/// canonical tuple of each.
pub fn is_cocycle2(p: &MatchedPair, r: &MPRepresentation, c: &Cochain2) -> Result<Report> {
    let s = CochainShape::of(p, r);
    c.check_shape(s)?;
    let view = View::new(p, r);
    let mc = c.mirror();
    let mut rep = Report::new("2-cocycle equations");
    for (k, label) in D2_LABELS.iter().enumerate() {
        let vars = d2_vars(k, s);
        rep.push(check_identity(*label, &vars, |args| {
            let res = d2_eval(view, c, &mc, k, args);
            let z = zero_vec(res.len());
            (res, z)
        }));
    }
    Ok(rep)
}

/// The first failing cocycle equation, as an error.
pub fn require_cocycle2(p: &MatchedPair, r: &MPRepresentation, c: &Cochain2) -> Result<()> {
    let rep = is_cocycle2(p, r, c)?;
    match rep.first_failure() {
        Some(f) => Err(Error::NotCocycle { label: f.label.clone() }),
        None => Ok(()),
    }
}

/// Solves `d1 N = c`; `None` if `c` is not a coboundary.
pub fn is_coboundary2(p: &MatchedPair, r: &MPRepresentation, c: &Cochain2) -> Result<Option<Cochain1>> {
    let s = CochainShape::of(p, r);
    c.check_shape(s)?;
    let m = d1_matrix(p, r)?;
    match solve(&m, &c.coords())?.solution() {
        Some(x) => Ok(Some(Cochain1::from_coords(s, &x)?)),
        None => Ok(None),
    }
}

/// Solves `d1 N = c − c′`; `Some(N)` iff the cochains are cohomologous.
pub fn cohomologous(p: &MatchedPair, r: &MPRepresentation, c: &Cochain2, c2: &Cochain2) -> Result<Option<Cochain1>> {
    let s = CochainShape::of(p, r);
    c.check_shape(s)?;
    c2.check_shape(s)?;
    let diff = Cochain2::from_coords(s, &sub_vec(&c.coords(), &c2.coords()))?;
    is_coboundary2(p, r, &diff)
}

/// Basis of the space of 1-cocycles `ker d1`, in 1-cochain coordinates.
pub fn z1_basis(p: &MatchedPair, r: &MPRepresentation) -> Result<Subspace> {
    Ok(kernel_basis(&d1_matrix(p, r)?))
}

/// Basis of the space of 2-cocycles `ker d2`.
pub fn z2_basis(p: &MatchedPair, r: &MPRepresentation) -> Result<Subspace> {
    Ok(kernel_basis(&d2_matrix(p, r)?))
}

/// Basis of the space of 2-coboundaries `im d1`.
pub fn b2_basis(p: &MatchedPair, r: &MPRepresentation) -> Result<Subspace> {
    Ok(image_basis(&d1_matrix(p, r)?))
}

/// Summary of the second cohomology.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SecondCohomology {
    pub shape: CochainShape,
    pub c1_dim: usize,
    pub c2_dim: usize,
    pub z1: Subspace,
    pub z2: Subspace,
    pub b2: Subspace,
    /// Cocycles whose classes form a basis of `H²`.
    pub representatives: Vec<Vector>,
}

impl SecondCohomology {
    pub fn h2_dim(&self) -> usize {
        self.z2.dim() - self.b2.dim()
    }

    pub fn h1_dim(&self) -> usize {
        self.z1.dim()
    }
}

/// Computes `Z¹`, `Z²`, `B²` and a basis of `H²`, checking `B² ⊆ Z²`.
pub fn second_cohomology(p: &MatchedPair, r: &MPRepresentation) -> Result<SecondCohomology> {
    let shape = CochainShape::of(p, r);
    let m1 = d1_matrix(p, r)?;
    let m2 = d2_matrix(p, r)?;
    let z1 = kernel_basis(&m1);
    let b2 = image_basis(&m1);
    let z2 = kernel_basis(&m2);
    for b in b2.basis() {
        if member(b, &z2)?.is_none() {
            return Err(Error::NotContained { vector: b.clone() });
        }
    }
    let representatives = complement_representatives(&z2, &b2)?;
    Ok(SecondCohomology { shape, c1_dim: shape.c1_dim(), c2_dim: shape.c2_dim(), z1, z2, b2, representatives })
}

/// `dim H²`.
pub fn h2_dim(p: &MatchedPair, r: &MPRepresentation) -> Result<usize> {
    Ok(second_cohomology(p, r)?.h2_dim())
}

// ---------------------------------------------------------------------------
// Deformations

/// Labels of the deformation equations, paired index-wise with
/// [`D2_LABELS`] through [`DEFORMATION_PAIRING`].
pub const DEFORMATION_LABELS: [&str; 12] = [
    "inf-1",
    "inf-2",
    "inf-3",
    "inf-4",
    "inf-5",
    "inf-6",
    "inf-7",
    "inf-8",
    "inf-rho-1",
    "inf-rho-2",
    "inf-psi-1",
    "inf-psi-2",
];

/// `DEFORMATION_PAIRING[i] = k` means equation `DEFORMATION_LABELS[i]` is
/// component `D2_LABELS[k]` of the coboundary with adjoint coefficients.
pub const DEFORMATION_PAIRING: [usize; 12] = [0, 7, 1, 2, 3, 4, 5, 6, 8, 9, 10, 11];

/// Residual (right side − left side) of deformation equation `i` at the
/// given arguments; `d` is an adjoint-shaped 2-cochain
/// `(ω : ∧³g → g, θ : ∧³h → h, ν : ∧²g → gl(h), φ : ∧²h → gl(g))`.
///
/// These are the first-order conditions for the brackets
/// `[·,·,·]_g + tω`, `[·,·,·]_h + tθ` and actions `ρ + tν`, `ψ + tφ` to form
/// a matched pair, written directly in terms of `p`.
pub fn deformation_residual(p: &MatchedPair, d: &Cochain2, i: usize, a: &[Vector]) -> Vector {
    let (n, m) = (p.g_dim(), p.h_dim());
    let gb = |x: &Vector, y: &Vector, z: &Vector| p.g.br(x, y, z);
    let hb = |x: &Vector, y: &Vector, z: &Vector| p.h.br(x, y, z);
    let rho = |x1: &Vector, x2: &Vector, b: &Vector| p.rho(x1, x2, b);
    let psi = |a1: &Vector, a2: &Vector, x: &Vector| p.psi(a1, a2, x);
    let om = |x1: &Vector, x2: &Vector, x3: &Vector| d.omega.eval(x1, x2, x3);
    let th = |a1: &Vector, a2: &Vector, a3: &Vector| d.theta.eval(a1, a2, a3);
    let nu = |x1: &Vector, x2: &Vector, b: &Vector| d.nu.eval(x1, x2, b);
    let ph = |a1: &Vector, a2: &Vector, x: &Vector| d.phi.eval(a1, a2, x);
    match i {
        0 => {
            let (x1, x2, x3, x4, x5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                n,
                &[
                    (1, &gb(&om(x1, x2, x3), x4, x5)),
                    (1, &gb(x3, &om(x1, x2, x4), x5)),
                    (1, &gb(x3, x4, &om(x1, x2, x5))),
                    (1, &om(&gb(x1, x2, x3), x4, x5)),
                    (1, &om(x3, &gb(x1, x2, x4), x5)),
                    (1, &om(x3, x4, &gb(x1, x2, x5))),
                    (-1, &gb(x1, x2, &om(x3, x4, x5))),
                    (-1, &om(x1, x2, &gb(x3, x4, x5))),
                ],
            )
        }
        1 => {
            let (a1, a2, a3, a4, a5) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                m,
                &[
                    (1, &hb(&th(a1, a2, a3), a4, a5)),
                    (1, &hb(a3, &th(a1, a2, a4), a5)),
                    (1, &hb(a3, a4, &th(a1, a2, a5))),
                    (1, &th(&hb(a1, a2, a3), a4, a5)),
                    (1, &th(a3, &hb(a1, a2, a4), a5)),
                    (1, &th(a3, a4, &hb(a1, a2, a5))),
                    (-1, &hb(a1, a2, &th(a3, a4, a5))),
                    (-1, &th(a1, a2, &hb(a3, a4, a5))),
                ],
            )
        }
        2 => {
            let (x1, x2, a1, a2, a3) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                m,
                &[
                    (1, &hb(&nu(x1, x2, a1), a2, a3)),
                    (1, &hb(a1, &nu(x1, x2, a2), a3)),
                    (1, &hb(a1, a2, &nu(x1, x2, a3))),
                    (1, &th(&rho(x1, x2, a1), a2, a3)),
                    (1, &th(a1, &rho(x1, x2, a2), a3)),
                    (1, &th(a1, a2, &rho(x1, x2, a3))),
                    (-1, &rho(x1, x2, &th(a1, a2, a3))),
                    (-1, &nu(x1, x2, &hb(a1, a2, a3))),
                ],
            )
        }
        3 => {
            let (a1, a2, x1, x2, x3) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                n,
                &[
                    (1, &gb(&ph(a1, a2, x1), x2, x3)),
                    (1, &gb(x1, &ph(a1, a2, x2), x3)),
                    (1, &gb(x1, x2, &ph(a1, a2, x3))),
                    (1, &om(&psi(a1, a2, x1), x2, x3)),
                    (1, &om(x1, &psi(a1, a2, x2), x3)),
                    (1, &om(x1, x2, &psi(a1, a2, x3))),
                    (-1, &psi(a1, a2, &om(x1, x2, x3))),
                    (-1, &ph(a1, a2, &gb(x1, x2, x3))),
                ],
            )
        }
        4 => {
            let (x1, x2, x3, a1, a2) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                n,
                &[
                    (1, &psi(&nu(x1, x3, a2), a1, x2)),
                    (1, &ph(&rho(x1, x3, a2), a1, x2)),
                    (-1, &psi(&nu(x2, x3, a2), a1, x1)),
                    (-1, &ph(&rho(x2, x3, a2), a1, x1)),
                    (1, &gb(x1, x2, &ph(a1, a2, x3))),
                    (1, &om(x1, x2, &psi(a1, a2, x3))),
                    (-1, &psi(&nu(x1, x2, a1), a2, x3)),
                    (-1, &ph(&rho(x1, x2, a1), a2, x3)),
                ],
            )
        }
        5 => {
            let (a1, a2, a3, x1, x2) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                m,
                &[
                    (1, &rho(&ph(a1, a3, x2), x1, a2)),
                    (1, &nu(&psi(a1, a3, x2), x1, a2)),
                    (-1, &rho(&ph(a2, a3, x2), x1, a1)),
                    (-1, &nu(&psi(a2, a3, x2), x1, a1)),
                    (1, &hb(a1, a2, &nu(x1, x2, a3))),
                    (1, &th(a1, a2, &rho(x1, x2, a3))),
                    (-1, &rho(&ph(a1, a2, x1), x2, a3)),
                    (-1, &nu(&psi(a1, a2, x1), x2, a3)),
                ],
            )
        }
        6 => {
            let (a1, a2, x1, x2, x3) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                n,
                &[
                    (1, &psi(a1, a2, &om(x1, x2, x3))),
                    (1, &ph(a1, a2, &gb(x1, x2, x3))),
                    (1, &ph(&rho(x2, x3, a1), a2, x1)),
                    (1, &psi(&nu(x2, x3, a1), a2, x1)),
                    (1, &ph(a1, &rho(x2, x3, a2), x1)),
                    (1, &psi(a1, &nu(x2, x3, a2), x1)),
                    (-1, &om(&psi(a1, a2, x1), x2, x3)),
                    (-1, &gb(&ph(a1, a2, x1), x2, x3)),
                ],
            )
        }
        7 => {
            let (x1, x2, a1, a2, a3) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                m,
                &[
                    (1, &rho(x1, x2, &th(a1, a2, a3))),
                    (1, &nu(x1, x2, &hb(a1, a2, a3))),
                    (1, &nu(&psi(a2, a3, x1), x2, a1)),
                    (1, &rho(&ph(a2, a3, x1), x2, a1)),
                    (1, &nu(x1, &psi(a2, a3, x2), a1)),
                    (1, &rho(x1, &ph(a2, a3, x2), a1)),
                    (-1, &th(&rho(x1, x2, a1), a2, a3)),
                    (-1, &hb(&nu(x1, x2, a1), a2, a3)),
                ],
            )
        }
        8 => {
            let (x1, x2, x3, x4, b) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                m,
                &[
                    (1, &nu(&gb(x1, x2, x3), x4, b)),
                    (1, &rho(&om(x1, x2, x3), x4, b)),
                    (1, &nu(x3, &gb(x1, x2, x4), b)),
                    (1, &rho(x3, &om(x1, x2, x4), b)),
                    (1, &nu(x3, x4, &rho(x1, x2, b))),
                    (1, &rho(x3, x4, &nu(x1, x2, b))),
                    (-1, &nu(x1, x2, &rho(x3, x4, b))),
                    (-1, &rho(x1, x2, &nu(x3, x4, b))),
                ],
            )
        }
        9 => {
            let (x1, x2, x3, x4, b) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            let mut terms: Vec<(i64, Vector)> = Vec::new();
            for (xi, xj, xk) in [(x1, x2, x3), (x2, x3, x1), (x3, x1, x2)] {
                terms.push((1, nu(xi, xj, &rho(xk, x4, b))));
                terms.push((1, rho(xi, xj, &nu(xk, x4, b))));
            }
            terms.push((-1, nu(&gb(x1, x2, x3), x4, b)));
            terms.push((-1, rho(&om(x1, x2, x3), x4, b)));
            let refs: Vec<(i64, &Vector)> = terms.iter().map(|(c, v)| (*c, v)).collect();
            lin(m, &refs)
        }
        10 => {
            let (a1, a2, a3, a4, x) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            lin(
                n,
                &[
                    (1, &ph(&hb(a1, a2, a3), a4, x)),
                    (1, &psi(&th(a1, a2, a3), a4, x)),
                    (1, &ph(a3, &hb(a1, a2, a4), x)),
                    (1, &psi(a3, &th(a1, a2, a4), x)),
                    (1, &ph(a3, a4, &psi(a1, a2, x))),
                    (1, &psi(a3, a4, &ph(a1, a2, x))),
                    (-1, &ph(a1, a2, &psi(a3, a4, x))),
                    (-1, &psi(a1, a2, &ph(a3, a4, x))),
                ],
            )
        }
        11 => {
            let (a1, a2, a3, a4, x) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            let mut terms: Vec<(i64, Vector)> = Vec::new();
            for (ai, aj, ak) in [(a1, a2, a3), (a2, a3, a1), (a3, a1, a2)] {
                terms.push((1, ph(ai, aj, &psi(ak, a4, x))));
                terms.push((1, psi(ai, aj, &ph(ak, a4, x))));
            }
            terms.push((-1, ph(&hb(a1, a2, a3), a4, x)));
            terms.push((-1, psi(&th(a1, a2, a3), a4, x)));
            let refs: Vec<(i64, &Vector)> = terms.iter().map(|(c, v)| (*c, v)).collect();
            lin(n, &refs)
        }
        _ => panic!("deformation equation index {i} out of range"),
    }
}

/// Checks that `d` is an infinitesimal deformation of `p`: every deformation
/// equation vanishes on canonical argument tuples.
pub fn verify_deformation(p: &MatchedPair, d: &Cochain2) -> Result<Report> {
    let s = CochainShape::adjoint(p);
    d.check_shape(s)?;
    let mut rep = Report::new("infinitesimal deformation");
    for (i, label) in DEFORMATION_LABELS.iter().enumerate() {
        let vars = d2_vars(DEFORMATION_PAIRING[i], s);
        rep.push(check_identity(*label, &vars, |args| {
            let res = deformation_residual(p, d, i, args);
            let z = zero_vec(res.len());
            (res, z)
        }));
    }
    Ok(rep)
}

/// Decides whether two deformations are equivalent to first order, i.e.
/// whether `d − d′ = d1(f, g)` for some pair of linear maps `f : g → g`,
/// `g : h → h`, computed with adjoint coefficients. Returns `(f, g)`.
pub fn deformations_equivalent(p: &MatchedPair, d: &Cochain2, d2: &Cochain2) -> Result<Option<Cochain1>> {
    let s = CochainShape::adjoint(p);
    d.check_shape(s)?;
    d2.check_shape(s)?;
    let adj = adjoint_representation_unchecked(p);
    cohomologous(p, &adj, d, d2)
}

/// All argument variables of deformation equation `i` (no ordering
/// constraints), for exhaustive comparisons.
pub(crate) fn deformation_vars_full(i: usize, p: &MatchedPair) -> Vec<Var> {
    d2_vars_full(DEFORMATION_PAIRING[i], CochainShape::adjoint(p))
}

/// Compares deformation equation `i` with its paired coboundary component
/// (adjoint coefficients) on *all* basis tuples; returns the first tuple on
/// which they differ.
pub fn compare_deformation_with_d2(p: &MatchedPair, d: &Cochain2, i: usize) -> Result<Option<(Vec<usize>, Vector, Vector)>> {
    let s = CochainShape::adjoint(p);
    d.check_shape(s)?;
    let adj = adjoint_representation_unchecked(p);
    let view = View::new(p, &adj);
    let k = DEFORMATION_PAIRING[i];
    let vars = deformation_vars_full(i, p);
    let md = d.mirror();
    let mut out = None;
    for_each_tuple(&vars, |choice, args| {
        let lhs = deformation_residual(p, d, i, args);
        let rhs = d2_eval(view, d, &md, k, args);
        if lhs != rhs {
            out = Some((choice.iter().map(|c| c.expect("basis variable")).collect(), lhs, rhs));
            return false;
        }
        true
    });
    Ok(out)
}

/// Human-readable description of a cochain shape, used in reports.
pub fn describe_shape(s: CochainShape) -> String {
    format!("dim g = {}, dim h = {}, dim V = {}, dim W = {}", s.g, s.h, s.v, s.w)
}
