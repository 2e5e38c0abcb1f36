//! Small named examples used by tests, documentation and the command line.

use alloc::string::String;
use alloc::vec::Vec;

use crate::cohomology::{Cochain2, CochainShape};
use crate::exactlinalg::{int, RationalMatrix};
use crate::matched::MatchedPair;
use crate::representation::{adjoint_representation_unchecked, MPRepresentation, Pairing};
use crate::structure::{entries_from_i64, ThreeLie, TriAction};

/// The simple 4-dimensional 3-Lie algebra `A4`:
/// `[e1,e2,e3] = e4`, `[e1,e2,e4] = −e3`, `[e1,e3,e4] = e2`, `[e2,e3,e4] = −e1`.
pub fn a4() -> ThreeLie {
    let entries = entries_from_i64(&[
        ([0, 1, 2], &[0, 0, 0, 1]),
        ([0, 1, 3], &[0, 0, -1, 0]),
        ([0, 2, 3], &[0, 1, 0, 0]),
        ([1, 2, 3], &[-1, 0, 0, 0]),
    ]);
    ThreeLie::from_entries(ThreeLie::default_names("e", 4), &entries).expect("valid structure constants")
}

/// A 3-dimensional 3-Lie algebra with `[e1,e2,e3] = c` (any `c` is valid).
pub fn three_dim(c: [i64; 3]) -> ThreeLie {
    let entries = entries_from_i64(&[([0, 1, 2], &c)]);
    ThreeLie::from_entries(ThreeLie::default_names("e", 3), &entries).expect("valid structure constants")
}

/// `A4` split as the matched pair `g = ⟨e1,e2⟩`, `h = ⟨e3,e4⟩` (both
/// abelian) with `ρ(e1,e2)e3 = e4`, `ρ(e1,e2)e4 = −e3`, `ψ(e3,e4)e1 = e2`,
/// `ψ(e3,e4)e2 = −e1`; its bicrossed product is `A4`.
pub fn a4_split_pair() -> MatchedPair {
    let mut rho = TriAction::zero(2, 2, 2);
    rho.set(0, 1, 0, &[int(0), int(1)]).expect("in range");
    rho.set(0, 1, 1, &[int(-1), int(0)]).expect("in range");
    let mut psi = TriAction::zero(2, 2, 2);
    psi.set(0, 1, 0, &[int(0), int(1)]).expect("in range");
    psi.set(0, 1, 1, &[int(-1), int(0)]).expect("in range");
    let g = ThreeLie::new(
        alloc::vec![String::from("e1"), String::from("e2")],
        crate::structure::Alt3::zero(2, 2),
    )
    .expect("shape");
    let h = ThreeLie::new(
        alloc::vec![String::from("e3"), String::from("e4")],
        crate::structure::Alt3::zero(2, 2),
    )
    .expect("shape");
    MatchedPair::new(g, h, rho, psi).expect("shapes agree")
}

/// `(g, ℚ^k)` with zero actions, `h` abelian.
pub fn with_abelian(g: ThreeLie, k: usize) -> MatchedPair {
    MatchedPair::trivial(g, ThreeLie::abelian(k))
}

/// Abelian `g = ℚ²`, `h = ℚ²`, `ρ(e1,e2)b1 = b2`, `ψ = 0`.
pub fn rho_only_pair() -> MatchedPair {
    let mut rho = TriAction::zero(2, 2, 2);
    rho.set(0, 1, 0, &[int(0), int(1)]).expect("in range");
    MatchedPair::new(ThreeLie::abelian(2), ThreeLie::abelian(2), rho, TriAction::zero(2, 2, 2)).expect("shapes")
}

/// The zero fixture: `g = h = ℚ²` abelian, zero actions, zero
/// representation on `V = W = ℚ`.
pub fn zero_fixture() -> (MatchedPair, MPRepresentation) {
    let p = MatchedPair::trivial(ThreeLie::abelian(2), ThreeLie::abelian(2));
    let r = MPRepresentation::zero(&p, 1, 1);
    (p, r)
}

/// On the zero fixture: the cochain with only `ν(e1,e2)b1 = w` nonzero.
pub fn unit_nu() -> Cochain2 {
    let s = CochainShape { g: 2, h: 2, v: 1, w: 1 };
    let mut c = Cochain2::zero(s);
    c.nu.set(0, 1, 0, &[int(1)]).expect("in range");
    c
}

/// Transports a matched pair along basis changes `P` of `g` and `Q` of `h`.
pub fn transport_pair(p: &MatchedPair, pg: &RationalMatrix, qh: &RationalMatrix) -> crate::Result<MatchedPair> {
    let g = p.g.transport(pg)?;
    let h = p.h.transport(qh)?;
    let pinv = pg.inverse().ok_or(crate::Error::Singular("basis change of g"))?;
    let qinv = qh.inverse().ok_or(crate::Error::Singular("basis change of h"))?;
    let (n, m) = (p.g_dim(), p.h_dim());
    let gc: Vec<_> = (0..n).map(|i| pinv.column(i)).collect();
    let hc: Vec<_> = (0..m).map(|i| qinv.column(i)).collect();
    let rho = TriAction::from_fn(n, m, m, |i, j, k| qh.mul_vec(&p.rho(&gc[i], &gc[j], &hc[k])))?;
    let psi = TriAction::from_fn(m, n, n, |i, j, k| pg.mul_vec(&p.psi(&hc[i], &hc[j], &gc[k])))?;
    MatchedPair::new(g, h, rho, psi)
}

/// Transports a representation of `p` along basis changes `P_g, Q_h` of
/// the pair and `P_V, Q_W` of the modules; the result is a representation
/// of `transport_pair(p, P_g, Q_h)`. For example
/// `ρ_V′(x1, x2) = P_V ρ_V(P_g⁻¹x1, P_g⁻¹x2) P_V⁻¹` and
/// `α′(v, x)a = Q_W α(P_V⁻¹v, P_g⁻¹x) Q_h⁻¹a`.
pub fn transport_rep_along(
    p: &MatchedPair,
    r: &MPRepresentation,
    pg: &RationalMatrix,
    qh: &RationalMatrix,
    pv: &RationalMatrix,
    qw: &RationalMatrix,
) -> crate::Result<MPRepresentation> {
    let (n, m, dv, dw) = (p.g_dim(), p.h_dim(), r.v_dim(), r.w_dim());
    let inv = |x: &RationalMatrix, what: &'static str| x.inverse().ok_or(crate::Error::Singular(what));
    let cols = |x: &RationalMatrix, k: usize| -> Vec<_> { (0..k).map(|i| x.column(i)).collect() };
    let gc = cols(&inv(pg, "basis change of g")?, n);
    let hc = cols(&inv(qh, "basis change of h")?, m);
    let vc = cols(&inv(pv, "basis change of V")?, dv);
    let wc = cols(&inv(qw, "basis change of W")?, dw);
    let p2 = transport_pair(p, pg, qh)?;
    let rho_v = TriAction::from_fn(n, dv, dv, |i, j, k| pv.mul_vec(&r.rv(&gc[i], &gc[j], &vc[k])))?;
    let rho_w = TriAction::from_fn(n, dw, dw, |i, j, k| qw.mul_vec(&r.rw(&gc[i], &gc[j], &wc[k])))?;
    let psi_v = TriAction::from_fn(m, dv, dv, |i, j, k| pv.mul_vec(&r.pv(&hc[i], &hc[j], &vc[k])))?;
    let psi_w = TriAction::from_fn(m, dw, dw, |i, j, k| qw.mul_vec(&r.pw(&hc[i], &hc[j], &wc[k])))?;
    let alpha = Pairing::from_fn(dv, n, m, dw, |i, j, k| qw.mul_vec(&r.al(&vc[i], &gc[j], &hc[k])))?;
    let beta = Pairing::from_fn(dw, m, n, dv, |i, j, k| pv.mul_vec(&r.be(&wc[i], &hc[j], &gc[k])))?;
    MPRepresentation::new(&p2, dv, dw, rho_v, rho_w, psi_v, psi_w, alpha, beta)
}

/// A named corpus of matched pairs with representations, all valid.
pub fn corpus() -> Vec<(&'static str, MatchedPair, MPRepresentation)> {
    let mut out = Vec::new();
    let (zp, zr) = zero_fixture();
    out.push(("zero", zp, zr));
    let p = a4_split_pair();
    out.push(("a4-split-adjoint", p.clone(), adjoint_representation_unchecked(&p)));
    out.push(("a4-split-zero", p.clone(), MPRepresentation::zero(&p, 1, 1)));
    let p = with_abelian(a4(), 1);
    out.push(("a4-line-adjoint", p.clone(), adjoint_representation_unchecked(&p)));
    let p = rho_only_pair();
    out.push(("rho-only-adjoint", p.clone(), adjoint_representation_unchecked(&p)));
    out.push(("rho-only-zero", p.clone(), MPRepresentation::zero(&p, 1, 2)));
    let p = MatchedPair::trivial(three_dim([1, 0, 0]), ThreeLie::abelian(1));
    out.push(("three-dim-adjoint", p.clone(), adjoint_representation_unchecked(&p)));
    out
}
