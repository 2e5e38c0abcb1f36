//! Random instances for property tests and benchmarks.
//!
//! Every generator is deterministic given the random source. Generators of
//! *valid* structures only produce instances known to satisfy all axioms
//! (built from verified families and transported along random basis
//! changes); [`perturb_pair`] breaks validity on purpose.

use alloc::vec::Vec;

use num_traits::Zero;
use rand_core::RngCore;

use crate::cohomology::{z2_basis, Cochain1, Cochain2, CochainShape};
use crate::error::Result;
use crate::exactlinalg::{frac, int, Rational, RationalMatrix};
use crate::fixtures::{a4, a4_split_pair, three_dim, transport_pair, transport_rep_along, with_abelian};
use crate::matched::MatchedPair;
use crate::representation::{adjoint_representation_unchecked, MPRepresentation};
use crate::structure::{ThreeLie, TriAction};

/// Uniform integer in `lo..=hi`.
pub fn int_in<R: RngCore>(rng: &mut R, lo: i64, hi: i64) -> i64 {
    debug_assert!(lo <= hi);
    let span = (hi - lo + 1) as u64;
    lo + (rng.next_u64() % span) as i64
}

/// A small rational `n/d` with `|n| ≤ 3`, `1 ≤ d ≤ 3`.
pub fn small_rational<R: RngCore>(rng: &mut R) -> Rational {
    frac(int_in(rng, -3, 3), int_in(rng, 1, 3))
}

/// A small rational that is zero with probability about one half.
pub fn sparse_rational<R: RngCore>(rng: &mut R) -> Rational {
    if rng.next_u32().is_multiple_of(2) {
        Rational::zero()
    } else {
        small_rational(rng)
    }
}

pub fn random_matrix<R: RngCore>(rng: &mut R, rows: usize, cols: usize) -> RationalMatrix {
    let entries = (0..rows * cols).map(|_| small_rational(rng)).collect();
    RationalMatrix::from_entries(rows, cols, entries).expect("sizes agree")
}

/// An invertible matrix `L · D · U` with unit-triangular `L`, `U` and a
/// diagonal `D` with entries in `{±1, ±2}`.
pub fn random_invertible<R: RngCore>(rng: &mut R, n: usize) -> RationalMatrix {
    let mut l = RationalMatrix::identity(n);
    let mut u = RationalMatrix::identity(n);
    let mut d = RationalMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, int(int_in(rng, -2, 2)));
            u.set(j, i, int(int_in(rng, -2, 2)));
        }
        let v = [-2, -1, 1, 2][(rng.next_u32() % 4) as usize];
        d.set(i, i, int(v));
    }
    l.mul(&d).and_then(|m| m.mul(&u)).expect("square")
}

pub fn random_cochain1<R: RngCore>(rng: &mut R, s: CochainShape) -> Cochain1 {
    let coords: Vec<Rational> = (0..s.c1_dim()).map(|_| sparse_rational(rng)).collect();
    Cochain1::from_coords(s, &coords).expect("length agrees")
}

pub fn random_cochain2<R: RngCore>(rng: &mut R, s: CochainShape) -> Cochain2 {
    let coords: Vec<Rational> = (0..s.c2_dim()).map(|_| sparse_rational(rng)).collect();
    Cochain2::from_coords(s, &coords).expect("length agrees")
}

/// Abelian `g = ℚ²`, abelian `h = ℚᵏ`, `ρ(e1,e2) = D` random, `ψ = 0`:
/// always a matched pair.
pub fn random_rho_only_pair<R: RngCore>(rng: &mut R, k: usize) -> MatchedPair {
    let d = random_matrix(rng, k, k);
    let mut rho = TriAction::zero(2, k, k);
    for s in 0..k {
        rho.set(0, 1, s, &d.column(s)).expect("in range");
    }
    MatchedPair::new(ThreeLie::abelian(2), ThreeLie::abelian(k), rho, TriAction::zero(k, 2, 2)).expect("shapes")
}

/// A random valid matched pair drawn from several verified families.
pub fn random_matched_pair<R: RngCore>(rng: &mut R) -> MatchedPair {
    match rng.next_u32() % 5 {
        0 => {
            let p = a4_split_pair();
            let (pg, qh) = (random_invertible(rng, 2), random_invertible(rng, 2));
            transport_pair(&p, &pg, &qh).expect("invertible")
        }
        1 => {
            let k = int_in(rng, 1, 2) as usize;
            random_rho_only_pair(rng, k)
        }
        2 => {
            let k = int_in(rng, 1, 2) as usize;
            random_rho_only_pair(rng, k).mirror()
        }
        3 => {
            let c = [int_in(rng, -2, 2), int_in(rng, -2, 2), int_in(rng, -2, 2)];
            let p = with_abelian(three_dim(c), 1);
            if rng.next_u32().is_multiple_of(2) {
                p
            } else {
                p.mirror()
            }
        }
        _ => {
            let p = with_abelian(a4(), 1);
            let pg = random_invertible(rng, 4);
            transport_pair(&p, &pg, &RationalMatrix::identity(1)).expect("invertible")
        }
    }
}

/// Transports a representation along basis changes `P` of `V` and `Q` of
/// `W`, keeping the bases of `g` and `h`: `ρ_V′ = Pρ_VP⁻¹`,
/// `α′(v,x)a = Qα(P⁻¹v,x)a`, and so on.
pub fn transport_rep(
    p: &MatchedPair,
    r: &MPRepresentation,
    pv: &RationalMatrix,
    qw: &RationalMatrix,
) -> Result<MPRepresentation> {
    let (n, m) = (p.g_dim(), p.h_dim());
    transport_rep_along(p, r, &RationalMatrix::identity(n), &RationalMatrix::identity(m), pv, qw)
}

/// A random valid representation of a valid matched pair: the zero
/// representation, the adjoint one, or a transported adjoint one.
pub fn random_representation<R: RngCore>(rng: &mut R, p: &MatchedPair) -> MPRepresentation {
    match rng.next_u32() % 3 {
        0 => MPRepresentation::zero(p, int_in(rng, 1, 2) as usize, int_in(rng, 1, 2) as usize),
        1 => adjoint_representation_unchecked(p),
        _ => {
            let r = adjoint_representation_unchecked(p);
            let (pv, qw) = (random_invertible(rng, r.v_dim()), random_invertible(rng, r.w_dim()));
            transport_rep(p, &r, &pv, &qw).expect("invertible")
        }
    }
}

/// A random 2-cocycle: a random combination of a basis of `Z²`.
pub fn random_cocycle<R: RngCore>(rng: &mut R, p: &MatchedPair, r: &MPRepresentation) -> Result<Cochain2> {
    let s = CochainShape::of(p, r);
    let z = z2_basis(p, r)?;
    let mut coords = alloc::vec![Rational::zero(); s.c2_dim()];
    for b in z.basis() {
        let c = sparse_rational(rng);
        for (x, y) in coords.iter_mut().zip(b) {
            *x += &c * y;
        }
    }
    Cochain2::from_coords(s, &coords)
}

/// Adds a random nonzero amount to one random structure constant of `ρ` or
/// `ψ` (whichever is nonempty); returns `None` if both are empty.
pub fn perturb_pair<R: RngCore>(rng: &mut R, p: &MatchedPair) -> Option<MatchedPair> {
    let mut q = p.clone();
    let (n, m) = (p.g_dim(), p.h_dim());
    let use_rho = n >= 2 && m >= 1 && (rng.next_u32().is_multiple_of(2) || m < 2 || n < 1);
    let (a, t, out) = if use_rho { (n, m, m) } else { (m, n, n) };
    if a < 2 || t == 0 || out == 0 {
        return None;
    }
    let i = int_in(rng, 0, a as i64 - 2) as usize;
    let j = int_in(rng, i as i64 + 1, a as i64 - 1) as usize;
    let s = int_in(rng, 0, t as i64 - 1) as usize;
    let c = int_in(rng, 0, out as i64 - 1) as usize;
    let target = if use_rho { &mut q.rho } else { &mut q.psi };
    let mut v = target.get(i, j, s).to_vec();
    v[c] += int(int_in(rng, 1, 3));
    target.set(i, j, s, &v).expect("in range");
    Some(q)
}
