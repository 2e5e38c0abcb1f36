//! 3-Lie algebras, representations and morphisms.
//!
//! A 3-Lie algebra is a vector space `g` with a totally skew-symmetric
//! trilinear bracket satisfying the fundamental identity
//!
//! `[x1,x2,[y1,y2,y3]] = [[x1,x2,y1],y2,y3] + [y1,[x1,x2,y2],y3] + [y1,y2,[x1,x2,y3]]`.
//!
//! Brackets are stored densely as [`Alt3`] tensors indexed by basis triples;
//! representations (skew bilinear maps `g ∧ g → gl(V)`) as [`TriAction`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::{add_scaled, int, nonzeros, zero_vec, Rational, RationalMatrix, Vector};
use crate::report::{check_identity, var, var_after, Check, Report};

fn check_len(context: &'static str, v: &[Rational], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::dimension(context, n, v.len()));
    }
    Ok(())
}

/// Sign of the permutation sorting three distinct indices, together with
/// the sorted triple; `None` if two indices coincide.
fn sort3(i: usize, j: usize, k: usize) -> Option<(bool, [usize; 3])> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut t = [i, j, k];
    let mut neg = false;
    for a in 0..3 {
        for b in 0..2 - a {
            if t[b] > t[b + 1] {
                t.swap(b, b + 1);
                neg = !neg;
            }
        }
    }
    Some((neg, t))
}

/// All strictly increasing triples `i < j < k < n`, lexicographically.
pub fn increasing_triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// All strictly increasing pairs `i < j < n`, lexicographically.
pub fn increasing_pairs(n: usize) -> Vec<[usize; 2]> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push([i, j]);
        }
    }
    out
}

/// A totally skew-symmetric trilinear map `Λ³(ℚⁿ) → ℚᵐ`, stored densely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alt3 {
    n: usize,
    m: usize,
    data: Vec<Rational>,
}

impl Alt3 {
    pub fn zero(n: usize, m: usize) -> Self {
        Alt3 { n, m, data: alloc::vec![Rational::zero(); n * n * n * m] }
    }

    /// Builds the tensor from its values on increasing basis triples.
    pub fn from_fn<F>(n: usize, m: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize, usize) -> Result<Vector>,
    {
        let mut t = Alt3::zero(n, m);
        for [i, j, k] in increasing_triples(n) {
            let v = f(i, j, k)?;
            t.set(i, j, k, &v)?;
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        ((i * self.n + j) * self.n + k) * self.m
    }

    /// Value on basis vectors `e_i, e_j, e_k` (any order).
    pub fn get(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        let o = self.offset(i, j, k);
        &self.data[o..o + self.m]
    }

    /// Sets the value on `e_i ∧ e_j ∧ e_k` and, by skew-symmetry, on all
    /// permutations. Repeated indices are rejected unless the value is zero.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: &[Rational]) -> Result<()> {
        if i >= self.n || j >= self.n || k >= self.n {
            return Err(Error::Invalid(format!("basis triple ({i},{j},{k}) out of range for dimension {}", self.n)));
        }
        check_len("alternating tensor value", value, self.m)?;
        let Some((_, [a, b, c])) = sort3(i, j, k) else {
            if value.iter().all(Zero::is_zero) {
                return Ok(());
            }
            return Err(Error::Invalid(format!("nonzero value on degenerate triple ({i},{j},{k})")));
        };
        let base: Vector = match sort3(i, j, k) {
            Some((true, _)) => value.iter().map(|x| -x).collect(),
            _ => value.to_vec(),
        };
        let neg: Vector = base.iter().map(|x| -x).collect();
        for (p, q, r, sgn) in [(a, b, c, false), (b, c, a, false), (c, a, b, false), (b, a, c, true), (a, c, b, true), (c, b, a, true)] {
            let o = self.offset(p, q, r);
            let src = if sgn { &neg } else { &base };
            self.data[o..o + self.m].clone_from_slice(src);
        }
        Ok(())
    }

    /// Evaluates on arbitrary vectors (unchecked lengths).
    pub fn eval(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let mut out = zero_vec(self.m);
        for (i, xi) in nonzeros(x) {
            for (j, yj) in nonzeros(y) {
                if i == j {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in nonzeros(z) {
                    if k == i || k == j {
                        continue;
                    }
                    add_scaled(&mut out, &(&xy * zk), self.get(i, j, k));
                }
            }
        }
        out
    }

    /// Nonzero values on increasing triples.
    pub fn canonical_entries(&self) -> Vec<([usize; 3], Vector)> {
        increasing_triples(self.n)
            .into_iter()
            .filter_map(|[i, j, k]| {
                let v = self.get(i, j, k);
                if v.iter().all(Zero::is_zero) {
                    None
                } else {
                    Some(([i, j, k], v.to_vec()))
                }
            })
            .collect()
    }

    /// Coordinates: increasing triples lexicographically, then the output
    /// coefficient index.
    pub fn coords(&self) -> Vector {
        let mut out = Vec::new();
        for [i, j, k] in increasing_triples(self.n) {
            out.extend_from_slice(self.get(i, j, k));
        }
        out
    }

    pub fn coord_len(n: usize, m: usize) -> usize {
        increasing_triples(n).len() * m
    }

    pub fn from_coords(n: usize, m: usize, coords: &[Rational]) -> Result<Self> {
        check_len("alternating tensor coordinates", coords, Alt3::coord_len(n, m))?;
        let mut t = Alt3::zero(n, m);
        for (idx, [i, j, k]) in increasing_triples(n).into_iter().enumerate() {
            t.set(i, j, k, &coords[idx * m..(idx + 1) * m])?;
        }
        Ok(t)
    }

    /// Applies a linear map to every output value.
    pub fn map_output(&self, f: &RationalMatrix) -> Result<Self> {
        if f.cols() != self.m {
            return Err(Error::dimension("output map", self.m, f.cols()));
        }
        Alt3::from_fn(self.n, f.rows(), |i, j, k| f.mul_vec(self.get(i, j, k)))
    }
}

/// A bilinear skew map `D : Λ²(ℚⁿ) → Hom(ℚᵗ, ℚᵐ)`, i.e. `D(x1,x2)u`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriAction {
    n: usize,
    t: usize,
    m: usize,
    data: Vec<Rational>,
}

impl TriAction {
    pub fn zero(n: usize, t: usize, m: usize) -> Self {
        TriAction { n, t, m, data: alloc::vec![Rational::zero(); n * n * t * m] }
    }

    /// Builds the action from its values `D(e_i, e_j) e_s` on increasing pairs.
    pub fn from_fn<F>(n: usize, t: usize, m: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize, usize) -> Result<Vector>,
    {
        let mut a = TriAction::zero(n, t, m);
        for [i, j] in increasing_pairs(n) {
            for s in 0..t {
                let v = f(i, j, s)?;
                a.set(i, j, s, &v)?;
            }
        }
        Ok(a)
    }

    /// Number of arguments' dimension (the acting space).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the space acted upon.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Dimension of the output space.
    pub fn m(&self) -> usize {
        self.m
    }

    fn offset(&self, i: usize, j: usize, s: usize) -> usize {
        ((i * self.n + j) * self.t + s) * self.m
    }

    pub fn get(&self, i: usize, j: usize, s: usize) -> &[Rational] {
        let o = self.offset(i, j, s);
        &self.data[o..o + self.m]
    }

    /// Sets `D(e_i, e_j) e_s` and, by skew-symmetry, `D(e_j, e_i) e_s`.
    pub fn set(&mut self, i: usize, j: usize, s: usize, value: &[Rational]) -> Result<()> {
        if i >= self.n || j >= self.n || s >= self.t {
            return Err(Error::Invalid(format!("action index ({i},{j};{s}) out of range")));
        }
        check_len("action value", value, self.m)?;
        if i == j {
            if value.iter().all(Zero::is_zero) {
                return Ok(());
            }
            return Err(Error::Invalid(format!("nonzero action on degenerate pair ({i},{i})")));
        }
        let o = self.offset(i, j, s);
        self.data[o..o + self.m].clone_from_slice(value);
        let o = self.offset(j, i, s);
        for (d, x) in self.data[o..o + self.m].iter_mut().zip(value) {
            *d = -x;
        }
        Ok(())
    }

    /// Evaluates `D(x1, x2) u` (unchecked lengths).
    pub fn eval(&self, x1: &[Rational], x2: &[Rational], u: &[Rational]) -> Vector {
        let mut out = zero_vec(self.m);
        for (i, a) in nonzeros(x1) {
            for (j, b) in nonzeros(x2) {
                if i == j {
                    continue;
                }
                let ab = a * b;
                for (s, c) in nonzeros(u) {
                    add_scaled(&mut out, &(&ab * c), self.get(i, j, s));
                }
            }
        }
        out
    }

    /// Coordinates: increasing pairs, then acted-on index, then output index.
    pub fn coords(&self) -> Vector {
        let mut out = Vec::new();
        for [i, j] in increasing_pairs(self.n) {
            for s in 0..self.t {
                out.extend_from_slice(self.get(i, j, s));
            }
        }
        out
    }

    pub fn coord_len(n: usize, t: usize, m: usize) -> usize {
        increasing_pairs(n).len() * t * m
    }

    pub fn from_coords(n: usize, t: usize, m: usize, coords: &[Rational]) -> Result<Self> {
        check_len("action coordinates", coords, TriAction::coord_len(n, t, m))?;
        let mut a = TriAction::zero(n, t, m);
        let mut idx = 0;
        for [i, j] in increasing_pairs(n) {
            for s in 0..t {
                a.set(i, j, s, &coords[idx..idx + m])?;
                idx += m;
            }
        }
        Ok(a)
    }

    /// Nonzero values on increasing pairs: `((i, j), s, value)`.
    pub fn canonical_entries(&self) -> Vec<([usize; 2], usize, Vector)> {
        let mut out = Vec::new();
        for [i, j] in increasing_pairs(self.n) {
            for s in 0..self.t {
                let v = self.get(i, j, s);
                if !v.iter().all(Zero::is_zero) {
                    out.push(([i, j], s, v.to_vec()));
                }
            }
        }
        out
    }

    /// The matrix of `D(e_i, e_j)` as an `m × t` matrix.
    pub fn operator(&self, i: usize, j: usize) -> RationalMatrix {
        let mut mat = RationalMatrix::zeros(self.m, self.t);
        for s in 0..self.t {
            for (r, x) in self.get(i, j, s).iter().enumerate() {
                mat.set(r, s, x.clone());
            }
        }
        mat
    }
}

/// A linear map between coordinate spaces, stored as a `codomain × domain`
/// matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinMap {
    matrix: RationalMatrix,
}

impl LinMap {
    pub fn new(matrix: RationalMatrix) -> Self {
        LinMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinMap { matrix: RationalMatrix::identity(n) }
    }

    pub fn zero(domain: usize, codomain: usize) -> Self {
        LinMap { matrix: RationalMatrix::zeros(codomain, domain) }
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RationalMatrix {
        self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> Result<LinMap> {
        Ok(LinMap { matrix: self.matrix.mul(&other.matrix)? })
    }

    pub fn inverse(&self) -> Option<LinMap> {
        self.matrix.inverse().map(LinMap::new)
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_square() && self.matrix.rank() == self.matrix.rows()
    }
}

/// A 3-Lie algebra given by named basis vectors and structure constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThreeLie {
    basis: Vec<String>,
    bracket: Alt3,
}

impl ThreeLie {
    /// Wraps a bracket tensor; the fundamental identity is *not* checked
    /// here (use [`verify_jacobi`]).
    pub fn new(basis: Vec<String>, bracket: Alt3) -> Result<Self> {
        if bracket.n() != basis.len() || bracket.m() != basis.len() {
            return Err(Error::Shape(format!(
                "bracket of shape {}→{} for {} basis names",
                bracket.n(),
                bracket.m(),
                basis.len()
            )));
        }
        Ok(ThreeLie { basis, bracket })
    }

    /// Default basis names `prefix1, …, prefixN`.
    pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    /// The abelian (zero-bracket) algebra of dimension `n`.
    pub fn abelian(n: usize) -> Self {
        ThreeLie { basis: ThreeLie::default_names("e", n), bracket: Alt3::zero(n, n) }
    }

    /// Builds an algebra from sparse nonzero brackets on basis triples.
    pub fn from_entries(basis: Vec<String>, entries: &[([usize; 3], Vector)]) -> Result<Self> {
        let n = basis.len();
        let mut b = Alt3::zero(n, n);
        for ([i, j, k], v) in entries {
            b.set(*i, *j, *k, v)?;
        }
        ThreeLie::new(basis, b)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn bracket(&self) -> &Alt3 {
        &self.bracket
    }

    /// `[x, y, z]` without length checks.
    pub fn br(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        self.bracket.eval(x, y, z)
    }

    /// Pushes the algebra forward along an invertible basis change `p`
    /// (new coordinates `p·x`).
    pub fn transport(&self, p: &RationalMatrix) -> Result<ThreeLie> {
        let inv = p.inverse().ok_or(Error::Singular("basis change"))?;
        let n = self.dim();
        if p.rows() != n {
            return Err(Error::dimension("basis change", n, p.rows()));
        }
        let cols: Vec<Vector> = (0..n).map(|i| inv.column(i)).collect();
        let b = Alt3::from_fn(n, n, |i, j, k| p.mul_vec(&self.br(&cols[i], &cols[j], &cols[k])))?;
        ThreeLie::new(self.basis.clone(), b)
    }
}

/// Evaluates the bracket with dimension checks.
pub fn bracket_eval(alg: &ThreeLie, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vector> {
    let n = alg.dim();
    check_len("bracket argument", x, n)?;
    check_len("bracket argument", y, n)?;
    check_len("bracket argument", z, n)?;
    Ok(alg.br(x, y, z))
}

/// Label of the single check produced by [`verify_jacobi`].
pub const FI_LABEL: &str = "fundamental identity";

/// Checks the fundamental identity on all basis tuples with `x1 < x2` and
/// `y1 < y2 < y3` (both sides are alternating in these groups).
pub fn verify_jacobi(alg: &ThreeLie) -> Report {
    let n = alg.dim();
    let vars = [var("x1", n), var_after("x2", n, 0), var("y1", n), var_after("y2", n, 2), var_after("y3", n, 3)];
    let check = check_identity(FI_LABEL, &vars, |a| fundamental_identity(alg, &a[0], &a[1], &a[2], &a[3], &a[4]));
    let mut r = Report::new("3-Lie fundamental identity");
    r.push(check);
    r
}

/// Both sides of the fundamental identity at the given arguments.
pub fn fundamental_identity(
    alg: &ThreeLie,
    x1: &[Rational],
    x2: &[Rational],
    y1: &[Rational],
    y2: &[Rational],
    y3: &[Rational],
) -> (Vector, Vector) {
    let lhs = alg.br(x1, x2, &alg.br(y1, y2, y3));
    let mut rhs = alg.br(&alg.br(x1, x2, y1), y2, y3);
    let one = Rational::one();
    add_scaled(&mut rhs, &one, &alg.br(y1, &alg.br(x1, x2, y2), y3));
    add_scaled(&mut rhs, &one, &alg.br(y1, y2, &alg.br(x1, x2, y3)));
    (lhs, rhs)
}

/// Concatenates `x ∈ ℚⁿ` and `u ∈ ℚᵐ`.
pub fn concat(x: &[Rational], u: &[Rational]) -> Vector {
    let mut v = Vec::with_capacity(x.len() + u.len());
    v.extend_from_slice(x);
    v.extend_from_slice(u);
    v
}

/// Splits a vector of `ℚⁿ ⊕ ℚᵐ` after the first `n` coordinates.
pub fn split(v: &[Rational], n: usize) -> (&[Rational], &[Rational]) {
    v.split_at(n)
}

/// The semidirect product `g ⋉_D M` with bracket
/// `[(x1,u1),(x2,u2),(x3,u3)] = ([x1,x2,x3], D(x1,x2)u3 + D(x3,x1)u2 + D(x2,x3)u1)`.
pub fn semidirect_algebra(alg: &ThreeLie, action: &TriAction, module_names: Vec<String>) -> Result<ThreeLie> {
    let n = alg.dim();
    if action.n() != n {
        return Err(Error::dimension("action on algebra", n, action.n()));
    }
    if action.t() != action.m() {
        return Err(Error::Shape(format!("action {}→{} is not an endomorphism action", action.t(), action.m())));
    }
    let m = action.m();
    if module_names.len() != m {
        return Err(Error::dimension("module basis names", m, module_names.len()));
    }
    let total = n + m;
    let units: Vec<Vector> = (0..total).map(|i| crate::exactlinalg::unit_vec(total, i)).collect();
    let b = Alt3::from_fn(total, total, |i, j, k| {
        let (x1, u1) = split(&units[i], n);
        let (x2, u2) = split(&units[j], n);
        let (x3, u3) = split(&units[k], n);
        let mut fiber = action.eval(x1, x2, u3);
        let one = Rational::one();
        add_scaled(&mut fiber, &one, &action.eval(x3, x1, u2));
        add_scaled(&mut fiber, &one, &action.eval(x2, x3, u1));
        Ok(concat(&alg.br(x1, x2, x3), &fiber))
    })?;
    let mut names = alg.basis().to_vec();
    names.extend(module_names);
    ThreeLie::new(names, b)
}

/// Checks that `action` is a representation of `alg`, i.e. that the
/// semidirect product satisfies the fundamental identity.
pub fn verify_3lie_rep(alg: &ThreeLie, action: &TriAction) -> Result<Report> {
    let names = ThreeLie::default_names("u", action.m());
    let sd = semidirect_algebra(alg, action, names)?;
    let mut r = Report::new("3-Lie representation");
    let mut fi = verify_jacobi(&sd);
    let mut c = fi.checks.remove(0);
    c.label = "semidirect fundamental identity".to_string();
    r.push(c);
    Ok(r)
}

/// Both sides of the first representation identity
/// `D(x1,x2)D(x3,x4)u = D([x1,x2,x3],x4)u + D(x3,[x1,x2,x4])u + D(x3,x4)D(x1,x2)u`.
pub fn rep_identity_1(alg: &ThreeLie, d: &TriAction, x: [&[Rational]; 4], u: &[Rational]) -> (Vector, Vector) {
    let [x1, x2, x3, x4] = x;
    let lhs = d.eval(x1, x2, &d.eval(x3, x4, u));
    let one = Rational::one();
    let mut rhs = d.eval(&alg.br(x1, x2, x3), x4, u);
    add_scaled(&mut rhs, &one, &d.eval(x3, &alg.br(x1, x2, x4), u));
    add_scaled(&mut rhs, &one, &d.eval(x3, x4, &d.eval(x1, x2, u)));
    (lhs, rhs)
}

/// Both sides of the second representation identity
/// `D([x1,x2,x3],x4)u = D(x1,x2)D(x3,x4)u + D(x2,x3)D(x1,x4)u + D(x3,x1)D(x2,x4)u`.
pub fn rep_identity_2(alg: &ThreeLie, d: &TriAction, x: [&[Rational]; 4], u: &[Rational]) -> (Vector, Vector) {
    let [x1, x2, x3, x4] = x;
    let lhs = d.eval(&alg.br(x1, x2, x3), x4, u);
    let one = Rational::one();
    let mut rhs = d.eval(x1, x2, &d.eval(x3, x4, u));
    add_scaled(&mut rhs, &one, &d.eval(x2, x3, &d.eval(x1, x4, u)));
    add_scaled(&mut rhs, &one, &d.eval(x3, x1, &d.eval(x2, x4, u)));
    (lhs, rhs)
}

/// Checks the two representation identities directly (an alternative to
/// [`verify_3lie_rep`], used to cross-validate it).
pub fn verify_rep_identities(alg: &ThreeLie, d: &TriAction) -> Result<Report> {
    let n = alg.dim();
    if d.n() != n || d.t() != d.m() {
        return Err(Error::Shape("action does not match algebra".to_string()));
    }
    let m = d.m();
    let vars = [var("x1", n), var_after("x2", n, 0), var("x3", n), var("x4", n), var("u", m)];
    let mut r = Report::new("3-Lie representation identities");
    r.push(check_identity("rep-1", &vars, |a| rep_identity_1(alg, d, [&a[0], &a[1], &a[2], &a[3]], &a[4])));
    let vars = [var("x1", n), var_after("x2", n, 0), var_after("x3", n, 1), var("x4", n), var("u", m)];
    r.push(check_identity("rep-2", &vars, |a| rep_identity_2(alg, d, [&a[0], &a[1], &a[2], &a[3]], &a[4])));
    Ok(r)
}

/// Checks that `f : a → b` is a 3-Lie algebra morphism on increasing basis
/// triples.
pub fn verify_morphism(f: &LinMap, a: &ThreeLie, b: &ThreeLie) -> Result<Report> {
    if f.domain_dim() != a.dim() {
        return Err(Error::dimension("morphism domain", a.dim(), f.domain_dim()));
    }
    if f.codomain_dim() != b.dim() {
        return Err(Error::dimension("morphism codomain", b.dim(), f.codomain_dim()));
    }
    let n = a.dim();
    let vars = [var("x1", n), var_after("x2", n, 0), var_after("x3", n, 1)];
    let m = f.matrix();
    let check: Check = check_identity("bracket preserved", &vars, |x| {
        let lhs = m.mul_vec(&a.br(&x[0], &x[1], &x[2])).expect("shape checked");
        let fx: Vec<Vector> = x.iter().map(|v| m.mul_vec(v).expect("shape checked")).collect();
        (lhs, b.br(&fx[0], &fx[1], &fx[2]))
    });
    let mut r = Report::new("3-Lie morphism");
    r.push(check);
    Ok(r)
}

/// Structure constants of an algebra as integer-friendly helper for tests
/// and fixtures: `[(i,j,k), value]` with `value` given by small integers.
pub fn entries_from_i64(raw: &[([usize; 3], &[i64])]) -> Vec<([usize; 3], Vector)> {
    raw.iter().map(|(t, v)| (*t, v.iter().map(|&x| int(x)).collect())).collect()
}
