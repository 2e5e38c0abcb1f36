//! Exact rational arithmetic and dense linear algebra.
//!
//! Every rank, kernel and feasibility question in the crate is answered here,
//! over arbitrary-precision rationals, so no cohomology dimension is ever the
//! product of rounding. Matrices are dense and row-major; empty matrices
//! (zero rows or zero columns) are legal everywhere.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// A coordinate vector with exact entries.
pub type Vector = Vec<Rational>;

/// The rational `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational `n / d`, reduced. Panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The zero vector of length `n`.
pub fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

/// True when every entry is zero (vacuously true for the empty vector).
pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`, skipping the work entirely when `c` is zero.
pub fn add_scaled(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    debug_assert_eq!(acc.len(), v.len());
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

/// Entrywise `a - b`.
pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Entrywise `a + b`.
pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `c * v`.
pub fn scale_vec(c: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Iterates over the indices and values of the nonzero entries of `v`.
pub fn nonzeros(v: &[Rational]) -> impl Iterator<Item = (usize, &Rational)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

/// Dense matrix of exact rationals, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    /// The `rows × cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// `c` times the `n × n` identity.
    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Builds a matrix from row-major entries; fails unless
    /// `entries.len() == rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::dimension("matrix entries", rows * cols, entries.len()));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::dimension("matrix row", cols, row.len()));
            }
            entries.extend(row);
        }
        Ok(RationalMatrix { rows: n, cols, entries })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::dimension("matrix column", rows, col.len()));
            }
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    /// Convenience constructor from small integers, for fixtures and tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| int(x)).collect()
            })
            .collect();
        Self::from_rows(cols, data).expect("shape checked above")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Rational) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// All rows as owned vectors.
    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.entries)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dimension("matrix product", self.cols, other.rows));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let start = r * other.cols;
                add_scaled(&mut out.entries[start..start + other.cols], a, other.row(k));
            }
        }
        Ok(out)
    }

    /// Matrix–vector product `self · v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        if self.cols != v.len() {
            return Err(Error::dimension("matrix-vector product", self.cols, v.len()));
        }
        let mut out = zero_vec(self.rows);
        for (c, x) in nonzeros(v) {
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let entries = add_vec(&self.entries, &other.entries);
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let entries = sub_vec(&self.entries, &other.entries);
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix { rows: self.rows, cols: self.cols, entries: scale_vec(c, &self.entries) }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(alloc::format!(
                "matrix shapes differ: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::dimension("vertical stack", self.cols, other.cols));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(RationalMatrix { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Places `other` to the right of `self` (same row count).
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::dimension("horizontal stack", self.rows, other.rows));
        }
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.extend_from_slice(other.row(r));
        }
        Ok(RationalMatrix { rows: self.rows, cols, entries })
    }

    /// Rank, via [`rref`].
    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// The inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n)).ok()?;
        let red = rref(&aug);
        if red.pivots.iter().take_while(|&&p| p < n).count() != n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.matrix.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Some `L` with `L · self = I`, or `None` when `self` is not injective.
    pub fn left_inverse(&self) -> Option<Self> {
        self.transpose().right_inverse().map(|m| m.transpose())
    }

    /// Some `R` with `self · R = I`, or `None` when `self` is not surjective.
    ///
    /// Column `k` of `R` is the particular solution of `self · x = e_k`
    /// returned by [`solve`], so the choice is deterministic.
    pub fn right_inverse(&self) -> Option<Self> {
        let mut cols = Vec::with_capacity(self.rows);
        for k in 0..self.rows {
            match solve(self, &unit_vec(self.rows, k)).ok()? {
                SolveOutcome::Solved(x) => cols.push(x),
                SolveOutcome::Infeasible { .. } => return None,
            }
        }
        Self::from_columns(self.cols, &cols).ok()
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Gauss–Jordan elimination with left-to-right pivot choice.
///
/// The result is the unique reduced row echelon form of `m`; the rank is the
/// number of pivot columns.
pub fn rref(m: &RationalMatrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                a.entries.swap(p * cols + k, r * cols + k);
            }
        }
        let inv = a.get(r, c).recip();
        for k in c..cols {
            let x = a.get(r, k);
            if !x.is_zero() {
                let y = x * &inv;
                a.set(r, k, y);
            }
        }
        let pivot_row: Vector = a.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            let start = i * cols;
            for k in c..cols {
                let b = &pivot_row[k];
                if !b.is_zero() {
                    let cur = &a.entries[start + k] - &f * b;
                    a.entries[start + k] = cur;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    Rref { matrix: a, pivots, rank }
}

/// A subspace of `Q^ambient_dim` given by a linearly independent basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    /// The zero subspace.
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    /// The whole space, with the standard basis.
    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: (0..ambient_dim).map(|i| unit_vec(ambient_dim, i)).collect() }
    }

    /// Builds a subspace from an already independent basis, checking
    /// lengths and independence.
    pub fn from_basis(ambient_dim: usize, basis: Vec<Vector>) -> Result<Self> {
        for v in &basis {
            if v.len() != ambient_dim {
                return Err(Error::dimension("subspace basis vector", ambient_dim, v.len()));
            }
        }
        if !basis.is_empty() {
            let m = RationalMatrix::from_rows(ambient_dim, basis.clone())?;
            if m.rank() != basis.len() {
                return Err(Error::Invalid("subspace basis vectors are linearly dependent".into()));
            }
        }
        Ok(Subspace { ambient_dim, basis })
    }

    /// The span of arbitrary vectors; the basis is the nonzero rows of the
    /// reduced row echelon form of the stacked vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        let m = RationalMatrix::from_rows(ambient_dim, vectors.to_vec())?;
        let red = rref(&m);
        let basis = (0..red.rank).map(|r| red.matrix.row(r).to_vec()).collect();
        Ok(Subspace { ambient_dim, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient_dim × dim` matrix.
    pub fn basis_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient_dim, &self.basis).expect("lengths checked at construction")
    }
}

/// Basis of `{v : m·v = 0}`, one vector per free column of the reduced form.
pub fn kernel_basis(m: &RationalMatrix) -> Subspace {
    let red = rref(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(n);
        v[f] = Rational::one();
        for (r, &p) in red.pivots.iter().enumerate() {
            let x = red.matrix.get(r, f);
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        basis.push(v);
    }
    Subspace { ambient_dim: n, basis }
}

/// Basis of the column space of `m`: the pivot columns of `m` itself.
pub fn image_basis(m: &RationalMatrix) -> Subspace {
    let red = rref(m);
    let basis = red.pivots.iter().map(|&c| m.column(c)).collect();
    Subspace { ambient_dim: m.rows, basis }
}

/// Result of [`solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// A particular solution (free variables set to zero).
    Solved(Vector),
    /// No solution; `augmented_rank > rank` certifies infeasibility.
    Infeasible { rank: usize, augmented_rank: usize },
}

impl SolveOutcome {
    pub fn solution(self) -> Option<Vector> {
        match self {
            SolveOutcome::Solved(x) => Some(x),
            SolveOutcome::Infeasible { .. } => None,
        }
    }
}

/// Solves `m · x = rhs` exactly.
pub fn solve(m: &RationalMatrix, rhs: &[Rational]) -> Result<SolveOutcome> {
    if rhs.len() != m.rows {
        return Err(Error::dimension("right-hand side", m.rows, rhs.len()));
    }
    let col = RationalMatrix::from_columns(m.rows, &[rhs.to_vec()])?;
    let aug = m.hstack(&col)?;
    let red = rref(&aug);
    let n = m.cols;
    if red.pivots.last() == Some(&n) {
        return Ok(SolveOutcome::Infeasible { rank: red.rank - 1, augmented_rank: red.rank });
    }
    let mut x = zero_vec(n);
    for (r, &p) in red.pivots.iter().enumerate() {
        x[p] = red.matrix.get(r, n).clone();
    }
    Ok(SolveOutcome::Solved(x))
}

/// Decides `v ∈ span(s)`; on success returns the coefficients reproducing
/// `v` from the basis of `s`.
pub fn member(v: &[Rational], s: &Subspace) -> Result<Option<Vector>> {
    if v.len() != s.ambient_dim {
        return Err(Error::dimension("membership vector", s.ambient_dim, v.len()));
    }
    Ok(solve(&s.basis_matrix(), v)?.solution())
}

/// `dim(big) − dim(small)` after checking `small ⊆ big`.
pub fn quotient_dim(big: &Subspace, small: &Subspace) -> Result<usize> {
    if big.ambient_dim != small.ambient_dim {
        return Err(Error::dimension("quotient ambient space", big.ambient_dim, small.ambient_dim));
    }
    for v in &small.basis {
        if member(v, big)?.is_none() {
            return Err(Error::NotContained { vector: v.clone() });
        }
    }
    Ok(big.dim() - small.dim())
}

/// A basis of a complement of `small` inside `big`: the `big` basis vectors
/// that are independent modulo `small`, chosen greedily in order.
///
/// These are the coset representatives reported for quotient spaces.
pub fn complement_representatives(big: &Subspace, small: &Subspace) -> Result<Vec<Vector>> {
    let mut acc: Vec<Vector> = small.basis.clone();
    let mut reps = Vec::new();
    let mut rank = small.dim();
    for v in &big.basis {
        let mut trial = acc.clone();
        trial.push(v.clone());
        let m = RationalMatrix::from_rows(big.ambient_dim, trial.clone())?;
        let r = m.rank();
        if r > rank {
            rank = r;
            acc = trial;
            reps.push(v.clone());
        }
    }
    Ok(reps)
}
