//! Structured verification reports.
//!
//! Verifiers never answer with a bare boolean: each checked identity becomes
//! a [`Check`] carrying its label, the number of basis tuples examined and,
//! on failure, the lexicographically first violating tuple together with
//! both sides of the identity at that tuple.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::exactlinalg::{unit_vec, zero_vec, Vector};

/// A violating argument tuple. Each argument is named after the variable it
/// instantiates and is either a basis index or `None` for the zero vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub args: Vec<(String, Option<usize>)>,
    pub lhs: Vector,
    pub rhs: Vector,
}

/// Outcome of checking one identity on all relevant basis tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub tuples_checked: u64,
    pub witness: Option<Witness>,
}

impl Check {
    /// A check that passed without examining any tuple.
    pub fn vacuous(label: impl Into<String>) -> Self {
        Check { label: label.into(), passed: true, tuples_checked: 0, witness: None }
    }

    /// A check decided by a single comparison (no argument tuple).
    pub fn from_equality(label: impl Into<String>, lhs: Vector, rhs: Vector) -> Self {
        let passed = lhs == rhs;
        Check {
            label: label.into(),
            passed,
            tuples_checked: 1,
            witness: if passed { None } else { Some(Witness { args: Vec::new(), lhs, rhs }) },
        }
    }
}

/// An ordered collection of checks; passes iff every check passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends every check of `other`, prefixing its label with `prefix: `.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            let mut label = prefix.to_string();
            label.push_str(": ");
            label.push_str(&c.label);
            c.label = label;
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The first failing check, in report order.
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// The check with the given label.
    pub fn check(&self, label: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.label == label)
    }
}

/// A variable of a multilinear identity.
///
/// The variable ranges over the standard basis of a space of dimension
/// `dim`, preceded by the zero vector when `with_zero` is set. Enumerating
/// `{0} ∪ basis` for every variable is sufficient for any identity that is a
/// sum of terms each multilinear in a subset of the variables; a variable
/// that occurs in every term can skip zero. `after` forces the basis index to
/// exceed that of an earlier variable (used for alternating arguments).
#[derive(Clone, Copy, Debug)]
pub(crate) struct Var {
    pub name: &'static str,
    pub dim: usize,
    pub with_zero: bool,
    pub after: Option<usize>,
}

/// A variable ranging over the basis only.
pub(crate) fn var(name: &'static str, dim: usize) -> Var {
    Var { name, dim, with_zero: false, after: None }
}

/// A variable ranging over `{0} ∪ basis`.
pub(crate) fn var0(name: &'static str, dim: usize) -> Var {
    Var { name, dim, with_zero: true, after: None }
}

/// A basis variable whose index must exceed that of variable `prev`.
pub(crate) fn var_after(name: &'static str, dim: usize, prev: usize) -> Var {
    Var { name, dim, with_zero: false, after: Some(prev) }
}

/// Enumerates all admissible assignments in lexicographic order (zero
/// first, then basis indices ascending) and calls `visit` on each; stops
/// early when `visit` returns `false`.
pub(crate) fn for_each_tuple<F>(vars: &[Var], mut visit: F)
where
    F: FnMut(&[Option<usize>], &[Vector]) -> bool,
{
    let k = vars.len();
    let options: Vec<Vec<Option<usize>>> = vars
        .iter()
        .map(|v| {
            let mut o = Vec::with_capacity(v.dim + 1);
            if v.with_zero {
                o.push(None);
            }
            o.extend((0..v.dim).map(Some));
            o
        })
        .collect();
    if options.iter().any(Vec::is_empty) {
        return;
    }
    let basis: Vec<Vec<Vector>> = vars.iter().map(|v| (0..v.dim).map(|i| unit_vec(v.dim, i)).collect()).collect();
    let zeros: Vec<Vector> = vars.iter().map(|v| zero_vec(v.dim)).collect();
    let mut pos = alloc::vec![0usize; k];
    let mut choice: Vec<Option<usize>> = alloc::vec![None; k];
    let mut args: Vec<Vector> = zeros.clone();
    loop {
        let mut admissible = true;
        for i in 0..k {
            choice[i] = options[i][pos[i]];
            if let (Some(prev), Some(idx)) = (vars[i].after, choice[i]) {
                match choice[prev] {
                    Some(p) if idx <= p => admissible = false,
                    _ => {}
                }
            }
        }
        if admissible {
            for i in 0..k {
                args[i] = match choice[i] {
                    Some(idx) => basis[i][idx].clone(),
                    None => zeros[i].clone(),
                };
            }
            if !visit(&choice, &args) {
                return;
            }
        }
        // odometer step, last variable fastest
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            pos[i] += 1;
            if pos[i] < options[i].len() {
                break;
            }
            pos[i] = 0;
        }
    }
}

/// Checks `lhs(args) = rhs(args)` on every admissible tuple; `f` returns the
/// pair `(lhs, rhs)`. Stops at the first violation, which is therefore the
/// lexicographically first one.
pub(crate) fn check_identity<F>(label: impl Into<String>, vars: &[Var], mut f: F) -> Check
where
    F: FnMut(&[Vector]) -> (Vector, Vector),
{
    let mut count = 0u64;
    let mut witness = None;
    for_each_tuple(vars, |choice, args| {
        count += 1;
        let (lhs, rhs) = f(args);
        if lhs != rhs {
            witness = Some(Witness {
                args: vars.iter().zip(choice).map(|(v, c)| (v.name.to_string(), *c)).collect(),
                lhs,
                rhs,
            });
            return false;
        }
        true
    });
    Check { label: label.into(), passed: witness.is_none(), tuples_checked: count, witness }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order_and_constraints() {
        let mut seen = Vec::new();
        for_each_tuple(&[var("a", 3), var_after("b", 3, 0)], |c, _| {
            seen.push((c[0].unwrap(), c[1].unwrap()));
            true
        });
        assert_eq!(seen, alloc::vec![(0, 1), (0, 2), (1, 2)]);
        let mut n = 0;
        for_each_tuple(&[var0("z", 2), var("b", 0)], |_, _| {
            n += 1;
            true
        });
        assert_eq!(n, 0);
        for_each_tuple(&[var0("z", 0)], |c, a| {
            assert_eq!(c[0], None);
            assert!(a[0].is_empty());
            n += 1;
            true
        });
        assert_eq!(n, 1);
    }
}
