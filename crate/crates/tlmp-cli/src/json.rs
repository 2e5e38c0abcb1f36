//! JSON codec for the core data types.
//!
//! Rationals are written as strings `"p/q"` (or `"n"` for integers) and read
//! from such strings or from JSON integers; floating-point numbers are
//! rejected. Matrices are row-major nested arrays. Tensors are sparse lists
//! of their nonzero values on basis tuples; omitted tuples are zero, and a
//! tuple listed twice (in any order of its skew-symmetric indices) is a
//! schema error. Decoding never guesses: unknown keys, wrong lengths and
//! out-of-range indices are all rejected.
//!
//! Output goes through [`serde_json::Value`], whose maps keep keys sorted,
//! so serializing the same value always yields the same bytes.

use std::collections::BTreeSet;

use serde_json::{json, Map, Value};
use tlmp_core::cohomology::{Cochain1, Cochain2, CochainShape};
use tlmp_core::matched::MatchedPair;
use tlmp_core::report::{Check, Report, Witness};
use tlmp_core::representation::{MPRepresentation, Pairing};
use tlmp_core::structure::{Alt3, LinMap, ThreeLie, TriAction};
use tlmp_core::wells::{AutPair, Decision, TotalAut};
use tlmp_core::{Rational, RationalMatrix, Vector};

use crate::error::{CliError, CliResult};

// ---------------------------------------------------------------------------
// Scalars, vectors, matrices
// ---------------------------------------------------------------------------

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rational_from_json(v: &Value, ctx: &str) -> CliResult<Rational> {
    match v {
        Value::String(s) => s
            .trim()
            .parse::<Rational>()
            .map_err(|e| CliError::input(format!("{ctx}: `{s}` is not a rational number ({e})"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(CliError::input(format!("{ctx}: `{n}` is not exact; write rationals as \"p/q\" strings")))
            }
        }
        other => Err(CliError::input(format!("{ctx}: expected a rational, found {}", kind_of(other)))),
    }
}

pub fn vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

pub fn vector_from_json(v: &Value, len: usize, ctx: &str) -> CliResult<Vector> {
    let items = array(v, ctx)?;
    if items.len() != len {
        return Err(CliError::input(format!("{ctx}: expected {len} coefficients, found {}", items.len())));
    }
    items.iter().enumerate().map(|(i, x)| rational_from_json(x, &format!("{ctx}[{i}]"))).collect()
}

pub fn matrix_to_json(m: &RationalMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_to_json(m.row(r))).collect())
}

/// Reads a row-major matrix of the given shape.
pub fn matrix_from_json(v: &Value, rows: usize, cols: usize, ctx: &str) -> CliResult<RationalMatrix> {
    let items = array(v, ctx)?;
    if items.len() != rows {
        return Err(CliError::input(format!("{ctx}: expected {rows} rows, found {}", items.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (r, row) in items.iter().enumerate() {
        entries.extend(vector_from_json(row, cols, &format!("{ctx} row {r}"))?);
    }
    Ok(RationalMatrix::from_entries(rows, cols, entries)?)
}

/// Reads a row-major matrix with a known number of rows and columns
/// inferred from the first row (zero when there are no rows).
pub fn matrix_with_rows(v: &Value, rows: usize, ctx: &str) -> CliResult<RationalMatrix> {
    let items = array(v, ctx)?;
    let cols = match items.first() {
        Some(first) => array(first, &format!("{ctx} row 0"))?.len(),
        None => 0,
    };
    matrix_from_json(v, rows, cols, ctx)
}

/// Reads a square matrix whose size is inferred from the number of rows.
pub fn square_from_json(v: &Value, ctx: &str) -> CliResult<RationalMatrix> {
    let n = array(v, ctx)?.len();
    matrix_from_json(v, n, n, ctx)
}

pub fn linmap_to_json(f: &LinMap) -> Value {
    matrix_to_json(f.matrix())
}

// ---------------------------------------------------------------------------
// Generic helpers
// ---------------------------------------------------------------------------

fn kind_of(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

pub fn object<'a>(v: &'a Value, ctx: &str) -> CliResult<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| CliError::input(format!("{ctx}: expected an object, found {}", kind_of(v))))
}

pub fn array<'a>(v: &'a Value, ctx: &str) -> CliResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| CliError::input(format!("{ctx}: expected an array, found {}", kind_of(v))))
}

pub fn index(v: &Value, ctx: &str) -> CliResult<usize> {
    v.as_u64()
        .and_then(|u| usize::try_from(u).ok())
        .ok_or_else(|| CliError::input(format!("{ctx}: expected a non-negative integer, found {v}")))
}

/// Rejects keys outside `allowed`.
pub fn expect_keys(m: &Map<String, Value>, allowed: &[&str], ctx: &str) -> CliResult<()> {
    for k in m.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(CliError::input(format!("{ctx}: unknown field `{k}` (expected one of {})", allowed.join(", "))));
        }
    }
    Ok(())
}

pub fn field<'a>(m: &'a Map<String, Value>, key: &str, ctx: &str) -> CliResult<&'a Value> {
    m.get(key).ok_or_else(|| CliError::input(format!("{ctx}: missing field `{key}`")))
}

fn entry_list<'a>(m: &'a Map<String, Value>, key: &str, ctx: &str) -> CliResult<&'a [Value]> {
    match m.get(key) {
        None | Some(Value::Null) => Ok(&[]),
        Some(v) => Ok(array(v, &format!("{ctx}.{key}"))?.as_slice()),
    }
}

fn indices<const N: usize>(v: &Value, ctx: &str) -> CliResult<[usize; N]> {
    let items = array(v, ctx)?;
    if items.len() != N {
        return Err(CliError::input(format!("{ctx}: expected {N} indices, found {}", items.len())));
    }
    let mut out = [0; N];
    for (o, x) in out.iter_mut().zip(items) {
        *o = index(x, ctx)?;
    }
    Ok(out)
}

fn check_range(i: usize, dim: usize, ctx: &str) -> CliResult<()> {
    if i >= dim {
        return Err(CliError::input(format!("{ctx}: index {i} out of range for dimension {dim}")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Sparse tensors
// ---------------------------------------------------------------------------

/// `[{"on": [i,j,k], "value": [...]}]` on increasing triples.
pub fn alt3_to_json(t: &Alt3) -> Value {
    Value::Array(
        t.canonical_entries()
            .into_iter()
            .map(|(on, v)| json!({ "on": on, "value": vector_to_json(&v) }))
            .collect(),
    )
}

pub fn alt3_from_json(items: &[Value], n: usize, m: usize, ctx: &str) -> CliResult<Alt3> {
    let mut t = Alt3::zero(n, m);
    let mut seen = BTreeSet::new();
    for (e, item) in items.iter().enumerate() {
        let c = format!("{ctx}[{e}]");
        let o = object(item, &c)?;
        expect_keys(o, &["on", "value"], &c)?;
        let [i, j, k] = indices::<3>(field(o, "on", &c)?, &format!("{c}.on"))?;
        for x in [i, j, k] {
            check_range(x, n, &format!("{c}.on"))?;
        }
        let v = vector_from_json(field(o, "value", &c)?, m, &format!("{c}.value"))?;
        let mut key = [i, j, k];
        key.sort_unstable();
        if !seen.insert(key) {
            return Err(CliError::input(format!("{c}: triple {key:?} listed twice")));
        }
        t.set(i, j, k, &v).map_err(|err| CliError::input(format!("{c}: {err}")))?;
    }
    Ok(t)
}

/// `[{"pair": [i,j], "on": s, "value": [...]}]` with `i < j`.
pub fn triaction_to_json(t: &TriAction) -> Value {
    Value::Array(
        t.canonical_entries()
            .into_iter()
            .map(|(pair, s, v)| json!({ "pair": pair, "on": s, "value": vector_to_json(&v) }))
            .collect(),
    )
}

pub fn triaction_from_json(items: &[Value], n: usize, t_dim: usize, m: usize, ctx: &str) -> CliResult<TriAction> {
    let mut t = TriAction::zero(n, t_dim, m);
    let mut seen = BTreeSet::new();
    for (e, item) in items.iter().enumerate() {
        let c = format!("{ctx}[{e}]");
        let o = object(item, &c)?;
        expect_keys(o, &["pair", "on", "value"], &c)?;
        let [i, j] = indices::<2>(field(o, "pair", &c)?, &format!("{c}.pair"))?;
        check_range(i, n, &format!("{c}.pair"))?;
        check_range(j, n, &format!("{c}.pair"))?;
        let s = index(field(o, "on", &c)?, &format!("{c}.on"))?;
        check_range(s, t_dim, &format!("{c}.on"))?;
        let v = vector_from_json(field(o, "value", &c)?, m, &format!("{c}.value"))?;
        if !seen.insert((i.min(j), i.max(j), s)) {
            return Err(CliError::input(format!("{c}: entry ({i},{j};{s}) listed twice")));
        }
        t.set(i, j, s, &v).map_err(|err| CliError::input(format!("{c}: {err}")))?;
    }
    Ok(t)
}

/// `[{k0: i, k1: j, k2: k, "value": [...]}]` for a bilinear pairing.
pub fn pairing_to_json(p: &Pairing, keys: [&str; 3]) -> Value {
    Value::Array(
        p.entries()
            .into_iter()
            .map(|(idx, v)| {
                let mut o = Map::new();
                for (k, i) in keys.iter().zip(idx) {
                    o.insert((*k).to_string(), json!(i));
                }
                o.insert("value".into(), vector_to_json(&v));
                Value::Object(o)
            })
            .collect(),
    )
}

pub fn pairing_from_json(items: &[Value], dims: (usize, usize, usize, usize), keys: [&str; 3], ctx: &str) -> CliResult<Pairing> {
    let (p, q, r, m) = dims;
    let mut out = Pairing::zero(p, q, r, m);
    let mut seen = BTreeSet::new();
    for (e, item) in items.iter().enumerate() {
        let c = format!("{ctx}[{e}]");
        let o = object(item, &c)?;
        expect_keys(o, &[keys[0], keys[1], keys[2], "value"], &c)?;
        let mut idx = [0; 3];
        for ((slot, key), dim) in idx.iter_mut().zip(keys).zip([p, q, r]) {
            *slot = index(field(o, key, &c)?, &format!("{c}.{key}"))?;
            check_range(*slot, dim, &format!("{c}.{key}"))?;
        }
        let v = vector_from_json(field(o, "value", &c)?, m, &format!("{c}.value"))?;
        if !seen.insert(idx) {
            return Err(CliError::input(format!("{c}: entry {idx:?} listed twice")));
        }
        out.set(idx[0], idx[1], idx[2], &v).map_err(|err| CliError::input(format!("{c}: {err}")))?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Algebras, matched pairs, representations
// ---------------------------------------------------------------------------

pub fn algebra_to_json(a: &ThreeLie) -> Value {
    json!({
        "dim": a.dim(),
        "basis": a.basis(),
        "brackets": alt3_to_json(a.bracket()),
    })
}

pub fn algebra_from_json(v: &Value, ctx: &str) -> CliResult<ThreeLie> {
    let o = object(v, ctx)?;
    expect_keys(o, &["dim", "basis", "brackets"], ctx)?;
    let dim = index(field(o, "dim", ctx)?, &format!("{ctx}.dim"))?;
    let basis = match o.get("basis") {
        None | Some(Value::Null) => ThreeLie::default_names("e", dim),
        Some(b) => {
            let items = array(b, &format!("{ctx}.basis"))?;
            if items.len() != dim {
                return Err(CliError::input(format!("{ctx}.basis: {} names for dimension {dim}", items.len())));
            }
            items
                .iter()
                .map(|x| {
                    x.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| CliError::input(format!("{ctx}.basis: names must be strings")))
                })
                .collect::<CliResult<Vec<_>>>()?
        }
    };
    let bracket = alt3_from_json(entry_list(o, "brackets", ctx)?, dim, dim, &format!("{ctx}.brackets"))?;
    Ok(ThreeLie::new(basis, bracket)?)
}

pub fn pair_to_json(p: &MatchedPair) -> Value {
    json!({
        "g": algebra_to_json(&p.g),
        "h": algebra_to_json(&p.h),
        "rho": triaction_to_json(&p.rho),
        "psi": triaction_to_json(&p.psi),
    })
}

pub fn pair_from_json(v: &Value, ctx: &str) -> CliResult<MatchedPair> {
    let o = object(v, ctx)?;
    expect_keys(o, &["g", "h", "rho", "psi"], ctx)?;
    let g = algebra_from_json(field(o, "g", ctx)?, &format!("{ctx}.g"))?;
    let h = algebra_from_json(field(o, "h", ctx)?, &format!("{ctx}.h"))?;
    let (n, m) = (g.dim(), h.dim());
    let rho = triaction_from_json(entry_list(o, "rho", ctx)?, n, m, m, &format!("{ctx}.rho"))?;
    let psi = triaction_from_json(entry_list(o, "psi", ctx)?, m, n, n, &format!("{ctx}.psi"))?;
    Ok(MatchedPair::new(g, h, rho, psi)?)
}

const ALPHA_KEYS: [&str; 3] = ["v", "x", "a"];
const BETA_KEYS: [&str; 3] = ["w", "a", "x"];

pub fn rep_to_json(r: &MPRepresentation) -> Value {
    json!({
        "V_dim": r.v_dim(),
        "W_dim": r.w_dim(),
        "rhoV": triaction_to_json(&r.rho_v),
        "rhoW": triaction_to_json(&r.rho_w),
        "psiV": triaction_to_json(&r.psi_v),
        "psiW": triaction_to_json(&r.psi_w),
        "alpha": pairing_to_json(&r.alpha, ALPHA_KEYS),
        "beta": pairing_to_json(&r.beta, BETA_KEYS),
    })
}

pub fn rep_from_json(v: &Value, p: &MatchedPair, ctx: &str) -> CliResult<MPRepresentation> {
    let o = object(v, ctx)?;
    expect_keys(o, &["V_dim", "W_dim", "rhoV", "rhoW", "psiV", "psiW", "alpha", "beta"], ctx)?;
    let dv = index(field(o, "V_dim", ctx)?, &format!("{ctx}.V_dim"))?;
    let dw = index(field(o, "W_dim", ctx)?, &format!("{ctx}.W_dim"))?;
    let (n, m) = (p.g_dim(), p.h_dim());
    let c = |k: &str| format!("{ctx}.{k}");
    let rho_v = triaction_from_json(entry_list(o, "rhoV", ctx)?, n, dv, dv, &c("rhoV"))?;
    let rho_w = triaction_from_json(entry_list(o, "rhoW", ctx)?, n, dw, dw, &c("rhoW"))?;
    let psi_v = triaction_from_json(entry_list(o, "psiV", ctx)?, m, dv, dv, &c("psiV"))?;
    let psi_w = triaction_from_json(entry_list(o, "psiW", ctx)?, m, dw, dw, &c("psiW"))?;
    let alpha = pairing_from_json(entry_list(o, "alpha", ctx)?, (dv, n, m, dw), ALPHA_KEYS, &c("alpha"))?;
    let beta = pairing_from_json(entry_list(o, "beta", ctx)?, (dw, m, n, dv), BETA_KEYS, &c("beta"))?;
    Ok(MPRepresentation::new(p, dv, dw, rho_v, rho_w, psi_v, psi_w, alpha, beta)?)
}

// ---------------------------------------------------------------------------
// Cochains
// ---------------------------------------------------------------------------

pub fn shape_to_json(s: CochainShape) -> Value {
    json!({ "g": s.g, "h": s.h, "V": s.v, "W": s.w })
}

pub fn cochain1_to_json(c: &Cochain1) -> Value {
    json!({ "N1": matrix_to_json(&c.n1), "N2": matrix_to_json(&c.n2) })
}

pub fn cochain1_from_json(v: &Value, s: CochainShape, ctx: &str) -> CliResult<Cochain1> {
    let o = object(v, ctx)?;
    expect_keys(o, &["N1", "N2"], ctx)?;
    let n1 = matrix_from_json(field(o, "N1", ctx)?, s.v, s.g, &format!("{ctx}.N1"))?;
    let n2 = matrix_from_json(field(o, "N2", ctx)?, s.w, s.h, &format!("{ctx}.N2"))?;
    Ok(Cochain1::new(s, n1, n2)?)
}

pub fn cochain2_to_json(c: &Cochain2) -> Value {
    json!({
        "omega": alt3_to_json(&c.omega),
        "theta": alt3_to_json(&c.theta),
        "nu": triaction_to_json(&c.nu),
        "phi": triaction_to_json(&c.phi),
    })
}

pub fn cochain2_from_json(v: &Value, s: CochainShape, ctx: &str) -> CliResult<Cochain2> {
    let o = object(v, ctx)?;
    expect_keys(o, &["omega", "theta", "nu", "phi"], ctx)?;
    let c = |k: &str| format!("{ctx}.{k}");
    let out = Cochain2 {
        omega: alt3_from_json(entry_list(o, "omega", ctx)?, s.g, s.v, &c("omega"))?,
        theta: alt3_from_json(entry_list(o, "theta", ctx)?, s.h, s.w, &c("theta"))?,
        nu: triaction_from_json(entry_list(o, "nu", ctx)?, s.g, s.h, s.w, &c("nu"))?,
        phi: triaction_from_json(entry_list(o, "phi", ctx)?, s.h, s.g, s.v, &c("phi"))?,
    };
    out.check_shape(s)?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// Extensions, sections, automorphisms, certificates
// ---------------------------------------------------------------------------

/// The raw parts of an extension bundle, before any axiom is checked.
#[derive(Clone, Debug)]
pub struct ExtensionParts {
    pub base: MatchedPair,
    pub total: MatchedPair,
    pub i1: LinMap,
    pub i2: LinMap,
    pub j1: LinMap,
    pub j2: LinMap,
}

pub fn extension_to_json(base: &MatchedPair, total: &MatchedPair, maps: [&LinMap; 4]) -> Value {
    json!({
        "base": pair_to_json(base),
        "total": pair_to_json(total),
        "i1": linmap_to_json(maps[0]),
        "i2": linmap_to_json(maps[1]),
        "j1": linmap_to_json(maps[2]),
        "j2": linmap_to_json(maps[3]),
    })
}

pub fn extension_from_json(v: &Value, ctx: &str) -> CliResult<ExtensionParts> {
    let o = object(v, ctx)?;
    expect_keys(o, &["base", "total", "i1", "i2", "j1", "j2"], ctx)?;
    let base = pair_from_json(field(o, "base", ctx)?, &format!("{ctx}.base"))?;
    let total = pair_from_json(field(o, "total", ctx)?, &format!("{ctx}.total"))?;
    let (n, m, tn, tm) = (base.g_dim(), base.h_dim(), total.g_dim(), total.h_dim());
    let fiber = |t: usize, b: usize, name: &str| {
        t.checked_sub(b)
            .ok_or_else(|| CliError::input(format!("{ctx}: total {name} is smaller than base {name}")))
    };
    let (dv, dw) = (fiber(tn, n, "g")?, fiber(tm, m, "h")?);
    let c = |k: &str| format!("{ctx}.{k}");
    Ok(ExtensionParts {
        i1: LinMap::new(matrix_from_json(field(o, "i1", ctx)?, tn, dv, &c("i1"))?),
        i2: LinMap::new(matrix_from_json(field(o, "i2", ctx)?, tm, dw, &c("i2"))?),
        j1: LinMap::new(matrix_from_json(field(o, "j1", ctx)?, n, tn, &c("j1"))?),
        j2: LinMap::new(matrix_from_json(field(o, "j2", ctx)?, m, tm, &c("j2"))?),
        base,
        total,
    })
}

pub fn section_to_json(s1: &LinMap, s2: &LinMap) -> Value {
    json!({ "s1": linmap_to_json(s1), "s2": linmap_to_json(s2) })
}

/// Reads a section `s1 : g → ĝ`, `s2 : h → ĥ` of an extension with base
/// dimensions `(n, m)` and total dimensions `(tn, tm)`.
pub fn section_from_json(v: &Value, base: (usize, usize), total: (usize, usize), ctx: &str) -> CliResult<(LinMap, LinMap)> {
    let o = object(v, ctx)?;
    expect_keys(o, &["s1", "s2"], ctx)?;
    let s1 = matrix_from_json(field(o, "s1", ctx)?, total.0, base.0, &format!("{ctx}.s1"))?;
    let s2 = matrix_from_json(field(o, "s2", ctx)?, total.1, base.1, &format!("{ctx}.s2"))?;
    Ok((LinMap::new(s1), LinMap::new(s2)))
}

pub fn aut_pair_to_json(a: &AutPair) -> Value {
    json!({
        "alpha1": linmap_to_json(&a.alpha1),
        "alpha2": linmap_to_json(&a.alpha2),
        "beta1": linmap_to_json(&a.beta1),
        "beta2": linmap_to_json(&a.beta2),
    })
}

/// Reads an automorphism pair of the given shape. Fiber components may be
/// omitted only when `optional_fiber` is set; they then default to the
/// identity.
pub fn aut_pair_from_json(v: &Value, s: CochainShape, optional_fiber: bool, ctx: &str) -> CliResult<AutPair> {
    let o = object(v, ctx)?;
    expect_keys(o, &["alpha1", "alpha2", "beta1", "beta2"], ctx)?;
    let read = |key: &str, n: usize, optional: bool| -> CliResult<LinMap> {
        match o.get(key) {
            None if optional => Ok(LinMap::identity(n)),
            _ => Ok(LinMap::new(matrix_from_json(field(o, key, ctx)?, n, n, &format!("{ctx}.{key}"))?)),
        }
    };
    Ok(AutPair {
        alpha1: read("alpha1", s.g, false)?,
        alpha2: read("alpha2", s.h, false)?,
        beta1: read("beta1", s.v, optional_fiber)?,
        beta2: read("beta2", s.w, optional_fiber)?,
    })
}

pub fn total_aut_to_json(t: &TotalAut) -> Value {
    json!({ "gamma1": linmap_to_json(&t.gamma1), "gamma2": linmap_to_json(&t.gamma2) })
}

pub fn total_aut_from_json(v: &Value, total: (usize, usize), ctx: &str) -> CliResult<TotalAut> {
    let o = object(v, ctx)?;
    expect_keys(o, &["gamma1", "gamma2"], ctx)?;
    Ok(TotalAut {
        gamma1: LinMap::new(matrix_from_json(field(o, "gamma1", ctx)?, total.0, total.0, &format!("{ctx}.gamma1"))?),
        gamma2: LinMap::new(matrix_from_json(field(o, "gamma2", ctx)?, total.1, total.1, &format!("{ctx}.gamma2"))?),
    })
}

/// `{"zeta", "eta"}` for an inducible pair, `{"obstruction", "rank_gap"}`
/// otherwise.
pub fn certificate_to_json(d: &Decision) -> Value {
    match d {
        Decision::Extensible { zeta, eta } => json!({ "zeta": matrix_to_json(zeta), "eta": matrix_to_json(eta) }),
        Decision::Obstructed { obstruction, rank_gap } => {
            json!({ "obstruction": cochain2_to_json(obstruction), "rank_gap": rank_gap })
        }
    }
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

pub fn witness_to_json(w: &Witness) -> Value {
    json!({
        "args": w.args.iter().map(|(name, i)| json!({ "name": name, "basis": i })).collect::<Vec<_>>(),
        "lhs": vector_to_json(&w.lhs),
        "rhs": vector_to_json(&w.rhs),
    })
}

pub fn check_to_json(c: &Check) -> Value {
    json!({
        "label": c.label,
        "passed": c.passed,
        "tuples_checked": c.tuples_checked,
        "witness": c.witness.as_ref().map(witness_to_json),
    })
}

/// A report: its title, overall verdict and every check.
pub fn report_to_json(r: &Report) -> Value {
    json!({
        "title": r.title,
        "passed": r.passed(),
        "checks": r.checks.iter().map(check_to_json).collect::<Vec<_>>(),
    })
}

/// Human-readable one-line description of a witness.
pub fn describe_witness(w: &Witness) -> String {
    let args: Vec<String> = w
        .args
        .iter()
        .map(|(name, i)| match i {
            Some(i) => format!("{name}=#{}", i + 1),
            None => format!("{name}=0"),
        })
        .collect();
    let fmt = |v: &Vector| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    format!("at ({}): lhs = [{}], rhs = [{}]", args.join(", "), fmt(&w.lhs), fmt(&w.rhs))
}
