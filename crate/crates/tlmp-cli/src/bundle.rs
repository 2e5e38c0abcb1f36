//! Self-describing JSON bundles: `{"kind", "payload", "meta"}`.
//!
//! The kind names the payload schema; a bundle whose payload does not match
//! its kind is rejected when the payload is decoded.

use std::fmt;
use std::path::Path;

use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::json::{expect_keys, field, object};

/// The payload schemas a bundle can carry.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Algebra,
    MatchedPair,
    Representation,
    Cochain1,
    Cochain2,
    Extension,
    Section,
    AutPair,
    Deformation,
    /// An automorphism `(γ1, γ2)` of the total matched pair of an extension.
    TotalAut,
}

impl Kind {
    pub const ALL: [Kind; 10] = [
        Kind::Algebra,
        Kind::MatchedPair,
        Kind::Representation,
        Kind::Cochain1,
        Kind::Cochain2,
        Kind::Extension,
        Kind::Section,
        Kind::AutPair,
        Kind::Deformation,
        Kind::TotalAut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::MatchedPair => "matched_pair",
            Kind::Representation => "representation",
            Kind::Cochain1 => "cochain1",
            Kind::Cochain2 => "cochain2",
            Kind::Extension => "extension",
            Kind::Section => "section",
            Kind::AutPair => "aut_pair",
            Kind::Deformation => "deformation",
            Kind::TotalAut => "total_aut",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Bundle {
    pub kind: Kind,
    pub payload: Value,
    pub meta: Option<String>,
}

impl Bundle {
    pub fn new(kind: Kind, payload: Value, meta: impl Into<Option<String>>) -> Self {
        Bundle { kind, payload, meta: meta.into() }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "kind": self.kind.name(), "payload": self.payload });
        if let Some(m) = &self.meta {
            v["meta"] = Value::String(m.clone());
        }
        v
    }

    pub fn from_json(v: &Value, ctx: &str) -> CliResult<Bundle> {
        let o = object(v, ctx)?;
        expect_keys(o, &["kind", "payload", "meta"], ctx)?;
        let kind_str = field(o, "kind", ctx)?
            .as_str()
            .ok_or_else(|| CliError::input(format!("{ctx}: `kind` must be a string")))?;
        let kind = Kind::parse(kind_str).ok_or_else(|| {
            let names: Vec<_> = Kind::ALL.iter().map(|k| k.name()).collect();
            CliError::input(format!("{ctx}: unknown kind `{kind_str}` (expected one of {})", names.join(", ")))
        })?;
        let meta = match o.get("meta") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return Err(CliError::input(format!("{ctx}: `meta` must be a string"))),
        };
        Ok(Bundle { kind, payload: field(o, "payload", ctx)?.clone(), meta })
    }

    /// Reads and parses a bundle file.
    pub fn load(path: &Path) -> CliResult<Bundle> {
        let ctx = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{ctx}: cannot read: {e}")))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| CliError::input(format!("{ctx}: malformed JSON: {e}")))?;
        Bundle::from_json(&v, &ctx)
    }

    /// Reads a bundle and checks that it has one of the accepted kinds.
    pub fn load_kind(path: &Path, accepted: &[Kind]) -> CliResult<Bundle> {
        let b = Bundle::load(path)?;
        if !accepted.contains(&b.kind) {
            let names: Vec<_> = accepted.iter().map(|k| k.name()).collect();
            return Err(CliError::input(format!(
                "{}: bundle of kind `{}` where {} was expected",
                path.display(),
                b.kind,
                names.join(" or ")
            )));
        }
        Ok(b)
    }

    /// Writes the bundle in canonical form.
    pub fn write(&self, path: &Path) -> CliResult<()> {
        std::fs::write(path, canonical(&self.to_json()))
            .map_err(|e| CliError::input(format!("{}: cannot write: {e}", path.display())))
    }
}

/// Canonical serialization: sorted keys, two-space indentation, trailing
/// newline.
pub fn canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
