//! Human-readable rendering of a JSON report.
//!
//! The text form is a direct transcription of the JSON document, so the two
//! output formats carry the same information. Check records are condensed
//! to one line each (`PASS label` or `FAIL label at (...)`).

use serde_json::{Map, Value};

pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    if let Some(obj) = doc.as_object() {
        if let Some(status) = obj.get("status").and_then(Value::as_str) {
            out.push_str(&format!("status: {}\n", status.to_uppercase()));
        }
        for (k, v) in obj {
            if k != "status" {
                entry(&mut out, k, v, 0);
            }
        }
    } else {
        value(&mut out, doc, 0);
    }
    out
}

fn pad(n: usize) -> String {
    " ".repeat(n)
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let items: Vec<String> = a.iter().filter_map(scalar).collect();
            Some(format!("[{}]", items.join(", ")))
        }
        Value::Array(a) if a.iter().all(|x| x.as_array().is_some_and(|r| r.iter().all(|y| !y.is_array() && !y.is_object()))) => {
            let rows: Vec<String> = a.iter().filter_map(scalar).collect();
            Some(format!("[{}]", rows.join(", ")))
        }
        _ => None,
    }
}

fn check_line(o: &Map<String, Value>) -> Option<String> {
    let label = o.get("label")?.as_str()?;
    let passed = o.get("passed")?.as_bool()?;
    let tuples = o.get("tuples_checked")?.as_u64()?;
    let mut line = format!("{} {label} ({tuples} tuples)", if passed { "PASS" } else { "FAIL" });
    if let Some(w) = o.get("witness").and_then(Value::as_object) {
        let args: Vec<String> = w
            .get("args")
            .and_then(Value::as_array)
            .map(|a| {
                a.iter()
                    .map(|x| {
                        let name = x.get("name").and_then(Value::as_str).unwrap_or("?");
                        match x.get("basis").and_then(Value::as_u64) {
                            Some(i) => format!("{name}=#{}", i + 1),
                            None => format!("{name}=0"),
                        }
                    })
                    .collect()
            })
            .unwrap_or_default();
        let lhs = w.get("lhs").and_then(scalar).unwrap_or_default();
        let rhs = w.get("rhs").and_then(scalar).unwrap_or_default();
        line.push_str(&format!(" at ({}): lhs = {lhs}, rhs = {rhs}", args.join(", ")));
    }
    Some(line)
}

fn entry(out: &mut String, key: &str, v: &Value, indent: usize) {
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{}{key}: {s}\n", pad(indent)));
    } else if let Some(line) = v.as_object().and_then(check_line) {
        out.push_str(&format!("{}{key}: {line}\n", pad(indent)));
    } else {
        out.push_str(&format!("{}{key}:\n", pad(indent)));
        value(out, v, indent + 2);
    }
}

fn value(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Object(o) => {
            if let Some(line) = check_line(o) {
                out.push_str(&format!("{}{line}\n", pad(indent)));
                return;
            }
            for (k, x) in o {
                entry(out, k, x, indent);
            }
        }
        Value::Array(a) => {
            for item in a {
                if let Some(s) = scalar(item) {
                    out.push_str(&format!("{}- {s}\n", pad(indent)));
                } else if let Some(line) = item.as_object().and_then(check_line) {
                    out.push_str(&format!("{}{line}\n", pad(indent)));
                } else {
                    out.push_str(&format!("{}-\n", pad(indent)));
                    value(out, item, indent + 2);
                }
            }
        }
        other => {
            if let Some(s) = scalar(other) {
                out.push_str(&format!("{}{s}\n", pad(indent)));
            }
        }
    }
}
