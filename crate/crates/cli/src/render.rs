//! Plain-text rendering of reports.

use std::fmt::Write;

use serde_json::{Map, Value};

use crate::Report;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(","),
        Value::Object(map) => map
            .iter()
            .filter(|(k, _)| !k.ends_with("_value"))
            .map(|(k, v)| format!("{k}={}", scalar(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn table(out: &mut String, indent: &str, rows: &[Value]) {
    let Some(Value::Object(first)) = rows.first() else {
        return;
    };
    let keys: Vec<&String> = first.keys().filter(|k| !k.ends_with("_value")).collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| keys.iter().map(|k| scalar(&r[k.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| {
            cells
                .iter()
                .map(|row| row[i].chars().count())
                .chain([k.len()])
                .max()
                .unwrap()
        })
        .collect();
    let line = |out: &mut String, row: Vec<&str>| {
        let padded: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{indent}{}", padded.join("  ").trim_end());
    };
    line(out, keys.iter().map(|k| k.as_str()).collect());
    for row in &cells {
        line(out, row.iter().map(String::as_str).collect());
    }
}

fn object(out: &mut String, indent: &str, map: &Map<String, Value>) {
    for (key, value) in map
        .iter()
        .filter(|(k, v)| !k.ends_with("_value") && !v.is_null())
    {
        match value {
            Value::Object(inner) => {
                let _ = writeln!(out, "{indent}{key}:");
                object(out, &format!("{indent}  "), inner);
            }
            Value::Array(items) if items.iter().any(Value::is_object) => {
                let _ = writeln!(out, "{indent}{key}: {} entries", items.len());
                table(out, &format!("{indent}  "), items);
            }
            other => {
                let _ = writeln!(out, "{indent}{key}: {}", scalar(other));
            }
        }
    }
}

/// Human-readable form of a report's result; diagnostics are not included.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    match &report.result {
        Value::Object(map) => object(&mut out, "", map),
        Value::Null => {}
        other => {
            let _ = writeln!(out, "{}", scalar(other));
        }
    }
    out
}
