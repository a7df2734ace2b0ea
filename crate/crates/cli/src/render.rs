//! Text rendering of the JSON results. Numbers are printed from the same
//! values, so both formats carry identical content.

use serde_json::Value;

use crate::Format;

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = String::new();
            json(v, 0, &mut out);
            out
        }
        Format::Table => {
            let mut out = String::new();
            block(v, 0, &mut out);
            out.trim_end().to_string()
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

/// Indented JSON with arrays of scalars kept on one line.
fn json(v: &Value, depth: usize, out: &mut String) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&format!("{}{}: ", pad(depth + 1), Value::from(k.as_str())));
                json(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}}}", pad(depth)));
        }
        Value::Array(items) if !is_flat(v) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                json(x, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}]", pad(depth)));
        }
        other => out.push_str(&other.to_string()),
    }
}

fn pad(depth: usize) -> String {
    "  ".repeat(depth)
}

fn block(v: &Value, depth: usize, out: &mut String) {
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, x) in map {
                if is_flat(x) {
                    out.push_str(&format!("{}{k:width$}  {}\n", pad(depth), cell(x)));
                } else {
                    out.push_str(&format!("{}{k}\n", pad(depth)));
                    block(x, depth + 1, out);
                }
            }
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => table(items, depth, out),
        Value::Array(items) if items.is_empty() => out.push_str(&format!("{}(none)\n", pad(depth))),
        Value::Array(items) => {
            for x in items {
                if is_flat(x) {
                    out.push_str(&format!("{}{}\n", pad(depth), cell(x)));
                } else {
                    block(x, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{}{}\n", pad(depth), cell(other))),
    }
}

/// Rows of objects as aligned columns, headed by the keys of the first row.
fn table(rows: &[Value], depth: usize, out: &mut String) {
    let mut keys: Vec<&String> = Vec::new();
    for r in rows {
        for k in r.as_object().expect("rows are objects").keys() {
            if !keys.contains(&k) {
                keys.push(k);
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| keys.iter().map(|k| r.get(k.as_str()).map_or("-".into(), cell)).collect())
        .collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| cells.iter().map(|c| c[i].len()).max().unwrap_or(0).max(k.len()))
        .collect();
    let line = |items: Vec<&str>| {
        let parts: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:w$}")).collect();
        format!("{}{}\n", pad(depth), parts.join("  ").trim_end())
    };
    out.push_str(&line(keys.iter().map(|k| k.as_str()).collect()));
    for c in &cells {
        out.push_str(&line(c.iter().map(String::as_str).collect()));
    }
}
