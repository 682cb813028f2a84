use std::fmt::Write as _;

use clap::ValueEnum;
use hlzeta::exact::{CyclotomicNumber, Rational};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A command result in its three renderings. `rows` is used for CSV; when
/// absent the JSON record is flattened into a single row.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub rows: Option<Vec<Value>>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values serialize"),
            Format::Text => self.text.clone(),
            Format::Csv => match &self.rows {
                Some(rows) => csv(rows),
                None => csv(std::slice::from_ref(&self.json)),
            },
        }
    }
}

fn int_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

/// `{num, den}`; integers that overflow `i64` become decimal strings.
pub fn rational_json(q: &Rational) -> Value {
    json!({"num": int_json(q.numer()), "den": int_json(q.denom())})
}

/// A rational as `{num, den}`, otherwise the coordinates in the power basis
/// of `e(1/order)`.
pub fn cyclotomic_json(v: &CyclotomicNumber) -> Value {
    match v.as_rational() {
        Some(q) => rational_json(&q),
        None => json!({
            "order": v.order(),
            "coeffs": v.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
        }),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Map<String, Value>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(a) => {
            let s: Vec<String> = a.iter().map(cell).collect();
            out.insert(prefix.to_string(), Value::String(s.join(";")));
        }
        x => {
            out.insert(prefix.to_string(), x.clone());
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Object(m) if m.contains_key("num") && m.contains_key("den") => {
            format!("{}/{}", cell(&m["num"]), cell(&m["den"]))
        }
        x => x.to_string(),
    }
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Header from the first row's flattened keys; nested objects become
/// dotted columns and arrays `;`-joined cells.
pub fn csv(rows: &[Value]) -> String {
    let flat: Vec<Map<String, Value>> = rows
        .iter()
        .map(|r| {
            let mut m = Map::new();
            flatten("", r, &mut m);
            m
        })
        .collect();
    let Some(first) = flat.first() else {
        return String::new();
    };
    let header: Vec<String> = first.keys().cloned().collect();
    let mut out = header.iter().map(|h| quote(h)).collect::<Vec<_>>().join(",");
    out.push('\n');
    for row in &flat {
        let line: Vec<String> = header.iter().map(|h| quote(&row.get(h).map(cell).unwrap_or_default())).collect();
        let _ = writeln!(out, "{}", line.join(","));
    }
    out
}
