//! Reports: one per command, rendered as JSON or as stable plain text.

use serde_json::{json, Map, Value};
use weylkit::Scalar;

/// How a report maps onto the exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Definite,
    Inconclusive,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Definite => 0,
            Status::Error => 1,
            Status::Inconclusive => 2,
        }
    }
}

pub const NOT_FOUND: &str = "not-found-up-to";
pub const ERROR: &str = "error";

/// Search limits that applied to a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Bound {
    pub degree: Option<u32>,
    pub length: Option<u32>,
}

impl Bound {
    pub fn degree(d: u32) -> Self {
        Bound {
            degree: Some(d),
            length: None,
        }
    }

    pub fn length(l: u32) -> Self {
        Bound {
            degree: None,
            length: Some(l),
        }
    }

    fn to_json(self) -> Value {
        let mut m = Map::new();
        if let Some(d) = self.degree {
            m.insert("D".into(), d.into());
        }
        if let Some(l) = self.length {
            m.insert("L".into(), l.into());
        }
        Value::Object(m)
    }

    fn to_text(self) -> String {
        let mut parts = Vec::new();
        if let Some(d) = self.degree {
            parts.push(format!("D={d}"));
        }
        if let Some(l) = self.length {
            parts.push(format!("L={l}"));
        }
        parts.join(" ")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub verb: String,
    pub outcome: String,
    pub payload: Map<String, Value>,
    pub bound: Option<Bound>,
    pub millis: u64,
}

impl Report {
    pub fn status(&self) -> Status {
        match self.outcome.as_str() {
            ERROR => Status::Error,
            NOT_FOUND => Status::Inconclusive,
            _ => Status::Definite,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status().exit_code()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "verb": self.verb,
            "outcome": self.outcome,
            "payload": Value::Object(self.payload.clone()),
            "bound": self.bound.map_or(Value::Null, Bound::to_json),
            "millis": self.millis,
        })
    }

    /// Plain text without timing, so identical inputs give identical bytes.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.verb, self.outcome);
        let mut lines = Vec::new();
        for (k, v) in &self.payload {
            flatten(k, v, &mut lines);
        }
        for (k, v) in lines {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        if let Some(b) = self.bound {
            out.push_str(&format!("  bound: {}\n", b.to_text()));
        }
        out
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null | Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        // Exact field elements serialize as {rat, surd}; show them as text.
        Value::Object(m) if m.len() == 2 && m.contains_key("rat") && m.contains_key("surd") => {
            serde_json::from_value::<Scalar>(v.clone()).ok().map(|c| c.to_string())
        }
        _ => None,
    }
}

fn flatten(key: &str, v: &Value, out: &mut Vec<(String, String)>) {
    if let Some(s) = scalar_text(v) {
        out.push((key.to_string(), s));
        return;
    }
    match v {
        Value::Array(items) if items.is_empty() => out.push((key.to_string(), "[]".into())),
        Value::Array(items) => {
            if let Some(texts) = items.iter().map(scalar_text).collect::<Option<Vec<_>>>() {
                out.push((key.to_string(), format!("[{}]", texts.join(", "))));
                return;
            }
            for (i, item) in items.iter().enumerate() {
                let k = format!("{key}[{i}]");
                match item {
                    // Small records such as table entries stay on one line.
                    Value::Object(m) if m.values().all(|x| scalar_text(x).is_some()) => {
                        let fields: Vec<String> = m
                            .iter()
                            .map(|(f, x)| format!("{f}={}", scalar_text(x).expect("checked")))
                            .collect();
                        out.push((k, fields.join(" ")));
                    }
                    _ => flatten(&k, item, out),
                }
            }
        }
        Value::Object(m) if m.is_empty() => out.push((key.to_string(), "{}".into())),
        Value::Object(m) => {
            for (f, x) in m {
                flatten(&format!("{key}.{f}"), x, out);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
