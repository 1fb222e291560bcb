//! Output rendering and failure classification.

use clap::ValueEnum;
use homcount::graph::io::{bundle_to_json, bundle_to_text, Bundle};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One JSON document per invocation.
    Structured,
}

#[derive(Debug)]
pub enum Failure {
    /// Well-formed input the operation does not accept.
    Reject { code: String, message: String },
    /// Unreadable or malformed input.
    Usage(String),
}

impl Failure {
    pub fn reject(code: impl Into<String>, message: impl ToString) -> Self {
        Failure::Reject { code: code.into(), message: message.to_string() }
    }

    pub fn usage(message: impl ToString) -> Self {
        Failure::Usage(message.to_string())
    }

    pub fn render(&self, format: Format) -> String {
        match (self, format) {
            (Failure::Reject { code, message }, Format::Text) => format!("reject {code}: {message}"),
            (Failure::Usage(m), Format::Text) => format!("error: {m}"),
            (Failure::Reject { code, message }, Format::Structured) => {
                serde_json::json!({ "reject": code, "message": message }).to_string()
            }
            (Failure::Usage(m), Format::Structured) => serde_json::json!({ "error": m }).to_string(),
        }
    }
}

pub type Outcome = Result<String, Failure>;

/// Ordered `key value` fields.
#[derive(Default)]
pub struct Record {
    fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.fields.push((key.to_string(), Value::String(value.to_string())));
        self
    }

    pub fn with_json(mut self, key: &str, value: Value) -> Self {
        self.fields.push((key.to_string(), value));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self
                .fields
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k} {s}\n"),
                    other => format!("{k} {other}\n"),
                })
                .collect(),
            Format::Structured => {
                let map: Map<String, Value> = self.fields.iter().cloned().collect();
                format!("{}\n", Value::Object(map))
            }
        }
    }
}

/// A bare value: the decimal itself in text mode.
pub fn scalar(key: &str, value: impl ToString, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", value.to_string()),
        Format::Structured => Record::new().with(key, value).render(format),
    }
}

pub fn bundle(b: &Bundle, format: Format) -> String {
    match format {
        Format::Text => bundle_to_text(b),
        Format::Structured => format!("{}\n", bundle_to_json(b)),
    }
}

pub fn graph(g: &homcount::Graph, format: Format) -> String {
    bundle(&Bundle { graphs: vec![g.clone()], ..Bundle::default() }, format)
}
