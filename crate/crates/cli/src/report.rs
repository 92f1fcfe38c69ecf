//! Report assembly: one structurally deterministic document per run,
//! rendered as text or JSON. Identical invocations produce identical
//! reports except for the timing field.

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputInfo>,
    pub outcome: Value,
    pub timing_ms: u128,
}

#[derive(Serialize)]
pub struct InputInfo {
    pub path: String,
    pub sha256: String,
}

impl InputInfo {
    pub fn new(path: &std::path::Path, bytes: &[u8]) -> InputInfo {
        use sha2::{Digest, Sha256};
        let digest = Sha256::digest(bytes);
        let sha256 = digest.iter().map(|b| format!("{b:02x}")).collect();
        InputInfo {
            path: path.display().to_string(),
            sha256,
        }
    }
}

impl Report {
    pub fn new(command: String, input: Option<InputInfo>, outcome: Value) -> Report {
        Report {
            command,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input,
            outcome,
            timing_ms: 0,
        }
    }

    /// Renders the report. Text mode prints the outcome as an indented
    /// key/value walk; JSON mode prints the whole document.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                serde_json::to_string_pretty(self).expect("report serializes")
            }
            Format::Text => {
                let mut out = String::new();
                if let Some(input) = &self.input {
                    out.push_str(&format!("input: {} (sha256 {})\n", input.path, &input.sha256[..12]));
                }
                render_value(&self.outcome, 0, &mut out);
                out.push_str(&format!("elapsed: {} ms\n", self.timing_ms));
                out
            }
        }
    }
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(val, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            match item {
                                Value::Object(_) => {
                                    out.push_str(&format!("{}-\n", "  ".repeat(indent + 1)));
                                    render_value(item, indent + 2, out);
                                }
                                other => out.push_str(&format!(
                                    "{}{}\n",
                                    "  ".repeat(indent + 1),
                                    render_scalar(other)
                                )),
                            }
                        }
                    }
                    Value::Array(items) => {
                        let rendered: Vec<String> = items.iter().map(render_scalar).collect();
                        out.push_str(&format!("{pad}{k}: [{}]\n", rendered.join(", ")));
                    }
                    other => out.push_str(&format!("{pad}{k}: {}\n", render_scalar(other))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", render_scalar(other))),
    }
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn outcome_error(message: String) -> Value {
    json!({ "error": message })
}
