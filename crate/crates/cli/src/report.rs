//! Reports: a text rendering and a deterministic JSON form.
//!
//! JSON objects use sorted keys; polynomials print in canonical term order.

use serde_json::{json, Map, Value};

use crate::CliError;

/// Exit status of a completed command whose checks did not all pass.
pub const EXIT_MISMATCH: i32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub result: Value,
    pub text: Vec<String>,
    pub exit_code: i32,
}

impl Outcome {
    pub fn new(result: Value, text: Vec<String>) -> Self {
        Outcome { result, text, exit_code: 0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub args: Map<String, Value>,
    pub outcome: Result<Outcome, CliError>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match &self.outcome {
            Ok(o) => o.exit_code,
            Err(e) => e.exit_code(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("command".into(), json!(self.command));
        out.insert("args".into(), Value::Object(self.args.clone()));
        out.insert("exit_code".into(), json!(self.exit_code()));
        match &self.outcome {
            Ok(o) => {
                let status = if o.exit_code == 0 { "ok" } else { "mismatch" };
                out.insert("status".into(), json!(status));
                out.insert("result".into(), o.result.clone());
            }
            Err(e) => {
                let mut err = Map::new();
                err.insert("class".into(), json!(e.class()));
                err.insert("code".into(), json!(e.code()));
                err.insert("message".into(), json!(e.to_string()));
                if let CliError::Parse(p) = e {
                    err.insert("line".into(), json!(p.line));
                    err.insert("col".into(), json!(p.col));
                }
                out.insert("status".into(), json!("error"));
                out.insert("error".into(), Value::Object(err));
            }
        }
        Value::Object(out)
    }

    /// Pretty JSON followed by a newline.
    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
        s.push('\n');
        s
    }

    /// Text lines for stdout, or the error line for stderr.
    pub fn render_text(&self) -> Result<String, String> {
        match &self.outcome {
            Ok(o) => Ok(o.text.iter().map(|l| format!("{l}\n")).collect()),
            Err(e) => Err(format!("error[{}]: {e}\n", e.code())),
        }
    }
}
