use std::fmt;

use mfa_core::textio::ParseError;
use mfa_core::Error;
use serde_json::{json, Value};

use crate::Format;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// A finished command: its exit status and both renderings.
pub struct Outcome {
    pub exit: u8,
    pub human: String,
    pub json: Value,
}

impl Outcome {
    pub fn ok(human: impl Into<String>, json: Value) -> Self {
        Outcome {
            exit: EXIT_OK,
            human: human.into(),
            json,
        }
    }

    pub fn negative(human: impl Into<String>, json: Value) -> Self {
        Outcome {
            exit: EXIT_NEGATIVE,
            human: human.into(),
            json,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => {
                let mut s = self.human.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let mut v = self.json.clone();
                if let Value::Object(map) = &mut v {
                    map.insert("ok".into(), Value::Bool(self.exit == EXIT_OK));
                    map.insert("exit_code".into(), json!(self.exit));
                }
                format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
            }
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub exit: u8,
    pub code: String,
    pub message: String,
    pub position: Option<(usize, usize)>,
}

impl CliError {
    pub fn usage(code: &str, message: impl Into<String>) -> Self {
        CliError {
            exit: EXIT_USAGE,
            code: code.into(),
            message: message.into(),
            position: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut err = json!({ "code": self.code, "message": self.message });
        if let Some((line, column)) = self.position {
            err["line"] = json!(line);
            err["column"] = json!(column);
        }
        let v = json!({ "ok": false, "exit_code": self.exit, "error": err });
        serde_json::to_string_pretty(&v).expect("serializable")
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            Some((line, column)) => write!(f, "{line}:{column}: {} [{}]", self.message, self.code),
            None => write!(f, "{} [{}]", self.message, self.code),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError {
            exit: EXIT_USAGE,
            code: e.kind.code().into(),
            message: e.message,
            position: Some((e.line, e.column)),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let exit = match e {
            Error::NotIA | Error::NotInASquared | Error::NotChein { .. } | Error::IdentityEndomorphism => EXIT_NEGATIVE,
            _ => EXIT_USAGE,
        };
        CliError {
            exit,
            code: e.code().into(),
            message: e.to_string(),
            position: None,
        }
    }
}
