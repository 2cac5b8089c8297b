//! Command-line front end: expression parsing, subcommands and reports.

pub mod commands;
pub mod expr;
pub mod input;
pub mod report;

use std::fmt;

use germs::error::ErrorClass;

pub use commands::{run, Command};
pub use report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(expr::ParseError),
    /// Well-formed input that the command cannot accept.
    Input(String),
    Io(String),
    Germs(germs::error::Error),
}

impl From<expr::ParseError> for CliError {
    fn from(e: expr::ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<germs::error::Error> for CliError {
    fn from(e: germs::error::Error) -> Self {
        CliError::Germs(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => e.fmt(f),
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Io(m) => write!(f, "cannot read input: {m}"),
            CliError::Germs(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    /// `parse`, `precondition`, `unhandled` or `internal`.
    pub fn class(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Input(_) | CliError::Io(_) => "precondition",
            CliError::Germs(e) => match e.class() {
                ErrorClass::Precondition => "precondition",
                ErrorClass::Unhandled => "unhandled",
                ErrorClass::Internal => "internal",
            },
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse(expr::ParseError { kind: expr::ParseErrorKind::Syntax(_), .. }) => "SyntaxError",
            CliError::Parse(_) => "UnknownVariable",
            CliError::Input(_) => "InvalidInput",
            CliError::Io(_) => "Io",
            CliError::Germs(e) => e.code(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.class() {
            "parse" => 2,
            "precondition" => 3,
            "unhandled" => 4,
            _ => 5,
        }
    }
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
