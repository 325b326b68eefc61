//! The user surface: input file formats, the expression parser, the check
//! suites and their reports. The `isotwist` binary is a thin wrapper.

pub mod bundled;
mod expr;
mod files;
mod report;
mod suites;

pub use expr::{parse_expression, parse_expression_at};
pub use files::{
    parse_presentation, parse_symmetry, render_presentation, render_symmetry, LoadError,
    PresentationFile, SymmetryFile,
};
pub use report::{CheckReport, Format};
pub use suites::{run_suite, Input, Options, Suite};

use thiserror::Error;

/// Syntax error at a 1-based line and column.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{file}: {error}")]
    Load { file: String, error: LoadError },
    #[error("{0}")]
    Usage(String),
}

#[cfg(test)]
mod tests;
