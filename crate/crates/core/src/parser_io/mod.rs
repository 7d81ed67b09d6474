//! Concrete text syntax for formulas, and JSON formats for models and proofs.

mod lexer;
mod model_io;
mod parse;
mod print;
mod proof_io;

pub use model_io::{load_model, model_to_json, parse_assignment, LoadError};
pub use parse::{parse_formula, parse_formula_file, parse_formula_with, Symbols};
pub use print::{print_formula, print_formula_with};
pub use proof_io::{load_proof, proof_to_json};

use std::fmt;

/// Character offsets `start..end` into the parsed text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at {span}: {message}")]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
}
