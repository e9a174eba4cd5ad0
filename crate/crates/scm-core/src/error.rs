//! Error types for grammar construction and file parsing.

use thiserror::Error;

/// Violations of grammar well-formedness, caught at construction time.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrammarError {
    #[error("terminals and nonterminals overlap on {0:?}")]
    AlphabetOverlap(String),
    #[error("start symbol {0:?} is not a declared nonterminal")]
    StartNotNonterminal(String),
    #[error("symbol {0:?} is not declared")]
    UndeclaredSymbol(String),
    #[error("matrix {0:?} has no rules")]
    EmptyMatrix(String),
    #[error("matrix label {0:?} is duplicated")]
    DuplicateLabel(String),
    #[error("matrix label {0:?} is not a plain identifier")]
    BadLabel(String),
    #[error("condition word in matrix {0:?} is empty; use '-' for an absent condition")]
    EmptyCondition(String),
    #[error("rule in matrix {0:?} has terminal {1:?} as its left-hand side")]
    TerminalLhs(String, String),
    #[error("rule left-hand side is empty")]
    EmptyLhs,
    #[error("rule left-hand side {0:?} contains no nonterminal")]
    NoNonterminalLhs(String),
    #[error("node {0} is out of range 1..={1}")]
    NodeOutOfRange(usize, usize),
    #[error("graph control requires nonterminals exactly {{A, B}}")]
    GcNonterminals,
    #[error("final node {0} must not carry a rule")]
    GcFinalHasRule(usize),
    #[error("node {0} must carry a rule")]
    GcMissingRule(usize),
    #[error("graph control requires at least two nodes")]
    GcTooSmall,
}

/// Errors raised while reading a grammar, trace, or suite file.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: undeclared symbol {symbol:?}")]
    UndeclaredSymbol { line: usize, symbol: String },
    #[error("invalid grammar: {0}")]
    Invalid(#[from] GrammarError),
}

impl ParseError {
    /// Builds a syntax error at a 1-based line number.
    pub fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax { line, message: message.into() }
    }
}
