//! Errors reported by the rewrite engine.

use thiserror::Error;

/// Reasons a request cannot be served.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("graph-controlled grammars derive node by node; use the graph-control walker")]
    GraphControlled,
    #[error("symbol {0:?} is not declared by the grammar")]
    UndeclaredSymbol(String),
}

/// Why a trace replay stopped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("step {step}: no matrix labelled {label:?}")]
    UnknownMatrix { step: usize, label: String },
    #[error("step {step}: matrix {label:?} lists {rules} rules but the trace gives {given} positions")]
    PositionCountMismatch {
        step: usize,
        label: String,
        rules: usize,
        given: usize,
    },
    #[error("step {step}: matrix {label:?} is not applicable (conditions fail on the current form)")]
    ConditionsFail { step: usize, label: String },
    #[error("step {step}: rule {rule} of {label:?} has no occurrence {position} of its left-hand side")]
    NoSuchOccurrence {
        step: usize,
        label: String,
        rule: usize,
        position: usize,
    },
    #[error("trace start uses symbol {0:?} not declared by the grammar")]
    UndeclaredSymbol(String),
}
