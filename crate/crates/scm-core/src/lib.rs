//! Core types for semi-conditional matrix grammars: alphabets, matrices,
//! grammar containers, descriptional-complexity metrics, and the grammar,
//! trace, and suite file formats shared by the other crates.

mod error;
mod grammar;
mod metrics;
mod normal_form;
mod parse;
mod serialize;
mod symbol;
mod trace;

pub use error::{GrammarError, ParseError};
pub use grammar::{
    CfRule, GcGrammar, GcNode, GeneralGrammar, GeneralKind, GeneralRule, Grammar, Matrix,
    RuleRole, ScmGrammar,
};
pub use metrics::{metrics, ParameterTuple, TupleBound};
pub use normal_form::{classify_rule, validate_normal_form, NormalFormReport, RuleShape};
pub use parse::parse_grammar;
pub use serialize::serialize_grammar;
pub use symbol::{symbol_token, Symbol, Word};
pub use trace::{parse_trace, serialize_trace, Trace, TraceStep};
