//! Derivation semantics: matrix application, bounded enumeration, traces.

mod apply;
mod caps;
mod compiled;
mod error;
mod enumerate;
mod trace;

pub use apply::{apply_matrix, matrix_applicable, step};
pub use caps::{BoundedLanguage, DerivationMode, SearchCaps};
pub use enumerate::{enumerate_from, enumerate_language, enumerate_with_threads, threads_from_env};
pub use error::{EngineError, TraceError};
pub use trace::check_trace;
