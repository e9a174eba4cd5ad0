//! Graph-controlled derivations and their simulation by forbidding-only
//! conditional-matrix grammars with three nonterminals.

mod simulate;
mod step;

pub use simulate::thm9_sscm;
pub use step::{gc_enumerate, gc_step, GcConfiguration};
