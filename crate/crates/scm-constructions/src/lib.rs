//! The eight transformations from normal-form grammars into semi-conditional
//! matrix grammars with few nonterminals, few conditional matrices, and short
//! condition words, each pinned to its measure row.

mod blocks;
mod marked;
mod support;
mod theorem;

pub use blocks::{thm1_sscm_21532, thm3_sscm_31433, thm4_scm_434726, thm5_scm_524724};
pub use marked::{thm2_sscm_31522, thm6_scm_634723, thm7_scm_633, thm8_scm_723};
pub use theorem::{construct, ConstructError, TheoremId};
