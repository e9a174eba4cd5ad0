//! Committed fixture grammars shared across the verification suites.

use scm_core::{parse_grammar, GcGrammar, GeneralGrammar, Grammar};

pub const G0_TEXT: &str = include_str!("../../../fixtures/g0.gnf");
pub const G1_TEXT: &str = include_str!("../../../fixtures/g1.gnf");
pub const GC0_TEXT: &str = include_str!("../../../fixtures/gc0.gc");
pub const GC1_TEXT: &str = include_str!("../../../fixtures/gc1.gc");

fn load(text: &str) -> Grammar {
    parse_grammar(text).expect("fixture files are well-formed")
}

/// The A/B-block pipeline grammar; bounded language {λ, a, aa, aaa} at word cap 3.
pub fn g0() -> GeneralGrammar {
    match load(G0_TEXT) {
        Grammar::General(g) => g,
        _ => unreachable!("g0.gnf declares a normal-form kind"),
    }
}

/// The C/D-block twin of [`g0`]; same bounded language.
pub fn g1() -> GeneralGrammar {
    match load(G1_TEXT) {
        Grammar::General(g) => g,
        _ => unreachable!("g1.gnf declares a normal-form kind"),
    }
}

/// Graph-controlled grammar with language {aⁿ : n ≥ 2}.
pub fn gc0() -> GcGrammar {
    match load(GC0_TEXT) {
        Grammar::Gc(g) => g,
        _ => unreachable!("gc0.gc declares kind gc"),
    }
}

/// Graph-controlled grammar exercising a red arc; language {a}.
pub fn gc1() -> GcGrammar {
    match load(GC1_TEXT) {
        Grammar::Gc(g) => g,
        _ => unreachable!("gc1.gc declares kind gc"),
    }
}
