//! Search budgets and bounded-enumeration results.

use std::collections::BTreeSet;

use scm_core::Word;

/// Rule-sequence interpretation of a matrix application.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DerivationMode {
    /// Rules fire in their written order.
    Ordered,
    /// Rules fire in any permutation; conditions still refer to the outer form.
    Unordered,
}

impl DerivationMode {
    pub fn token(self) -> &'static str {
        match self {
            DerivationMode::Ordered => "ordered",
            DerivationMode::Unordered => "unordered",
        }
    }

    pub fn from_token(token: &str) -> Option<Self> {
        match token {
            "ordered" => Some(DerivationMode::Ordered),
            "unordered" => Some(DerivationMode::Unordered),
            _ => None,
        }
    }
}

/// Budgets for bounded enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchCaps {
    max_word_len: usize,
    max_form_len: usize,
    max_steps: Option<usize>,
    max_states: Option<usize>,
}

impl SearchCaps {
    /// Builds caps; panics unless `max_word_len <= max_form_len`.
    pub fn new(max_word_len: usize, max_form_len: usize) -> Self {
        assert!(
            max_word_len <= max_form_len,
            "max_word_len {max_word_len} exceeds max_form_len {max_form_len}"
        );
        SearchCaps { max_word_len, max_form_len, max_steps: None, max_states: None }
    }

    /// Caps the derivation depth.
    pub fn with_max_steps(mut self, max_steps: usize) -> Self {
        self.max_steps = Some(max_steps);
        self
    }

    /// Caps the visited-set size.
    pub fn with_max_states(mut self, max_states: usize) -> Self {
        self.max_states = Some(max_states);
        self
    }

    pub fn max_word_len(&self) -> usize {
        self.max_word_len
    }

    pub fn max_form_len(&self) -> usize {
        self.max_form_len
    }

    pub fn max_steps(&self) -> Option<usize> {
        self.max_steps
    }

    pub fn max_states(&self) -> Option<usize> {
        self.max_states
    }
}

/// A bounded under-approximation of a grammar's language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedLanguage {
    /// Terminal words of length at most the word cap, length-lex ordered.
    pub words: BTreeSet<Word>,
    /// True when any cap truncated the search.
    pub saturated: bool,
    /// Number of distinct sentential forms (or configurations) visited.
    pub states_explored: usize,
}
