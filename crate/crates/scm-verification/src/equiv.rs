//! Bounded-language equivalence between any two grammars.

use std::collections::BTreeSet;

use scm_core::{Grammar, Word};
use scm_engine::{enumerate_language, BoundedLanguage, DerivationMode, SearchCaps};
use scm_graph_control::gc_enumerate;

/// How far the form cap grows for the fixed-point recheck.
const FIXED_POINT_MARGIN: usize = 2;

/// Outcome of a bounded-language comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    left_only: BTreeSet<Word>,
    right_only: BTreeSet<Word>,
    left_caps: SearchCaps,
    right_caps: SearchCaps,
    fixed_point_stable: bool,
    saturated: bool,
}

impl EquivalenceReport {
    /// Words found on the left side only.
    pub fn left_only(&self) -> &BTreeSet<Word> {
        &self.left_only
    }

    /// Words found on the right side only.
    pub fn right_only(&self) -> &BTreeSet<Word> {
        &self.right_only
    }

    /// The caps the left side was enumerated under.
    pub fn left_caps(&self) -> &SearchCaps {
        &self.left_caps
    }

    /// The caps the right side was enumerated under.
    pub fn right_caps(&self) -> &SearchCaps {
        &self.right_caps
    }

    /// Neither word set changed when the form caps grew by the margin.
    pub fn fixed_point_stable(&self) -> bool {
        self.fixed_point_stable
    }

    /// Some budget truncated one of the base searches.
    pub fn saturated(&self) -> bool {
        self.saturated
    }

    /// Both difference sets are empty.
    pub fn is_equal(&self) -> bool {
        self.left_only.is_empty() && self.right_only.is_empty()
    }
}

/// Enumerates the bounded language of any grammar kind.
///
/// Graph-controlled derivations have no rule ordering, so `mode` is ignored
/// for them.
pub fn enumerate_any(grammar: &Grammar, caps: &SearchCaps, mode: DerivationMode) -> BoundedLanguage {
    match grammar {
        Grammar::Gc(g) => gc_enumerate(g, caps),
        _ => enumerate_language(grammar, caps, mode)
            .expect("grammar start symbols are always declared"),
    }
}

fn widen(caps: &SearchCaps) -> SearchCaps {
    let wide = SearchCaps::new(caps.max_word_len(), caps.max_form_len() + FIXED_POINT_MARGIN);
    let wide = match caps.max_steps() {
        Some(steps) => wide.with_max_steps(steps),
        None => wide,
    };
    match caps.max_states() {
        Some(states) => wide.with_max_states(states),
        None => wide,
    }
}

/// Compares two grammars' bounded languages under ordered derivation.
///
/// Both sides are enumerated under `caps`, then re-enumerated with the form
/// cap raised by two; the report is stable when neither word set changes.
/// Budget exhaustion is flagged on the report, never thrown.
pub fn assert_bounded_equal(g1: &Grammar, g2: &Grammar, caps: &SearchCaps) -> EquivalenceReport {
    assert_bounded_equal_calibrated(g1, caps, g2, caps)
}

/// Compares bounded languages with a per-side form cap.
///
/// A grammar and its image under an encoder or construction can need very
/// different form budgets for the same words: the image stretches each
/// derivation, while the source's own form space may grow too fast to search
/// at the image's cap. Both sides must share the word cap; stability is
/// checked per side at its own cap.
pub fn assert_bounded_equal_calibrated(
    g1: &Grammar,
    left_caps: &SearchCaps,
    g2: &Grammar,
    right_caps: &SearchCaps,
) -> EquivalenceReport {
    assert_eq!(
        left_caps.max_word_len(),
        right_caps.max_word_len(),
        "bounded comparison needs one word cap"
    );
    let mode = DerivationMode::Ordered;
    let left = enumerate_any(g1, left_caps, mode);
    let right = enumerate_any(g2, right_caps, mode);
    let left_wide = enumerate_any(g1, &widen(left_caps), mode);
    let right_wide = enumerate_any(g2, &widen(right_caps), mode);
    EquivalenceReport {
        left_only: left.words.difference(&right.words).cloned().collect(),
        right_only: right.words.difference(&left.words).cloned().collect(),
        left_caps: *left_caps,
        right_caps: *right_caps,
        fixed_point_stable: left_wide.words == left.words && right_wide.words == right.words,
        saturated: left.saturated || right.saturated,
    }
}
