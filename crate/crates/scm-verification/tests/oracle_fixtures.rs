//! Ground-truth bounded languages of the fixture grammars, derived with the
//! naive oracle and frozen here; downstream tests compare against these.

use std::collections::BTreeSet;

use scm_core::{Grammar, Word};
use scm_verification::fixtures;
use scm_verification::reference::reference_enumerate;

fn a_words(counts: &[usize]) -> BTreeSet<Word> {
    counts
        .iter()
        .map(|n| Word::new(vec![scm_core::Symbol::new("a"); *n]))
        .collect()
}

#[test]
fn g0_bounded_language_needs_form_cap_fifteen_for_aaa() {
    let g = Grammar::General(fixtures::g0());
    assert_eq!(reference_enumerate(&g, 3, 14, 16), a_words(&[0, 1, 2]));
    assert_eq!(reference_enumerate(&g, 3, 15, 16), a_words(&[0, 1, 2, 3]));
}

#[test]
fn g1_bounded_language_matches_g0() {
    let g = Grammar::General(fixtures::g1());
    assert_eq!(reference_enumerate(&g, 3, 15, 16), a_words(&[0, 1, 2, 3]));
}

#[test]
fn gc0_language_starts_at_two_as() {
    let g = Grammar::Gc(fixtures::gc0());
    assert_eq!(reference_enumerate(&g, 4, 20, 20), a_words(&[2, 3, 4]));
}

#[test]
fn gc1_red_arc_yields_single_word() {
    let g = Grammar::Gc(fixtures::gc1());
    assert_eq!(reference_enumerate(&g, 2, 20, 20), a_words(&[1]));
}
