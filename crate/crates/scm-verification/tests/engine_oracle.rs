//! Cross-checks the breadth-first engine against the naive reference
//! enumerator, on the committed fixtures and on random small grammars.

use std::collections::BTreeSet;

use proptest::prelude::*;
use scm_core::{CfRule, Grammar, Matrix, ScmGrammar, Symbol, Word};
use scm_engine::{enumerate_language, DerivationMode, SearchCaps};
use scm_verification::fixtures;
use scm_verification::reference::reference_enumerate;

fn engine_words(grammar: &Grammar, max_word: usize, max_form: usize, max_steps: usize) -> BTreeSet<Word> {
    let caps = SearchCaps::new(max_word, max_form).with_max_steps(max_steps);
    enumerate_language(grammar, &caps, DerivationMode::Ordered)
        .unwrap()
        .words
}

fn words(names: &[&str]) -> BTreeSet<Word> {
    names
        .iter()
        .map(|n| if *n == "eps" { Word::empty() } else { Word::from_names(n) })
        .collect()
}

#[test]
fn engine_matches_oracle_on_the_block_pipeline_grammars() {
    for fixture in [Grammar::General(fixtures::g0()), Grammar::General(fixtures::g1())] {
        for (max_form, expected) in [
            (14, words(&["eps", "a", "a a"])),
            (15, words(&["eps", "a", "a a", "a a a"])),
        ] {
            let from_engine = engine_words(&fixture, 3, max_form, 16);
            let from_oracle = reference_enumerate(&fixture, 3, max_form, 16);
            assert_eq!(from_engine, from_oracle);
            if fixture.as_general().unwrap() == &fixtures::g0() || max_form == 15 {
                assert_eq!(from_engine, expected);
            }
        }
    }
}

fn symbol_set(names: &[&str]) -> BTreeSet<Symbol> {
    names.iter().map(|n| Symbol::new(*n)).collect()
}

const LHS_CHOICES: [&str; 2] = ["A", "B"];

fn small_word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(prop_oneof!["A", "B", "a", "b"], 0..3)
        .prop_map(|names| names.iter().map(|n| Symbol::new(n.as_str())).collect())
}

fn small_rule() -> impl Strategy<Value = CfRule> {
    (0usize..2, small_word())
        .prop_map(|(lhs, rhs)| CfRule::new(Symbol::new(LHS_CHOICES[lhs]), rhs))
        .prop_filter("identity rules explode the naive search", |rule| {
            rule.rhs.symbols() != [rule.lhs.clone()]
        })
}

fn small_condition() -> impl Strategy<Value = Option<Word>> {
    proptest::option::of(
        proptest::collection::vec(prop_oneof!["A", "B", "a"], 1..3)
            .prop_map(|names| names.iter().map(|n| Symbol::new(n.as_str())).collect::<Word>()),
    )
}

fn small_grammar() -> impl Strategy<Value = ScmGrammar> {
    proptest::collection::vec(
        (
            proptest::collection::vec(small_rule(), 1..3),
            small_condition(),
            small_condition(),
        ),
        1..4,
    )
    .prop_map(|specs| {
        let matrices = specs
            .into_iter()
            .enumerate()
            .map(|(index, (mut rules, permit, forbid))| {
                // The start symbol must be derivable somewhere; root it in m1.
                if index == 0 {
                    rules.insert(0, CfRule::new(Symbol::new("S"), Word::from_names("A B")));
                }
                Matrix::new(format!("m{}", index + 1), rules, permit, forbid).unwrap()
            })
            .collect();
        ScmGrammar::new(
            symbol_set(&["a", "b"]),
            symbol_set(&["S", "A", "B"]),
            Symbol::new("S"),
            matrices,
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn engine_matches_oracle_on_random_grammars(g in small_grammar()) {
        let grammar = Grammar::Scm(g);
        let from_engine = engine_words(&grammar, 4, 6, 5);
        let from_oracle = reference_enumerate(&grammar, 4, 6, 5);
        prop_assert_eq!(from_engine, from_oracle);
    }
}
