//! Integration checks of matrix application on multi-rule matrices with
//! context conditions, plus search-budget properties.

use std::collections::BTreeSet;

use proptest::prelude::*;
use scm_engine::{apply_matrix, enumerate_with_threads, DerivationMode, SearchCaps};

use scm_core::{parse_grammar, CfRule, Grammar, Matrix, ScmGrammar, Symbol, Word};

fn scm(text: &str) -> ScmGrammar {
    match parse_grammar(text).unwrap() {
        Grammar::Scm(g) => g,
        _ => unreachable!("test grammars declare kind scm"),
    }
}

fn center_alphabet() -> ScmGrammar {
    scm("kind: scm\nterminals: a\nnonterminals: S 0 1 '$'\nstart: S\n")
}

/// `[(0 -> $$$), (0 -> $)]` with permit `0$$0` and forbid `$$$`.
fn center_doubling_matrix() -> Matrix {
    Matrix::new(
        "r2",
        vec![
            CfRule::new(Symbol::new("0"), Word::from_names("$ $ $")),
            CfRule::new(Symbol::new("0"), Word::from_names("$")),
        ],
        Some(Word::from_names("0 $ $ 0")),
        Some(Word::from_names("$ $ $")),
    )
    .unwrap()
}

#[test]
fn center_doubling_rewrites_any_two_zeros() {
    let g = center_alphabet();
    let m = center_doubling_matrix();
    let x = Word::from_names("1 0 0 $ $ 0 0 1");
    let out = apply_matrix(&g, &m, &x, DerivationMode::Ordered);
    // Rewriting the two zeros flanking the center turns 0$$0 into $^6.
    assert!(out.contains(&Word::from_names("1 0 $ $ $ $ $ $ 0 1")));
    // The images add 3 + 1 symbols for the 2 erased zeros, whatever the choice.
    assert!(out.iter().all(|w| w.len() == x.len() + 2));
    // Four zeros give 4*3 ordered choices; swapping images between adjacent
    // zeros collides, once per adjacent pair.
    assert_eq!(out.len(), 9);
}

#[test]
fn center_doubling_needs_its_permit_context() {
    let g = center_alphabet();
    let m = center_doubling_matrix();
    let x = Word::from_names("1 0 $ 0 1");
    assert!(apply_matrix(&g, &m, &x, DerivationMode::Ordered).is_empty());
}

#[test]
fn center_doubling_stops_once_triple_dollar_present() {
    let g = center_alphabet();
    let m = center_doubling_matrix();
    let x = Word::from_names("0 $ $ 0 $ $ $");
    assert!(apply_matrix(&g, &m, &x, DerivationMode::Ordered).is_empty());
}

#[test]
fn unequal_images_distinguish_occurrence_assignments() {
    let g = scm("kind: scm\nterminals: a\nnonterminals: S 0 1\nstart: S\n");
    let m = Matrix::new(
        "r2",
        vec![
            CfRule::new(Symbol::new("0"), Word::from_names("1 1")),
            CfRule::new(Symbol::new("0"), Word::from_names("S S S S 1 1")),
        ],
        Some(Word::from_names("0 S 1 S 0")),
        Some(Word::from_names("1 1")),
    )
    .unwrap();
    let out = apply_matrix(&g, &m, &Word::from_names("0 S 1 S 0"), DerivationMode::Ordered);
    let expected: BTreeSet<Word> = [
        Word::from_names("1 1 S 1 S S S S S 1 1"),
        Word::from_names("S S S S 1 1 S 1 S 1 1"),
    ]
    .into();
    assert_eq!(out, expected);
}

fn stripped(m: &Matrix) -> Matrix {
    Matrix::new(m.label(), m.rules().to_vec(), None, None).unwrap()
}

fn conditions_hold(m: &Matrix, x: &Word) -> bool {
    m.permit().is_none_or(|p| x.contains_subword(p))
        && m.forbid().is_none_or(|f| !x.contains_subword(f))
}

fn center_form() -> impl Strategy<Value = Word> {
    proptest::collection::vec(prop_oneof!["0", "1", r"\$", "S"], 0..9)
        .prop_map(|names| names.iter().map(|n| Symbol::new(n.as_str())).collect())
}

proptest! {
    #[test]
    fn conditions_gate_but_never_shape_the_results(x in center_form()) {
        let g = center_alphabet();
        let m = center_doubling_matrix();
        let out = apply_matrix(&g, &m, &x, DerivationMode::Ordered);
        if conditions_hold(&m, &x) {
            let unconditioned = apply_matrix(&g, &stripped(&m), &x, DerivationMode::Ordered);
            prop_assert_eq!(out, unconditioned);
        } else {
            prop_assert!(out.is_empty());
        }
    }

    #[test]
    fn ordered_results_embed_into_unordered(x in center_form()) {
        let g = center_alphabet();
        let m = center_doubling_matrix();
        let ordered = apply_matrix(&g, &m, &x, DerivationMode::Ordered);
        let unordered = apply_matrix(&g, &m, &x, DerivationMode::Unordered);
        prop_assert!(ordered.is_subset(&unordered));
    }
}

fn nesting_grammar() -> Grammar {
    parse_grammar(
        "kind: scm\nterminals: a\nnonterminals: S 0 1 '$'\nstart: S\n\
         matrix m1 { rules: S -> 0 S 1 ; permit: - ; forbid: - }\n\
         matrix m2 { rules: S -> '$' ; permit: 0 ; forbid: - }\n\
         matrix m3 { rules: 0 -> eps, 1 -> eps ; permit: - ; forbid: S }\n\
         matrix m4 { rules: '$' -> a ; permit: - ; forbid: S }\n\
         matrix m5 { rules: '$' -> eps ; permit: - ; forbid: S }\n",
    )
    .unwrap()
}

proptest! {
    #[test]
    fn wider_caps_only_add_words(
        word in 0usize..5,
        form in 0usize..6,
        steps in 0usize..7,
        dw in 0usize..3,
        df in 0usize..3,
        ds in 0usize..3,
    ) {
        let g = nesting_grammar();
        let start = Word::from_names("S");
        let small = SearchCaps::new(word, word + form).with_max_steps(steps);
        let large = SearchCaps::new(word + dw, word + dw + form + df).with_max_steps(steps + ds);
        let narrow = enumerate_with_threads(&g, &start, &small, DerivationMode::Ordered, 0).unwrap();
        let wide = enumerate_with_threads(&g, &start, &large, DerivationMode::Ordered, 0).unwrap();
        prop_assert!(narrow.words.is_subset(&wide.words));
    }
}
