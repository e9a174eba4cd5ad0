//! Replays the worked derivation chains of each transformation: every listed
//! matrix must be applicable to the running form and produce the next one.

use scm_constructions::{construct, TheoremId};
use scm_core::{parse_grammar, Grammar, ScmGrammar, Word};
use scm_engine::{apply_matrix, DerivationMode};
use scm_normal_forms::encode;

const G0: &str = include_str!("../../../fixtures/g0.gnf");

fn output(id: TheoremId) -> ScmGrammar {
    let Grammar::General(g) = parse_grammar(G0).unwrap() else {
        unreachable!("the fixture declares kind gnf52");
    };
    construct(id, &encode(&g, id.input_kind()).unwrap()).unwrap()
}

/// Steps through `chain`, asserting each labelled matrix can reach the next form.
fn replay(g: &ScmGrammar, start: &str, chain: &[(&str, &str)]) {
    let mut form = Word::from_names(start);
    for (label, next) in chain {
        let matrix = g.matrix(label).expect("chain labels name matrices");
        let successors = apply_matrix(g, matrix, &form, DerivationMode::Ordered);
        let next = Word::from_names(next);
        assert!(
            successors.contains(&next),
            "{label} on {form}: expected {next}, got {successors:?}"
        );
        form = next;
    }
}

#[test]
fn mixed_center_simulation_takes_two_steps() {
    let g = output(TheoremId::Thm2);
    replay(&g, "0 $ 1", &[("r1", "# $ #"), ("r2", "$")]);
}

#[test]
fn triple_block_simulation_takes_two_steps() {
    let g = output(TheoremId::Thm3);
    replay(&g, "B B B", &[("r1", "# # #"), ("r3", "")]);
}

#[test]
fn checked_center_chain_erases_a_full_block_pair() {
    let g = output(TheoremId::Thm4);
    replay(
        &g,
        "A B B B A",
        &[
            ("r1", "A # # B A"),
            ("r2", "A # # # # A"),
            ("r4", "A # # A"),
            ("r5", "A A"),
            ("r3", "# #"),
            ("r7", ""),
        ],
    );
}

#[test]
fn block_rewrite_chain_shrinks_the_middle_blocks() {
    let g = output(TheoremId::Thm5);
    replay(
        &g,
        "A B A B B B A B A a",
        &[
            ("r1", "A B A # A A B A B A a"),
            ("r2", "A B A # A A # # # A B A a"),
            ("r3", "A B A # A A # A B A a"),
            ("r3", "A B A A A A B A a"),
            ("r4", "A B # A A # # # B A a"),
            ("r3", "A B # A A # B A a"),
            ("r3", "A B A A B A a"),
        ],
    );
}

#[test]
fn doubled_center_chain_erases_a_zero_pair() {
    let g = output(TheoremId::Thm6);
    replay(
        &g,
        "1 0 $ $ 0 1",
        &[
            ("r2", "1 $ $ $ $ $ $ 1"),
            ("r4", "1 $ $ $ $ 1"),
            ("r6", "1 $ $ 1"),
        ],
    );
}

#[test]
fn doubled_center_chain_erases_a_one_pair() {
    let g = output(TheoremId::Thm6);
    replay(
        &g,
        "0 1 $ $ 1 0",
        &[
            ("r3", "0 $ $ $ $ $ $ 0"),
            ("r4", "0 $ $ $ $ 0"),
            ("r5", "0 $ $ 0"),
        ],
    );
}

#[test]
fn s_one_s_center_chain_erases_a_zero_pair() {
    let g = output(TheoremId::Thm8);
    replay(
        &g,
        "0 S 1 S 0",
        &[
            ("r2", "1 1 S 1 S S S S S 1 1"),
            ("r5_1", "1 1 S 1 S S S 1 1"),
            ("r5_1", "1 1 S 1 S 1 1"),
        ],
    );
}

#[test]
fn s_one_s_center_chain_finishes_a_terminal_word() {
    let g = output(TheoremId::Thm8);
    replay(
        &g,
        "1 S 1 S 1 a",
        &[("r7", "1 1 1 a"), ("r8", "1 1 a"), ("r8", "1 a"), ("r8", "a")],
    );
}
