//! Naive depth-bounded enumerator, written independently of the main engine.
//!
//! This is the oracle for derived expectations: plain recursive search with
//! no visited set and no frontier deduplication. Forms longer than `max_form`
//! are pruned; derivations longer than `max_steps` are cut off. Matrix rules
//! are applied in their given order.

use std::collections::BTreeSet;

use scm_core::{GcGrammar, GeneralGrammar, Grammar, Matrix, ScmGrammar, Symbol, Word};

/// Terminal words of length at most `max_word` found by naive search.
pub fn reference_enumerate(
    grammar: &Grammar,
    max_word: usize,
    max_form: usize,
    max_steps: usize,
) -> BTreeSet<Word> {
    match grammar {
        Grammar::Scm(g) => {
            let start = Word::new(vec![g.start().clone()]);
            reference_enumerate_scm_from(g, &start, max_word, max_form, max_steps)
        }
        Grammar::General(g) => {
            let start = Word::new(vec![g.start().clone()]);
            reference_enumerate_general_from(g, &start, max_word, max_form, max_steps)
        }
        Grammar::Gc(g) => reference_enumerate_gc(g, max_word, max_form, max_steps),
    }
}

/// Naive search over a conditional matrix grammar from an arbitrary form.
pub fn reference_enumerate_scm_from(
    grammar: &ScmGrammar,
    start: &Word,
    max_word: usize,
    max_form: usize,
    max_steps: usize,
) -> BTreeSet<Word> {
    let mut words = BTreeSet::new();
    let mut visit = |form: &Word| {
        if form.len() <= max_word && grammar.is_terminal_word(form) {
            words.insert(form.clone());
        }
    };
    fn go(
        grammar: &ScmGrammar,
        form: &Word,
        steps_left: usize,
        max_form: usize,
        visit: &mut dyn FnMut(&Word),
    ) {
        visit(form);
        if steps_left == 0 {
            return;
        }
        for matrix in grammar.matrices() {
            for next in naive_apply(matrix, form) {
                if next.len() <= max_form {
                    go(grammar, &next, steps_left - 1, max_form, visit);
                }
            }
        }
    }
    if start.len() <= max_form {
        go(grammar, start, max_steps, max_form, &mut visit);
    }
    words
}

/// All results of one ordered matrix application, duplicates included.
pub fn naive_apply(matrix: &Matrix, form: &Word) -> Vec<Word> {
    if let Some(permit) = matrix.permit() {
        if !form.contains_subword(permit) {
            return Vec::new();
        }
    }
    if let Some(forbid) = matrix.forbid() {
        if form.contains_subword(forbid) {
            return Vec::new();
        }
    }
    let mut current = vec![form.clone()];
    for rule in matrix.rules() {
        let mut next = Vec::new();
        for intermediate in &current {
            for (index, sym) in intermediate.symbols().iter().enumerate() {
                if *sym == rule.lhs {
                    next.push(splice(intermediate, index, 1, &rule.rhs));
                }
            }
        }
        current = next;
    }
    current
}

/// Naive search over a phrase-structure grammar from an arbitrary form.
pub fn reference_enumerate_general_from(
    grammar: &GeneralGrammar,
    start: &Word,
    max_word: usize,
    max_form: usize,
    max_steps: usize,
) -> BTreeSet<Word> {
    let mut words = BTreeSet::new();
    let mut visit = |form: &Word| {
        if form.len() <= max_word && grammar.is_terminal_word(form) {
            words.insert(form.clone());
        }
    };
    fn go(
        grammar: &GeneralGrammar,
        form: &Word,
        steps_left: usize,
        max_form: usize,
        visit: &mut dyn FnMut(&Word),
    ) {
        visit(form);
        if steps_left == 0 {
            return;
        }
        for rule in grammar.rules() {
            for index in occurrences(form, &rule.lhs) {
                let next = splice(form, index, rule.lhs.len(), &rule.rhs);
                if next.len() <= max_form {
                    go(grammar, &next, steps_left - 1, max_form, visit);
                }
            }
        }
    }
    if start.len() <= max_form {
        go(grammar, start, max_steps, max_form, &mut visit);
    }
    words
}

/// Naive search over a graph-controlled grammar: configurations are
/// (node, form) pairs; terminal forms reached at the final node are collected.
pub fn reference_enumerate_gc(
    grammar: &GcGrammar,
    max_word: usize,
    max_form: usize,
    max_steps: usize,
) -> BTreeSet<Word> {
    let mut words = BTreeSet::new();
    fn go(
        grammar: &GcGrammar,
        node: usize,
        form: &Word,
        steps_left: usize,
        max_word: usize,
        max_form: usize,
        words: &mut BTreeSet<Word>,
    ) {
        if node == grammar.final_node() {
            if form.len() <= max_word && grammar.is_terminal_word(form) {
                words.insert(form.clone());
            }
            return;
        }
        if steps_left == 0 {
            return;
        }
        let gc_node = grammar.node(node);
        let rule = gc_node.rule.as_ref().expect("non-final node carries a rule");
        let at = occurrences_of_symbol(form, &rule.lhs);
        if at.is_empty() {
            for target in &gc_node.red {
                go(grammar, *target, form, steps_left - 1, max_word, max_form, words);
            }
        } else {
            for index in at {
                let next = splice(form, index, 1, &rule.rhs);
                if next.len() > max_form {
                    continue;
                }
                for target in &gc_node.green {
                    go(grammar, *target, &next, steps_left - 1, max_word, max_form, words);
                }
            }
        }
    }
    let start = Word::new(vec![grammar.start().clone()]);
    if start.len() <= max_form {
        go(
            grammar,
            grammar.initial(),
            &start,
            max_steps,
            max_word,
            max_form,
            &mut words,
        );
    }
    words
}

fn occurrences(form: &Word, needle: &Word) -> Vec<usize> {
    if needle.is_empty() || needle.len() > form.len() {
        return Vec::new();
    }
    (0..=form.len() - needle.len())
        .filter(|i| &form.symbols()[*i..*i + needle.len()] == needle.symbols())
        .collect()
}

fn occurrences_of_symbol(form: &Word, sym: &Symbol) -> Vec<usize> {
    form.symbols()
        .iter()
        .enumerate()
        .filter_map(|(i, s)| (s == sym).then_some(i))
        .collect()
}

fn splice(form: &Word, at: usize, len: usize, replacement: &Word) -> Word {
    let mut symbols = Vec::with_capacity(form.len() - len + replacement.len());
    symbols.extend_from_slice(&form.symbols()[..at]);
    symbols.extend_from_slice(replacement.symbols());
    symbols.extend_from_slice(&form.symbols()[at + len..]);
    Word::new(symbols)
}
