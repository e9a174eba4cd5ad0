//! Matrix application and single-step derivation semantics.

use std::collections::BTreeSet;

use scm_core::{Grammar, Matrix, ScmGrammar, Word};

use crate::caps::DerivationMode;
use crate::compiled::{
    compile_matrix, contains_subform, splice, CompiledGeneral, CompiledMatrix, CompiledScm,
    Form, SymTable,
};
use crate::error::EngineError;

/// Largest rule sequence supported in unordered mode (subset bitmasks).
const MAX_UNORDERED_RULES: usize = 16;

pub(crate) fn conditions_hold(matrix: &CompiledMatrix, form: &[u32]) -> bool {
    if let Some(permit) = &matrix.permit {
        if !contains_subform(form, permit) {
            return false;
        }
    }
    if let Some(forbid) = &matrix.forbid {
        if contains_subform(form, forbid) {
            return false;
        }
    }
    true
}

fn rewrite_everywhere(form: &[u32], lhs: u32, rhs: &[u32], out: &mut BTreeSet<Form>) {
    for (index, id) in form.iter().enumerate() {
        if *id == lhs {
            out.insert(splice(form, index, 1, rhs));
        }
    }
}

/// All results of applying the rules in written order; conditions are tested
/// on `form` only. Intermediate duplicates collapse.
pub(crate) fn apply_compiled_ordered(matrix: &CompiledMatrix, form: &[u32]) -> BTreeSet<Form> {
    if !conditions_hold(matrix, form) {
        return BTreeSet::new();
    }
    let mut current: BTreeSet<Form> = BTreeSet::from([form.to_vec()]);
    for (lhs, rhs) in &matrix.rules {
        let mut next = BTreeSet::new();
        for intermediate in &current {
            rewrite_everywhere(intermediate, *lhs, rhs, &mut next);
        }
        if next.is_empty() {
            return next;
        }
        current = next;
    }
    current
}

/// Union over all rule permutations, via subset dynamic programming.
pub(crate) fn apply_compiled_unordered(matrix: &CompiledMatrix, form: &[u32]) -> BTreeSet<Form> {
    if !conditions_hold(matrix, form) {
        return BTreeSet::new();
    }
    let count = matrix.rules.len();
    assert!(
        count <= MAX_UNORDERED_RULES,
        "unordered application supports at most {MAX_UNORDERED_RULES} rules per matrix"
    );
    let full = (1usize << count) - 1;
    let mut by_used: Vec<BTreeSet<Form>> = vec![BTreeSet::new(); full + 1];
    by_used[0].insert(form.to_vec());
    for used in 0..=full {
        if by_used[used].is_empty() {
            continue;
        }
        for (index, (lhs, rhs)) in matrix.rules.iter().enumerate() {
            if used & (1 << index) != 0 {
                continue;
            }
            let mut produced = BTreeSet::new();
            for intermediate in &by_used[used] {
                rewrite_everywhere(intermediate, *lhs, rhs, &mut produced);
            }
            by_used[used | (1 << index)].extend(produced);
        }
    }
    std::mem::take(&mut by_used[full])
}

pub(crate) fn apply_compiled(
    matrix: &CompiledMatrix,
    form: &[u32],
    mode: DerivationMode,
) -> BTreeSet<Form> {
    match mode {
        DerivationMode::Ordered => apply_compiled_ordered(matrix, form),
        DerivationMode::Unordered => apply_compiled_unordered(matrix, form),
    }
}

pub(crate) fn scm_successors(
    grammar: &CompiledScm,
    form: &[u32],
    mode: DerivationMode,
    out: &mut BTreeSet<Form>,
) {
    for matrix in &grammar.matrices {
        out.extend(apply_compiled(matrix, form, mode));
    }
}

pub(crate) fn general_successors(
    grammar: &CompiledGeneral,
    form: &[u32],
    out: &mut BTreeSet<Form>,
) {
    for (lhs, rhs) in &grammar.rules {
        if lhs.len() > form.len() {
            continue;
        }
        for at in 0..=form.len() - lhs.len() {
            if &form[at..at + lhs.len()] == lhs.as_slice() {
                out.insert(splice(form, at, lhs.len(), rhs));
            }
        }
    }
}

/// True iff the conditions hold on `form` and all rules can complete in order.
pub fn matrix_applicable(grammar: &ScmGrammar, matrix: &Matrix, form: &Word) -> bool {
    let table = SymTable::build(grammar.terminals(), grammar.nonterminals());
    let compiled = compile_matrix(&table, matrix);
    let form = table.form_expect(form);
    if !conditions_hold(&compiled, &form) {
        return false;
    }
    // An occurrence count per lhs decides completability only for single
    // rules; with rewriting in between, walk the actual choice tree.
    !apply_compiled_ordered(&compiled, &form).is_empty()
}

/// Applies one matrix; the result is empty iff the matrix is not applicable.
pub fn apply_matrix(
    grammar: &ScmGrammar,
    matrix: &Matrix,
    form: &Word,
    mode: DerivationMode,
) -> BTreeSet<Word> {
    let table = SymTable::build(grammar.terminals(), grammar.nonterminals());
    let compiled = compile_matrix(&table, matrix);
    let form = table.form_expect(form);
    apply_compiled(&compiled, &form, mode)
        .iter()
        .map(|f| table.word(f))
        .collect()
}

/// All one-step successors of `form`.
///
/// Conditional matrix grammars take a whole-matrix step; phrase-structure
/// grammars rewrite one occurrence of one rule's left-hand side.
pub fn step(
    grammar: &Grammar,
    form: &Word,
    mode: DerivationMode,
) -> Result<BTreeSet<Word>, EngineError> {
    match grammar {
        Grammar::Scm(g) => {
            let compiled = CompiledScm::build(g);
            let form = compiled.table.form_expect(form);
            let mut out = BTreeSet::new();
            scm_successors(&compiled, &form, mode, &mut out);
            Ok(out.iter().map(|f| compiled.table.word(f)).collect())
        }
        Grammar::General(g) => {
            let compiled = CompiledGeneral::build(g);
            let form = compiled.table.form_expect(form);
            let mut out = BTreeSet::new();
            general_successors(&compiled, &form, &mut out);
            Ok(out.iter().map(|f| compiled.table.word(f)).collect())
        }
        Grammar::Gc(_) => Err(EngineError::GraphControlled),
    }
}
