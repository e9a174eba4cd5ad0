//! Replay of recorded derivation traces.

use scm_core::{ScmGrammar, Trace, Word};

use crate::apply::conditions_hold;
use crate::compiled::{compile_matrix, splice, Form, SymTable};
use crate::error::TraceError;

/// Replays `trace` on `grammar`, verifying every occurrence choice, and
/// returns the final form. Rules fire in written order, so a verified trace
/// is a witness under both derivation modes.
pub fn check_trace(grammar: &ScmGrammar, trace: &Trace) -> Result<Word, TraceError> {
    let table = SymTable::build(grammar.terminals(), grammar.nonterminals());
    let mut form: Form = trace
        .start
        .iter()
        .map(|sym| {
            table
                .id(sym)
                .ok_or_else(|| TraceError::UndeclaredSymbol(sym.name().to_string()))
        })
        .collect::<Result<_, _>>()?;

    for (index, step) in trace.steps.iter().enumerate() {
        let step_no = index + 1;
        let label = step.matrix_label.clone();
        let matrix = grammar.matrix(&label).ok_or_else(|| TraceError::UnknownMatrix {
            step: step_no,
            label: label.clone(),
        })?;
        if step.positions.len() != matrix.len() {
            return Err(TraceError::PositionCountMismatch {
                step: step_no,
                label,
                rules: matrix.len(),
                given: step.positions.len(),
            });
        }
        let compiled = compile_matrix(&table, matrix);
        if !conditions_hold(&compiled, &form) {
            return Err(TraceError::ConditionsFail { step: step_no, label });
        }
        for (rule_index, ((lhs, rhs), &position)) in
            compiled.rules.iter().zip(&step.positions).enumerate()
        {
            let mut seen = 0;
            let mut at = None;
            for (cursor, id) in form.iter().enumerate() {
                if id == lhs {
                    seen += 1;
                    if seen == position {
                        at = Some(cursor);
                        break;
                    }
                }
            }
            let Some(at) = at else {
                return Err(TraceError::NoSuchOccurrence {
                    step: step_no,
                    label,
                    rule: rule_index + 1,
                    position,
                });
            };
            form = splice(&form, at, 1, rhs);
        }
    }
    Ok(table.word(&form))
}
