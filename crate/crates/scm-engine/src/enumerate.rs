//! Bounded breadth-first language enumeration.

use std::collections::{BTreeSet, HashSet};

use scm_core::{Grammar, Word};

use crate::apply::{general_successors, scm_successors};
use crate::caps::{BoundedLanguage, DerivationMode, SearchCaps};
use crate::compiled::{CompiledGeneral, CompiledScm, Form, SymTable};
use crate::error::EngineError;

/// Worker count from `SCMLAB_THREADS`; absent, 0, or unreadable means sequential.
pub fn threads_from_env() -> usize {
    std::env::var("SCMLAB_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0)
}

fn successor_layer<F>(frontier: &[Form], threads: usize, expand: F) -> BTreeSet<Form>
where
    F: Fn(&Form, &mut BTreeSet<Form>) + Sync,
{
    if threads <= 1 || frontier.len() <= 1 {
        let mut out = BTreeSet::new();
        for form in frontier {
            expand(form, &mut out);
        }
        return out;
    }
    let chunk = frontier.len().div_ceil(threads);
    let mut merged = BTreeSet::new();
    let expand = &expand;
    std::thread::scope(|scope| {
        let handles: Vec<_> = frontier
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut out = BTreeSet::new();
                    for form in part {
                        expand(form, &mut out);
                    }
                    out
                })
            })
            .collect();
        for handle in handles {
            merged.extend(handle.join().expect("enumeration worker panicked"));
        }
    });
    merged
}

fn bounded_bfs<F>(
    table: &SymTable,
    start: Form,
    caps: &SearchCaps,
    threads: usize,
    expand: F,
) -> BoundedLanguage
where
    F: Fn(&Form, &mut BTreeSet<Form>) + Sync,
{
    let mut words = BTreeSet::new();
    let mut visited: HashSet<Form> = HashSet::new();
    let mut frontier: Vec<Form> = Vec::new();
    let mut saturated = false;

    let admit = |form: Form,
                     visited: &mut HashSet<Form>,
                     frontier: &mut Vec<Form>,
                     words: &mut BTreeSet<Word>,
                     saturated: &mut bool| {
        if visited.contains(&form) {
            return;
        }
        if form.len() > caps.max_form_len() {
            *saturated = true;
            return;
        }
        if caps.max_states().is_some_and(|budget| visited.len() >= budget) {
            *saturated = true;
            return;
        }
        if table.is_terminal_form(&form) && form.len() <= caps.max_word_len() {
            words.insert(table.word(&form));
        }
        visited.insert(form.clone());
        frontier.push(form);
    };

    admit(start, &mut visited, &mut frontier, &mut words, &mut saturated);

    let mut depth = 0;
    while !frontier.is_empty() {
        if caps.max_steps().is_some_and(|limit| depth >= limit) {
            saturated = true;
            break;
        }
        let layer = successor_layer(&frontier, threads, &expand);
        frontier.clear();
        let mut ordered: Vec<Form> = layer.into_iter().collect();
        ordered.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for form in ordered {
            admit(form, &mut visited, &mut frontier, &mut words, &mut saturated);
        }
        depth += 1;
    }

    BoundedLanguage {
        words,
        saturated,
        states_explored: visited.len(),
    }
}

fn check_declared(table: &SymTable, start: &Word) -> Result<Form, EngineError> {
    start
        .iter()
        .map(|sym| {
            table
                .id(sym)
                .ok_or_else(|| EngineError::UndeclaredSymbol(sym.name().to_string()))
        })
        .collect()
}

/// Enumerates from an explicit start form with an explicit worker count.
pub fn enumerate_with_threads(
    grammar: &Grammar,
    start: &Word,
    caps: &SearchCaps,
    mode: DerivationMode,
    threads: usize,
) -> Result<BoundedLanguage, EngineError> {
    match grammar {
        Grammar::Scm(g) => {
            let compiled = CompiledScm::build(g);
            let start = check_declared(&compiled.table, start)?;
            Ok(bounded_bfs(&compiled.table, start, caps, threads, |f, out| {
                scm_successors(&compiled, f, mode, out)
            }))
        }
        Grammar::General(g) => {
            let compiled = CompiledGeneral::build(g);
            let start = check_declared(&compiled.table, start)?;
            Ok(bounded_bfs(&compiled.table, start, caps, threads, |f, out| {
                general_successors(&compiled, f, out)
            }))
        }
        Grammar::Gc(_) => Err(EngineError::GraphControlled),
    }
}

/// Enumerates from an explicit start form; worker count from `SCMLAB_THREADS`.
pub fn enumerate_from(
    grammar: &Grammar,
    start: &Word,
    caps: &SearchCaps,
    mode: DerivationMode,
) -> Result<BoundedLanguage, EngineError> {
    enumerate_with_threads(grammar, start, caps, mode, threads_from_env())
}

/// Enumerates the bounded language from the grammar's start symbol.
pub fn enumerate_language(
    grammar: &Grammar,
    caps: &SearchCaps,
    mode: DerivationMode,
) -> Result<BoundedLanguage, EngineError> {
    let start = match grammar {
        Grammar::Scm(g) => Word::new(vec![g.start().clone()]),
        Grammar::General(g) => Word::new(vec![g.start().clone()]),
        Grammar::Gc(_) => return Err(EngineError::GraphControlled),
    };
    enumerate_from(grammar, &start, caps, mode)
}
