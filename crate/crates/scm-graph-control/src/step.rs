//! Configuration steps and bounded enumeration for graph-controlled grammars.

use std::collections::{BTreeSet, HashSet};

use scm_core::{GcGrammar, Word};
use scm_engine::{BoundedLanguage, SearchCaps};

/// A point in a graph-controlled derivation: current node and sentential form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GcConfiguration {
    /// 1-based node index.
    pub node: usize,
    /// Current sentential form.
    pub form: Word,
}

/// All successor configurations of `c`.
///
/// When the node's left-hand side occurs in the form, every occurrence choice
/// is paired with every green target; when it is absent, the unchanged form is
/// paired with every red target. Panics if `c.node` is the final node.
pub fn gc_step(g: &GcGrammar, c: &GcConfiguration) -> BTreeSet<GcConfiguration> {
    let node = g.node(c.node);
    let rule = node.rule.as_ref().expect("gc_step requires a non-final node");
    let mut out = BTreeSet::new();
    let occurrences: Vec<usize> = c
        .form
        .iter()
        .enumerate()
        .filter(|(_, sym)| **sym == rule.lhs)
        .map(|(i, _)| i)
        .collect();
    if occurrences.is_empty() {
        for &target in &node.red {
            out.insert(GcConfiguration { node: target, form: c.form.clone() });
        }
        return out;
    }
    for i in occurrences {
        let mut symbols = c.form.symbols().to_vec();
        symbols.splice(i..=i, rule.rhs.iter().cloned());
        let form = Word::new(symbols);
        for &target in &node.green {
            out.insert(GcConfiguration { node: target, form: form.clone() });
        }
    }
    out
}

/// Enumerates breadth-first from the initial configuration, collecting the
/// terminal forms that show up at the final node.
///
/// The final node carries no rule, so its configurations are absorbing. Caps
/// and the `saturated` flag behave as in the matrix-grammar enumerator.
pub fn gc_enumerate(g: &GcGrammar, caps: &SearchCaps) -> BoundedLanguage {
    let final_node = g.final_node();
    let mut words = BTreeSet::new();
    let mut visited: HashSet<GcConfiguration> = HashSet::new();
    let mut frontier: Vec<GcConfiguration> = Vec::new();
    let mut saturated = false;

    let admit = |config: GcConfiguration,
                 visited: &mut HashSet<GcConfiguration>,
                 frontier: &mut Vec<GcConfiguration>,
                 words: &mut BTreeSet<Word>,
                 saturated: &mut bool| {
        if visited.contains(&config) {
            return;
        }
        if config.form.len() > caps.max_form_len() {
            *saturated = true;
            return;
        }
        if caps.max_states().is_some_and(|budget| visited.len() >= budget) {
            *saturated = true;
            return;
        }
        if config.node == final_node {
            if g.is_terminal_word(&config.form) && config.form.len() <= caps.max_word_len() {
                words.insert(config.form.clone());
            }
            visited.insert(config);
            return;
        }
        visited.insert(config.clone());
        frontier.push(config);
    };

    let start = GcConfiguration { node: g.initial(), form: Word::new(vec![g.start().clone()]) };
    admit(start, &mut visited, &mut frontier, &mut words, &mut saturated);

    let mut depth = 0;
    while !frontier.is_empty() {
        if caps.max_steps().is_some_and(|limit| depth >= limit) {
            saturated = true;
            break;
        }
        let mut layer = BTreeSet::new();
        for config in &frontier {
            layer.extend(gc_step(g, config));
        }
        frontier.clear();
        let mut ordered: Vec<GcConfiguration> = layer.into_iter().collect();
        ordered.sort_by(|a, b| a.form.len().cmp(&b.form.len()).then_with(|| a.cmp(b)));
        for config in ordered {
            admit(config, &mut visited, &mut frontier, &mut words, &mut saturated);
        }
        depth += 1;
    }

    BoundedLanguage { words, saturated, states_explored: visited.len() }
}
