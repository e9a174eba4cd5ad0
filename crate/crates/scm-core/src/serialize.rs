//! Canonical textual form for grammars.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::grammar::{CfRule, GcGrammar, GeneralGrammar, Grammar, ScmGrammar};
use crate::symbol::{symbol_token, Symbol, Word};

/// Serializes a grammar canonically: sorted symbol declarations, matrices,
/// rules, and nodes in their given order, one declaration per line.
pub fn serialize_grammar(grammar: &Grammar) -> String {
    let mut out = String::new();
    match grammar {
        Grammar::Scm(g) => write_scm(&mut out, g),
        Grammar::General(g) => write_general(&mut out, g),
        Grammar::Gc(g) => write_gc(&mut out, g),
    }
    out
}

fn write_header(
    out: &mut String,
    kind: &str,
    terminals: &BTreeSet<Symbol>,
    nonterminals: &BTreeSet<Symbol>,
    start: &Symbol,
) {
    let _ = writeln!(out, "kind: {kind}");
    let _ = writeln!(out, "terminals:{}", decl_list(terminals));
    let _ = writeln!(out, "nonterminals:{}", decl_list(nonterminals));
    let _ = writeln!(out, "start: {}", symbol_token(start));
}

fn decl_list(symbols: &BTreeSet<Symbol>) -> String {
    let mut s = String::new();
    for sym in symbols {
        let _ = write!(s, " {}", symbol_token(sym));
    }
    s
}

fn cf_rule(rule: &CfRule) -> String {
    format!("{} -> {}", symbol_token(&rule.lhs), rule.rhs)
}

fn condition(word: Option<&Word>) -> String {
    word.map_or_else(|| "-".to_string(), Word::to_string)
}

fn write_scm(out: &mut String, g: &ScmGrammar) {
    write_header(out, "scm", g.terminals(), g.nonterminals(), g.start());
    for matrix in g.matrices() {
        let rules: Vec<String> = matrix.rules().iter().map(cf_rule).collect();
        let _ = writeln!(
            out,
            "matrix {} {{ rules: {} ; permit: {} ; forbid: {} }}",
            matrix.label(),
            rules.join(", "),
            condition(matrix.permit()),
            condition(matrix.forbid()),
        );
    }
}

fn write_general(out: &mut String, g: &GeneralGrammar) {
    write_header(out, g.kind().token(), g.terminals(), g.nonterminals(), g.start());
    for (index, rule) in g.rules().iter().enumerate() {
        let _ = writeln!(out, "rule: {} -> {}", rule.lhs, rule.rhs);
        if let Some(role) = rule.role {
            let _ = writeln!(out, "role {}: {}", index + 1, role.token());
        }
    }
}

fn write_gc(out: &mut String, g: &GcGrammar) {
    write_header(out, "gc", g.terminals(), g.nonterminals(), g.start());
    for node in g.nodes() {
        match &node.rule {
            None => {
                let _ = writeln!(out, "node {}: final", node.index);
            }
            Some(rule) => {
                let _ = writeln!(
                    out,
                    "node {}: {} ; green: {} ; red: {}",
                    node.index,
                    cf_rule(rule),
                    arc_list(&node.green),
                    arc_list(&node.red),
                );
            }
        }
    }
    let _ = writeln!(out, "initial: {}", g.initial());
    let _ = writeln!(out, "final: {}", g.final_node());
}

fn arc_list(arcs: &BTreeSet<usize>) -> String {
    if arcs.is_empty() {
        return "-".to_string();
    }
    let parts: Vec<String> = arcs.iter().map(usize::to_string).collect();
    parts.join(" ")
}
