//! Simulation of two-nonterminal graph-controlled grammars by forbidding-only
//! conditional-matrix grammars over the three nonterminals {A, B, C}.

use std::collections::BTreeSet;

use scm_core::{CfRule, GcGrammar, GrammarError, Matrix, ScmGrammar, Symbol, Word};

fn c_word(count: usize) -> Word {
    Word::new(vec![Symbol::new("C"); count])
}

fn c_erase() -> CfRule {
    CfRule::new(Symbol::new("C"), Word::empty())
}

fn c_grow(copies: usize) -> CfRule {
    CfRule::new(Symbol::new("C"), c_word(copies))
}

/// Builds the forbidding-only matrix grammar simulating `g`.
///
/// A reachable form `C^(k+1) w` encodes the configuration (node k, form w);
/// the start matrix turns `C` into `C C A` for the initial node 1. Matrix
/// labels are `m_init`, `s<l>_<s>` per green arc, `f<l>` and `f<l>_<f>` per
/// node with red arcs, and `m_final`. Fails only when a terminal of `g`
/// collides with the state symbol C.
pub fn thm9_sscm(g: &GcGrammar) -> Result<ScmGrammar, GrammarError> {
    let v = g.final_node();
    let gap = |l: usize| v * l;
    let mut matrices = Vec::new();

    matrices.push(Matrix::new(
        "m_init",
        vec![CfRule::new(Symbol::new("C"), Word::from_chars("CCA"))],
        None,
        Some(c_word(2)),
    )?);

    for node in g.nodes() {
        let Some(rule) = &node.rule else { continue };
        let l = node.index;
        for &s in &node.green {
            let mut rules = vec![c_erase(); l];
            rules.push(c_grow(s + 1));
            rules.push(rule.clone());
            matrices.push(Matrix::new(format!("s{l}_{s}"), rules, None, Some(c_word(l + 2)))?);
        }
        if node.red.is_empty() {
            continue;
        }
        // One deletion plus a rewrite into gap(l) + 2 copies raises the C
        // count by exactly gap(l), the offset the landing matrices expect;
        // the deletion also keeps this detour unapplicable to the start form.
        matrices.push(Matrix::new(
            format!("f{l}"),
            vec![c_erase(), c_grow(gap(l) + 2)],
            None,
            Some(Word::new(vec![rule.lhs.clone()])),
        )?);
        for &f in &node.red {
            let mut rules = vec![c_erase(); l + gap(l)];
            rules.push(c_grow(f + 1));
            matrices.push(Matrix::new(
                format!("f{l}_{f}"),
                rules,
                None,
                Some(c_word(l + gap(l) + 2)),
            )?);
        }
    }

    matrices.push(Matrix::new("m_final", vec![c_erase(); v + 1], None, Some(c_word(v + 2)))?);

    let nonterminals: BTreeSet<Symbol> = ["A", "B", "C"].into_iter().map(Symbol::new).collect();
    ScmGrammar::new(g.terminals().clone(), nonterminals, Symbol::new("C"), matrices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use scm_core::{metrics, parse_grammar, GcNode, Grammar};
    use scm_engine::{apply_matrix, matrix_applicable, DerivationMode};

    const GC0: &str = include_str!("../../../fixtures/gc0.gc");
    const GC1: &str = include_str!("../../../fixtures/gc1.gc");

    fn gc(text: &str) -> GcGrammar {
        match parse_grammar(text).unwrap() {
            Grammar::Gc(g) => g,
            _ => unreachable!("test grammars declare kind gc"),
        }
    }

    fn rule_strings(m: &Matrix) -> Vec<String> {
        m.rules().iter().map(|r| format!("{} -> {}", r.lhs, r.rhs)).collect()
    }

    #[test]
    fn start_matrix_enters_the_initial_state_once() {
        let sim = thm9_sscm(&gc(GC0)).unwrap();
        let m = sim.matrix("m_init").unwrap();
        assert_eq!(rule_strings(m), vec!["C -> C C A"]);
        assert_eq!(m.permit(), None);
        assert_eq!(m.forbid(), Some(&Word::from_names("C C")));
        let out = apply_matrix(&sim, m, &Word::from_names("C"), DerivationMode::Ordered);
        assert_eq!(out, [Word::from_names("C C A")].into());
        assert!(!matrix_applicable(&sim, m, &Word::from_names("C C A")));
    }

    #[test]
    fn success_matrices_count_the_state_then_rewrite() {
        let sim = thm9_sscm(&gc(GC0)).unwrap();
        let m = sim.matrix("s1_2").unwrap();
        assert_eq!(rule_strings(m), vec!["C -> eps", "C -> C C C", "A -> a A"]);
        assert_eq!(m.forbid(), Some(&Word::from_names("C C C")));
        let deep = sim.matrix("s2_3").unwrap();
        assert_eq!(rule_strings(deep), vec!["C -> eps", "C -> eps", "C -> C C C C", "A -> a"]);
        assert_eq!(deep.forbid(), Some(&Word::from_names("C C C C")));
    }

    #[test]
    fn failure_matrices_split_absence_and_count_checks() {
        let sim = thm9_sscm(&gc(GC1)).unwrap();
        let detour = sim.matrix("f1").unwrap();
        assert_eq!(rule_strings(detour), vec!["C -> eps", "C -> C C C C C"]);
        assert_eq!(detour.forbid(), Some(&Word::from_names("B")));
        let landing = sim.matrix("f1_2").unwrap();
        assert_eq!(
            rule_strings(landing),
            vec!["C -> eps", "C -> eps", "C -> eps", "C -> eps", "C -> C C C"]
        );
        assert_eq!(landing.forbid(), Some(&Word::from_names("C C C C C C")));
        // CCA carries state 1; the detour nets +3 and the landing leaves state 2.
        let mid = apply_matrix(&sim, detour, &Word::from_names("C C A"), DerivationMode::Ordered);
        assert_eq!(mid, [Word::from_names("C C C C C A")].into());
        let done =
            apply_matrix(&sim, landing, &Word::from_names("C C C C C A"), DerivationMode::Ordered);
        assert_eq!(done, [Word::from_names("C C C A")].into());
        assert!(!matrix_applicable(&sim, detour, &Word::from_names("C C B")));
    }

    #[test]
    fn final_matrix_erases_the_full_state_prefix() {
        let sim = thm9_sscm(&gc(GC0)).unwrap();
        let m = sim.matrix("m_final").unwrap();
        assert_eq!(rule_strings(m), vec!["C -> eps"; 4]);
        assert_eq!(m.forbid(), Some(&Word::from_names("C C C C C")));
        let out = apply_matrix(&sim, m, &Word::from_names("C C C C a a"), DerivationMode::Ordered);
        assert_eq!(out, [Word::from_names("a a")].into());
        assert!(!matrix_applicable(&sim, m, &Word::from_names("C C C a a")));
        assert!(!matrix_applicable(&sim, m, &Word::from_names("C C C C C a")));
    }

    #[test]
    fn simulations_are_forbidding_only_with_three_nonterminals() {
        for text in [GC0, GC1] {
            let sim = thm9_sscm(&gc(text)).unwrap();
            assert!(sim.matrices().iter().all(|m| m.permit().is_none()));
            let t = metrics(&sim);
            assert_eq!(t.i, 0);
            assert_eq!(t.n, 3);
        }
    }

    #[test]
    fn one_matrix_per_arc_plus_entry_exit_and_detours() {
        let labels = |sim: &ScmGrammar| -> Vec<String> {
            sim.matrices().iter().map(|m| m.label().to_string()).collect()
        };
        let sim0 = thm9_sscm(&gc(GC0)).unwrap();
        assert_eq!(labels(&sim0), vec!["m_init", "s1_1", "s1_2", "s2_3", "m_final"]);
        let sim1 = thm9_sscm(&gc(GC1)).unwrap();
        assert_eq!(labels(&sim1), vec!["m_init", "s1_1", "f1", "f1_2", "s2_3", "m_final"]);
    }

    #[test]
    fn a_terminal_named_c_collides_with_the_state_symbol() {
        let nodes = vec![
            GcNode {
                index: 1,
                rule: Some(CfRule::new(Symbol::new("A"), Word::from_names("C"))),
                green: [2].into(),
                red: BTreeSet::new(),
            },
            GcNode { index: 2, rule: None, green: BTreeSet::new(), red: BTreeSet::new() },
        ];
        let g = GcGrammar::new(
            [Symbol::new("C"), Symbol::new("a")].into(),
            [Symbol::new("A"), Symbol::new("B")].into(),
            Symbol::new("A"),
            nodes,
        )
        .unwrap();
        let err = thm9_sscm(&g).unwrap_err();
        assert_eq!(err, GrammarError::AlphabetOverlap("C".to_string()));
    }
}
