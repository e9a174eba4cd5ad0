//! Shared assembly helpers for the theorem transformations.

use std::collections::BTreeSet;

use scm_core::{
    validate_normal_form, CfRule, GeneralGrammar, GeneralKind, GeneralRule, Matrix, RuleRole,
    ScmGrammar, Symbol, Word,
};

use crate::theorem::ConstructError;

/// Checks the declared kind and the rule shapes of a transformation input.
pub(crate) fn checked_input(g: &GeneralGrammar, kind: GeneralKind) -> Result<(), ConstructError> {
    if g.kind() != kind {
        return Err(ConstructError::WrongInputKind {
            expected: kind.token(),
            found: g.kind().token(),
        });
    }
    let report = validate_normal_form(g, kind);
    if !report.is_valid() {
        return Err(ConstructError::NotNormalForm {
            kind: kind.token(),
            offenses: report.offenses().join("; "),
        });
    }
    Ok(())
}

/// Builds one matrix from compact single-character spellings.
pub(crate) fn matrix(
    label: &str,
    rules: &[(&str, &str)],
    permit: Option<&str>,
    forbid: Option<&str>,
) -> Matrix {
    let rules = rules
        .iter()
        .map(|(lhs, rhs)| CfRule::new(Symbol::new(*lhs), Word::from_chars(rhs)))
        .collect();
    Matrix::new(label, rules, permit.map(Word::from_chars), forbid.map(Word::from_chars))
        .expect("theorem matrices are well-formed")
}

fn is_s_rule(rule: &GeneralRule) -> bool {
    matches!(rule.lhs.symbols(), [s] if s.name() == "S")
}

fn carrier(k: usize, rhs: Word, forbid: Option<&str>) -> Matrix {
    Matrix::new(
        format!("r_g{k}"),
        vec![CfRule::new(Symbol::new("S"), rhs)],
        None,
        forbid.map(Word::from_chars),
    )
    .expect("carrier matrices are well-formed")
}

/// Carries every rule with left-hand side `S` as a single-rule matrix
/// `r_g<k>`, in rule order, each with the same forbid word (none makes the
/// carriers unconditional).
pub(crate) fn s_rule_carriers(g: &GeneralGrammar, forbid: Option<&str>) -> Vec<Matrix> {
    g.rules()
        .iter()
        .filter(|rule| is_s_rule(rule))
        .enumerate()
        .map(|(k, rule)| carrier(k + 1, rule.rhs.clone(), forbid))
        .collect()
}

fn twin_rhs(rhs: &Word) -> Word {
    Word::new(
        rhs.iter()
            .map(|sym| if sym.name() == "$" { Symbol::new("S") } else { sym.clone() })
            .collect(),
    )
}

/// Carries the staged rules of a role-tagged center-marked grammar.
///
/// Center-introducing rules `S -> u $ v` are dropped, but their twin
/// `S -> u S v` is injected (deduplicated) so the two-step simulation of the
/// center always has its first step. Erasing rules are dropped; the theorem
/// matrices simulate them.
pub(crate) fn staged_carriers(
    g: &GeneralGrammar,
    forbid: Option<&str>,
) -> Result<Vec<Matrix>, ConstructError> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut carried: Vec<Word> = Vec::new();
    let mut twins: Vec<Word> = Vec::new();
    for (index, rule) in g.rules().iter().enumerate() {
        let Some(role) = rule.role else {
            return Err(ConstructError::UntaggedRule { index: index + 1 });
        };
        match role {
            RuleRole::Stage1 | RuleRole::Stage2S => {
                seen.insert(rule.rhs.clone());
                carried.push(rule.rhs.clone());
            }
            RuleRole::CenterIntro => twins.push(twin_rhs(&rule.rhs)),
            RuleRole::CenterErase | RuleRole::Eraser => {}
            RuleRole::Stage2Final => unreachable!("center-marked forms have no final-stage shape"),
        }
    }
    for twin in twins {
        if seen.insert(twin.clone()) {
            carried.push(twin);
        }
    }
    Ok(carried
        .into_iter()
        .enumerate()
        .map(|(k, rhs)| carrier(k + 1, rhs, forbid))
        .collect())
}

/// Assembles the output grammar over the input's terminals.
pub(crate) fn assemble(
    g: &GeneralGrammar,
    nonterminals: &str,
    matrices: Vec<Matrix>,
) -> Result<ScmGrammar, ConstructError> {
    Ok(ScmGrammar::new(
        g.terminals().clone(),
        Word::from_chars(nonterminals).symbols().iter().cloned().collect(),
        Symbol::new("S"),
        matrices,
    )?)
}
