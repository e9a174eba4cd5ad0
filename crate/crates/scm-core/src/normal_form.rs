//! Shape validation for the six type-0 normal forms.

use std::collections::BTreeSet;

use crate::grammar::{GeneralGrammar, GeneralKind, GeneralRule, RuleRole};
use crate::symbol::{Symbol, Word};

/// Structural classification of one rule inside a normal-form grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleShape {
    /// `S -> u S a` with a terminal `a`.
    Stage1 { u: Word, a: Symbol },
    /// `S -> u S v`.
    Stage2S { u: Word, v: Word },
    /// `S -> u v` over the block alphabets (block normal forms only).
    Stage2Final { u: Word, v: Word },
    /// `S -> u $ v` (center-marked normal forms only).
    CenterIntro { u: Word, v: Word },
    /// One of the two stated non-context-free erasing rules.
    Eraser,
    /// `$ -> eps` (center-marked normal forms only).
    CenterErase,
}

impl RuleShape {
    /// The role tag this shape corresponds to.
    pub fn role(&self) -> RuleRole {
        match self {
            RuleShape::Stage1 { .. } => RuleRole::Stage1,
            RuleShape::Stage2S { .. } => RuleRole::Stage2S,
            RuleShape::Stage2Final { .. } => RuleRole::Stage2Final,
            RuleShape::CenterIntro { .. } => RuleRole::CenterIntro,
            RuleShape::Eraser => RuleRole::Eraser,
            RuleShape::CenterErase => RuleRole::CenterErase,
        }
    }
}

/// Static description of one normal form's rule shapes.
struct Shape {
    /// Blocks the part before S (or the center) decomposes into, at least one.
    u_blocks: &'static [&'static str],
    /// Blocks the part after S (or the center) decomposes into, possibly none.
    v_blocks: &'static [&'static str],
    /// Center-marker name for `S -> u $ v` forms; block forms use `S -> u v`.
    marker: Option<&'static str>,
    /// The two stated non-context-free rules, over single-character names.
    erasers: [(&'static str, &'static str); 2],
    /// The exact nonterminal alphabet.
    nonterminals: &'static [&'static str],
}

fn shape_of(kind: GeneralKind) -> Option<&'static Shape> {
    match kind {
        GeneralKind::Type0 => None,
        GeneralKind::Gnf52 => Some(&Shape {
            u_blocks: &["A", "C"],
            v_blocks: &["B", "D"],
            marker: None,
            erasers: [("AB", ""), ("CD", "")],
            nonterminals: &["S", "A", "B", "C", "D"],
        }),
        GeneralKind::Gnf42 => Some(&Shape {
            u_blocks: &["CA", "CAA"],
            v_blocks: &["BC", "BBC"],
            marker: None,
            erasers: [("AB", ""), ("CC", "")],
            nonterminals: &["S", "A", "B", "C"],
        }),
        GeneralKind::Gnf32 => Some(&Shape {
            u_blocks: &["ABB", "AB"],
            v_blocks: &["BA", "BBA"],
            marker: None,
            erasers: [("AA", ""), ("BBB", "")],
            nonterminals: &["S", "A", "B"],
        }),
        GeneralKind::Mmnf => Some(&Shape {
            u_blocks: &["0", "1"],
            v_blocks: &["0", "1"],
            marker: Some("$"),
            erasers: [("0$0", "$"), ("1$1", "$")],
            nonterminals: &["S", "0", "1", "$"],
        }),
        GeneralKind::Smmnf => Some(&Shape {
            u_blocks: &["10", "100"],
            v_blocks: &["01", "001"],
            marker: Some("$"),
            erasers: [("0$0", "$"), ("1$1", "$")],
            nonterminals: &["S", "0", "1", "$"],
        }),
        GeneralKind::Mmmnf => Some(&Shape {
            u_blocks: &["0", "1"],
            v_blocks: &["0", "1"],
            marker: Some("$"),
            erasers: [("0$1", "$"), ("1$0", "$")],
            nonterminals: &["S", "0", "1", "$"],
        }),
    }
}

fn matches_spelled(symbols: &[Symbol], spelled: &str) -> bool {
    symbols.len() == spelled.len()
        && symbols
            .iter()
            .zip(spelled.bytes())
            .all(|(sym, byte)| sym.name().as_bytes() == [byte])
}

fn star_decomposable(symbols: &[Symbol], blocks: &[&str]) -> bool {
    let n = symbols.len();
    let mut ok = vec![false; n + 1];
    ok[0] = true;
    for i in 1..=n {
        ok[i] = blocks.iter().any(|block| {
            block.len() <= i
                && ok[i - block.len()]
                && matches_spelled(&symbols[i - block.len()..i], block)
        });
    }
    ok[n]
}

fn plus_decomposable(symbols: &[Symbol], blocks: &[&str]) -> bool {
    !symbols.is_empty() && star_decomposable(symbols, blocks)
}

fn blocks_list(blocks: &[&str]) -> String {
    format!("{{{}}}", blocks.join(", "))
}

/// Classifies one rule against the shapes of `kind`.
///
/// For `S -> u v` rules the reported split is the leftmost valid one; it is
/// unique whenever the two block alphabets share no letters.
pub fn classify_rule(
    grammar: &GeneralGrammar,
    rule: &GeneralRule,
    kind: GeneralKind,
) -> Result<RuleShape, String> {
    let Some(shape) = shape_of(kind) else {
        return Err(format!("kind {} imposes no rule shapes", kind.token()));
    };
    for (lhs, rhs) in &shape.erasers {
        if matches_spelled(rule.lhs.symbols(), lhs) && matches_spelled(rule.rhs.symbols(), rhs) {
            return Ok(RuleShape::Eraser);
        }
    }
    if let Some(marker) = shape.marker {
        if matches_spelled(rule.lhs.symbols(), marker) {
            return if rule.rhs.is_empty() {
                Ok(RuleShape::CenterErase)
            } else {
                Err(format!("the center marker may only be erased, found rhs {}", rule.rhs))
            };
        }
    }
    if rule.lhs.symbols().len() != 1 || rule.lhs.symbols()[0].name() != "S" {
        return Err("left-hand side must be S or a stated erasing rule".to_string());
    }
    let rhs = rule.rhs.symbols();
    let s_at: Vec<usize> = rhs
        .iter()
        .enumerate()
        .filter_map(|(i, sym)| (sym.name() == "S").then_some(i))
        .collect();
    match s_at.as_slice() {
        [at] => {
            let u = &rhs[..*at];
            if !plus_decomposable(u, shape.u_blocks) {
                return Err(format!(
                    "the part before S must be a non-empty sequence of {} blocks",
                    blocks_list(shape.u_blocks)
                ));
            }
            let tail = &rhs[*at + 1..];
            if let [a] = tail {
                if grammar.is_terminal(a) {
                    return Ok(RuleShape::Stage1 { u: Word::new(u.to_vec()), a: a.clone() });
                }
            }
            if star_decomposable(tail, shape.v_blocks) {
                Ok(RuleShape::Stage2S { u: Word::new(u.to_vec()), v: Word::new(tail.to_vec()) })
            } else {
                Err(format!(
                    "after S, either one terminal or a sequence of {} blocks must follow",
                    blocks_list(shape.v_blocks)
                ))
            }
        }
        [] => {
            if let Some(marker) = shape.marker {
                let marker_at: Vec<usize> = rhs
                    .iter()
                    .enumerate()
                    .filter_map(|(i, sym)| (sym.name() == marker).then_some(i))
                    .collect();
                let [at] = marker_at.as_slice() else {
                    return Err(format!(
                        "an S-free right-hand side carries exactly one center marker {marker}"
                    ));
                };
                let u = &rhs[..*at];
                let v = &rhs[*at + 1..];
                if !plus_decomposable(u, shape.u_blocks) {
                    return Err(format!(
                        "the part before the center must be a non-empty sequence of {} blocks",
                        blocks_list(shape.u_blocks)
                    ));
                }
                if !star_decomposable(v, shape.v_blocks) {
                    return Err(format!(
                        "the part after the center must be a sequence of {} blocks",
                        blocks_list(shape.v_blocks)
                    ));
                }
                Ok(RuleShape::CenterIntro {
                    u: Word::new(u.to_vec()),
                    v: Word::new(v.to_vec()),
                })
            } else {
                for i in 1..=rhs.len() {
                    if plus_decomposable(&rhs[..i], shape.u_blocks)
                        && star_decomposable(&rhs[i..], shape.v_blocks)
                    {
                        return Ok(RuleShape::Stage2Final {
                            u: Word::new(rhs[..i].to_vec()),
                            v: Word::new(rhs[i..].to_vec()),
                        });
                    }
                }
                Err(format!(
                    "the right-hand side must split into {} blocks followed by {} blocks",
                    blocks_list(shape.u_blocks),
                    blocks_list(shape.v_blocks)
                ))
            }
        }
        _ => Err("at most one S may occur on the right-hand side".to_string()),
    }
}

/// Result of checking a grammar against a normal form's rule shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormReport {
    kind: GeneralKind,
    offenses: Vec<String>,
}

impl NormalFormReport {
    pub fn kind(&self) -> GeneralKind {
        self.kind
    }

    pub fn is_valid(&self) -> bool {
        self.offenses.is_empty()
    }

    pub fn offenses(&self) -> &[String] {
        &self.offenses
    }
}

fn spell(compact: &str) -> String {
    if compact.is_empty() {
        "eps".to_string()
    } else {
        compact
            .chars()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Checks every rule of `g` against the shapes of `kind`.
///
/// The check is purely structural; the grammar's declared kind is not
/// consulted. Each stated non-context-free rule must appear exactly once.
pub fn validate_normal_form(g: &GeneralGrammar, kind: GeneralKind) -> NormalFormReport {
    let mut offenses = Vec::new();
    let Some(shape) = shape_of(kind) else {
        return NormalFormReport {
            kind,
            offenses: vec![format!("kind {} imposes no rule shapes", kind.token())],
        };
    };
    let expected: BTreeSet<&str> = shape.nonterminals.iter().copied().collect();
    let declared: BTreeSet<&str> = g.nonterminals().iter().map(Symbol::name).collect();
    if declared != expected {
        offenses.push(format!(
            "nonterminals must be exactly {}",
            blocks_list(shape.nonterminals)
        ));
    }
    if g.start().name() != "S" {
        offenses.push(format!("start symbol must be S, found {}", g.start()));
    }
    // One count per stated eraser, plus one for the center-erase rule.
    let mut stated_counts = vec![0usize; shape.erasers.len() + 1];
    for (index, rule) in g.rules().iter().enumerate() {
        match classify_rule(g, rule, kind) {
            Ok(rule_shape) => {
                if let Some(role) = rule.role {
                    if role != rule_shape.role() {
                        offenses.push(format!(
                            "rule {} ({} -> {}): tagged {} but shaped {}",
                            index + 1,
                            rule.lhs,
                            rule.rhs,
                            role.token(),
                            rule_shape.role().token()
                        ));
                    }
                }
                match rule_shape {
                    RuleShape::Eraser => {
                        let k = shape
                            .erasers
                            .iter()
                            .position(|(lhs, rhs)| {
                                matches_spelled(rule.lhs.symbols(), lhs)
                                    && matches_spelled(rule.rhs.symbols(), rhs)
                            })
                            .expect("classified erasers match a stated rule");
                        stated_counts[k] += 1;
                    }
                    RuleShape::CenterErase => stated_counts[shape.erasers.len()] += 1,
                    _ => {}
                }
            }
            Err(message) => {
                offenses.push(format!(
                    "rule {} ({} -> {}): {}",
                    index + 1,
                    rule.lhs,
                    rule.rhs,
                    message
                ));
            }
        }
    }
    let mut stated: Vec<(String, String)> = shape
        .erasers
        .iter()
        .map(|(lhs, rhs)| (spell(lhs), spell(rhs)))
        .collect();
    if let Some(marker) = shape.marker {
        stated.push((marker.to_string(), "eps".to_string()));
    }
    for (k, (lhs, rhs)) in stated.iter().enumerate() {
        match stated_counts.get(k).copied().unwrap_or(0) {
            0 => offenses.push(format!("missing the stated rule {lhs} -> {rhs}")),
            1 => {}
            _ => offenses.push(format!("the stated rule {lhs} -> {rhs} appears more than once")),
        }
    }
    NormalFormReport { kind, offenses }
}
