//! Grammar containers: conditional matrix, phrase-structure, and graph-controlled.

use std::collections::BTreeSet;

use crate::error::GrammarError;
use crate::symbol::{Symbol, Word};

/// A context-free rule with a single-nonterminal left-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfRule {
    pub lhs: Symbol,
    pub rhs: Word,
}

impl CfRule {
    pub fn new(lhs: Symbol, rhs: Word) -> Self {
        CfRule { lhs, rhs }
    }
}

/// An ordered rule sequence with optional permit and forbid context words.
///
/// Both context words are tested against the form the matrix is applied to,
/// never against intermediate forms, and are non-empty when present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    label: String,
    rules: Vec<CfRule>,
    permit: Option<Word>,
    forbid: Option<Word>,
}

impl Matrix {
    /// Builds a matrix, validating label shape, rule count, and condition words.
    pub fn new(
        label: impl Into<String>,
        rules: Vec<CfRule>,
        permit: Option<Word>,
        forbid: Option<Word>,
    ) -> Result<Self, GrammarError> {
        let label = label.into();
        let plain = !label.is_empty()
            && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !plain {
            return Err(GrammarError::BadLabel(label));
        }
        if rules.is_empty() {
            return Err(GrammarError::EmptyMatrix(label));
        }
        if permit.as_ref().is_some_and(Word::is_empty)
            || forbid.as_ref().is_some_and(Word::is_empty)
        {
            return Err(GrammarError::EmptyCondition(label));
        }
        Ok(Matrix { label, rules, permit, forbid })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rules(&self) -> &[CfRule] {
        &self.rules
    }

    /// Number of rules in the sequence, at least 1.
    pub fn len(&self) -> usize {
        self.rules.len()
    }

    /// Always false; matrices hold at least one rule.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn permit(&self) -> Option<&Word> {
        self.permit.as_ref()
    }

    pub fn forbid(&self) -> Option<&Word> {
        self.forbid.as_ref()
    }

    /// At least one context condition is absent.
    pub fn is_simple(&self) -> bool {
        self.permit.is_none() || self.forbid.is_none()
    }

    /// Both context conditions are absent.
    pub fn is_unconditional(&self) -> bool {
        self.permit.is_none() && self.forbid.is_none()
    }
}

/// A semi-conditional matrix grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScmGrammar {
    terminals: BTreeSet<Symbol>,
    nonterminals: BTreeSet<Symbol>,
    start: Symbol,
    matrices: Vec<Matrix>,
}

impl ScmGrammar {
    /// Builds a grammar, checking alphabet disjointness and symbol declarations.
    pub fn new(
        terminals: BTreeSet<Symbol>,
        nonterminals: BTreeSet<Symbol>,
        start: Symbol,
        matrices: Vec<Matrix>,
    ) -> Result<Self, GrammarError> {
        if let Some(sym) = terminals.intersection(&nonterminals).next() {
            return Err(GrammarError::AlphabetOverlap(sym.name().to_string()));
        }
        if !nonterminals.contains(&start) {
            return Err(GrammarError::StartNotNonterminal(start.name().to_string()));
        }
        let mut labels = BTreeSet::new();
        for matrix in &matrices {
            if !labels.insert(matrix.label().to_string()) {
                return Err(GrammarError::DuplicateLabel(matrix.label().to_string()));
            }
            for rule in matrix.rules() {
                if terminals.contains(&rule.lhs) {
                    return Err(GrammarError::TerminalLhs(
                        matrix.label().to_string(),
                        rule.lhs.name().to_string(),
                    ));
                }
                if !nonterminals.contains(&rule.lhs) {
                    return Err(GrammarError::UndeclaredSymbol(rule.lhs.name().to_string()));
                }
                check_declared(&rule.rhs, &terminals, &nonterminals)?;
            }
            for cond in [matrix.permit(), matrix.forbid()].into_iter().flatten() {
                check_declared(cond, &terminals, &nonterminals)?;
            }
        }
        Ok(ScmGrammar { terminals, nonterminals, start, matrices })
    }

    pub fn terminals(&self) -> &BTreeSet<Symbol> {
        &self.terminals
    }

    pub fn nonterminals(&self) -> &BTreeSet<Symbol> {
        &self.nonterminals
    }

    pub fn start(&self) -> &Symbol {
        &self.start
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Looks a matrix up by label.
    pub fn matrix(&self, label: &str) -> Option<&Matrix> {
        self.matrices.iter().find(|m| m.label() == label)
    }

    pub fn is_terminal(&self, sym: &Symbol) -> bool {
        self.terminals.contains(sym)
    }

    /// Tests whether every symbol of `word` is terminal.
    pub fn is_terminal_word(&self, word: &Word) -> bool {
        word.iter().all(|s| self.terminals.contains(s))
    }
}

/// Phrase-structure grammar kinds distinguished by the file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneralKind {
    Type0,
    Gnf52,
    Gnf42,
    Gnf32,
    Mmnf,
    Smmnf,
    Mmmnf,
}

impl GeneralKind {
    /// The `kind:` token used in grammar files.
    pub fn token(self) -> &'static str {
        match self {
            GeneralKind::Type0 => "type0",
            GeneralKind::Gnf52 => "gnf52",
            GeneralKind::Gnf42 => "gnf42",
            GeneralKind::Gnf32 => "gnf32",
            GeneralKind::Mmnf => "mmnf",
            GeneralKind::Smmnf => "smmnf",
            GeneralKind::Mmmnf => "mmmnf",
        }
    }

    pub fn from_token(token: &str) -> Option<Self> {
        Some(match token {
            "type0" => GeneralKind::Type0,
            "gnf52" => GeneralKind::Gnf52,
            "gnf42" => GeneralKind::Gnf42,
            "gnf32" => GeneralKind::Gnf32,
            "mmnf" => GeneralKind::Mmnf,
            "smmnf" => GeneralKind::Smmnf,
            "mmmnf" => GeneralKind::Mmmnf,
            _ => return None,
        })
    }
}

/// Structural roles a normal-form rule can be tagged with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleRole {
    Stage1,
    Stage2S,
    Stage2Final,
    Eraser,
    CenterIntro,
    CenterErase,
}

impl RuleRole {
    /// The role token used in grammar files.
    pub fn token(self) -> &'static str {
        match self {
            RuleRole::Stage1 => "stage1",
            RuleRole::Stage2S => "stage2-S",
            RuleRole::Stage2Final => "stage2-final",
            RuleRole::Eraser => "eraser",
            RuleRole::CenterIntro => "center-intro",
            RuleRole::CenterErase => "center-erase",
        }
    }

    pub fn from_token(token: &str) -> Option<Self> {
        Some(match token {
            "stage1" => RuleRole::Stage1,
            "stage2-S" => RuleRole::Stage2S,
            "stage2-final" => RuleRole::Stage2Final,
            "eraser" => RuleRole::Eraser,
            "center-intro" => RuleRole::CenterIntro,
            "center-erase" => RuleRole::CenterErase,
            _ => return None,
        })
    }
}

/// A phrase-structure rule `x -> y` with an optional role tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralRule {
    pub lhs: Word,
    pub rhs: Word,
    pub role: Option<RuleRole>,
}

impl GeneralRule {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        GeneralRule { lhs, rhs, role: None }
    }

    pub fn with_role(lhs: Word, rhs: Word, role: RuleRole) -> Self {
        GeneralRule { lhs, rhs, role: Some(role) }
    }
}

/// A phrase-structure grammar, possibly in a declared normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralGrammar {
    kind: GeneralKind,
    terminals: BTreeSet<Symbol>,
    nonterminals: BTreeSet<Symbol>,
    start: Symbol,
    rules: Vec<GeneralRule>,
}

impl GeneralGrammar {
    /// Builds a grammar, checking alphabets and that every left-hand side
    /// is non-empty and contains a nonterminal.
    pub fn new(
        kind: GeneralKind,
        terminals: BTreeSet<Symbol>,
        nonterminals: BTreeSet<Symbol>,
        start: Symbol,
        rules: Vec<GeneralRule>,
    ) -> Result<Self, GrammarError> {
        if let Some(sym) = terminals.intersection(&nonterminals).next() {
            return Err(GrammarError::AlphabetOverlap(sym.name().to_string()));
        }
        if !nonterminals.contains(&start) {
            return Err(GrammarError::StartNotNonterminal(start.name().to_string()));
        }
        for rule in &rules {
            if rule.lhs.is_empty() {
                return Err(GrammarError::EmptyLhs);
            }
            check_declared(&rule.lhs, &terminals, &nonterminals)?;
            check_declared(&rule.rhs, &terminals, &nonterminals)?;
            if !rule.lhs.iter().any(|s| nonterminals.contains(s)) {
                return Err(GrammarError::NoNonterminalLhs(rule.lhs.to_string()));
            }
        }
        Ok(GeneralGrammar { kind, terminals, nonterminals, start, rules })
    }

    pub fn kind(&self) -> GeneralKind {
        self.kind
    }

    pub fn terminals(&self) -> &BTreeSet<Symbol> {
        &self.terminals
    }

    pub fn nonterminals(&self) -> &BTreeSet<Symbol> {
        &self.nonterminals
    }

    pub fn start(&self) -> &Symbol {
        &self.start
    }

    pub fn rules(&self) -> &[GeneralRule] {
        &self.rules
    }

    pub fn is_terminal(&self, sym: &Symbol) -> bool {
        self.terminals.contains(sym)
    }

    /// Tests whether every symbol of `word` is terminal.
    pub fn is_terminal_word(&self, word: &Word) -> bool {
        word.iter().all(|s| self.terminals.contains(s))
    }
}

/// One node of a graph-controlled grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcNode {
    /// 1-based node index.
    pub index: usize,
    /// The node's rule; absent exactly on the final node.
    pub rule: Option<CfRule>,
    /// Success targets, taken after rewriting one occurrence of the left-hand side.
    pub green: BTreeSet<usize>,
    /// Failure targets, taken when the left-hand side is absent.
    pub red: BTreeSet<usize>,
}

/// A graph-controlled grammar over nonterminals {A, B} with initial node 1
/// and final node v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcGrammar {
    terminals: BTreeSet<Symbol>,
    nonterminals: BTreeSet<Symbol>,
    start: Symbol,
    nodes: Vec<GcNode>,
}

impl GcGrammar {
    /// Builds a grammar; `nodes` must carry indices 1..=v in order.
    pub fn new(
        terminals: BTreeSet<Symbol>,
        nonterminals: BTreeSet<Symbol>,
        start: Symbol,
        nodes: Vec<GcNode>,
    ) -> Result<Self, GrammarError> {
        if let Some(sym) = terminals.intersection(&nonterminals).next() {
            return Err(GrammarError::AlphabetOverlap(sym.name().to_string()));
        }
        let expected: BTreeSet<Symbol> = [Symbol::new("A"), Symbol::new("B")].into();
        if nonterminals != expected {
            return Err(GrammarError::GcNonterminals);
        }
        if !nonterminals.contains(&start) {
            return Err(GrammarError::StartNotNonterminal(start.name().to_string()));
        }
        let count = nodes.len();
        if count < 2 {
            return Err(GrammarError::GcTooSmall);
        }
        for (pos, node) in nodes.iter().enumerate() {
            if node.index != pos + 1 {
                return Err(GrammarError::NodeOutOfRange(node.index, count));
            }
            let is_final = node.index == count;
            match &node.rule {
                Some(rule) => {
                    if is_final {
                        return Err(GrammarError::GcFinalHasRule(node.index));
                    }
                    if !nonterminals.contains(&rule.lhs) {
                        return Err(GrammarError::UndeclaredSymbol(rule.lhs.name().to_string()));
                    }
                    check_declared(&rule.rhs, &terminals, &nonterminals)?;
                }
                None => {
                    if !is_final {
                        return Err(GrammarError::GcMissingRule(node.index));
                    }
                }
            }
            for target in node.green.iter().chain(node.red.iter()) {
                if *target < 1 || *target > count {
                    return Err(GrammarError::NodeOutOfRange(*target, count));
                }
            }
        }
        Ok(GcGrammar { terminals, nonterminals, start, nodes })
    }

    pub fn terminals(&self) -> &BTreeSet<Symbol> {
        &self.terminals
    }

    pub fn nonterminals(&self) -> &BTreeSet<Symbol> {
        &self.nonterminals
    }

    pub fn start(&self) -> &Symbol {
        &self.start
    }

    pub fn nodes(&self) -> &[GcNode] {
        &self.nodes
    }

    /// The node with 1-based index `i`.
    pub fn node(&self, i: usize) -> &GcNode {
        &self.nodes[i - 1]
    }

    /// The initial node index, always 1.
    pub fn initial(&self) -> usize {
        1
    }

    /// The final node index, always the node count.
    pub fn final_node(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_terminal(&self, sym: &Symbol) -> bool {
        self.terminals.contains(sym)
    }

    /// Tests whether every symbol of `word` is terminal.
    pub fn is_terminal_word(&self, word: &Word) -> bool {
        word.iter().all(|s| self.terminals.contains(s))
    }
}

/// Any grammar the file format can carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Grammar {
    Scm(ScmGrammar),
    General(GeneralGrammar),
    Gc(GcGrammar),
}

impl Grammar {
    /// The `kind:` token this grammar serializes under.
    pub fn kind_token(&self) -> &'static str {
        match self {
            Grammar::Scm(_) => "scm",
            Grammar::General(g) => g.kind().token(),
            Grammar::Gc(_) => "gc",
        }
    }

    pub fn as_scm(&self) -> Option<&ScmGrammar> {
        match self {
            Grammar::Scm(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_general(&self) -> Option<&GeneralGrammar> {
        match self {
            Grammar::General(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_gc(&self) -> Option<&GcGrammar> {
        match self {
            Grammar::Gc(g) => Some(g),
            _ => None,
        }
    }
}

fn check_declared(
    word: &Word,
    terminals: &BTreeSet<Symbol>,
    nonterminals: &BTreeSet<Symbol>,
) -> Result<(), GrammarError> {
    for sym in word.iter() {
        if !terminals.contains(sym) && !nonterminals.contains(sym) {
            return Err(GrammarError::UndeclaredSymbol(sym.name().to_string()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symbols(names: &[&str]) -> BTreeSet<Symbol> {
        names.iter().map(|n| Symbol::new(*n)).collect()
    }

    fn matrix(label: &str, lhs: &str, rhs: &str) -> Matrix {
        Matrix::new(
            label,
            vec![CfRule::new(Symbol::new(lhs), Word::from_chars(rhs))],
            None,
            None,
        )
        .unwrap()
    }

    #[test]
    fn matrix_rejects_empty_conditions() {
        let rules = vec![CfRule::new(Symbol::new("S"), Word::empty())];
        let err = Matrix::new("m1", rules, Some(Word::empty()), None).unwrap_err();
        assert_eq!(err, GrammarError::EmptyCondition("m1".into()));
    }

    #[test]
    fn matrix_rejects_odd_labels() {
        let rules = vec![CfRule::new(Symbol::new("S"), Word::empty())];
        let err = Matrix::new("bad label", rules, None, None).unwrap_err();
        assert!(matches!(err, GrammarError::BadLabel(_)));
    }

    #[test]
    fn scm_grammar_rejects_terminal_lhs() {
        let err = ScmGrammar::new(
            symbols(&["a"]),
            symbols(&["S"]),
            Symbol::new("S"),
            vec![matrix("m1", "a", "S")],
        )
        .unwrap_err();
        assert_eq!(err, GrammarError::TerminalLhs("m1".into(), "a".into()));
    }

    #[test]
    fn scm_grammar_rejects_duplicate_labels() {
        let err = ScmGrammar::new(
            symbols(&["a"]),
            symbols(&["S"]),
            Symbol::new("S"),
            vec![matrix("m1", "S", "a"), matrix("m1", "S", "aa")],
        )
        .unwrap_err();
        assert_eq!(err, GrammarError::DuplicateLabel("m1".into()));
    }

    #[test]
    fn scm_grammar_rejects_undeclared_symbols() {
        let err = ScmGrammar::new(
            symbols(&["a"]),
            symbols(&["S"]),
            Symbol::new("S"),
            vec![matrix("m1", "S", "aX")],
        )
        .unwrap_err();
        assert_eq!(err, GrammarError::UndeclaredSymbol("X".into()));
    }

    #[test]
    fn general_grammar_requires_nonterminal_in_lhs() {
        let rules = vec![GeneralRule::new(Word::from_chars("a"), Word::empty())];
        let err = GeneralGrammar::new(
            GeneralKind::Type0,
            symbols(&["a"]),
            symbols(&["S"]),
            Symbol::new("S"),
            rules,
        )
        .unwrap_err();
        assert!(matches!(err, GrammarError::NoNonterminalLhs(_)));
    }

    #[test]
    fn gc_grammar_enforces_node_shape() {
        let terminals = symbols(&["a"]);
        let nonterminals = symbols(&["A", "B"]);
        let rule = CfRule::new(Symbol::new("A"), Word::from_chars("a"));
        let nodes = vec![
            GcNode {
                index: 1,
                rule: Some(rule.clone()),
                green: [2].into(),
                red: BTreeSet::new(),
            },
            GcNode { index: 2, rule: None, green: BTreeSet::new(), red: BTreeSet::new() },
        ];
        let g = GcGrammar::new(terminals.clone(), nonterminals.clone(), Symbol::new("A"), nodes)
            .unwrap();
        assert_eq!(g.initial(), 1);
        assert_eq!(g.final_node(), 2);

        let bad = vec![
            GcNode { index: 1, rule: None, green: BTreeSet::new(), red: BTreeSet::new() },
            GcNode { index: 2, rule: None, green: BTreeSet::new(), red: BTreeSet::new() },
        ];
        let err =
            GcGrammar::new(terminals, nonterminals, Symbol::new("A"), bad).unwrap_err();
        assert_eq!(err, GrammarError::GcMissingRule(1));
    }
}
