//! Symbol-interned grammar forms for fast search.
//!
//! Symbols are interned in sorted name order, so comparing id slices
//! lexicographically agrees with comparing the decoded words.

use std::collections::{BTreeSet, HashMap};

use scm_core::{GeneralGrammar, Matrix, ScmGrammar, Symbol, Word};

pub(crate) type Form = Vec<u32>;

/// Bidirectional symbol↔id table with terminal flags.
pub(crate) struct SymTable {
    names: Vec<Symbol>,
    terminal: Vec<bool>,
    ids: HashMap<Symbol, u32>,
}

impl SymTable {
    pub(crate) fn build(
        terminals: &BTreeSet<Symbol>,
        nonterminals: &BTreeSet<Symbol>,
    ) -> SymTable {
        let mut entries: Vec<(Symbol, bool)> = terminals
            .iter()
            .map(|s| (s.clone(), true))
            .chain(nonterminals.iter().map(|s| (s.clone(), false)))
            .collect();
        entries.sort();
        let mut names = Vec::with_capacity(entries.len());
        let mut terminal = Vec::with_capacity(entries.len());
        let mut ids = HashMap::with_capacity(entries.len());
        for (index, (sym, is_terminal)) in entries.into_iter().enumerate() {
            ids.insert(sym.clone(), index as u32);
            names.push(sym);
            terminal.push(is_terminal);
        }
        SymTable { names, terminal, ids }
    }

    pub(crate) fn id(&self, sym: &Symbol) -> Option<u32> {
        self.ids.get(sym).copied()
    }

    pub(crate) fn form(&self, word: &Word) -> Option<Form> {
        word.iter().map(|s| self.id(s)).collect()
    }

    /// Encodes a word, panicking on symbols outside the grammar's alphabet.
    pub(crate) fn form_expect(&self, word: &Word) -> Form {
        self.form(word).unwrap_or_else(|| {
            let missing = word
                .iter()
                .find(|s| self.id(s).is_none())
                .expect("some symbol is undeclared");
            panic!("symbol {:?} is not declared in the grammar", missing.name())
        })
    }

    pub(crate) fn word(&self, form: &[u32]) -> Word {
        form.iter().map(|id| self.names[*id as usize].clone()).collect()
    }

    pub(crate) fn is_terminal_form(&self, form: &[u32]) -> bool {
        form.iter().all(|id| self.terminal[*id as usize])
    }
}

pub(crate) struct CompiledMatrix {
    pub(crate) rules: Vec<(u32, Form)>,
    pub(crate) permit: Option<Form>,
    pub(crate) forbid: Option<Form>,
}

pub(crate) struct CompiledScm {
    pub(crate) table: SymTable,
    pub(crate) matrices: Vec<CompiledMatrix>,
}

impl CompiledScm {
    pub(crate) fn build(grammar: &ScmGrammar) -> CompiledScm {
        let table = SymTable::build(grammar.terminals(), grammar.nonterminals());
        let matrices =
            grammar.matrices().iter().map(|m| compile_matrix(&table, m)).collect();
        CompiledScm { table, matrices }
    }
}

pub(crate) fn compile_matrix(table: &SymTable, matrix: &Matrix) -> CompiledMatrix {
    let rules = matrix
        .rules()
        .iter()
        .map(|r| {
            let lhs = table
                .id(&r.lhs)
                .unwrap_or_else(|| panic!("symbol {:?} is not declared", r.lhs.name()));
            (lhs, table.form_expect(&r.rhs))
        })
        .collect();
    CompiledMatrix {
        rules,
        permit: matrix.permit().map(|w| table.form_expect(w)),
        forbid: matrix.forbid().map(|w| table.form_expect(w)),
    }
}

pub(crate) struct CompiledGeneral {
    pub(crate) table: SymTable,
    pub(crate) rules: Vec<(Form, Form)>,
}

impl CompiledGeneral {
    pub(crate) fn build(grammar: &GeneralGrammar) -> CompiledGeneral {
        let table = SymTable::build(grammar.terminals(), grammar.nonterminals());
        let rules = grammar
            .rules()
            .iter()
            .map(|r| (table.form_expect(&r.lhs), table.form_expect(&r.rhs)))
            .collect();
        CompiledGeneral { table, rules }
    }
}

/// Contiguous-subword test over interned forms.
pub(crate) fn contains_subform(haystack: &[u32], needle: &[u32]) -> bool {
    needle.is_empty()
        || (needle.len() <= haystack.len() && haystack.windows(needle.len()).any(|w| w == needle))
}

/// Replaces `len` ids at `at` with `replacement`.
pub(crate) fn splice(form: &[u32], at: usize, len: usize, replacement: &[u32]) -> Form {
    let mut out = Vec::with_capacity(form.len() - len + replacement.len());
    out.extend_from_slice(&form[..at]);
    out.extend_from_slice(replacement);
    out.extend_from_slice(&form[at + len..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_preserves_name_order() {
        let terminals: BTreeSet<Symbol> = [Symbol::new("b")].into();
        let nonterminals: BTreeSet<Symbol> = [Symbol::new("S"), Symbol::new("A")].into();
        let table = SymTable::build(&terminals, &nonterminals);
        let a = table.id(&Symbol::new("A")).unwrap();
        let s = table.id(&Symbol::new("S")).unwrap();
        let b = table.id(&Symbol::new("b")).unwrap();
        assert!(a < s && s < b, "ASCII order A < S < b");
        assert!(table.is_terminal_form(&[b]));
        assert!(!table.is_terminal_form(&[a, b]));
        assert_eq!(table.word(&[a, s, b]), Word::from_chars("ASb"));
    }

    #[test]
    fn subform_and_splice_behave() {
        assert!(contains_subform(&[1, 2, 2, 3], &[2, 2]));
        assert!(!contains_subform(&[1, 2, 3], &[2, 2]));
        assert!(contains_subform(&[1], &[]));
        assert_eq!(splice(&[1, 2, 3], 1, 1, &[9, 9]), vec![1, 9, 9, 3]);
        assert_eq!(splice(&[1, 2, 3], 0, 3, &[]), Vec::<u32>::new());
    }
}
