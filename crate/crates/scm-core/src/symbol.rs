//! Alphabet symbols and words over them.

use std::fmt;

/// A single alphabet symbol, e.g. `S`, `a`, or `'#'`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(String);

impl Symbol {
    /// Creates a symbol, panicking on names the file format cannot represent.
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        assert!(!name.is_empty(), "symbol name must be non-empty");
        assert!(
            !name.chars().any(|c| c.is_whitespace()),
            "symbol name must not contain whitespace: {name:?}"
        );
        assert!(
            !name.contains('\''),
            "symbol name must not contain a quote: {name:?}"
        );
        assert!(name != "eps", "symbol name 'eps' is reserved for the empty word");
        Symbol(name)
    }

    /// The symbol's name without quoting.
    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite word; the empty word stands for the erased string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from symbols.
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    /// Builds a word of one-character symbols from a compact string, e.g. `"ABB"`.
    pub fn from_chars(s: &str) -> Self {
        Word(s.chars().map(|c| Symbol::new(c.to_string())).collect())
    }

    /// Builds a word from whitespace-separated symbol names, e.g. `"C A A"`.
    pub fn from_names(s: &str) -> Self {
        Word(s.split_whitespace().map(Symbol::new).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    /// Tests whether `needle` occurs as a contiguous subword.
    pub fn contains_subword(&self, needle: &Word) -> bool {
        if needle.is_empty() {
            return true;
        }
        self.0.windows(needle.len()).any(|w| w == needle.symbols())
    }

    /// Concatenates two words.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.0.clone();
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Length-lexicographic order: shorter words first, ties broken lexically.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    /// Renders in file-format notation: `eps` for the empty word, else
    /// whitespace-separated tokens with non-alphanumeric names quoted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("eps");
        }
        let mut first = true;
        for sym in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(&symbol_token(sym))?;
        }
        Ok(())
    }
}

/// Renders one symbol as a file-format token, quoting non-alphanumeric names.
pub fn symbol_token(sym: &Symbol) -> String {
    let name = sym.name();
    if name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        name.to_string()
    } else {
        format!("'{name}'")
    }
}
