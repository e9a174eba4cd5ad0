//! Line-oriented reader for grammar files.

use std::collections::BTreeSet;

use crate::error::ParseError;
use crate::grammar::{
    CfRule, GcGrammar, GcNode, GeneralGrammar, GeneralKind, GeneralRule, Grammar, Matrix,
    RuleRole, ScmGrammar,
};
use crate::symbol::{Symbol, Word};

/// One lexical token of a grammar-file line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Bare(String),
    Quoted(String),
    Punct(char),
    Arrow,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Bare(s) => format!("{s:?}"),
            Tok::Quoted(s) => format!("'{s}'"),
            Tok::Punct(c) => format!("{c:?}"),
            Tok::Arrow => "\"->\"".to_string(),
        }
    }
}

/// Splits one line into tokens; `->` and the punctuation `{ } ; , :` separate
/// bare tokens even without surrounding whitespace.
pub(crate) fn tokenize(line: &str, lineno: usize) -> Result<Vec<Tok>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if matches!(c, '{' | '}' | ';' | ',' | ':') {
            toks.push(Tok::Punct(c));
            i += 1;
        } else if c == '\'' {
            let start = i + 1;
            let mut j = start;
            while j < chars.len() && chars[j] != '\'' {
                j += 1;
            }
            if j == chars.len() {
                return Err(ParseError::syntax(lineno, "unterminated quoted symbol"));
            }
            if j == start {
                return Err(ParseError::syntax(lineno, "empty quoted symbol"));
            }
            toks.push(Tok::Quoted(chars[start..j].iter().collect()));
            i = j + 1;
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            toks.push(Tok::Arrow);
            i += 2;
        } else {
            let start = i;
            while i < chars.len() {
                let c = chars[i];
                if c.is_whitespace() || matches!(c, '{' | '}' | ';' | ',' | ':' | '\'') {
                    break;
                }
                if c == '-' && chars.get(i + 1) == Some(&'>') {
                    break;
                }
                i += 1;
            }
            toks.push(Tok::Bare(chars[start..i].iter().collect()));
        }
    }
    Ok(toks)
}

/// A token cursor over one line.
pub(crate) struct Cursor {
    toks: Vec<Tok>,
    pos: usize,
    line: usize,
}

impl Cursor {
    pub(crate) fn new(toks: Vec<Tok>, line: usize) -> Self {
        Cursor { toks, pos: 0, line }
    }

    pub(crate) fn line(&self) -> usize {
        self.line
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn advance(&mut self) -> Option<Tok> {
        let tok = self.toks.get(self.pos).cloned();
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub(crate) fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::syntax(self.line, message)
    }

    fn describe_next(&self) -> String {
        self.peek().map_or_else(|| "end of line".to_string(), Tok::describe)
    }

    pub(crate) fn expect_punct(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Punct(p)) if *p == c => {
                self.advance();
                Ok(())
            }
            _ => Err(self.err(format!("expected {c:?}, found {}", self.describe_next()))),
        }
    }

    fn expect_arrow(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Arrow) => {
                self.advance();
                Ok(())
            }
            _ => Err(self.err(format!("expected \"->\", found {}", self.describe_next()))),
        }
    }

    pub(crate) fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err(format!("unexpected trailing {}", self.describe_next())))
        }
    }

    /// Consumes a bare or quoted token as a raw string.
    fn expect_name(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Bare(s)) | Some(Tok::Quoted(s)) => {
                let s = s.clone();
                self.advance();
                Ok(s)
            }
            _ => Err(self.err(format!("expected {what}, found {}", self.describe_next()))),
        }
    }

    pub(crate) fn expect_number(&mut self, what: &str) -> Result<usize, ParseError> {
        let text = self.expect_name(what)?;
        text.parse::<usize>()
            .map_err(|_| self.err(format!("expected {what}, found {text:?}")))
    }

    /// True when the next token is a bare or quoted name.
    fn at_name(&self) -> bool {
        matches!(self.peek(), Some(Tok::Bare(_)) | Some(Tok::Quoted(_)))
    }

    /// Consumes the next token if it is bare.
    pub(crate) fn take_bare(&mut self) -> Option<String> {
        match self.peek() {
            Some(Tok::Bare(s)) => {
                let s = s.clone();
                self.advance();
                Some(s)
            }
            _ => None,
        }
    }

    /// Consumes the next token if it is bare or quoted.
    pub(crate) fn take_name(&mut self) -> Option<String> {
        match self.peek() {
            Some(Tok::Bare(s)) | Some(Tok::Quoted(s)) => {
                let s = s.clone();
                self.advance();
                Some(s)
            }
            _ => None,
        }
    }
}

fn symbol_from_name(name: String, line: usize) -> Result<Symbol, ParseError> {
    if name == "eps" {
        return Err(ParseError::syntax(line, "'eps' is reserved for the empty word"));
    }
    if name.chars().any(char::is_whitespace) {
        return Err(ParseError::syntax(line, format!("symbol {name:?} contains whitespace")));
    }
    Ok(Symbol::new(name))
}

/// Declared alphabets, used to reject undeclared symbols at their line.
struct Decls {
    terminals: BTreeSet<Symbol>,
    nonterminals: BTreeSet<Symbol>,
}

impl Decls {
    fn check(&self, sym: &Symbol, line: usize) -> Result<(), ParseError> {
        if self.terminals.contains(sym) || self.nonterminals.contains(sym) {
            Ok(())
        } else {
            Err(ParseError::UndeclaredSymbol { line, symbol: sym.name().to_string() })
        }
    }
}

/// What a word-position token sequence denoted.
enum WordToken {
    Word(Word),
    Absent,
}

/// Collects name tokens into a word; `eps` alone denotes λ and `-` alone the
/// absent marker when `allow_absent`.
fn collect_word(
    cur: &mut Cursor,
    decls: &Decls,
    allow_absent: bool,
) -> Result<WordToken, ParseError> {
    let mut names = Vec::new();
    while cur.at_name() {
        names.push(cur.expect_name("symbol")?);
    }
    if names.is_empty() {
        let expected = if allow_absent { "a word or '-'" } else { "a word" };
        return Err(cur.err(format!("expected {expected}, found {}", cur.describe_next())));
    }
    if names.len() == 1 && names[0] == "eps" {
        return Ok(WordToken::Word(Word::empty()));
    }
    if names.len() == 1 && names[0] == "-" {
        if allow_absent {
            return Ok(WordToken::Absent);
        }
        return Err(cur.err("'-' is only valid for absent conditions"));
    }
    let mut symbols = Vec::new();
    for name in names {
        if name == "eps" {
            return Err(cur.err("'eps' must stand alone to denote the empty word"));
        }
        if name == "-" {
            return Err(cur.err("'-' must stand alone to denote an absent condition"));
        }
        let sym = symbol_from_name(name, cur.line())?;
        decls.check(&sym, cur.line())?;
        symbols.push(sym);
    }
    Ok(WordToken::Word(Word::new(symbols)))
}

fn collect_plain_word(cur: &mut Cursor, decls: &Decls) -> Result<Word, ParseError> {
    match collect_word(cur, decls, false)? {
        WordToken::Word(w) => Ok(w),
        WordToken::Absent => unreachable!("absent marker rejected when not allowed"),
    }
}

#[derive(Default)]
struct FileParser {
    kind: Option<String>,
    terminals: Option<BTreeSet<Symbol>>,
    nonterminals: Option<BTreeSet<Symbol>>,
    start: Option<Symbol>,
    matrices: Vec<Matrix>,
    rules: Vec<GeneralRule>,
    roled: BTreeSet<usize>,
    nodes: Vec<GcNode>,
    initial: Option<(usize, usize)>,
    final_decl: Option<(usize, usize)>,
    last_line: usize,
}

impl FileParser {
    fn kind_token(&self) -> &str {
        self.kind.as_deref().unwrap_or("")
    }

    fn decls(&self, line: usize) -> Result<Decls, ParseError> {
        match (&self.terminals, &self.nonterminals) {
            (Some(t), Some(n)) => {
                Ok(Decls { terminals: t.clone(), nonterminals: n.clone() })
            }
            _ => Err(ParseError::syntax(
                line,
                "terminals and nonterminals must be declared before rules",
            )),
        }
    }

    fn take_line(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let first = match cur.peek() {
            Some(tok) => tok.clone(),
            None => return Ok(()),
        };
        if self.kind.is_none() {
            match &first {
                Tok::Bare(word) if word == "kind" => {}
                _ => return Err(cur.err("first declaration must be 'kind:'")),
            }
        }
        match &first {
            Tok::Bare(word) => match word.as_str() {
                "kind" => self.parse_kind(cur),
                "terminals" => self.parse_decl(cur, true),
                "nonterminals" => self.parse_decl(cur, false),
                "start" => self.parse_start(cur),
                "matrix" => self.parse_matrix(cur),
                "rule" => self.parse_rule(cur),
                "role" => self.parse_role(cur),
                "node" => self.parse_node(cur),
                "initial" => self.parse_initial(cur),
                "final" => self.parse_final(cur),
                _ => self.parse_shorthand(cur),
            },
            _ => self.parse_shorthand(cur),
        }
    }

    fn parse_kind(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        cur.advance();
        cur.expect_punct(':')?;
        let token = cur.expect_name("a grammar kind")?;
        let known = token == "scm" || token == "gc" || GeneralKind::from_token(&token).is_some();
        if !known {
            return Err(cur.err(format!("unknown kind {token:?}")));
        }
        if self.kind.replace(token).is_some() {
            return Err(cur.err("duplicate 'kind:' declaration"));
        }
        cur.expect_end()
    }

    fn parse_decl(&mut self, cur: &mut Cursor, terminals: bool) -> Result<(), ParseError> {
        cur.advance();
        cur.expect_punct(':')?;
        let mut set = BTreeSet::new();
        while cur.at_name() {
            let name = cur.expect_name("symbol")?;
            let sym = symbol_from_name(name, cur.line())?;
            if !set.insert(sym.clone()) {
                return Err(cur.err(format!("symbol {:?} declared twice", sym.name())));
            }
        }
        cur.expect_end()?;
        let slot = if terminals { &mut self.terminals } else { &mut self.nonterminals };
        let what = if terminals { "terminals" } else { "nonterminals" };
        if slot.replace(set).is_some() {
            return Err(cur.err(format!("duplicate '{what}:' declaration")));
        }
        Ok(())
    }

    fn parse_start(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        cur.advance();
        cur.expect_punct(':')?;
        let name = cur.expect_name("the start symbol")?;
        let sym = symbol_from_name(name, cur.line())?;
        cur.expect_end()?;
        if self.start.replace(sym).is_some() {
            return Err(cur.err("duplicate 'start:' declaration"));
        }
        Ok(())
    }

    fn parse_matrix(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        if self.kind_token() != "scm" {
            return Err(cur.err("'matrix' lines require kind scm"));
        }
        let decls = self.decls(cur.line())?;
        cur.advance();
        let label = cur.expect_name("a matrix label")?;
        cur.expect_punct('{')?;
        self.expect_keyword(cur, "rules")?;
        cur.expect_punct(':')?;
        let mut rules = Vec::new();
        loop {
            rules.push(self.parse_cf_rule(cur, &decls)?);
            match cur.peek() {
                Some(Tok::Punct(',')) => {
                    cur.advance();
                }
                _ => break,
            }
        }
        cur.expect_punct(';')?;
        self.expect_keyword(cur, "permit")?;
        cur.expect_punct(':')?;
        let permit = self.parse_condition(cur, &decls)?;
        cur.expect_punct(';')?;
        self.expect_keyword(cur, "forbid")?;
        cur.expect_punct(':')?;
        let forbid = self.parse_condition(cur, &decls)?;
        cur.expect_punct('}')?;
        cur.expect_end()?;
        let matrix = Matrix::new(label, rules, permit, forbid)?;
        self.matrices.push(matrix);
        Ok(())
    }

    fn expect_keyword(&self, cur: &mut Cursor, word: &str) -> Result<(), ParseError> {
        match cur.peek() {
            Some(Tok::Bare(s)) if s == word => {
                cur.advance();
                Ok(())
            }
            _ => Err(cur.err(format!("expected '{word}', found {}", cur.describe_next()))),
        }
    }

    fn parse_cf_rule(&self, cur: &mut Cursor, decls: &Decls) -> Result<CfRule, ParseError> {
        let name = cur.expect_name("a rule left-hand side")?;
        let lhs = symbol_from_name(name, cur.line())?;
        if decls.terminals.contains(&lhs) {
            return Err(cur.err(format!(
                "terminal {:?} used as rule left-hand side",
                lhs.name()
            )));
        }
        decls.check(&lhs, cur.line())?;
        cur.expect_arrow()?;
        let rhs = collect_plain_word(cur, decls)?;
        Ok(CfRule::new(lhs, rhs))
    }

    fn parse_condition(
        &self,
        cur: &mut Cursor,
        decls: &Decls,
    ) -> Result<Option<Word>, ParseError> {
        match collect_word(cur, decls, true)? {
            WordToken::Absent => Ok(None),
            WordToken::Word(w) if w.is_empty() => {
                Err(cur.err("empty condition word; use '-' for an absent condition"))
            }
            WordToken::Word(w) => Ok(Some(w)),
        }
    }

    fn parse_rule(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let kind = self.kind_token();
        if kind == "scm" || kind == "gc" {
            return Err(cur.err("'rule:' lines require a phrase-structure kind"));
        }
        let decls = self.decls(cur.line())?;
        cur.advance();
        cur.expect_punct(':')?;
        let lhs = collect_plain_word(cur, &decls)?;
        if lhs.is_empty() {
            return Err(cur.err("rule left-hand side must be non-empty"));
        }
        if !lhs.iter().any(|s| decls.nonterminals.contains(s)) {
            return Err(cur.err(format!(
                "rule left-hand side \"{lhs}\" contains no nonterminal"
            )));
        }
        cur.expect_arrow()?;
        let rhs = collect_plain_word(cur, &decls)?;
        cur.expect_end()?;
        self.rules.push(GeneralRule::new(lhs, rhs));
        Ok(())
    }

    fn parse_role(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        cur.advance();
        let index = cur.expect_number("a 1-based rule index")?;
        cur.expect_punct(':')?;
        let token = cur.expect_name("a role")?;
        let role = RuleRole::from_token(&token)
            .ok_or_else(|| cur.err(format!("unknown role {token:?}")))?;
        cur.expect_end()?;
        if index == 0 || index > self.rules.len() {
            return Err(cur.err(format!(
                "role references rule {index}, but only {} rules are declared so far",
                self.rules.len()
            )));
        }
        if !self.roled.insert(index) {
            return Err(cur.err(format!("duplicate role for rule {index}")));
        }
        self.rules[index - 1].role = Some(role);
        Ok(())
    }

    fn parse_node(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        if self.kind_token() != "gc" {
            return Err(cur.err("'node' lines require kind gc"));
        }
        let decls = self.decls(cur.line())?;
        cur.advance();
        let index = cur.expect_number("a node index")?;
        cur.expect_punct(':')?;
        if index != self.nodes.len() + 1 {
            return Err(cur.err(format!(
                "node indices must appear in order; expected node {}",
                self.nodes.len() + 1
            )));
        }
        if matches!(cur.peek(), Some(Tok::Bare(s)) if s == "final") {
            cur.advance();
            cur.expect_end()?;
            self.nodes.push(GcNode {
                index,
                rule: None,
                green: BTreeSet::new(),
                red: BTreeSet::new(),
            });
            return Ok(());
        }
        let rule = self.parse_cf_rule(cur, &decls)?;
        cur.expect_punct(';')?;
        self.expect_keyword(cur, "green")?;
        cur.expect_punct(':')?;
        let green = self.parse_arc_list(cur)?;
        cur.expect_punct(';')?;
        self.expect_keyword(cur, "red")?;
        cur.expect_punct(':')?;
        let red = self.parse_arc_list(cur)?;
        cur.expect_end()?;
        self.nodes.push(GcNode { index, rule: Some(rule), green, red });
        Ok(())
    }

    fn parse_arc_list(&self, cur: &mut Cursor) -> Result<BTreeSet<usize>, ParseError> {
        if matches!(cur.peek(), Some(Tok::Bare(s)) if s == "-") {
            cur.advance();
            return Ok(BTreeSet::new());
        }
        let mut arcs = BTreeSet::new();
        if !cur.at_name() {
            return Err(cur.err(format!(
                "expected node indices or '-', found {}",
                cur.describe_next()
            )));
        }
        while cur.at_name() {
            let target = cur.expect_number("a node index")?;
            if !arcs.insert(target) {
                return Err(cur.err(format!("arc target {target} listed twice")));
            }
        }
        Ok(arcs)
    }

    fn parse_initial(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        if self.kind_token() != "gc" {
            return Err(cur.err("'initial:' lines require kind gc"));
        }
        cur.advance();
        cur.expect_punct(':')?;
        let value = cur.expect_number("a node index")?;
        cur.expect_end()?;
        if self.initial.replace((value, cur.line())).is_some() {
            return Err(cur.err("duplicate 'initial:' declaration"));
        }
        Ok(())
    }

    fn parse_final(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        if self.kind_token() != "gc" {
            return Err(cur.err("'final:' lines require kind gc"));
        }
        cur.advance();
        cur.expect_punct(':')?;
        let value = cur.expect_number("a node index")?;
        cur.expect_end()?;
        if self.final_decl.replace((value, cur.line())).is_some() {
            return Err(cur.err("duplicate 'final:' declaration"));
        }
        Ok(())
    }

    /// A bare `A -> x` line: shorthand for an unconditional single-rule matrix.
    fn parse_shorthand(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        if self.kind_token() != "scm" {
            return Err(cur.err(format!(
                "unrecognized line starting with {}",
                cur.describe_next()
            )));
        }
        let decls = self.decls(cur.line())?;
        let rule = self.parse_cf_rule(cur, &decls)?;
        cur.expect_end()?;
        let label = format!("m{}", self.matrices.len() + 1);
        let matrix = Matrix::new(label, vec![rule], None, None)?;
        self.matrices.push(matrix);
        Ok(())
    }

    fn finish(self) -> Result<Grammar, ParseError> {
        let line = self.last_line.max(1);
        let missing = |what: &str| ParseError::syntax(line, format!("missing '{what}:' declaration"));
        let kind = self.kind.ok_or_else(|| missing("kind"))?;
        let terminals = self.terminals.ok_or_else(|| missing("terminals"))?;
        let nonterminals = self.nonterminals.ok_or_else(|| missing("nonterminals"))?;
        let start = self.start.ok_or_else(|| missing("start"))?;
        match kind.as_str() {
            "scm" => {
                let g = ScmGrammar::new(terminals, nonterminals, start, self.matrices)?;
                Ok(Grammar::Scm(g))
            }
            "gc" => {
                let (initial, initial_line) = self.initial.ok_or_else(|| missing("initial"))?;
                let (final_index, final_line) = self.final_decl.ok_or_else(|| missing("final"))?;
                if initial != 1 {
                    return Err(ParseError::syntax(initial_line, "initial node must be 1"));
                }
                if final_index != self.nodes.len() {
                    return Err(ParseError::syntax(
                        final_line,
                        format!("final node must be the last node, {}", self.nodes.len()),
                    ));
                }
                let g = GcGrammar::new(terminals, nonterminals, start, self.nodes)?;
                Ok(Grammar::Gc(g))
            }
            other => {
                let kind = GeneralKind::from_token(other)
                    .expect("kind token validated at its declaration");
                let g = GeneralGrammar::new(kind, terminals, nonterminals, start, self.rules)?;
                Ok(Grammar::General(g))
            }
        }
    }
}

/// Parses a grammar file.
pub fn parse_grammar(text: &str) -> Result<Grammar, ParseError> {
    let mut parser = FileParser::default();
    for (index, raw) in text.lines().enumerate() {
        let lineno = index + 1;
        parser.last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks = tokenize(line, lineno)?;
        let mut cur = Cursor::new(toks, lineno);
        parser.take_line(&mut cur)?;
    }
    parser.finish()
}
