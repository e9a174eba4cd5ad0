//! Derivation trace files: a start form plus one matrix application per line.

use std::fmt::Write;

use crate::error::ParseError;
use crate::parse::{tokenize, Cursor};
use crate::symbol::Word;

/// One matrix application: the label and, per rule, the 1-based occurrence
/// index of the replaced left-hand side in the intermediate form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub matrix_label: String,
    pub positions: Vec<usize>,
}

/// A replayable derivation: start form and matrix applications in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub start: Word,
    pub steps: Vec<TraceStep>,
}

/// Parses a trace file: a `start: <word>` line, then `<label> @ <i…>` lines.
pub fn parse_trace(text: &str) -> Result<Trace, ParseError> {
    let mut start: Option<Word> = None;
    let mut steps = Vec::new();
    let mut last_line = 1;
    for (index, raw) in text.lines().enumerate() {
        let lineno = index + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks = tokenize(line, lineno)?;
        let mut cur = Cursor::new(toks, lineno);
        if start.is_none() {
            start = Some(parse_start_line(&mut cur)?);
        } else {
            steps.push(parse_step_line(&mut cur)?);
        }
    }
    let start = start
        .ok_or_else(|| ParseError::syntax(last_line, "missing 'start:' line"))?;
    Ok(Trace { start, steps })
}

fn parse_start_line(cur: &mut Cursor) -> Result<Word, ParseError> {
    match cur.take_bare() {
        Some(word) if word == "start" => {}
        _ => return Err(cur.err("trace files begin with a 'start:' line")),
    }
    cur.expect_punct(':')?;
    let mut names = Vec::new();
    while let Some(name) = cur.take_name() {
        names.push(name);
    }
    cur.expect_end()?;
    word_from_names(cur, names)
}

fn parse_step_line(cur: &mut Cursor) -> Result<TraceStep, ParseError> {
    let label = cur
        .take_bare()
        .ok_or_else(|| cur.err("expected a matrix label"))?;
    match cur.take_bare() {
        Some(at) if at == "@" => {}
        _ => return Err(cur.err("expected '@' after the matrix label")),
    }
    let mut positions = Vec::new();
    while !cur.at_end() {
        let index = cur.expect_number("a 1-based occurrence index")?;
        if index == 0 {
            return Err(cur.err("occurrence indices are 1-based"));
        }
        positions.push(index);
    }
    if positions.is_empty() {
        return Err(cur.err("expected at least one occurrence index"));
    }
    Ok(TraceStep { matrix_label: label, positions })
}

fn word_from_names(cur: &Cursor, names: Vec<String>) -> Result<Word, ParseError> {
    if names.is_empty() {
        return Err(cur.err("expected a word"));
    }
    if names.len() == 1 && names[0] == "eps" {
        return Ok(Word::empty());
    }
    let mut symbols = Vec::new();
    for name in names {
        if name == "eps" {
            return Err(cur.err("'eps' must stand alone to denote the empty word"));
        }
        symbols.push(crate::symbol::Symbol::new(name));
    }
    Ok(Word::new(symbols))
}

/// Serializes a trace in the format `parse_trace` reads.
pub fn serialize_trace(trace: &Trace) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "start: {}", trace.start);
    for step in &trace.steps {
        let _ = write!(out, "{} @", step.matrix_label);
        for position in &step.positions {
            let _ = write!(out, " {position}");
        }
        let _ = writeln!(out);
    }
    out
}
