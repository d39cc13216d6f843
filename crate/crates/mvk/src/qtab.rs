//! Quandle table files.
//!
//! ```text
//! # comment
//! order 3
//! 0 2 1
//! 2 1 0
//! 1 0 2
//! labels a b c
//! ```
//!
//! Row `x` lists `x*0 .. x*(n-1)`. Whole-line comments and blank lines are
//! kept in place; trailing comments on content lines are dropped.

use crate::lex::{self, ParseError};
use mvk_core::MultiplicationTable;
use std::fmt;

/// A parsed table with its comment lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QtabDocument {
    /// The table, labels attached if a `labels` line was present.
    pub table: MultiplicationTable,
    /// `(slot, line)`: comment or blank lines placed before content line
    /// `slot` (0 = `order`, 1..=n = rows, n+1 = `labels`, later = end).
    pub trivia: Vec<(usize, String)>,
}

impl QtabDocument {
    /// A document without comments.
    pub fn new(table: MultiplicationTable) -> Self {
        Self { table, trivia: Vec::new() }
    }

    /// A document with leading comment lines (written with a `# ` prefix).
    pub fn with_header(table: MultiplicationTable, header: &[&str]) -> Self {
        Self { table, trivia: header.iter().map(|h| (0, format!("# {h}"))).collect() }
    }
}

/// Parses the table format.
pub fn parse_qtab(text: &str) -> Result<QtabDocument, ParseError> {
    let all = lex::lines(text);
    let eof = lex::eof(text);
    let mut trivia = Vec::new();
    let mut content = Vec::new();
    for l in &all {
        if l.is_blank() {
            trivia.push((content.len(), l.raw.to_string()));
        } else {
            content.push(l);
        }
    }
    let mut it = content.iter().copied();
    let head = it.next().ok_or_else(|| ParseError::at(1, 1, "empty input; expected `order <n>`"))?;
    if head.tokens[0].text != "order" {
        return Err(ParseError::at(head.number, head.tokens[0].col, "expected `order <n>`"));
    }
    let n_tok = head.tokens.get(1).ok_or_else(|| ParseError::at(head.number, head.end_col(), "missing order"))?;
    let n = lex::number(n_tok, head.number)?;
    if n == 0 {
        return Err(ParseError::at(head.number, n_tok.col, "order must be positive"));
    }
    if let Some(t) = head.tokens.get(2) {
        return Err(ParseError::at(head.number, t.col, "unexpected token after order"));
    }
    let rows = lex::matrix(&mut it, n, n, n, eof, "table")?;
    let mut table = MultiplicationTable::new(rows).expect("shape checked while parsing");
    if let Some(l) = it.next() {
        if l.tokens[0].text != "labels" {
            return Err(ParseError::at(l.number, l.tokens[0].col, "expected `labels` or end of input"));
        }
        let names: Vec<String> = l.tokens[1..].iter().map(|t| t.text.to_string()).collect();
        if names.len() != n {
            let col = l.tokens.get(n + 1).map_or(l.end_col(), |t| t.col);
            return Err(ParseError::at(l.number, col, format_args!("expected {n} labels, found {}", names.len())));
        }
        table = table.with_labels(names).expect("label count checked");
    }
    if let Some(l) = it.next() {
        return Err(ParseError::at(l.number, l.tokens[0].col, "unexpected content after the table"));
    }
    Ok(QtabDocument { table, trivia })
}

/// Parses and returns only the table.
pub fn parse_quandle_table(text: &str) -> Result<MultiplicationTable, ParseError> {
    parse_qtab(text).map(|d| d.table)
}

/// Canonical serialization of a bare table.
pub fn write_quandle_table(t: &MultiplicationTable) -> String {
    QtabDocument::new(t.clone()).to_string()
}

impl fmt::Display for QtabDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.table;
        let mut content: Vec<String> = vec![format!("order {}", t.order())];
        for x in 0..t.order() {
            content.push(t.row(x).iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
        }
        if let Some(l) = t.labels() {
            content.push(format!("labels {}", l.join(" ")));
        }
        let mut trivia = self.trivia.iter().peekable();
        for (slot, line) in content.iter().enumerate() {
            while let Some((_, c)) = trivia.next_if(|(s, _)| *s <= slot) {
                writeln!(f, "{c}")?;
            }
            writeln!(f, "{line}")?;
        }
        for (_, c) in trivia {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
