//! Cocycle files: a group table, optional element names, then `φ`.
//!
//! ```text
//! group 2
//! 0 1
//! 1 0
//! labels e g
//! phi
//! 0 1 1
//! 0 0 1
//! 1 0 0
//! ```
//!
//! `phi` has one row per quandle element; entries index the group.

use crate::lex::{self, ParseError};
use mvk_core::invariants::{CocycleTable, InvariantError};
use mvk_core::MultiplicationTable;
use std::fmt::Write;

/// Why a cocycle file was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CocycleFileError {
    /// Syntax error.
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    /// Not a group, or `φ` has the wrong shape.
    #[error("invalid cocycle: {0}")]
    Invalid(#[from] InvariantError),
}

/// Parses a cocycle file.
pub fn parse_cocycle(text: &str) -> Result<CocycleTable, CocycleFileError> {
    let all = lex::lines(text);
    let eof = lex::eof(text);
    let content: Vec<_> = all.iter().filter(|l| !l.is_blank()).collect();
    let mut it = content.iter().copied();
    let head = it.next().ok_or_else(|| ParseError::at(1, 1, "empty input; expected `group <n>`"))?;
    if head.tokens[0].text != "group" || head.tokens.len() != 2 {
        return Err(ParseError::at(head.number, head.tokens[0].col, "expected `group <n>`").into());
    }
    let g = lex::number(&head.tokens[1], head.number)?;
    if g == 0 {
        return Err(ParseError::at(head.number, head.tokens[1].col, "group order must be positive").into());
    }
    let rows = lex::matrix(&mut it, g, g, g, eof, "group")?;
    let mut group = MultiplicationTable::new(rows).expect("shape checked while parsing");
    let mut next = it.next();
    if let Some(l) = next.filter(|l| l.tokens[0].text == "labels") {
        let names: Vec<String> = l.tokens[1..].iter().map(|t| t.text.to_string()).collect();
        if names.len() != g {
            return Err(ParseError::at(l.number, l.end_col(), format_args!("expected {g} labels, found {}", names.len())).into());
        }
        group = group.with_labels(names).expect("label count checked");
        next = it.next();
    }
    let phi_line = next.ok_or_else(|| ParseError::at(eof.0, eof.1, "expected `phi`"))?;
    if phi_line.tokens[0].text != "phi" || phi_line.tokens.len() != 1 {
        return Err(ParseError::at(phi_line.number, phi_line.tokens[0].col, "expected `phi`").into());
    }
    let first = it.clone().next().ok_or_else(|| ParseError::at(eof.0, eof.1, "expected phi rows"))?;
    let q = first.tokens.len();
    let phi = lex::matrix(&mut it, q, q, g, eof, "phi")?;
    if let Some(l) = it.next() {
        return Err(ParseError::at(l.number, l.tokens[0].col, "unexpected content after phi").into());
    }
    Ok(CocycleTable::new(group, phi)?)
}

/// Canonical serialization.
pub fn write_cocycle(c: &CocycleTable) -> String {
    let mut s = String::new();
    let g = c.group();
    writeln!(s, "group {}", g.order()).unwrap();
    for x in 0..g.order() {
        writeln!(s, "{}", join(g.row(x))).unwrap();
    }
    if let Some(l) = g.labels() {
        writeln!(s, "labels {}", l.join(" ")).unwrap();
    }
    s.push_str("phi\n");
    for row in c.phi() {
        writeln!(s, "{}", join(row)).unwrap();
    }
    s
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
