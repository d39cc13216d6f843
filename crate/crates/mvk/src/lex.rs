//! Line tokenizer shared by the text formats.

use std::fmt;

/// Where and why a text input was rejected. Lines and columns are 1-based;
/// columns count characters.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    /// Line number.
    pub line: usize,
    /// Column number.
    pub col: usize,
    /// Description.
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(line: usize, col: usize, message: impl fmt::Display) -> Self {
        Self { line, col, message: message.to_string() }
    }
}

/// A token with its column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub col: usize,
}

/// One input line split into tokens, comment stripped.
#[derive(Debug, Clone)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub raw: &'a str,
    pub tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    /// Column just past the last character before any comment.
    pub fn end_col(&self) -> usize {
        let body = self.raw.split('#').next().unwrap_or("");
        body.trim_end().chars().count() + 1
    }

    pub fn is_blank(&self) -> bool {
        self.tokens.is_empty()
    }
}

pub(crate) fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start: Option<(usize, usize)> = None;
            for (col, (byte, ch)) in body.char_indices().enumerate() {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some((byte, col + 1)),
                    (true, Some((b, c))) => {
                        tokens.push(Token { text: &body[b..byte], col: c });
                        start = None;
                    }
                    _ => {}
                }
            }
            if let Some((b, c)) = start {
                tokens.push(Token { text: &body[b..], col: c });
            }
            Line { number: i + 1, raw, tokens }
        })
        .collect()
}

pub(crate) fn number(tok: &Token<'_>, line: usize) -> Result<usize, ParseError> {
    tok.text.parse().map_err(|_| ParseError::at(line, tok.col, format_args!("expected a non-negative integer, found {:?}", tok.text)))
}

/// Reads `n` rows of `n` integers below `bound` from content lines.
pub(crate) fn matrix<'a>(
    it: &mut impl Iterator<Item = &'a Line<'a>>,
    rows: usize,
    cols: usize,
    bound: usize,
    eof: (usize, usize),
    what: &str,
) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut out = Vec::with_capacity(rows);
    for r in 0..rows {
        let line = it.next().ok_or_else(|| ParseError::at(eof.0, eof.1, format_args!("expected {rows} {what} rows, found {r}")))?;
        if line.tokens.len() != cols {
            let col = line.tokens.get(cols).map_or(line.end_col(), |t| t.col);
            return Err(ParseError::at(
                line.number,
                col,
                format_args!("expected {cols} entries in {what} row {r}, found {}", line.tokens.len()),
            ));
        }
        let mut row = Vec::with_capacity(cols);
        for tok in &line.tokens {
            let v = number(tok, line.number)?;
            if v >= bound {
                return Err(ParseError::at(line.number, tok.col, format_args!("entry {v} outside 0..{bound}")));
            }
            row.push(v);
        }
        out.push(row);
    }
    Ok(out)
}

/// Line and column just past the end of the input.
pub(crate) fn eof(text: &str) -> (usize, usize) {
    (text.lines().count() + 1, 1)
}
