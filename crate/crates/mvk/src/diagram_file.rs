//! Diagram files.
//!
//! ```text
//! # 2_1
//! types: α
//! component: Vα-3 O-2 U-1 Vα+3 U-2 O-1
//! ```
//!
//! Symbols are `O±<id>`, `U±<id>` and `V<type>±<id>`. An empty
//! `component:` line is a crossingless loop.

use crate::lex::{self, ParseError};
use mvk_core::diagram::{Diagram, DiagramError, Symbol};

/// Why a diagram file was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramFileError {
    /// Syntax error.
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    /// The code violates a diagram invariant.
    #[error("invalid diagram: {0}")]
    Invalid(#[from] DiagramError),
}

/// Parses and validates a diagram.
pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramFileError> {
    let all = lex::lines(text);
    let mut content = all.iter().filter(|l| !l.is_blank());
    let head = content.next().ok_or_else(|| ParseError::at(1, 1, "empty input; expected `types:`"))?;
    if head.tokens[0].text != "types:" {
        return Err(ParseError::at(head.number, head.tokens[0].col, "expected `types:`").into());
    }
    let types: Vec<String> = head.tokens[1..].iter().map(|t| t.text.to_string()).collect();
    let mut components = Vec::new();
    for l in content {
        if l.tokens[0].text != "component:" {
            return Err(ParseError::at(l.number, l.tokens[0].col, "expected `component:`").into());
        }
        let mut comp = Vec::new();
        for tok in &l.tokens[1..] {
            let s: Symbol = tok.text.parse().map_err(|e| ParseError::at(l.number, tok.col, format_args!("{e} in {:?}", tok.text)))?;
            comp.push(s);
        }
        components.push(comp);
    }
    Ok(Diagram::new(types, components)?)
}

/// Canonical serialization.
pub fn write_diagram(d: &Diagram) -> String {
    d.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reports() {
        let d = parse_diagram("# x\ntypes: a\ncomponent: Va+1 O+2 Va-1 U+2\n").unwrap();
        assert_eq!(d.classical_count(), 1);
        assert_eq!(parse_diagram(&d.to_string()).unwrap(), d);
        let e = parse_diagram("types:\ncomponent: O+1 X+1\n").unwrap_err();
        assert!(matches!(e, DiagramFileError::Parse(ParseError { line: 2, col: 16, .. })), "{e:?}");
        assert_eq!(parse_diagram("types:\n"), Err(DiagramFileError::Invalid(DiagramError::NoComponents)));
        let e = parse_diagram("types:\ncomponent: O+1 O+1\n").unwrap_err();
        assert!(matches!(e, DiagramFileError::Invalid(_)));
        assert!(matches!(parse_diagram("component:\n"), Err(DiagramFileError::Parse(ParseError { line: 1, col: 1, .. }))));
    }
}
