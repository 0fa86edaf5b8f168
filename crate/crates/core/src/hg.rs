//! The `.hg` text format.
//!
//! ```text
//! # comment
//! n m
//! a b [c]      (m lines, 0-based vertex indices)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::hypergraph::{HypergraphError, LinearHypergraph, VertexId};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error(transparent)]
    Invalid(#[from] HypergraphError),
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "E_PARSE",
            ParseError::EdgeCount { .. } => "E_EDGE_COUNT",
            ParseError::MissingHeader => "E_MISSING_HEADER",
            ParseError::Invalid(e) => e.code(),
        }
    }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<u64>, ParseError> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>().map_err(|_| ParseError::Syntax {
                line,
                message: format!("expected a non-negative integer, got {tok:?}"),
            })
        })
        .collect()
}

/// Parses and validates an `.hg` document.
pub fn parse(text: &str) -> Result<LinearHypergraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let header = parse_numbers(hline, header)?;
    let [n, m] = header[..] else {
        return Err(ParseError::Syntax { line: hline, message: "header must be `n m`".into() });
    };
    let (n, m) = (n as usize, m as usize);

    let mut raw: Vec<Vec<VertexId>> = Vec::with_capacity(m);
    for (line, text) in lines {
        let nums = parse_numbers(line, text)?;
        let mut edge = Vec::with_capacity(nums.len());
        for x in nums {
            let v = VertexId::try_from(x).map_err(|_| HypergraphError::VertexOutOfRange {
                vertex: VertexId::MAX,
                n,
            })?;
            edge.push(v);
        }
        raw.push(edge);
    }
    if raw.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: raw.len() });
    }
    Ok(LinearHypergraph::new(n, &raw)?)
}

/// Serializes in canonical form: header, then edges in sorted order.
pub fn to_string(h: &LinearHypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", h.n(), h.m()).unwrap();
    for e in h.edges() {
        let v = e.vertices();
        let line: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let h = parse("# one triple\n3 1\n\n2 0 1\n").unwrap();
        assert_eq!(h.m(), 1);
        assert_eq!(to_string(&h), "3 1\n0 1 2\n");
    }

    #[test]
    fn rejects_violations() {
        assert!(matches!(parse("4 2\n0 1 2\n0 1 3\n"), Err(ParseError::Invalid(HypergraphError::LinearityViolation { .. }))));
        assert!(matches!(parse("4 2\n0 1 2\n"), Err(ParseError::EdgeCount { declared: 2, found: 1 })));
        assert!(matches!(parse(""), Err(ParseError::MissingHeader)));
        assert!(matches!(parse("3 1\n0 x\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse("3\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert_eq!(parse("3 1\n0 1 2 3\n").unwrap_err().code(), "E_EDGE_SIZE");
        assert_eq!(parse("3 1\n0 9\n").unwrap_err().code(), "E_VERTEX_RANGE");
    }

    #[test]
    fn empty_hypergraphs_are_legal() {
        assert_eq!(parse("0 0\n").unwrap().n(), 0);
        assert_eq!(parse("5 0").unwrap().m(), 0);
    }
}
