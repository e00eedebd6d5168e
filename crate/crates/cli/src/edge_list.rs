//! Plain edge-list files.
//!
//! ```text
//! # comments start with '#'
//! 4 4
//! 0 1
//! 1 2
//! 2 3
//! 3 0
//! ```
//!
//! The header gives the vertex count `n` and the number of edge lines `m`;
//! vertices are 0-based.

use std::fmt::Write as _;

use strong_alliance::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeListError {
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("header announces {expected} edges, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed file plus the duplicate edges dropped in lenient mode.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

/// Parses an edge list. Duplicate edges are an error when `strict`,
/// otherwise they are dropped and reported in [`Parsed::warnings`].
pub fn parse(text: &str, strict: bool) -> Result<Parsed, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let [n, m] = pair(line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut warnings = Vec::new();
    for (line, text) in lines {
        let [u, v] = pair(line, text)?;
        for x in [u, v] {
            if x >= n {
                return Err(EdgeListError::Malformed {
                    line,
                    reason: format!("vertex {x} out of range for n = {n}"),
                });
            }
        }
        if u == v {
            return Err(EdgeListError::Malformed {
                line,
                reason: format!("self-loop at {u}"),
            });
        }
        let key = (u.min(v), u.max(v));
        edges.push(key);
        if !seen.insert(key) {
            if strict {
                return Err(EdgeListError::Duplicate { line, u, v });
            }
            warnings.push(format!("line {line}: duplicate edge {u} {v} ignored"));
        }
    }
    if edges.len() != m {
        return Err(EdgeListError::CountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Parsed {
        graph: Graph::new(n, &edges)?,
        warnings,
    })
}

fn pair(line: usize, text: &str) -> Result<[usize; 2], EdgeListError> {
    let malformed = |reason: &str| EdgeListError::Malformed {
        line,
        reason: reason.into(),
    };
    let mut fields = text.split_whitespace();
    let mut next = || {
        fields
            .next()
            .ok_or_else(|| malformed("expected two integers"))?
            .parse::<usize>()
            .map_err(|_| malformed("not a non-negative integer"))
    };
    let out = [next()?, next()?];
    if fields.next().is_some() {
        return Err(malformed("trailing fields"));
    }
    Ok(out)
}

/// Writes `g` in the same format, edges sorted.
pub fn serialize(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
