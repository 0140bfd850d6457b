//! Text form of algebras: comma separated entries, optionally in
//! parentheses, with `|` between the linear components of a Nakayama cycle.
//! For example `3,2,2`, `(4,3,3,3)` or `(2,2,1)|(2,3,2,2,1)`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};

fn parse_entries(part: &str) -> Result<Vec<u32>> {
    let mut body = part.trim();
    if let Some(inner) = body.strip_prefix('(') {
        body = inner
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {part:?}")))?;
    } else if body.ends_with(')') {
        return Err(Error::Parse(format!("unbalanced parentheses in {part:?}")));
    }
    let body = body.trim();
    if body.is_empty() {
        return Err(Error::EmptyInput);
    }
    body.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u32>()
                .map_err(|_| Error::Parse(format!("{tok:?} is not a non-negative 32-bit integer")))
        })
        .collect()
}

/// Parses and validates an algebra.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    if text.contains('|') {
        let comps = text
            .split('|')
            .map(parse_entries)
            .collect::<Result<Vec<_>>>()?;
        Algebra::from_components(&comps)
    } else {
        Algebra::from_series(parse_entries(text)?)
    }
}

/// Comma separated entries in parentheses.
pub fn format_series(series: &[u32]) -> String {
    let body: Vec<String> = series.iter().map(|c| c.to_string()).collect();
    format!("({})", body.join(","))
}

/// Formats in stored vertex order, so that parsing gives back the same
/// algebra. Several linear components are joined with `|`.
pub fn format_algebra(a: &Algebra) -> String {
    let comps = a.components();
    if comps.len() > 1 {
        comps
            .iter()
            .map(|c| format_series(c))
            .collect::<Vec<_>>()
            .join("|")
    } else {
        format_series(a.series())
    }
}

impl std::fmt::Display for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_algebra(self))
    }
}
