//! The `.scx` text format for embedded simplicial complexes.
//!
//! ```text
//! # comment
//! dim 2
//! vertices 3
//! 0 0
//! 1 0
//! 0 1
//! simplices 2 1
//! 0 1 2
//! ```
//!
//! Line 1: `dim n`; line 2: `vertices V`; then `V` lines of `n`
//! space-separated decimal coordinates; then one or more blocks
//! `simplices m count` followed by `count` lines of `m+1` vertex indices
//! (0-based, any order — orientation is canonicalized to ascending).
//! Faces are implied. Lines starting with `#` and blank lines are skipped.

use std::fmt;

use curr_core::{BuildError, SimplicialComplex};

#[derive(Debug)]
pub struct ScxError {
    /// 1-based line number for syntax errors; `None` for semantic errors
    /// raised while assembling the complex.
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ScxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ScxError {}

impl From<BuildError> for ScxError {
    fn from(e: BuildError) -> Self {
        ScxError {
            line: None,
            message: e.to_string(),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ScxError {
    ScxError {
        line: Some(line),
        message: message.into(),
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
        }
    }

    /// Next non-blank, non-comment line as `(1-based number, tokens)`.
    fn next_tokens(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (idx, raw) in self.inner.by_ref() {
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((idx + 1, trimmed.split_whitespace().collect()));
        }
        None
    }
}

fn parse_count(token: &str, line: usize, what: &str) -> Result<usize, ScxError> {
    token
        .parse::<usize>()
        .map_err(|_| syntax(line, format!("expected {what}, got `{token}`")))
}

pub fn parse_scx(text: &str) -> Result<SimplicialComplex, ScxError> {
    let mut lines = Lines::new(text);

    let (line, tokens) = lines
        .next_tokens()
        .ok_or(syntax(1, "empty file; expected `dim n`"))?;
    if tokens.len() != 2 || tokens[0] != "dim" {
        return Err(syntax(line, "expected header `dim n`"));
    }
    let ambient_dim = parse_count(tokens[1], line, "ambient dimension")?;
    if ambient_dim == 0 {
        return Err(syntax(line, "ambient dimension must be positive"));
    }

    let (line, tokens) = lines
        .next_tokens()
        .ok_or(syntax(line, "expected `vertices V`"))?;
    if tokens.len() != 2 || tokens[0] != "vertices" {
        return Err(syntax(line, "expected header `vertices V`"));
    }
    let vertex_count = parse_count(tokens[1], line, "vertex count")?;

    let mut coords = Vec::with_capacity(vertex_count * ambient_dim);
    let mut last_line = line;
    for v in 0..vertex_count {
        let (line, tokens) = lines
            .next_tokens()
            .ok_or(syntax(last_line, format!("expected coordinates for vertex {v}")))?;
        last_line = line;
        if tokens.len() != ambient_dim {
            return Err(syntax(
                line,
                format!(
                    "vertex {v}: expected {ambient_dim} coordinates, got {}",
                    tokens.len()
                ),
            ));
        }
        for token in tokens {
            let value: f64 = token
                .parse()
                .map_err(|_| syntax(line, format!("bad coordinate `{token}`")))?;
            if !value.is_finite() {
                return Err(syntax(line, format!("non-finite coordinate `{token}`")));
            }
            coords.push(value);
        }
    }

    let mut simplices: Vec<Vec<usize>> = Vec::new();
    while let Some((line, tokens)) = lines.next_tokens() {
        if tokens.len() != 3 || tokens[0] != "simplices" {
            return Err(syntax(line, "expected block header `simplices m count`"));
        }
        let m = parse_count(tokens[1], line, "simplex dimension")?;
        let count = parse_count(tokens[2], line, "simplex count")?;
        let mut last_line = line;
        for s in 0..count {
            let (line, tokens) = lines.next_tokens().ok_or(syntax(
                last_line,
                format!("expected {} more simplex line(s)", count - s),
            ))?;
            last_line = line;
            if tokens.len() != m + 1 {
                return Err(syntax(
                    line,
                    format!("expected {} vertex indices, got {}", m + 1, tokens.len()),
                ));
            }
            let mut tuple = Vec::with_capacity(m + 1);
            for token in tokens {
                tuple.push(
                    token
                        .parse::<usize>()
                        .map_err(|_| syntax(line, format!("bad vertex index `{token}`")))?,
                );
            }
            simplices.push(tuple);
        }
    }

    Ok(SimplicialComplex::build(ambient_dim, coords, &simplices)?)
}
