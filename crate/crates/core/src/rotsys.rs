//! The `ROTSYS 1` text format.
//!
//! ```text
//! ROTSYS 1
//! <n> <m>
//! u: v1 v2- v3 ...
//! ```
//!
//! One line per vertex lists its neighbors in rotation order; a trailing `-`
//! marks a dart with signature -1 (the reverse dart must carry it too).
//! `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use crate::embedding::{Dart, GraphError, RotationGraph, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: vertex {from} references nonexistent vertex {to}")]
    Dangling { line: usize, from: usize, to: usize },
    #[error("invalid embedding: {0}")]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Non-empty content lines with comments stripped, paired with 1-based numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

pub fn parse_rotation_graph(text: &str) -> Result<RotationGraph, ParseError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["ROTSYS", "1"] {
        return Err(syntax(ln, format!("expected header `ROTSYS 1`, found `{header}`")));
    }
    let (ln, counts) = lines.next().ok_or_else(|| syntax(ln + 1, "missing `<n> <m>` line"))?;
    let nums: Vec<&str> = counts.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(syntax(ln, "expected `<n> <m>`"));
    }
    let n: usize = nums[0].parse().map_err(|_| syntax(ln, format!("bad vertex count `{}`", nums[0])))?;
    let m: usize = nums[1].parse().map_err(|_| syntax(ln, format!("bad edge count `{}`", nums[1])))?;
    let counts_line = ln;

    let mut rotations: Vec<Option<Vec<Dart>>> = vec![None; n];
    for (ln, body) in lines {
        let (head, rest) = body
            .split_once(':')
            .ok_or_else(|| syntax(ln, "expected `u: v1 v2 ...`"))?;
        let u: usize = head
            .trim()
            .parse()
            .map_err(|_| syntax(ln, format!("bad vertex id `{}`", head.trim())))?;
        if u >= n {
            return Err(syntax(ln, format!("vertex {u} out of range for n = {n}")));
        }
        if rotations[u].is_some() {
            return Err(syntax(ln, format!("vertex {u} listed twice")));
        }
        let mut rot = Vec::new();
        for tok in rest.split_whitespace() {
            let (id, sign) = match tok.strip_suffix('-') {
                Some(id) => (id, Sign::Neg),
                None => (tok, Sign::Pos),
            };
            let to: usize = id.parse().map_err(|_| syntax(ln, format!("bad neighbor `{tok}`")))?;
            if to >= n {
                return Err(ParseError::Dangling { line: ln, from: u, to });
            }
            rot.push(Dart { to, sign });
        }
        rotations[u] = Some(rot);
    }
    let rotations = rotations
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| syntax(counts_line, format!("no rotation line for vertex {v}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let g = RotationGraph::from_rotations(rotations)?;
    if g.edge_count() != m {
        return Err(syntax(
            counts_line,
            format!("header declares {m} edges but rotations describe {}", g.edge_count()),
        ));
    }
    Ok(g)
}

pub fn write_rotation_graph(g: &RotationGraph) -> String {
    let mut out = String::new();
    writeln!(out, "ROTSYS 1").unwrap();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for v in 0..g.vertex_count() {
        write!(out, "{v}:").unwrap();
        for d in g.rotation(v) {
            match d.sign {
                Sign::Pos => write!(out, " {}", d.to).unwrap(),
                Sign::Neg => write!(out, " {}-", d.to).unwrap(),
            }
        }
        out.push('\n');
    }
    out
}
