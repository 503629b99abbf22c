//! The `DECOMP 1` text format.
//!
//! ```text
//! DECOMP 1
//! <d> <h>
//! H: u-v u-v ...
//! D: u>v u>v ...
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::OrientedDecomposition;
use crate::rotsys::content_lines;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct DecompParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> DecompParseError {
    DecompParseError { line, message: message.into() }
}

fn pair(line: usize, tok: &str, sep: char) -> Result<(usize, usize), DecompParseError> {
    let (a, b) = tok
        .split_once(sep)
        .ok_or_else(|| err(line, format!("expected `u{sep}v`, found `{tok}`")))?;
    let parse = |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("bad vertex id in `{tok}`")));
    Ok((parse(a)?, parse(b)?))
}

pub fn parse_decomposition(text: &str) -> Result<OrientedDecomposition, DecompParseError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["DECOMP", "1"] {
        return Err(err(ln, format!("expected header `DECOMP 1`, found `{header}`")));
    }
    let (ln, params) = lines.next().ok_or_else(|| err(ln + 1, "missing `<d> <h>` line"))?;
    let nums: Vec<&str> = params.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(err(ln, "expected `<d> <h>`"));
    }
    let d = nums[0].parse().map_err(|_| err(ln, format!("bad d `{}`", nums[0])))?;
    let h = nums[1].parse().map_err(|_| err(ln, format!("bad h `{}`", nums[1])))?;
    let mut dec = OrientedDecomposition::new(d, h);
    let (mut seen_h, mut seen_d) = (false, false);
    for (ln, body) in lines {
        if let Some(rest) = body.strip_prefix("H:") {
            if std::mem::replace(&mut seen_h, true) {
                return Err(err(ln, "duplicate `H:` line"));
            }
            for tok in rest.split_whitespace() {
                let (u, v) = pair(ln, tok, '-')?;
                dec.add_h_edge(u, v);
            }
        } else if let Some(rest) = body.strip_prefix("D:") {
            if std::mem::replace(&mut seen_d, true) {
                return Err(err(ln, "duplicate `D:` line"));
            }
            for tok in rest.split_whitespace() {
                let (u, v) = pair(ln, tok, '>')?;
                dec.add_arc(u, v);
            }
        } else {
            return Err(err(ln, format!("expected `H:` or `D:` line, found `{body}`")));
        }
    }
    if !seen_h || !seen_d {
        return Err(err(ln, "both `H:` and `D:` lines are required"));
    }
    Ok(dec)
}

pub fn write_decomposition(dec: &OrientedDecomposition) -> String {
    let mut out = format!("DECOMP 1\n{} {}\nH:", dec.d, dec.h);
    for (u, v) in &dec.h_edges {
        write!(out, " {u}-{v}").unwrap();
    }
    out.push_str("\nD:");
    for (u, v) in &dec.d_arcs {
        write!(out, " {u}>{v}").unwrap();
    }
    out.push('\n');
    out
}
