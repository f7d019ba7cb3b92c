//! Plain-text Gram matrix interchange and minimal-vector dumps.
//!
//! Format: first token is the rank, followed by rank*rank rationals "p/q"
//! (or bare integers) in row-major order, whitespace separated.

use std::str::FromStr;

use thiserror::Error;

use crate::exactq::{Int, QMatrix, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GramIoError {
    #[error("empty input")]
    Empty,
    #[error("invalid rank token {0:?}")]
    BadRank(String),
    #[error("invalid rational token {0:?}")]
    BadEntry(String),
    #[error("expected {expected} entries, found {found}")]
    WrongCount { expected: usize, found: usize },
}

pub fn parse_gram(text: &str) -> Result<QMatrix, GramIoError> {
    let mut tokens = text.split_whitespace();
    let rank_tok = tokens.next().ok_or(GramIoError::Empty)?;
    let rank: usize =
        rank_tok.parse().map_err(|_| GramIoError::BadRank(rank_tok.to_string()))?;
    let entries: Vec<&str> = tokens.collect();
    if entries.len() != rank * rank {
        return Err(GramIoError::WrongCount { expected: rank * rank, found: entries.len() });
    }
    let mut vals = Vec::with_capacity(rank * rank);
    for tok in entries {
        let r = Rat::from_str(tok).map_err(|_| GramIoError::BadEntry(tok.to_string()))?;
        vals.push(r);
    }
    Ok(QMatrix::from_fn(rank, rank, |i, j| vals[i * rank + j].clone()))
}

pub fn write_gram(g: &QMatrix) -> String {
    let mut out = format!("{}\n", g.rows());
    for i in 0..g.rows() {
        let row: Vec<String> = (0..g.cols()).map(|j| g[(i, j)].to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Minimal vectors as rows of integer coordinates.
pub fn write_minimal_vectors(coords: &[Vec<Int>]) -> String {
    let mut out = String::new();
    for v in coords {
        let row: Vec<String> = v.iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
