//! Graph constructor expressions: identifiers with integer or nested graph
//! arguments, e.g. `johnson(7,2)` or `cartesian(complete(3), cycle(4))`.

use eutaxy::graphs::{self, Graph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DslError {
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("unknown constructor {name:?} at position {pos}")]
    UnknownConstructor { pos: usize, name: String },
    #[error("{name} expects {expected} at position {pos}")]
    Arity { pos: usize, name: String, expected: &'static str },
    #[error("constructor failed: {0}")]
    Graph(#[from] graphs::GraphError),
}

#[derive(Debug, Clone, PartialEq)]
enum Arg {
    Int(usize),
    Graph(Graph),
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn err(&self, message: impl Into<String>) -> DslError {
        DslError::Parse { pos: self.pos, message: message.into() }
    }

    fn expect(&mut self, c: char) -> Result<(), DslError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("expected {c:?}")))
        }
    }

    fn ident(&mut self) -> Result<(usize, String), DslError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an identifier"));
        }
        Ok((start, self.text[start..self.pos].to_string()))
    }

    fn integer(&mut self) -> Result<usize, DslError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|e| self.err(format!("bad integer: {e}")))
    }

    fn arg(&mut self) -> Result<Arg, DslError> {
        self.skip_ws();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            Ok(Arg::Int(self.integer()?))
        } else {
            Ok(Arg::Graph(self.expr()?))
        }
    }

    fn expr(&mut self) -> Result<Graph, DslError> {
        let (ident_pos, name) = self.ident()?;
        self.skip_ws();
        let mut args = Vec::new();
        if self.peek() == Some('(') {
            self.expect('(')?;
            loop {
                args.push(self.arg()?);
                self.skip_ws();
                match self.peek() {
                    Some(',') => self.expect(',')?,
                    Some(')') => {
                        self.expect(')')?;
                        break;
                    }
                    _ => return Err(self.err("expected ',' or ')'")),
                }
            }
        }
        build(ident_pos, &name, args)
    }
}

fn build(pos: usize, name: &str, args: Vec<Arg>) -> Result<Graph, DslError> {
    let arity = |expected: &'static str| DslError::Arity { pos, name: name.to_string(), expected };
    let one_int = |args: &[Arg]| match args {
        [Arg::Int(n)] => Some(*n),
        _ => None,
    };
    let two_ints = |args: &[Arg]| match args {
        [Arg::Int(a), Arg::Int(b)] => Some((*a, *b)),
        _ => None,
    };
    match name {
        "empty" => Ok(graphs::empty_graph(one_int(&args).ok_or(arity("one integer"))?)?),
        "complete" => Ok(graphs::complete(one_int(&args).ok_or(arity("one integer"))?)?),
        "cycle" => Ok(graphs::cycle(one_int(&args).ok_or(arity("one integer"))?)?),
        "folded_cube" => Ok(graphs::folded_cube(one_int(&args).ok_or(arity("one integer"))?)?),
        "hamming" => {
            let (d, q) = two_ints(&args).ok_or(arity("two integers"))?;
            Ok(graphs::hamming(d, q)?)
        }
        "kneser" => {
            let (n, k) = two_ints(&args).ok_or(arity("two integers"))?;
            Ok(graphs::kneser(n, k)?)
        }
        "johnson" => {
            let (n, k) = two_ints(&args).ok_or(arity("two integers"))?;
            Ok(graphs::johnson(n, k)?)
        }
        "petersen" => args.is_empty().then(graphs::petersen).ok_or(arity("no arguments")),
        "clebsch" => args.is_empty().then(graphs::clebsch).ok_or(arity("no arguments")),
        "shrikhande" => args.is_empty().then(graphs::shrikhande).ok_or(arity("no arguments")),
        "gosset" => args.is_empty().then(graphs::gosset).ok_or(arity("no arguments")),
        "schlafli" => args.is_empty().then(graphs::schlafli).ok_or(arity("no arguments")),
        "complement" => match args.as_slice() {
            [Arg::Graph(g)] => Ok(graphs::complement(g)),
            _ => Err(arity("one graph")),
        },
        "line_graph" => match args.as_slice() {
            [Arg::Graph(g)] => Ok(graphs::line_graph(g)?),
            _ => Err(arity("one graph")),
        },
        "disjoint_union" => match args.as_slice() {
            [Arg::Graph(g), Arg::Int(k)] => Ok(graphs::disjoint_union(g, *k)?),
            _ => Err(arity("a graph and a copy count")),
        },
        "cartesian" | "direct" | "strong" | "lexicographic" => match args.as_slice() {
            [Arg::Graph(a), Arg::Graph(b)] => Ok(match name {
                "cartesian" => graphs::cartesian(a, b),
                "direct" => graphs::direct(a, b),
                "strong" => graphs::strong(a, b),
                _ => graphs::lexicographic(a, b),
            }),
            _ => Err(arity("two graphs")),
        },
        _ => Err(DslError::UnknownConstructor { pos, name: name.to_string() }),
    }
}

/// Parses a constructor expression into a graph.
pub fn parse_graph(text: &str) -> Result<Graph, DslError> {
    let mut p = Parser { text, pos: 0 };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("trailing input"));
    }
    Ok(g)
}

/// Grammar summary for --help output.
pub const GRAMMAR_HELP: &str = "\
Graph expressions:
  empty(N) complete(N) cycle(N) folded_cube(D)
  hamming(D,Q) kneser(N,K) johnson(N,K)
  petersen clebsch shrikhande gosset schlafli
  complement(G) line_graph(G) disjoint_union(G,K)
  cartesian(G,H) direct(G,H) strong(G,H) lexicographic(G,H)";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_named_and_nested() {
        assert_eq!(parse_graph("petersen").unwrap().vertices(), 10);
        assert_eq!(parse_graph("johnson(7, 2)").unwrap().vertices(), 21);
        let g = parse_graph("cartesian(complete(3), cycle(4))").unwrap();
        assert_eq!(g.vertices(), 12);
        let c = parse_graph("complement(schlafli)").unwrap();
        assert_eq!(c.vertices(), 27);
    }

    #[test]
    fn reports_positions() {
        match parse_graph("petersen(") {
            Err(DslError::Parse { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_graph("wat(3)") {
            Err(DslError::UnknownConstructor { pos, name }) => {
                assert_eq!((pos, name.as_str()), (0, "wat"));
            }
            other => panic!("expected unknown constructor, got {other:?}"),
        }
        match parse_graph("complete(3) junk") {
            Err(DslError::Parse { pos, .. }) => assert_eq!(pos, 12),
            other => panic!("expected trailing input error, got {other:?}"),
        }
    }

    #[test]
    fn constructor_errors_propagate() {
        assert!(matches!(parse_graph("cycle(2)"), Err(DslError::Graph(_))));
        assert!(matches!(parse_graph("petersen(3)"), Err(DslError::Arity { .. })));
    }
}
