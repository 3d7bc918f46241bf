//! Plain-text graph format.
//!
//! ```text
//! n m
//! u v          (m lines, edge id = line index)
//! rotations    (optional)
//! v: e1 e2 ... (clockwise incident edge ids, one line per vertex)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeId, GraphError, MultiGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed graph file, with the rotation system if one was given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: MultiGraph,
    pub rotation: Option<Vec<Vec<EdgeId>>>,
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| syntax(line, format!("bad integer `{t}`"))))
        .collect()
}

pub fn parse_graph(input: &str) -> Result<GraphFile, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines
        .next()
        .ok_or_else(|| ParseError::Truncated("missing header".into()))?;
    let head = numbers(ln, header)?;
    let [n, m] = head[..] else {
        return Err(syntax(ln, "header must be `n m`"));
    };

    let mut g = MultiGraph::new(n);
    for i in 0..m {
        let (ln, text) = lines
            .next()
            .ok_or_else(|| ParseError::Truncated(format!("expected {m} edges, got {i}")))?;
        let uv = numbers(ln, text)?;
        let [u, v] = uv[..] else {
            return Err(syntax(ln, "edge line must be `u v`"));
        };
        g.add_edge(u, v)?;
    }

    let rotation = match lines.next() {
        None => None,
        Some((_, "rotations")) => {
            let mut rot: Vec<Option<Vec<EdgeId>>> = vec![None; n];
            for (ln, text) in lines.by_ref() {
                let (v, rest) = text
                    .split_once(':')
                    .ok_or_else(|| syntax(ln, "rotation line must be `v: e1 e2 ...`"))?;
                let v: usize = v
                    .trim()
                    .parse()
                    .map_err(|_| syntax(ln, format!("bad vertex `{}`", v.trim())))?;
                if v >= n {
                    return Err(syntax(ln, format!("vertex {v} out of range")));
                }
                if rot[v].is_some() {
                    return Err(syntax(ln, format!("duplicate rotation for vertex {v}")));
                }
                let order = numbers(ln, rest)?;
                if let Some(&e) = order.iter().find(|&&e| e >= m) {
                    return Err(syntax(ln, format!("edge {e} out of range")));
                }
                rot[v] = Some(order);
            }
            let mut out = Vec::with_capacity(n);
            for (v, r) in rot.into_iter().enumerate() {
                out.push(r.ok_or_else(|| {
                    ParseError::Truncated(format!("no rotation for vertex {v}"))
                })?);
            }
            Some(out)
        }
        Some((ln, other)) => return Err(syntax(ln, format!("unexpected `{other}`"))),
    };

    Ok(GraphFile { graph: g, rotation })
}

/// Serializes a graph (and optional rotation system) in the text format.
pub fn write_graph(g: &MultiGraph, rotation: Option<&[Vec<EdgeId>]>) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    if let Some(rot) = rotation {
        s.push_str("rotations\n");
        for (v, order) in rot.iter().enumerate() {
            let ids: Vec<String> = order.iter().map(|e| e.to_string()).collect();
            writeln!(s, "{v}: {}", ids.join(" ")).unwrap();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_with_rotations() {
        let text = "3 3\n0 1\n1 2\n2 0\nrotations\n0: 0 2\n1: 1 0\n2: 2 1\n";
        let f = parse_graph(text).unwrap();
        assert_eq!(f.graph.m(), 3);
        assert_eq!(f.rotation.as_ref().unwrap()[1], vec![1, 0]);
        assert_eq!(write_graph(&f.graph, f.rotation.as_deref()), text);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("2 1\n0 0\n").is_err());
        assert!(parse_graph("2 2\n0 1\n").is_err());
        assert!(parse_graph("2 1\n0 x\n").is_err());
        assert!(parse_graph("2 1\n0 1\nrotations\n0: 0\n").is_err());
        assert!(parse_graph("2 1\n0 1\nrotations\n0: 0\n1: 5\n").is_err());
    }

    #[test]
    fn comments_and_parallel_edges() {
        let f = parse_graph("# two parallel edges\n2 2\n0 1\n\n1 0\n").unwrap();
        assert_eq!(f.graph.edges(), &[(0, 1), (1, 0)]);
        assert!(f.rotation.is_none());
    }
}
