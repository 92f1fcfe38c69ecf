//! Line-oriented drawing files.
//!
//! ```text
//! # comment
//! graph <n>          header: vertex count
//! e <u> <v>          edge; appearance order defines edge ids
//! x <i> <j>          crossing pair of edge ids
//! rot <v> <e...>     cyclic incident-edge order at vertex v (all or none)
//! ```
//!
//! The serializer emits a canonical form (header, edges, crossings,
//! rotations) that parses back byte-identically.

use std::fmt;

use crate::drawing::OnePlanarDrawing;
use crate::graph::Graph;

/// Parse failure with 1-based line and column of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

/// Whitespace tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut col = 1;
    for piece in line.split_inclusive(char::is_whitespace) {
        let token = piece.trim_end_matches(char::is_whitespace);
        if !token.is_empty() {
            out.push((col, token));
        }
        col += piece.chars().count();
    }
    out
}

fn parse_number(line_no: usize, col: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| err(line_no, col, format!("expected {what}, found `{token}`")))
}

/// Parses a drawing file.
pub fn parse_drawing(input: &str) -> Result<OnePlanarDrawing, ParseError> {
    let mut n: Option<usize> = None;
    let mut header_line = 0;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<(usize, usize)> = Vec::new(); // (line, col) per edge
    let mut crossings: Vec<(usize, usize, usize, usize)> = Vec::new(); // i, j, line, col
    let mut rot_lines: Vec<(usize, usize, usize, Vec<usize>)> = Vec::new(); // v, line, col, ids

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        let (dcol, directive) = toks[0];
        match directive {
            "graph" => {
                if n.is_some() {
                    return Err(err(line_no, dcol, "duplicate `graph` header"));
                }
                if toks.len() != 2 {
                    return Err(err(line_no, dcol, "usage: graph <vertex count>"));
                }
                n = Some(parse_number(line_no, toks[1].0, toks[1].1, "vertex count")?);
                header_line = line_no;
            }
            "e" => {
                if n.is_none() {
                    return Err(err(line_no, dcol, "`e` before `graph` header"));
                }
                if toks.len() != 3 {
                    return Err(err(line_no, dcol, "usage: e <u> <v>"));
                }
                let u = parse_number(line_no, toks[1].0, toks[1].1, "vertex id")?;
                let v = parse_number(line_no, toks[2].0, toks[2].1, "vertex id")?;
                edges.push((u, v));
                edge_lines.push((line_no, dcol));
            }
            "x" => {
                if n.is_none() {
                    return Err(err(line_no, dcol, "`x` before `graph` header"));
                }
                if toks.len() != 3 {
                    return Err(err(line_no, dcol, "usage: x <edge id> <edge id>"));
                }
                let i = parse_number(line_no, toks[1].0, toks[1].1, "edge id")?;
                let j = parse_number(line_no, toks[2].0, toks[2].1, "edge id")?;
                crossings.push((i, j, line_no, dcol));
            }
            "rot" => {
                if n.is_none() {
                    return Err(err(line_no, dcol, "`rot` before `graph` header"));
                }
                if toks.len() < 2 {
                    return Err(err(line_no, dcol, "usage: rot <v> <edge ids...>"));
                }
                let v = parse_number(line_no, toks[1].0, toks[1].1, "vertex id")?;
                let mut ids = Vec::with_capacity(toks.len() - 2);
                for &(c, t) in &toks[2..] {
                    ids.push(parse_number(line_no, c, t, "edge id")?);
                }
                rot_lines.push((v, line_no, toks[1].0, ids));
            }
            other => {
                return Err(err(line_no, dcol, format!("unknown directive `{other}`")));
            }
        }
    }

    let n = n.ok_or_else(|| err(1, 1, "missing `graph <n>` header"))?;
    // vertex ranges and simplicity, with positions
    let mut seen = std::collections::HashSet::new();
    for (k, &(u, v)) in edges.iter().enumerate() {
        let (line, col) = edge_lines[k];
        if u >= n || v >= n {
            return Err(err(line, col, format!("vertex id out of range 0..{n}")));
        }
        if u == v {
            return Err(err(line, col, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, col, format!("duplicate edge {u}-{v}")));
        }
    }
    let m = edges.len();
    let mut pairs = Vec::with_capacity(crossings.len());
    for (i, j, line, col) in crossings {
        if i >= m || j >= m {
            return Err(err(line, col, format!("edge id out of range 0..{m}")));
        }
        pairs.push((i, j));
    }
    let rotation = if rot_lines.is_empty() {
        None
    } else {
        let mut rot: Vec<Option<Vec<usize>>> = vec![None; n];
        let mut last_line = header_line;
        for (v, line, col, ids) in rot_lines {
            last_line = line;
            if v >= n {
                return Err(err(line, col, format!("vertex id out of range 0..{n}")));
            }
            for &e in &ids {
                if e >= m {
                    return Err(err(line, col, format!("edge id out of range 0..{m}")));
                }
            }
            if rot[v].replace(ids).is_some() {
                return Err(err(line, col, format!("duplicate rotation for vertex {v}")));
            }
        }
        if let Some(v) = rot.iter().position(|r| r.is_none()) {
            return Err(err(
                last_line,
                1,
                format!("rotation lines must cover every vertex or none; vertex {v} missing"),
            ));
        }
        Some(rot.into_iter().map(|r| r.unwrap()).collect())
    };

    let graph = Graph::new(n, edges).expect("validated above");
    OnePlanarDrawing::new(graph, pairs, rotation)
        .map_err(|e| err(header_line.max(1), 1, e.to_string()))
}

/// Canonical serialization: header, edges in id order, crossings in stored
/// order, then rotations.
pub fn serialize_drawing(d: &OnePlanarDrawing) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph {}\n", d.graph().vertex_count()));
    for &(u, v) in d.graph().edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    for &(i, j) in d.crossings() {
        out.push_str(&format!("x {i} {j}\n"));
    }
    if let Some(rot) = d.rotation() {
        for (v, ids) in rot.iter().enumerate() {
            out.push_str(&format!("rot {v}"));
            for e in ids {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_small_drawing() {
        let text = "# K4 with crossed diagonals\ngraph 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ne 0 2\ne 1 3\nx 4 5\n";
        let d = parse_drawing(text).unwrap();
        assert_eq!(d.graph().vertex_count(), 4);
        assert_eq!(d.graph().edge_count(), 6);
        assert_eq!(d.crossings(), &[(4, 5)]);
        assert_eq!(d.rotation(), None);
    }

    #[test]
    fn canonical_round_trip_is_byte_identical() {
        let text = "graph 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ne 0 2\ne 1 3\nx 4 5\n";
        let d = parse_drawing(text).unwrap();
        assert_eq!(serialize_drawing(&d), text);
    }

    #[test]
    fn rotation_lines_round_trip() {
        let text = "graph 3\ne 0 1\ne 1 2\ne 2 0\nrot 0 0 2\nrot 1 0 1\nrot 2 1 2\n";
        let d = parse_drawing(text).unwrap();
        assert!(d.rotation().is_some());
        assert_eq!(serialize_drawing(&d), text);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_drawing("graph 3\ne 0 5\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 1));
        let e = parse_drawing("graph 3\ne 0 1\nx 0 9\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 1));
        let e = parse_drawing("graph two\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 7));
        let e = parse_drawing("e 0 1\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 1));
        let e = parse_drawing("graph 2\nedge 0 1\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 1));
    }

    #[test]
    fn rejects_duplicate_edges_and_loops() {
        let e = parse_drawing("graph 3\ne 0 1\ne 1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("duplicate edge"));
        let e = parse_drawing("graph 3\ne 1 1\n").unwrap_err();
        assert!(e.message.contains("self-loop"));
    }

    #[test]
    fn rejects_partial_rotation() {
        let e = parse_drawing("graph 3\ne 0 1\ne 1 2\ne 2 0\nrot 0 0 2\n").unwrap_err();
        assert!(e.message.contains("every vertex or none"));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "\n# head\ngraph 2 # trailing\n\ne 0 1 # edge\n";
        let d = parse_drawing(text).unwrap();
        assert_eq!(d.graph().edge_count(), 1);
    }
}
