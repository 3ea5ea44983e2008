//! graph6 and edge-list input.

use onecross::{GraphError, Multigraph};
use thiserror::Error;

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER: &str = ">>graph6<<";

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn looks_like_graph6(line: &str) -> bool {
    line.starts_with(HEADER) || line.bytes().all(|b| (63..=126).contains(&b))
}

pub fn parse(text: &str, format: Format) -> Result<Multigraph, ParseError> {
    let format = match format {
        Format::Auto => {
            let (_, first) = content_lines(text).next().ok_or(ParseError::Empty)?;
            if looks_like_graph6(first) {
                Format::Graph6
            } else {
                Format::Edgelist
            }
        }
        f => f,
    };
    match format {
        Format::Graph6 => {
            let mut lines = content_lines(text);
            let (_, line) = lines.next().ok_or(ParseError::Empty)?;
            if lines.next().is_some() {
                return Err(ParseError::Graph6("expected a single graph".into()));
            }
            parse_graph6(line)
        }
        _ => parse_edge_list(text),
    }
}

/// `u v` per line; a line with a single vertex declares it. `#` starts a
/// comment.
pub fn parse_edge_list(text: &str) -> Result<Multigraph, ParseError> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (line, l) in content_lines(text) {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| ParseError::EdgeList {
                line,
                msg: format!("`{s}` is not a vertex number"),
            })
        };
        match fields.as_slice() {
            [v] => n = n.max(num(v)? + 1),
            [u, v] => {
                let (u, v) = (num(u)?, num(v)?);
                if u == v {
                    return Err(ParseError::EdgeList { line, msg: "loops are not allowed".into() });
                }
                n = n.max(u + 1).max(v + 1);
                edges.push((u, v));
            }
            _ => {
                return Err(ParseError::EdgeList {
                    line,
                    msg: "expected `u v`".into(),
                })
            }
        }
    }
    if n == 0 {
        return Err(ParseError::Empty);
    }
    Ok(Multigraph::build(n, edges)?)
}

pub fn parse_graph6(line: &str) -> Result<Multigraph, ParseError> {
    let body = line.strip_prefix(HEADER).unwrap_or(line).trim();
    let bytes = body.as_bytes();
    if bytes.iter().any(|b| !(63..=126).contains(b)) {
        return Err(ParseError::Graph6("byte outside the graph6 range".into()));
    }
    let data: Vec<u8> = bytes.iter().map(|b| b - 63).collect();
    let (n, rest) = match data.as_slice() {
        [] => return Err(ParseError::Graph6("missing vertex count".into())),
        [63, 63, r @ ..] if r.len() >= 6 => (r[..6].iter().fold(0usize, |a, &x| a << 6 | x as usize), &r[6..]),
        [63, r @ ..] if r.len() >= 3 && r[0] != 63 => {
            (r[..3].iter().fold(0usize, |a, &x| a << 6 | x as usize), &r[3..])
        }
        [63, ..] => return Err(ParseError::Graph6("truncated vertex count".into())),
        [x, r @ ..] => (*x as usize, r),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(ParseError::Graph6(format!(
            "{n} vertices need {} data bytes, found {}",
            bits.div_ceil(6),
            rest.len()
        )));
    }
    let bit = |k: usize| rest[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Multigraph::build(n, edges)?)
}

/// graph6 of the simple graph underlying `g`.
pub fn to_graph6(g: &Multigraph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8);
    } else if n <= 258_047 {
        out.push(63);
        out.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8));
    } else {
        out.extend([63, 63]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8));
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.adjacent(onecross::VertexId(i), onecross::VertexId(j)));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                x |= 1 << (5 - i);
            }
        }
        out.push(x);
    }
    out.into_iter().map(|b| (b + 63) as char).collect()
}
