//! Graph serialization: the bit-packed graph6 format and a plain edge list.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" => Ok(GraphFormat::Graph6),
            "edgelist" => Ok(GraphFormat::EdgeList),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// A parsed graph together with its source text and format.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub format: GraphFormat,
    pub payload: String,
    pub graph: Graph,
}

impl GraphDocument {
    pub fn parse(format: GraphFormat, text: &str) -> Result<Self> {
        Ok(GraphDocument {
            format,
            payload: text.to_string(),
            graph: parse_graph(text, format)?,
        })
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edgelist(text),
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => emit_graph6(g),
        GraphFormat::EdgeList => emit_edgelist(g),
    }
}

const G6_HEADER: &str = ">>graph6<<";
const G6_MAX_LONG: usize = 258_047;

/// Canonical graph6 line: size bytes, then the upper triangle of the
/// adjacency matrix in column order, packed 6 bits per printable byte.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        // 63 <= n <= 258047: '~' then 18 bits, high chunk first.
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push((chunk + 63) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 input".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("invalid graph6 byte 0x{bad:02x}")));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Error::Parse("truncated graph6 size".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Parse("graph6 orders above 258047 not supported".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Error::Parse("graph6 order must be positive".into()));
    }
    if n > G6_MAX_LONG {
        return Err(Error::Parse("graph6 order out of range".into()));
    }
    let bits = n * (n - 1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {}",
            bytes.len(),
            expected - pos
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut chunk = 0u8;
    let mut available = 0;
    for v in 1..n {
        for u in 0..v {
            if available == 0 {
                chunk = bytes[pos] - 63;
                pos += 1;
                available = 6;
            }
            if chunk >> (available - 1) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            available -= 1;
        }
    }
    // Padding bits must be zero for the encoding to be canonical.
    if available > 0 && chunk & ((1 << available) - 1) != 0 {
        return Err(Error::Parse("nonzero padding bits in graph6".into()));
    }
    Ok(g)
}

/// One `u v` pair per line, zero-indexed. `#` starts a comment; blank lines
/// are skipped; duplicate edges collapse; loops are rejected. The order is
/// the largest endpoint plus one.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut max = 0;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse(format!(
                "line {}: expected two vertex indices",
                lineno + 1
            )));
        };
        let u: Vertex = a
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad index {a:?}", lineno + 1)))?;
        let v: Vertex = b
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad index {b:?}", lineno + 1)))?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        max = max.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(Error::Parse("edge list is empty; order cannot be inferred".into()));
    }
    Graph::from_edges(max + 1, &edges)
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
