//! Text formats: edgelist (`n m` then `u v`, 0-based, `#` comments),
//! graph6 (one graph per line) and DIMACS (`p edge n m`, `e u v`, 1-based).

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

/// Largest vertex count accepted from any format.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Auto,
    Edgelist,
    Graph6,
    Dimacs,
}

impl FromStr for Format {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Format, ParseError> {
        match s {
            "auto" => Ok(Format::Auto),
            "edgelist" => Ok(Format::Edgelist),
            "graph6" | "g6" => Ok(Format::Graph6),
            "dimacs" => Ok(Format::Dimacs),
            _ => Err(ParseError::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("unknown format {0:?}")]
    UnknownFormat(String),
    #[error("empty input")]
    Empty,
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}, byte {pos}: invalid graph6 byte {byte:#04x}")]
    BadByte { line: usize, pos: usize, byte: u8 },
    #[error("line {line}: vertex id {id} overflows a graph on {n} vertices")]
    IdOverflow { line: usize, id: u64, n: usize },
    #[error("line {line}: {n} vertices exceeds the limit of {MAX_VERTICES}")]
    TooLarge { line: usize, n: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn malformed(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Malformed { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines<'a>(text: &'a str, comment: &'a [&'a str]) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines().enumerate().filter_map(move |(i, l)| {
        let l = comment.iter().fold(l, |l, c| l.split_once(c).map_or(l, |(head, _)| head)).trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_num(line: usize, tok: Option<&str>, what: &str) -> Result<u64, ParseError> {
    let tok = tok.ok_or_else(|| malformed(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| malformed(line, format!("{what} {tok:?} is not a non-negative integer")))
}

fn check_n(line: usize, n: u64) -> Result<usize, ParseError> {
    if n > MAX_VERTICES as u64 {
        return Err(ParseError::TooLarge { line, n });
    }
    Ok(n as usize)
}

fn vertex(line: usize, id: u64, n: usize) -> Result<Vertex, ParseError> {
    if id >= n as u64 {
        return Err(ParseError::IdOverflow { line, id, n });
    }
    Ok(id as Vertex)
}

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text, &["#"]);
    let (hl, header) = lines.next().ok_or(ParseError::Empty)?;
    let mut toks = header.split_whitespace();
    let n = check_n(hl, parse_num(hl, toks.next(), "vertex count")?)?;
    let m = parse_num(hl, toks.next(), "edge count")?;
    if toks.next().is_some() {
        return Err(malformed(hl, "header must be \"n m\""));
    }
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let mut toks = l.split_whitespace();
        let u = vertex(ln, parse_num(ln, toks.next(), "endpoint")?, n)?;
        let v = vertex(ln, parse_num(ln, toks.next(), "endpoint")?, n)?;
        if toks.next().is_some() {
            return Err(malformed(ln, "expected \"u v\""));
        }
        edges.push((u, v));
    }
    if edges.len() as u64 != m {
        return Err(malformed(hl, format!("header promises {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n = None;
    let mut m = 0;
    let mut header_line = 0;
    let mut edges = Vec::new();
    for (ln, l) in content_lines(text, &[]) {
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(malformed(ln, "second problem line"));
                }
                match toks.next() {
                    Some("edge" | "col") => {}
                    _ => return Err(malformed(ln, "expected \"p edge n m\"")),
                }
                n = Some(check_n(ln, parse_num(ln, toks.next(), "vertex count")?)?);
                m = parse_num(ln, toks.next(), "edge count")?;
                header_line = ln;
            }
            Some("e") => {
                let n = n.ok_or_else(|| malformed(ln, "edge before problem line"))?;
                let mut end = || -> Result<Vertex, ParseError> {
                    let id = parse_num(ln, toks.next(), "endpoint")?;
                    if id == 0 {
                        return Err(malformed(ln, "DIMACS ids are 1-based"));
                    }
                    vertex(ln, id - 1, n)
                };
                let (u, v) = (end()?, end()?);
                edges.push((u, v));
            }
            _ => return Err(malformed(ln, format!("unrecognised line {l:?}"))),
        }
    }
    let n = n.ok_or(ParseError::Empty)?;
    if edges.len() as u64 != m {
        return Err(malformed(header_line, format!("header promises {m} edges, found {}", edges.len())));
    }
    // DIMACS files in the wild list both orientations; tolerate that.
    Ok(Graph::from_edges_dedup(n, &edges)?)
}

/// Decodes one graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn decode_graph6(line: &str) -> Result<Graph, ParseError> {
    decode_graph6_at(line.trim_end(), 1)
}

fn decode_graph6_at(line: &str, ln: usize) -> Result<Graph, ParseError> {
    let body = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let offset = line.len() - body.len();
    let bytes = body.as_bytes();
    let mut pos = 0;
    let next = |pos: &mut usize| -> Result<u64, ParseError> {
        let b = *bytes.get(*pos).ok_or_else(|| malformed(ln, "truncated graph6 size"))?;
        if !(63..=126).contains(&b) {
            return Err(ParseError::BadByte { line: ln, pos: offset + *pos, byte: b });
        }
        *pos += 1;
        Ok((b - 63) as u64)
    };
    let first = next(&mut pos)?;
    let n = if first < 63 {
        first
    } else {
        let words = if bytes.get(1) == Some(&126) {
            pos += 1;
            6
        } else {
            3
        };
        let mut n = 0;
        for _ in 0..words {
            n = (n << 6) | next(&mut pos)?;
        }
        n
    };
    let n = check_n(ln, n)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(malformed(ln, format!("graph6 body has {} bytes, expected {need}", bytes.len() - pos)));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let b = bytes[pos + k / 6];
            if !(63..=126).contains(&b) {
                return Err(ParseError::BadByte { line: ln, pos: offset + pos + k / 6, byte: b });
            }
            if (b - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    // Padding bits must be zero and trailing bytes valid.
    for (i, &b) in bytes[pos..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::BadByte { line: ln, pos: offset + pos + i, byte: b });
        }
    }
    if bits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(malformed(ln, "nonzero graph6 padding bits"));
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    let push6 = |out: &mut String, x: u64| out.push((x as u8 + 63) as char);
    if n < 63 {
        push6(&mut out, n as u64);
    } else if n <= 258_047 {
        out.push('~');
        for s in [12, 6, 0] {
            push6(&mut out, (n as u64 >> s) & 63);
        }
    } else {
        out.push_str("~~");
        for s in [30, 24, 18, 12, 6, 0] {
            push6(&mut out, (n as u64 >> s) & 63);
        }
    }
    let mut acc = 0u64;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.adjacent(u, v) as u64;
            k += 1;
            if k == 6 {
                push6(&mut out, acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        push6(&mut out, acc << (6 - k));
    }
    out
}

pub fn encode_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn encode_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Guesses the format from the first meaningful line.
pub fn detect_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" => Format::Dimacs,
        Some(l) if l.starts_with(">>graph6<<") => Format::Graph6,
        Some(l) if l.split_whitespace().count() >= 2 => Format::Edgelist,
        Some(l) if l.bytes().all(|b| b.is_ascii_digit()) => Format::Edgelist,
        _ => Format::Graph6,
    }
}

/// Parses every graph in `text`: graph6 allows one per line, the other
/// formats hold exactly one.
pub fn parse_graphs(text: &str, format: Format) -> Result<Vec<Graph>, ParseError> {
    let format = if format == Format::Auto { detect_format(text) } else { format };
    match format {
        Format::Edgelist => Ok(vec![parse_edgelist(text)?]),
        Format::Dimacs => Ok(vec![parse_dimacs(text)?]),
        Format::Graph6 => {
            let gs = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| decode_graph6_at(l.trim(), i + 1))
                .collect::<Result<Vec<_>, _>>()?;
            if gs.is_empty() {
                return Err(ParseError::Empty);
            }
            Ok(gs)
        }
        Format::Auto => unreachable!(),
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    let mut gs = parse_graphs(text, format)?;
    if gs.len() != 1 {
        return Err(malformed(2, format!("expected one graph, found {}", gs.len())));
    }
    Ok(gs.remove(0))
}
