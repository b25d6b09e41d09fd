//! Text formats: a plain edge list (0-based, optional `n <count>` directive)
//! and DIMACS `p edge` (1-based).

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    #[value(name = "edge-list")]
    EdgeList,
    #[value(name = "dimacs")]
    Dimacs,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("loop edge at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for declared order {order}")]
    OutOfRange { vertex: Vertex, order: usize },
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

/// Edge pairs with the 1-based line each came from.
struct Collected {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    lines: Vec<usize>,
}

impl Collected {
    /// Screens every pair, reporting the first offending line.
    fn build(self) -> Result<Graph, ParseError> {
        let Collected { order, edges, lines } = self;
        let mut seen = std::collections::HashMap::with_capacity(edges.len());
        for (k, &(u, v)) in edges.iter().enumerate() {
            let line = lines[k];
            for x in [u, v] {
                if x >= order {
                    return Err(err(line, ParseErrorKind::OutOfRange { vertex: x, order }));
                }
            }
            if u == v {
                return Err(err(line, ParseErrorKind::Loop(u)));
            }
            let key = crate::graph::edge(u, v);
            if seen.insert(key, line).is_some() {
                return Err(err(line, ParseErrorKind::DuplicateEdge(key.0, key.1)));
            }
        }
        Ok(Graph::from_edges(order, edges).expect("edges screened above"))
    }
}

fn parse_pair<'a>(mut fields: impl Iterator<Item = &'a str>) -> Option<(usize, usize)> {
    let u = fields.next()?.parse().ok()?;
    let v = fields.next()?.parse().ok()?;
    fields.next().is_none().then_some((u, v))
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared = None;
    let mut seen_content = false;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    let mut max_id = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        if line.starts_with('n') {
            fields.next();
            let count = match (fields.next().map(str::parse::<usize>), fields.next()) {
                (Some(Ok(c)), None) if !seen_content => c,
                _ => return Err(err(line_no, ParseErrorKind::Malformed(raw.to_string()))),
            };
            declared = Some(count);
            seen_content = true;
            continue;
        }
        seen_content = true;
        let (u, v) = parse_pair(fields)
            .ok_or_else(|| err(line_no, ParseErrorKind::Malformed(raw.to_string())))?;
        max_id = Some(max_id.map_or(u.max(v), |m: usize| m.max(u).max(v)));
        edges.push((u, v));
        lines.push(line_no);
    }
    let order = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Collected {
        order,
        edges,
        lines,
    }
    .build()
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let malformed = || err(line_no, ParseErrorKind::Malformed(raw.to_string()));
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("p") if header.is_none() => {
                if fields.next() != Some("edge") {
                    return Err(malformed());
                }
                let (n, m) = parse_pair(fields).ok_or_else(malformed)?;
                header = Some((n, m, line_no));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(err(line_no, ParseErrorKind::MissingHeader));
                };
                let (u, v) = parse_pair(fields).ok_or_else(malformed)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(
                            line_no,
                            ParseErrorKind::OutOfRange {
                                vertex: x.wrapping_sub(1),
                                order: n,
                            },
                        ));
                    }
                }
                edges.push((u - 1, v - 1));
                lines.push(line_no);
            }
            _ => return Err(malformed()),
        }
    }
    let Some((order, declared, header_line)) = header else {
        return Err(err(0, ParseErrorKind::MissingHeader));
    };
    let found = edges.len();
    let graph = Collected {
        order,
        edges,
        lines,
    }
    .build()?;
    if found != declared {
        return Err(err(
            header_line,
            ParseErrorKind::EdgeCountMismatch { declared, found },
        ));
    }
    Ok(graph)
}

/// Canonical edge-list text: `n <count>` then edges in lexicographic order,
/// one per line, each line `\n`-terminated.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 + 12 * g.edge_count());
    let _ = writeln!(out, "n {}", g.vertex_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        let g = parse_graph("0 1\n1 2", Format::EdgeList).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));

        let g = parse_graph("n 5\n0 1", Format::EdgeList).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.isolated_count()), (5, 1, 3));

        let d = parse_graph("p edge 3 2\ne 1 2\ne 2 3", Format::Dimacs).unwrap();
        assert_eq!(d, parse_graph("0 1\n1 2", Format::EdgeList).unwrap());

        assert_eq!(parse_graph("", Format::EdgeList).unwrap().vertex_count(), 0);
        let commented = "# header\n\nn 2\n# edge\n0 1\n";
        assert_eq!(parse_graph(commented, Format::EdgeList).unwrap().edge_count(), 1);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let e = parse_graph("0 1\n1 x\n", Format::EdgeList).unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::Malformed(_)));

        let e = parse_graph("0 1\n2 2\n", Format::EdgeList).unwrap_err();
        assert_eq!((e.line, e.kind), (2, ParseErrorKind::Loop(2)));

        let e = parse_graph("0 1\n1 2\n1 0\n", Format::EdgeList).unwrap_err();
        assert_eq!((e.line, e.kind), (3, ParseErrorKind::DuplicateEdge(0, 1)));

        let e = parse_graph("n 3\n0 3\n", Format::EdgeList).unwrap_err();
        assert_eq!(
            (e.line, e.kind),
            (2, ParseErrorKind::OutOfRange { vertex: 3, order: 3 })
        );

        // The directive must come before any edge.
        let e = parse_graph("0 1\nn 4\n", Format::EdgeList).unwrap_err();
        assert_eq!(e.line, 2);

        let e = parse_graph("0 1 2\n", Format::EdgeList).unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn dimacs_errors() {
        let e = parse_graph("e 1 2\n", Format::Dimacs).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingHeader);
        let e = parse_graph("p edge 2 1\ne 1 3\n", Format::Dimacs).unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_graph("c x\np edge 3 2\ne 1 2\n", Format::Dimacs).unwrap_err();
        assert_eq!(
            (e.line, e.kind),
            (2, ParseErrorKind::EdgeCountMismatch { declared: 2, found: 1 })
        );
        let e = parse_graph("p edge 3 2\ne 1 2\ne 2 1\n", Format::Dimacs).unwrap_err();
        assert_eq!((e.line, e.kind), (3, ParseErrorKind::DuplicateEdge(0, 1)));
    }

    #[test]
    fn writer_is_canonical() {
        let g = parse_graph("n 4\n2 1\n0 3\n0 1\n", Format::EdgeList).unwrap();
        assert_eq!(write_edge_list(&g), "n 4\n0 1\n0 3\n1 2\n");
    }

    proptest::proptest! {
        #[test]
        fn write_then_parse_is_identity(n in 0usize..40, raw in proptest::collection::vec((0usize..40, 0usize..40), 0..80)) {
            let mut es: Vec<(usize, usize)> = raw
                .into_iter()
                .filter(|&(u, v)| u < n && v < n && u != v)
                .map(|(u, v)| crate::graph::edge(u, v))
                .collect();
            es.sort_unstable();
            es.dedup();
            let g = Graph::from_edges(n, es).unwrap();
            let text = write_edge_list(&g);
            proptest::prop_assert_eq!(parse_graph(&text, Format::EdgeList).unwrap(), g);
        }
    }
}
