//! Text formats: edge lists, graph6, and assignment JSON.

use crate::assign::{AssignError, ListAssignment};
use crate::graph::{build_graph, Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("assignment: {0}")]
    Assignment(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Assign(#[from] AssignError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses the edge-list format: first line `n m`, then `m` lines `u v` with
/// 0-based vertex ids. Blank lines are not allowed between records.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines().enumerate();
    let (lno, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input, expected \"n m\" header"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .ok_or_else(|| parse_err(lno + 1, "missing vertex count"))?
        .parse()
        .map_err(|_| parse_err(lno + 1, "vertex count is not a number"))?;
    let m: usize = it
        .next()
        .ok_or_else(|| parse_err(lno + 1, "missing edge count"))?
        .parse()
        .map_err(|_| parse_err(lno + 1, "edge count is not a number"))?;
    if it.next().is_some() {
        return Err(parse_err(lno + 1, "header has trailing tokens"));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| parse_err(m + 1, format!("expected {m} edge lines, input ended early")))?;
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .ok_or_else(|| parse_err(lno + 1, "missing edge endpoint"))?
            .parse()
            .map_err(|_| parse_err(lno + 1, "endpoint is not a number"))?;
        let v: usize = it
            .next()
            .ok_or_else(|| parse_err(lno + 1, "missing second endpoint"))?
            .parse()
            .map_err(|_| parse_err(lno + 1, "endpoint is not a number"))?;
        if it.next().is_some() {
            return Err(parse_err(lno + 1, "edge line has trailing tokens"));
        }
        edges.push((u, v));
    }
    for (lno, line) in lines {
        if !line.trim().is_empty() {
            return Err(parse_err(lno + 1, "unexpected content after edge list"));
        }
    }
    Ok(build_graph(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes the graph6 format for graphs with up to 62 vertices: one size
/// byte `n + 63`, then the upper-triangle adjacency bits (column by column)
/// in 6-bit chunks, each stored as `value + 63`. An optional `>>graph6<<`
/// header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Graph6("empty input".into()));
    }
    let n = match bytes[0] {
        b @ 63..=125 => (b - 63) as usize,
        126 => {
            return Err(FormatError::Graph6(
                "multi-byte sizes (n > 62) are not supported".into(),
            ))
        }
        b => return Err(FormatError::Graph6(format!("invalid size byte {b}"))),
    };
    let nbits = n * (n - 1) / 2;
    let payload = &bytes[1..];
    let expected_bytes = nbits.div_ceil(6);
    if payload.len() != expected_bytes {
        return Err(FormatError::Graph6(format!(
            "expected {expected_bytes} data bytes for n = {n}, got {}",
            payload.len()
        )));
    }
    let mut bits = Vec::with_capacity(payload.len() * 6);
    for &b in payload {
        if !(63..=126).contains(&b) {
            return Err(FormatError::Graph6(format!("invalid data byte {b}")));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            bits.push(v >> shift & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(FormatError::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Ok(build_graph(n, &edges)?)
}

/// Parses the assignment format: a JSON object mapping vertex ids (decimal
/// strings) to arrays of integer colors. The keys must cover `0..n` exactly
/// and all lists must have the same size.
pub fn parse_assignment(text: &str) -> Result<ListAssignment, FormatError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| FormatError::Assignment(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| FormatError::Assignment("top level must be an object".into()))?;
    if obj.is_empty() {
        return Err(FormatError::Assignment("no vertices".into()));
    }
    let n = obj.len();
    let mut lists: Vec<Option<Vec<u32>>> = vec![None; n];
    for (key, val) in obj {
        let v: usize = key
            .parse()
            .map_err(|_| FormatError::Assignment(format!("key {key:?} is not a vertex id")))?;
        if v >= n {
            return Err(FormatError::Assignment(format!(
                "vertex ids must cover 0..{n} exactly, got {v}"
            )));
        }
        let arr = val
            .as_array()
            .ok_or_else(|| FormatError::Assignment(format!("list of vertex {v} must be an array")))?;
        let mut list = Vec::with_capacity(arr.len());
        for c in arr {
            let c = c
                .as_u64()
                .and_then(|c| u32::try_from(c).ok())
                .ok_or_else(|| {
                    FormatError::Assignment(format!("vertex {v} has a non-integer color"))
                })?;
            list.push(c);
        }
        if lists[v].replace(list).is_some() {
            return Err(FormatError::Assignment(format!("vertex {v} listed twice")));
        }
    }
    let lists = lists
        .into_iter()
        .map(|l| l.expect("all slots filled because keys cover 0..n"))
        .collect();
    Ok(ListAssignment::new(lists)?)
}

/// Writes the assignment format with keys in numeric order.
pub fn write_assignment(l: &ListAssignment) -> String {
    let mut out = String::from("{\n");
    for v in 0..l.n_vertices() {
        let colors = l
            .list(v)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!("  \"{v}\": [{colors}]"));
        out.push_str(if v + 1 < l.n_vertices() { ",\n" } else { "\n" });
    }
    out.push('}');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_named, Family};

    #[test]
    fn edge_list_roundtrip() {
        let c4 = generate_named(Family::Cycle { n: 4 }).unwrap();
        let text = write_edge_list(&c4);
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), c4);
    }

    #[test]
    fn edge_list_rejects_malformed() {
        assert!(matches!(
            parse_edge_list(""),
            Err(FormatError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 2\n0 1\n"),
            Err(FormatError::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 1\n0 1\n"),
            Err(FormatError::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 x\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
        // duplicate edges surface as graph errors
        assert_eq!(
            parse_edge_list("3 2\n0 1\n1 0\n"),
            Err(FormatError::Graph(GraphError::DuplicateEdge(0, 1)))
        );
    }

    #[test]
    fn graph6_known_vectors() {
        // "A_" is the single edge on two vertices
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        assert!(k2.has_edge(0, 1));

        // five vertices, edges {0,2},{0,4},{1,3},{3,4}
        let g = parse_graph6("DQc").unwrap();
        assert_eq!((g.n(), g.m()), (5, 4));
        for (u, v) in [(0, 2), (0, 4), (1, 3), (3, 4)] {
            assert!(g.has_edge(u, v), "missing edge ({u},{v})");
        }

        // header form
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap(), k2);

        // single vertex
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
    }

    #[test]
    fn graph6_complete_graphs() {
        // K4: six bits all set pack into one data byte 0b111111 + 63 = '~'
        // ('~' is only a size escape in the first position)
        let k4 = parse_graph6("C~").unwrap();
        assert!(k4.is_complete());
        assert_eq!(k4.n(), 4);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(matches!(parse_graph6(""), Err(FormatError::Graph6(_))));
        assert!(matches!(parse_graph6("D"), Err(FormatError::Graph6(_))));
        assert!(matches!(parse_graph6("~~~"), Err(FormatError::Graph6(_))));
        // padding bits must be zero: n=2 needs 1 bit, 5 padding bits
        // 'o' = 63 + 0b110000 has a nonzero padding bit
        assert!(matches!(parse_graph6("Ao"), Err(FormatError::Graph6(_))));
    }

    #[test]
    fn assignment_roundtrip() {
        let l = ListAssignment::new(vec![vec![0, 1], vec![1, 2], vec![0, 5]]).unwrap();
        let text = write_assignment(&l);
        let back = parse_assignment(&text).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn assignment_parsing_rules() {
        let l = parse_assignment(r#"{"0": [3, 1], "1": [2, 0]}"#).unwrap();
        assert_eq!(l.q(), 2);
        assert_eq!(l.list(0), &[1, 3]);

        assert!(matches!(
            parse_assignment(r#"{"0": [0, 1], "2": [0, 1]}"#),
            Err(FormatError::Assignment(_))
        ));
        assert!(matches!(
            parse_assignment(r#"{"0": [0, 1], "1": [2]}"#),
            Err(FormatError::Assign(AssignError::NonUniform { .. }))
        ));
        assert!(matches!(
            parse_assignment(r#"[1, 2]"#),
            Err(FormatError::Assignment(_))
        ));
        assert!(matches!(
            parse_assignment(r#"{"0": [0, -1]}"#),
            Err(FormatError::Assignment(_))
        ));
    }
}
