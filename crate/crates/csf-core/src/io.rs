//! Graph ingestion and emission: plain-text edge lists and graph6 strings.
//!
//! Edge-list format: first line `n <vertex_count>`, then one `u v` pair per
//! line, 0-based. graph6 is the standard ASCII encoding (n ≤ 62 here).

use crate::graph::{Graph, GraphError};

/// Parses the `n <count>` / `u v` edge-list format. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| GraphError::Parse("empty input".into()))?;
    let mut it = header.split_whitespace();
    let n = match (it.next(), it.next()) {
        (Some("n"), Some(count)) => count
            .parse::<usize>()
            .map_err(|_| GraphError::Parse(format!("bad vertex count {count:?}")))?,
        _ => return Err(GraphError::Parse(format!("expected `n <count>`, got {header:?}"))),
    };
    let mut g = Graph::with_vertices(n)?;
    for line in lines {
        let mut it = line.split_whitespace();
        let (a, b) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(GraphError::Parse(format!("expected `u v`, got {line:?}"))),
        };
        let a: usize = a.parse().map_err(|_| GraphError::Parse(format!("bad vertex {a:?}")))?;
        let b: usize = b.parse().map_err(|_| GraphError::Parse(format!("bad vertex {b:?}")))?;
        g.insert_edge(a, b)?;
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

/// Encodes into graph6; supports n ≤ 62.
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut bits: Vec<bool> = Vec::with_capacity(n * n.saturating_sub(1) / 2 + 6);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.adjacency_mask(i) >> j & 1 == 1);
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        s.push((v + 63) as char);
    }
    Ok(s)
}

pub fn from_graph6(s: &str) -> Result<Graph, GraphError> {
    let bytes = s.trim().as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Parse("empty graph6 string".into()));
    }
    if bytes[0] == b'>' || bytes[0] == 126 {
        return Err(GraphError::Parse("only short-form graph6 (n ≤ 62) is supported".into()));
    }
    let n = bytes[0]
        .checked_sub(63)
        .ok_or_else(|| GraphError::Parse("bad graph6 size byte".into()))? as usize;
    let mut g = Graph::with_vertices(n)?;
    let want = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - 1 != want {
        return Err(GraphError::Parse(format!(
            "graph6 body has {} bytes, expected {want}",
            bytes.len() - 1
        )));
    }
    let mut k = 0usize;
    for &byte in &bytes[1..] {
        if !(63..127).contains(&byte) {
            return Err(GraphError::Parse(format!("bad graph6 byte {byte}")));
        }
        let v = byte - 63;
        for bit in 0..6 {
            if k >= n * n.saturating_sub(1) / 2 {
                break;
            }
            if v >> (5 - bit) & 1 == 1 {
                let (i, j) = pair_from_index(k);
                g.insert_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-major upper-triangle order used by graph6.
fn pair_from_index(k: usize) -> (usize, usize) {
    let mut j = 1usize;
    let mut base = 0usize;
    while base + j <= k {
        base += j;
        j += 1;
    }
    (k - base, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn graph6_known_strings() {
        let p2 = families::path(2).unwrap();
        assert_eq!(to_graph6(&p2).unwrap(), "A_");
        let k3 = families::cycle(3).unwrap();
        assert_eq!(to_graph6(&k3).unwrap(), "Bw");
        let c4 = families::cycle(4).unwrap();
        assert_eq!(to_graph6(&c4).unwrap(), "Cl");
    }

    #[test]
    fn graph6_round_trip() {
        for g in [
            families::path(7).unwrap(),
            families::cuttlefish(5, 4).unwrap(),
            crate::fixtures::unicyclic19(),
            crate::graph::Graph::with_vertices(3).unwrap(),
        ] {
            let s = to_graph6(&g).unwrap();
            assert_eq!(from_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = crate::fixtures::unicyclic14();
        let text = emit_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("3\n0 1\n").is_err());
        assert!(parse_edge_list("n 3\n0 5\n").is_err());
        let with_comment = "# sample\nn 2\n0 1\n";
        assert_eq!(parse_edge_list(with_comment).unwrap(), families::path(2).unwrap());
    }
}
