//! Edge-list text parsing and DOT export.
//!
//! Edge-list format: optional header `p <n>`, one `u v` pair per line
//! (whitespace separated, 0-indexed), `#` comment lines ignored. Without a
//! header, n defaults to 1 + max index.

use crate::broadcast::Broadcast;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_index: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let first = tokens.next().unwrap();
        if first == "p" {
            if declared_n.is_some() || !edges.is_empty() {
                return Err(Error::Parse(format!(
                    "line {}: header must come first",
                    lineno + 1
                )));
            }
            let n = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("line {}: bad header", lineno + 1)))?;
            declared_n = Some(n);
            continue;
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {}: bad vertex `{t}`", lineno + 1)))
        };
        let u = parse(first)?;
        let v = tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("line {}: missing endpoint", lineno + 1)))
            .and_then(|t| parse(t))?;
        if tokens.next().is_some() {
            return Err(Error::Parse(format!(
                "line {}: trailing tokens",
                lineno + 1
            )));
        }
        max_index = Some(max_index.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = match declared_n {
        Some(n) => n,
        None => match max_index {
            Some(m) => m + 1,
            None => return Err(Error::Parse("no header and no edges".into())),
        },
    };
    Graph::from_edges(n, &edges)
}

/// DOT export; when a broadcast is given, powers appear as vertex labels
/// and positive vertices are drawn filled.
pub fn to_dot(g: &Graph, f: Option<&Broadcast>) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        match f {
            Some(f) if f.power(v) > 0 => out.push_str(&format!(
                "  {v} [label=\"{v}:{}\", style=filled];\n",
                f.power(v)
            )),
            Some(f) => out.push_str(&format!("  {v} [label=\"{v}:{}\"];\n", f.power(v))),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Edge-list export, inverse of `parse_edge_list`.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("p {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let g = parse_edge_list("# a path\n0 1\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_with_header() {
        let g = parse_edge_list("p 5\n0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.components().len(), 4);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert!(parse_edge_list("0\n").is_err());
        assert!(parse_edge_list("a b\n").is_err());
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("0 0\n").is_err());
        assert!(parse_edge_list("0 1\np 4\n").is_err());
    }

    #[test]
    fn round_trip() {
        let g = parse_edge_list("p 4\n0 1\n1 2\n2 3\n").unwrap();
        let text = to_edge_list(&g);
        let g2 = parse_edge_list(&text).unwrap();
        assert_eq!(g2.edges(), g.edges());
        assert_eq!(g2.vertex_count(), g.vertex_count());
    }

    #[test]
    fn dot_output() {
        let g = parse_edge_list("0 1\n").unwrap();
        let f = Broadcast::new(&g, vec![1, 0]).unwrap();
        let dot = to_dot(&g, Some(&f));
        assert!(dot.contains("0 -- 1"));
        assert!(dot.contains("style=filled"));
    }
}
