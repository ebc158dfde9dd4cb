//! Line-oriented graph text format.
//!
//! ```text
//! cubegraph v1 induced-subcube n=3 |V|=5
//! 000
//! 001
//! ...
//! ```
//!
//! Explicit-edge graphs append a line `edges` followed by one `i j` pair per
//! line (0-based, `i < j`). LF line endings, no trailing whitespace.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::graph::{GraphMode, LabeledGraph};
use super::label::BitLabel;
use crate::error::{Error, Result};

pub fn to_text(g: &LabeledGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "cubegraph v1 {} n={} |V|={}",
        g.mode(),
        g.dimension(),
        g.num_vertices()
    );
    for l in g.labels() {
        let _ = writeln!(out, "{l}");
    }
    if g.mode() == GraphMode::ExplicitEdges {
        out.push_str("edges\n");
        for (i, j) in g.edges() {
            let _ = writeln!(out, "{i} {j}");
        }
    }
    out
}

pub fn from_text(text: &str) -> Result<LabeledGraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let fields: Vec<&str> = header.split(' ').collect();
    if fields.len() != 5 || fields[0] != "cubegraph" || fields[1] != "v1" {
        return Err(parse_err(1, "expected `cubegraph v1 <mode> n=<dim> |V|=<count>`"));
    }
    let mode = match fields[2] {
        "induced-subcube" => GraphMode::InducedSubcube,
        "explicit-edges" => GraphMode::ExplicitEdges,
        other => return Err(parse_err(1, &format!("unknown mode `{other}`"))),
    };
    let dim: usize = field(fields[3], "n=")?;
    let count: usize = field(fields[4], "|V|=")?;

    let mut labels = Vec::with_capacity(count);
    for _ in 0..count {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_err(labels.len() + 2, "missing label line"))?;
        let label: BitLabel = line.parse().map_err(|e| relocate(e, no))?;
        if label.len() != dim {
            return Err(parse_err(no, &format!("label `{line}` does not have length {dim}")));
        }
        labels.push(label);
    }

    match mode {
        GraphMode::InducedSubcube => {
            if let Some((no, _)) = lines.find(|(_, l)| !l.is_empty()) {
                return Err(parse_err(no, "unexpected content after labels"));
            }
            let before: Vec<BitLabel> = labels.clone();
            let g = LabeledGraph::induced(dim, labels)?;
            if g.labels() != before.as_slice() {
                return Err(parse_err(2, "labels must be listed in lexicographic order"));
            }
            Ok(g)
        }
        GraphMode::ExplicitEdges => {
            match lines.next() {
                Some((_, "edges")) => {}
                Some((no, _)) => return Err(parse_err(no, "expected `edges`")),
                None => return Err(parse_err(count + 2, "missing `edges` line")),
            }
            let mut edges = Vec::new();
            for (no, line) in lines {
                if line.is_empty() {
                    continue;
                }
                let mut it = line.split(' ');
                let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                    return Err(parse_err(no, "expected `i j`"));
                };
                let i: usize = a.parse().map_err(|_| parse_err(no, "bad vertex index"))?;
                let j: usize = b.parse().map_err(|_| parse_err(no, "bad vertex index"))?;
                if i >= j {
                    return Err(parse_err(no, "edge pairs must satisfy i < j"));
                }
                edges.push((i, j));
            }
            LabeledGraph::explicit(dim, labels, edges)
        }
    }
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<LabeledGraph> {
    from_text(&fs::read_to_string(path)?)
}

pub fn write_graph(g: &LabeledGraph, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_text(g))?;
    Ok(())
}

fn field(s: &str, prefix: &str) -> Result<usize> {
    s.strip_prefix(prefix)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| parse_err(1, &format!("expected `{prefix}<integer>`, got `{s}`")))
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.to_string(),
    }
}

fn relocate(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_bipartite, fibonacci_cube};

    #[test]
    fn induced_text_is_bit_exact() {
        let g = fibonacci_cube(2).unwrap();
        assert_eq!(to_text(&g), "cubegraph v1 induced-subcube n=2 |V|=3\n00\n01\n10\n");
        let g0 = fibonacci_cube(0).unwrap();
        assert_eq!(to_text(&g0), "cubegraph v1 induced-subcube n=0 |V|=1\nε\n");
    }

    #[test]
    fn explicit_text_round_trip() {
        let g = complete_bipartite(1, 2).unwrap();
        let text = to_text(&g);
        assert_eq!(text, "cubegraph v1 explicit-edges n=2 |V|=3\n00\n01\n10\nedges\n0 1\n0 2\n");
        let back = from_text(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn rejects_malformed() {
        assert!(from_text("").is_err());
        assert!(from_text("cubegraph v2 induced-subcube n=1 |V|=1\n0\n").is_err());
        assert!(from_text("cubegraph v1 induced-subcube n=2 |V|=1\n0\n").is_err());
        assert!(from_text("cubegraph v1 induced-subcube n=1 |V|=2\n1\n0\n").is_err());
        assert!(from_text("cubegraph v1 explicit-edges n=1 |V|=2\n0\n1\nedges\n1 0\n").is_err());
    }
}
