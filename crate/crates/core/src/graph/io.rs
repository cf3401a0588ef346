//! Edge-list text format.
//!
//! ```text
//! # family: cycle 5
//! 5 5
//! 0 1
//! 0 4
//! ...
//! ```
//!
//! Line 1 (after comments) is `n m`, followed by `m` lines `u v` with `u < v`
//! in ascending lexicographic order. Blank lines and `#` comments are ignored,
//! except that a `# family: <name> <params...>` comment is picked up as
//! metadata when present.

use std::fmt::Write as _;

use super::{Graph, GraphError, Vertex};

/// Provenance of a generated graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMeta {
    pub family: String,
    pub params: Vec<usize>,
}

pub fn write_edge_list(g: &Graph, meta: Option<&GraphMeta>) -> String {
    let mut out = String::new();
    if let Some(meta) = meta {
        let _ = write!(out, "# family: {}", meta.family);
        for p in &meta.params {
            let _ = write!(out, " {p}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<(Graph, Option<GraphMeta>), GraphError> {
    let mut meta = None;
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(rest) = comment.trim().strip_prefix("family:") {
                meta = Some(parse_meta(rest, line_no)?);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let (a, b) = parse_pair(line, line_no)?;
        match header {
            None => header = Some((a, b)),
            Some(_) => edges.push((a, b)),
        }
    }

    let (n, m) = header.ok_or(GraphError::Parse {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok((Graph::new(n, &edges)?, meta))
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        it.next()
            .ok_or_else(|| GraphError::Parse {
                line: line_no,
                msg: "expected two integers".into(),
            })?
            .parse()
            .map_err(|e| GraphError::Parse {
                line: line_no,
                msg: format!("{e}"),
            })
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(GraphError::Parse {
            line: line_no,
            msg: "trailing tokens".into(),
        });
    }
    Ok(pair)
}

fn parse_meta(rest: &str, line_no: usize) -> Result<GraphMeta, GraphError> {
    let mut it = rest.split_whitespace();
    let family = it
        .next()
        .ok_or(GraphError::Parse {
            line: line_no,
            msg: "empty family comment".into(),
        })?
        .to_string();
    let params = it
        .map(|t| {
            t.parse().map_err(|_| GraphError::Parse {
                line: line_no,
                msg: format!("bad family parameter {t:?}"),
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(GraphMeta { family, params })
}

/// Sidecar with one `index text` line per vertex (labels, reduction roles).
pub fn write_sidecar<S: AsRef<str>>(items: &[S]) -> String {
    let mut out = String::new();
    for (i, s) in items.iter().enumerate() {
        let _ = writeln!(out, "{i} {}", s.as_ref());
    }
    out
}

pub fn parse_sidecar(text: &str, n: usize) -> Result<Vec<String>, GraphError> {
    let mut out = vec![None; n];
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (i, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let i: usize = i.parse().map_err(|_| GraphError::Parse {
            line: idx + 1,
            msg: format!("bad vertex index {i:?}"),
        })?;
        if i >= n {
            return Err(GraphError::VertexOutOfRange { v: i, n });
        }
        out[i] = Some(rest.trim().to_string());
    }
    let got = out.iter().filter(|s| s.is_some()).count();
    if got != n {
        return Err(GraphError::LabelCount { expected: n, got });
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_meta() {
        let g = Graph::new(4, &[(2, 3), (0, 1), (1, 2)]).unwrap();
        let meta = GraphMeta {
            family: "path".into(),
            params: vec![4],
        };
        let text = write_edge_list(&g, Some(&meta));
        assert_eq!(text, "# family: path 4\n4 3\n0 1\n1 2\n2 3\n");
        let (h, m) = parse_edge_list(&text).unwrap();
        assert_eq!(h, g);
        assert_eq!(m, Some(meta));
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let (g, meta) = parse_edge_list("# hi\n\n3 2\n# mid\n0 1\n\n1 2\n").unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(meta, None);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert_eq!(parse_edge_list("2 1\n1 1\n"), Err(GraphError::SelfLoop(1)));
        assert!(matches!(parse_edge_list(""), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn sidecar_round_trip() {
        let labels = vec!["(00,0)".to_string(), "hub".into()];
        let text = write_sidecar(&labels);
        assert_eq!(parse_sidecar(&text, 2).unwrap(), labels);
        assert!(parse_sidecar("0 a\n", 2).is_err());
    }
}
