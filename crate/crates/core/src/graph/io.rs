//! Edge-list text format.
//!
//! Lines starting with `#` and blank lines are ignored. The first data line
//! holds the vertex count `n`; each further line holds one arc `u v` with
//! 1-based, whitespace-separated endpoints.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Digraph;

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut n = None;
    let mut arcs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(n) = n else {
            if fields.len() != 1 {
                return Err(parse_err(format!("expected vertex count, found {line:?}")));
            }
            let count = fields[0]
                .parse::<usize>()
                .map_err(|_| parse_err(format!("invalid vertex count {:?}", fields[0])))?;
            n = Some(count);
            continue;
        };
        if fields.len() != 2 {
            return Err(parse_err(format!("expected \"u v\", found {line:?}")));
        }
        let mut ends = [0usize; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            *slot = field
                .parse()
                .map_err(|_| parse_err(format!("invalid vertex {field:?}")))?;
        }
        let [u, v] = ends;
        if u == v {
            return Err(parse_err(format!("loop at vertex {u}")));
        }
        for w in ends {
            if w == 0 || w > n {
                return Err(parse_err(format!("vertex {w} out of range 1..={n}")));
            }
        }
        arcs.push((u, v));
    }
    let n = n.ok_or_else(|| Error::Parse {
        line: text.lines().count().max(1),
        message: "missing vertex count".into(),
    })?;
    Digraph::new(n, arcs)
}

/// Writes `d` in edge-list form, arcs in lexicographic order.
pub fn write_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", d.n()).unwrap();
    for &(u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_edge_lists() {
        let d = parse_digraph("3\n1 2\n2 3").unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(d.arcs(), &[(1, 2), (2, 3)]);

        let d = parse_digraph("# comment\n\n3\n1 2\n1 2\n").unwrap();
        assert_eq!(d.arcs(), &[(1, 2)]);
    }

    #[test]
    fn reports_the_offending_line() {
        let err = parse_digraph("2\n1 1").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                message: "loop at vertex 1".into()
            }
        );
        assert!(err.to_string().contains("loop at vertex 1"));

        match parse_digraph("3\n1 2\n# c\n1 4") {
            Err(Error::Parse { line: 4, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_digraph("3\n1 x"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_digraph("3\n1 2 3"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_digraph("# only\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn writer_is_deterministic() {
        let d = parse_digraph("4\n3 1\n1 2\n2 1").unwrap();
        assert_eq!(write_digraph(&d), "4\n1 2\n2 1\n3 1\n");
        assert_eq!(parse_digraph(&write_digraph(&d)).unwrap(), d);
    }
}
