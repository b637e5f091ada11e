//! Elementary minor operations. Results are relabelled onto `1..=n'` keeping
//! the relative order of surviving vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn delete_vertex(g: &Graph, v: usize) -> Result<Graph> {
    if v == 0 || v > g.n() {
        return Err(Error::MissingVertex(v));
    }
    let keep: Vec<usize> = (1..=g.n()).filter(|&w| w != v).collect();
    Ok(g.induced(&keep))
}

pub fn delete_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    let key = (u.min(v), u.max(v));
    Graph::from_edges(g.n(), g.edges().filter(|&e| e != key))
}

/// Merges `v` into `u`; the merged vertex takes the smaller label.
pub fn contract_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    let (keep, gone) = (u.min(v), u.max(v));
    let label = |w: usize| {
        let w = if w == gone { keep } else { w };
        if w > gone {
            w - 1
        } else {
            w
        }
    };
    let edges = g
        .edges()
        .map(|(a, b)| (label(a), label(b)))
        .filter(|(a, b)| a != b);
    Graph::from_edges(g.n() - 1, edges)
}
