//! Exhaustive digraph enumeration and small-instance isomorphism.
//!
//! Canonical forms are exact: vertices are first coloured by an iterated
//! degree refinement (an isomorphism invariant), then the adjacency code is
//! minimised over every ordering that lists the colour classes in order.

use std::collections::BTreeMap;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::graph::components::is_weakly_connected;
use crate::graph::{Digraph, Graph};

/// Largest `n` for labelled enumeration (`2^(n(n-1))` digraphs).
pub const MAX_LABELED_N: usize = 5;
/// Largest `n` for isomorphism-class enumeration of digraphs.
pub const MAX_ISO_DIGRAPH_N: usize = 5;
/// Largest `n` for isomorphism-class enumeration of graphs.
pub const MAX_ISO_GRAPH_N: usize = 8;
/// Largest `n` accepted by the canonical form.
pub const MAX_CANON_N: usize = 8;

fn arc_slots(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|u| (1..=n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect()
}

/// Every labelled digraph on `n` vertices, in order of the arc bitmask.
pub fn labeled_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if n > MAX_LABELED_N {
        return Err(Error::TooLarge {
            what: "labelled digraph enumeration",
            n,
            limit: MAX_LABELED_N,
        });
    }
    let slots = arc_slots(n);
    let total: u64 = 1 << slots.len();
    Ok((0..total).map(move |mask| {
        let arcs = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &a)| a)
            .collect();
        Digraph::from_sorted(n, arcs)
    }))
}

/// Labelled stream, or one canonical representative per isomorphism class.
pub fn enumerate_digraphs(n: usize, up_to_iso: bool) -> Result<Box<dyn Iterator<Item = Digraph>>> {
    if up_to_iso {
        Ok(Box::new(digraphs_up_to_iso(n)?.into_iter()))
    } else {
        Ok(Box::new(labeled_digraphs(n)?))
    }
}

/// Canonical representatives of all digraphs on `n` vertices, sorted by
/// canonical code.
pub fn digraphs_up_to_iso(n: usize) -> Result<Vec<Digraph>> {
    if n > MAX_ISO_DIGRAPH_N {
        return Err(Error::TooLarge {
            what: "digraph isomorphism-class enumeration",
            n,
            limit: MAX_ISO_DIGRAPH_N,
        });
    }
    Ok(extend_classes(n, false))
}

/// Canonical representatives of the connected graphs on `n` vertices.
pub fn connected_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ISO_GRAPH_N {
        return Err(Error::TooLarge {
            what: "graph isomorphism-class enumeration",
            n,
            limit: MAX_ISO_GRAPH_N,
        });
    }
    Ok(extend_classes(n, true)
        .into_iter()
        .filter(is_weakly_connected)
        .map(Graph::from_symmetric_unchecked)
        .collect())
}

// Builds classes on k vertices from classes on k-1 by adding a vertex with
// every possible neighbourhood; deduplicates by canonical code.
fn extend_classes(n: usize, symmetric: bool) -> Vec<Digraph> {
    let mut classes = vec![Digraph::empty(0)];
    for k in 1..=n {
        let mut seen = FxHashSet::default();
        let mut next = BTreeMap::new();
        let old = k - 1;
        let choices: u64 = if symmetric { 1 << old } else { 1 << (2 * old) };
        for base in &classes {
            for mask in 0..choices {
                let mut arcs = base.arcs().to_vec();
                for v in 1..=old {
                    let bit = |i: usize| mask >> i & 1 == 1;
                    if symmetric {
                        if bit(v - 1) {
                            arcs.push((v, k));
                            arcs.push((k, v));
                        }
                    } else {
                        if bit(2 * (v - 1)) {
                            arcs.push((v, k));
                        }
                        if bit(2 * (v - 1) + 1) {
                            arcs.push((k, v));
                        }
                    }
                }
                arcs.sort_unstable();
                let d = Digraph::from_sorted(k, arcs);
                let canon = canonical_form(&d).expect("size within limit");
                if seen.insert(canon.code) {
                    next.insert(canon.code, canon.to_digraph());
                }
            }
        }
        classes = next.into_values().collect();
    }
    classes
}

/// Minimal adjacency code over admissible orderings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

impl CanonicalForm {
    /// The digraph whose vertex `i` is the `i`-th vertex of the ordering.
    pub fn to_digraph(&self) -> Digraph {
        let n = self.n;
        let total = n * n.saturating_sub(1);
        let mut arcs = Vec::new();
        let mut bit = total;
        for i in 0..n {
            for j in 0..i {
                bit -= 1;
                if self.code >> bit & 1 == 1 {
                    arcs.push((j + 1, i + 1));
                }
                bit -= 1;
                if self.code >> bit & 1 == 1 {
                    arcs.push((i + 1, j + 1));
                }
            }
        }
        Digraph::new(n, arcs).expect("decoded arcs are valid")
    }
}

// Iterated colour refinement on (out-degree, in-degree); returns a colour per
// vertex (0-based vertex index).
fn refine(d: &Digraph) -> Vec<usize> {
    let n = d.n();
    let mut colour: Vec<usize> = {
        let sig: Vec<(usize, usize)> = (1..=n).map(|v| (d.out_degree(v), d.in_degree(v))).collect();
        rank(&sig)
    };
    let mut classes = count_distinct(&colour);
    loop {
        let sig: Vec<(usize, Vec<usize>, Vec<usize>)> = (1..=n)
            .map(|v| {
                let mut outs: Vec<usize> = d.out_neighbors(v).iter().map(|&w| colour[w - 1]).collect();
                let mut ins: Vec<usize> = d.in_neighbors(v).iter().map(|&w| colour[w - 1]).collect();
                outs.sort_unstable();
                ins.sort_unstable();
                (colour[v - 1], outs, ins)
            })
            .collect();
        let next = rank(&sig);
        let next_classes = count_distinct(&next);
        colour = next;
        if next_classes == classes {
            return colour;
        }
        classes = next_classes;
    }
}

fn rank<T: Ord + Clone>(sig: &[T]) -> Vec<usize> {
    let mut sorted = sig.to_vec();
    sorted.sort();
    sorted.dedup();
    sig.iter()
        .map(|s| sorted.binary_search(s).expect("present"))
        .collect()
}

fn count_distinct(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    let n = d.n();
    if n > MAX_CANON_N {
        return Err(Error::TooLarge {
            what: "canonical form",
            n,
            limit: MAX_CANON_N,
        });
    }
    let colour = refine(d);
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();
    let mut adj = [[false; MAX_CANON_N]; MAX_CANON_N];
    for &(u, v) in d.arcs() {
        adj[u - 1][v - 1] = true;
    }
    let mut search = Search {
        n,
        adj,
        colour,
        slot_colour,
        order: Vec::with_capacity(n),
        used: [false; MAX_CANON_N],
        best: u64::MAX,
        total_bits: n * n.saturating_sub(1),
    };
    search.run(0);
    let code = if n <= 1 { 0 } else { search.best };
    Ok(CanonicalForm { n, code })
}

struct Search {
    n: usize,
    adj: [[bool; MAX_CANON_N]; MAX_CANON_N],
    colour: Vec<usize>,
    slot_colour: Vec<usize>,
    order: Vec<usize>,
    used: [bool; MAX_CANON_N],
    best: u64,
    total_bits: usize,
}

impl Search {
    // bits for position i: for each j < i, arc (j, i) then arc (i, j)
    fn run(&mut self, prefix: u64) {
        let i = self.order.len();
        if i == self.n {
            self.best = self.best.min(prefix);
            return;
        }
        for v in 0..self.n {
            if self.used[v] || self.colour[v] != self.slot_colour[i] {
                continue;
            }
            let mut code = prefix;
            for &u in &self.order {
                code = code << 1 | self.adj[u][v] as u64;
                code = code << 1 | self.adj[v][u] as u64;
            }
            let len = (i + 1) * i;
            let best_prefix = if self.best == u64::MAX {
                u64::MAX
            } else {
                self.best >> (self.total_bits - len)
            };
            if code > best_prefix {
                continue;
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(code);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Isomorphism test for digraphs with at most [`MAX_CANON_N`] vertices.
pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> Result<bool> {
    if a.n() != b.n() || a.arc_count() != b.arc_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    // plain permutation search, independent of the refinement
    fn iso_brute(a: &Digraph, b: &Digraph) -> bool {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    out.push(q);
                }
            }
            out
        }
        a.n() == b.n() && perms(a.n()).iter().any(|p| &a.relabel(p) == b)
    }

    #[test]
    fn small_counts() {
        assert_eq!(labeled_digraphs(2).unwrap().count(), 4);
        assert_eq!(labeled_digraphs(3).unwrap().count(), 64);
        assert_eq!(digraphs_up_to_iso(2).unwrap().len(), 3);
        assert_eq!(digraphs_up_to_iso(3).unwrap().len(), 16);
        assert_eq!(digraphs_up_to_iso(4).unwrap().len(), 218);
        assert!(labeled_digraphs(6).is_err());
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| connected_graphs_up_to_iso(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn canonical_form_agrees_with_brute_force_on_n3() {
        let all: Vec<Digraph> = labeled_digraphs(3).unwrap().collect();
        for a in &all {
            for b in &all {
                assert_eq!(is_isomorphic(a, b).unwrap(), iso_brute(a, b), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn relabelled_graphs_are_isomorphic() {
        let t = families::theta0().into_digraph();
        let perm = [3, 7, 1, 5, 2, 6, 4];
        assert!(is_isomorphic(&t, &t.relabel(&perm)).unwrap());
        let c7 = families::cycle(7).into_digraph();
        assert!(!is_isomorphic(&t, &c7).unwrap());
        let cf = canonical_form(&t).unwrap();
        assert!(is_isomorphic(&cf.to_digraph(), &t).unwrap());
    }
}
