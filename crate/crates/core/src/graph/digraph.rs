use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A loop-free digraph on the vertices `1..=n`.
///
/// Arcs are kept sorted and deduplicated. Out- and in-adjacency are stored
/// in compressed rows indexed by vertex (slot 0 is unused), so degree
/// queries are O(1) and neighbour lists are sorted slices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_start: Vec<usize>,
    out_adj: Vec<usize>,
    in_start: Vec<usize>,
    in_adj: Vec<usize>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in arcs {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    // `arcs` must be sorted, deduplicated, loop-free and in range.
    pub(crate) fn from_sorted(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        let mut out_start = vec![0; n + 2];
        let mut in_count = vec![0; n + 2];
        for &(u, v) in &arcs {
            out_start[u + 1] += 1;
            in_count[v + 1] += 1;
        }
        for v in 1..=n + 1 {
            out_start[v] += out_start[v - 1];
            in_count[v] += in_count[v - 1];
        }
        let out_adj = arcs.iter().map(|&(_, v)| v).collect();
        let in_start = in_count.clone();
        let mut fill = in_count;
        let mut in_adj = vec![0; arcs.len()];
        // arcs are sorted by source, so each in-list comes out sorted
        for &(u, v) in &arcs {
            in_adj[fill[v]] = u;
            fill[v] += 1;
        }
        Self {
            n,
            arcs,
            out_start,
            out_adj,
            in_start,
            in_adj,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[self.out_start[v]..self.out_start[v + 1]]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[self.in_start[v]..self.in_start[v + 1]]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_start[v + 1] - self.out_start[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_start[v + 1] - self.in_start[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.out_neighbors(u).binary_search(&v).is_ok()
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| self.has_arc(v, u))
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.out_degree(v) == 0 && self.in_degree(v) == 0
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        let mut arcs: Vec<_> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        Self::from_sorted(self.n, arcs)
    }

    /// Subdigraph induced by `vertices`, relabelled `1..=k` in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut label = vec![0; self.n + 1];
        for (i, &v) in vertices.iter().enumerate() {
            label[v] = i + 1;
        }
        let mut arcs = Vec::new();
        for &v in vertices {
            for &w in self.out_neighbors(v) {
                if label[w] != 0 {
                    arcs.push((label[v], label[w]));
                }
            }
        }
        arcs.sort_unstable();
        Self::from_sorted(vertices.len(), arcs)
    }

    /// Relabels vertex `v` as `perm[v - 1]`; `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n, "permutation has the wrong length");
        let mut arcs: Vec<_> = self
            .arcs
            .iter()
            .map(|&(u, v)| (perm[u - 1], perm[v - 1]))
            .collect();
        arcs.sort_unstable();
        Self::from_sorted(self.n, arcs)
    }

    /// Same arcs, with vertices `n+1..=n_new` appended as isolated vertices.
    pub fn with_vertex_count(&self, n_new: usize) -> Result<Digraph> {
        Digraph::new(n_new, self.arcs.iter().copied())
    }

    pub fn max_out_degree(&self) -> usize {
        self.vertices().map(|v| self.out_degree(v)).max().unwrap_or(0)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, {:?})", self.n, self.arcs)
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} arcs=", self.n)?;
        let arcs: Vec<String> = self.arcs.iter().map(|(u, v)| format!("{u}->{v}")).collect();
        write!(f, "{{{}}}", arcs.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct DigraphRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Serialize for Digraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DigraphRepr {
            n: self.n,
            arcs: self.arcs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = DigraphRepr::deserialize(d)?;
        Digraph::new(repr.n, repr.arcs).map_err(serde::de::Error::custom)
    }
}

/// A digraph whose arc set is symmetric, viewed as an undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph(Digraph);

impl Graph {
    /// Builds the graph with the given undirected edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arcs: Vec<_> = edges.into_iter().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
        Ok(Graph(Digraph::new(n, arcs)?))
    }

    pub fn try_from_digraph(d: Digraph) -> Result<Self> {
        if let Some(&(u, v)) = d.arcs().iter().find(|&&(u, v)| !d.has_arc(v, u)) {
            return Err(Error::NotSymmetric(u, v));
        }
        Ok(Graph(d))
    }

    pub(crate) fn from_symmetric_unchecked(d: Digraph) -> Self {
        debug_assert!(d.is_symmetric());
        Graph(d)
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.0.out_neighbors(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.0.out_degree(v)
    }

    pub fn max_degree(&self) -> usize {
        self.0.max_out_degree()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.0.has_arc(u, v)
    }

    pub fn edge_count(&self) -> usize {
        self.0.arc_count() / 2
    }

    /// Edges `{u, v}` reported as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.arcs().iter().copied().filter(|&(u, v)| u < v)
    }

    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph(self.0.induced(vertices))
    }

    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph(self.0.relabel(perm))
    }

    pub fn is_connected(&self) -> bool {
        crate::graph::components::is_weakly_connected(&self.0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        write!(f, "Graph(n={}, {:?})", self.n(), edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "n={} edges={{{}}}", self.n(), edges.join(","))
    }
}

impl From<Graph> for Digraph {
    fn from(g: Graph) -> Self {
        g.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validates_arcs() {
        assert_eq!(Digraph::new(2, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Digraph::new(2, [(1, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        );
        let d = Digraph::new(3, [(2, 3), (1, 2), (1, 2)]).unwrap();
        assert_eq!(d.arcs(), &[(1, 2), (2, 3)]);
        assert_eq!(d.out_neighbors(2), &[3]);
        assert_eq!(d.in_neighbors(2), &[1]);
        assert_eq!(d.in_degree(3), 1);
        assert!(d.has_arc(1, 2) && !d.has_arc(2, 1));
    }

    #[test]
    fn induced_and_relabel() {
        let d = Digraph::new(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let sub = d.induced(&[2, 3, 4]);
        assert_eq!(sub.arcs(), &[(1, 2), (2, 3)]);
        let r = d.relabel(&[2, 3, 4, 1]);
        assert_eq!(r.arcs(), &[(1, 2), (2, 3), (3, 4), (4, 1)]);
    }

    #[test]
    fn graph_requires_symmetry() {
        let d = Digraph::new(2, [(1, 2)]).unwrap();
        assert_eq!(Graph::try_from_digraph(d), Err(Error::NotSymmetric(1, 2)));
        let g = Graph::from_edges(3, [(1, 2), (3, 2)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
        assert_eq!(g.degree(2), 2);
    }
}
