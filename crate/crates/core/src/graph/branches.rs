//! Branches: maximal paths of degree-2 vertices, and the `L ⊕_q R`
//! decomposition a separating branch induces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::blocks::BlockDecomposition;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    /// Path order, oriented so the first vertex is smaller than the last.
    pub vertices: Vec<usize>,
    /// Non-branch neighbours of the first and last vertex.
    pub anchors: (usize, usize),
    /// One anchor is a leaf of the graph.
    pub terminal: bool,
    /// The branch edges are bridges, so removing the branch leaves two
    /// components `L` and `R`.
    pub separating: bool,
}

impl Branch {
    /// Number of vertices, the `q` of `L ⊕_q R`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// All branches of a connected graph, sorted longest first with ties broken
/// by the lexicographically smallest vertex list.
pub fn branches(g: &Graph, bd: &BlockDecomposition) -> Result<Vec<Branch>> {
    let n = g.n();
    if n > 0 && (1..=n).all(|v| g.degree(v) == 2) {
        return Err(Error::NoBranch);
    }
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for start in 1..=n {
        if seen[start] || g.degree(start) != 2 {
            continue;
        }
        seen[start] = true;
        // walk both directions from `start`
        let nb = g.neighbors(start);
        let (back, back_anchor) = walk(g, &mut seen, start, nb[0]);
        let (fwd, fwd_anchor) = walk(g, &mut seen, start, nb[1]);
        let mut vertices: Vec<usize> = back.into_iter().rev().collect();
        vertices.push(start);
        vertices.extend(fwd);
        let mut anchors = (back_anchor, fwd_anchor);
        if vertices.first() > vertices.last()
            || (vertices.len() == 1 && anchors.0 > anchors.1)
        {
            vertices.reverse();
            anchors = (anchors.1, anchors.0);
        }
        let terminal = g.degree(anchors.0) == 1 || g.degree(anchors.1) == 1;
        let separating = bd.is_bridge(anchors.0, vertices[0]);
        out.push(Branch {
            vertices,
            anchors,
            terminal,
            separating,
        });
    }
    out.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    Ok(out)
}

// Follows degree-2 vertices from `from` through `next`, returning the
// visited degree-2 vertices and the first vertex of other degree.
fn walk(g: &Graph, seen: &mut [bool], from: usize, next: usize) -> (Vec<usize>, usize) {
    let mut path = Vec::new();
    let (mut prev, mut cur) = (from, next);
    while g.degree(cur) == 2 && !seen[cur] {
        seen[cur] = true;
        path.push(cur);
        let nb = g.neighbors(cur);
        let nxt = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = nxt;
    }
    (path, cur)
}

/// Longest branch per the ordering of [`branches`].
pub fn longest_branch(g: &Graph, bd: &BlockDecomposition) -> Result<Option<Branch>> {
    Ok(branches(g, bd)?.into_iter().next())
}

/// `G = L ⊕_q R` read off a separating branch, with `|L| <= |R|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OplusSplit {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// Attachment vertices `l_1` and `r_1`.
    pub left_attach: usize,
    pub right_attach: usize,
    pub q: usize,
}

impl OplusSplit {
    pub fn m(&self) -> usize {
        self.left.len()
    }

    pub fn s(&self) -> usize {
        self.right.len()
    }
}

/// Splits `g` around a separating branch; `None` if the branch lies in a
/// non-separable block.
pub fn split_at_branch(g: &Graph, branch: &Branch) -> Option<OplusSplit> {
    if !branch.separating {
        return None;
    }
    let n = g.n();
    let mut blocked = vec![false; n + 1];
    for &v in &branch.vertices {
        blocked[v] = true;
    }
    let side = |root: usize, blocked: &mut [bool]| {
        let mut part = vec![root];
        blocked[root] = true;
        let mut i = 0;
        while i < part.len() {
            let v = part[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !blocked[w] {
                    blocked[w] = true;
                    part.push(w);
                }
            }
        }
        part.sort_unstable();
        part
    };
    let (a, b) = branch.anchors;
    let mut left = side(a, &mut blocked);
    let mut right = side(b, &mut blocked);
    let (mut la, mut ra) = (a, b);
    if left.len() > right.len() {
        std::mem::swap(&mut left, &mut right);
        std::mem::swap(&mut la, &mut ra);
    }
    Some(OplusSplit {
        left,
        right,
        left_attach: la,
        right_attach: ra,
        q: branch.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::blocks::blocks;
    use crate::graph::families;

    fn all(g: &Graph) -> Result<Vec<Branch>> {
        branches(g, &blocks(g))
    }

    #[test]
    fn q8_longest_branch() {
        let q8 = families::q_graph(8);
        let bs = all(&q8).unwrap();
        assert_eq!(bs[0].vertices, vec![2, 3, 4, 5]);
        assert_eq!(bs[0].len(), 4);
        assert!(bs[0].terminal && bs[0].separating);
        // the triangle's two degree-2 vertices form a non-separating branch
        assert_eq!(bs[1].vertices, vec![7, 8]);
        assert!(!bs[1].separating && !bs[1].terminal);
        let split = split_at_branch(&q8, &bs[0]).unwrap();
        assert_eq!((split.m(), split.s(), split.q), (1, 3, 4));
        assert_eq!(split_at_branch(&q8, &bs[1]), None);
    }

    #[test]
    fn path_branch_is_interior() {
        let p5 = families::path(5);
        let bs = all(&p5).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].vertices, vec![2, 3, 4]);
        assert!(bs[0].terminal);
    }

    #[test]
    fn oplus_figure_branch() {
        let k31 = families::star(3);
        let c4 = families::cycle(4);
        // center of K_{3,1} is vertex 4; any vertex of C_4 has degree 2
        let g = families::oplus(&k31, 4, 4, &c4, 1).unwrap();
        let bs = all(&g.graph).unwrap();
        assert_eq!(bs[0].vertices, g.path);
        assert!(!bs[0].terminal && bs[0].separating);
        let split = split_at_branch(&g.graph, &bs[0]).unwrap();
        assert_eq!((split.m(), split.s(), split.q), (4, 4, 4));
    }

    #[test]
    fn cycle_has_no_branch_decomposition() {
        assert_eq!(all(&families::cycle(6)), Err(Error::NoBranch));
    }
}
