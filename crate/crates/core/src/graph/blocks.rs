//! Biconnected blocks and cut vertices (Hopcroft–Tarjan, iterative).

use crate::graph::Graph;

/// Blocks of a graph.
///
/// `K_2` is a block of its own and counts as non-separable; an isolated
/// vertex forms a one-vertex block.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    // block i is members[offsets[i]..offsets[i + 1]]
    members: Vec<u32>,
    offsets: Vec<u32>,
    is_cut: Vec<bool>,
    // DFS tree parent and whether the tree edge to the parent is a bridge
    parent: Vec<u32>,
    bridge_to_parent: Vec<bool>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Vertex set of block `i`, sorted. Blocks are numbered in the order the
    /// depth-first search completes them.
    pub fn block(&self, i: usize) -> Vec<usize> {
        let (a, b) = (self.offsets[i] as usize, self.offsets[i + 1] as usize);
        self.members[a..b].iter().map(|&v| v as usize).collect()
    }

    pub fn block_size(&self, i: usize) -> usize {
        (self.offsets[i + 1] - self.offsets[i]) as usize
    }

    pub fn blocks(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(|i| self.block(i))
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        (1..self.is_cut.len()).filter(|&v| self.is_cut[v]).collect()
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.is_cut[v]
    }

    pub fn max_block_size(&self) -> usize {
        self.offsets.windows(2).map(|w| (w[1] - w[0]) as usize).max().unwrap_or(0)
    }

    /// Whether `{u, v}` is an edge whose removal disconnects its component.
    pub fn is_bridge(&self, u: usize, v: usize) -> bool {
        (self.parent[v] as usize == u && self.bridge_to_parent[v])
            || (self.parent[u] as usize == v && self.bridge_to_parent[u])
    }
}

#[derive(Clone, Copy, Default)]
struct Slot {
    disc: u32, // 0 = unvisited
    low: u32,
    next: u32, // next neighbour to scan
}

pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    assert!(n < u32::MAX as usize, "graph too large for block decomposition");
    let mut st = vec![Slot::default(); n + 1];
    let mut parent = vec![0u32; n + 1];
    let mut bridge_to_parent = vec![false; n + 1];
    let mut is_cut = vec![false; n + 1];
    // vertices in discovery order whose block is not yet complete
    let mut pending: Vec<u32> = Vec::with_capacity(n);
    let mut frames: Vec<u32> = Vec::with_capacity(n);
    let mut members: Vec<u32> = Vec::with_capacity(n + 1);
    let mut offsets: Vec<u32> = vec![0];
    let mut time = 0u32;

    for root in 1..=n {
        if st[root].disc != 0 {
            continue;
        }
        time += 1;
        st[root].disc = time;
        st[root].low = time;
        if g.degree(root) == 0 {
            members.push(root as u32);
            offsets.push(members.len() as u32);
            continue;
        }
        let mut root_children = 0;
        frames.push(root as u32);
        while let Some(&v) = frames.last() {
            let v = v as usize;
            let nbrs = g.neighbors(v);
            let slot = st[v].next as usize;
            if slot < nbrs.len() {
                let w = nbrs[slot];
                st[v].next += 1;
                if st[w].disc == 0 {
                    time += 1;
                    st[w].disc = time;
                    st[w].low = time;
                    parent[w] = v as u32;
                    pending.push(w as u32);
                    if v == root {
                        root_children += 1;
                    }
                    frames.push(w as u32);
                } else if w as u32 != parent[v] {
                    st[v].low = st[v].low.min(st[w].disc);
                }
                continue;
            }
            frames.pop();
            if v == root {
                continue;
            }
            let p = parent[v] as usize;
            let low_v = st[v].low;
            st[p].low = st[p].low.min(low_v);
            if low_v >= st[p].disc {
                if p != root {
                    is_cut[p] = true;
                }
                if low_v > st[p].disc {
                    bridge_to_parent[v] = true;
                }
                let start = members.len();
                members.push(p as u32);
                while let Some(x) = pending.pop() {
                    members.push(x);
                    if x as usize == v {
                        break;
                    }
                }
                members[start..].sort_unstable();
                offsets.push(members.len() as u32);
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    BlockDecomposition {
        members,
        offsets,
        is_cut,
        parent,
        bridge_to_parent,
    }
}

/// Exactly one block covering every vertex (so `K_1` and `K_2` qualify).
pub fn is_nonseparable(g: &Graph) -> bool {
    let bd = blocks(g);
    bd.len() == 1 && bd.block_size(0) == g.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::components::weak_components;
    use crate::graph::families;

    // a vertex is a cut vertex iff deleting it raises the component count
    fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
        let base = weak_components(g.as_digraph()).len();
        (1..=g.n())
            .filter(|&v| {
                let rest: Vec<usize> = (1..=g.n()).filter(|&w| w != v).collect();
                weak_components(g.induced(&rest).as_digraph()).len() > base - 1 + 1
            })
            .collect()
    }

    fn sorted_blocks(bd: &BlockDecomposition) -> Vec<Vec<usize>> {
        let mut all: Vec<Vec<usize>> = bd.blocks().collect();
        all.sort();
        all
    }

    #[test]
    fn cycle_is_one_block() {
        let c5 = families::cycle(5);
        let bd = blocks(&c5);
        assert_eq!(sorted_blocks(&bd), [vec![1, 2, 3, 4, 5]]);
        assert!(bd.cut_vertices().is_empty());
        assert!(is_nonseparable(&c5));
    }

    #[test]
    fn q6_blocks() {
        let q6 = families::q_graph(6);
        let bd = blocks(&q6);
        assert_eq!(
            sorted_blocks(&bd),
            [vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5, 6]]
        );
        assert_eq!(bd.cut_vertices(), &[2, 3, 4]);
        assert_eq!(brute_cut_vertices(&q6), vec![2, 3, 4]);
        assert!(bd.is_bridge(3, 4) && !bd.is_bridge(5, 6));
    }

    #[test]
    fn path_blocks_are_edges() {
        let p4 = families::path(4);
        let bd = blocks(&p4);
        assert_eq!(bd.len(), 3);
        assert!(bd.blocks().all(|b| b.len() == 2));
        assert!(!is_nonseparable(&p4));
        assert!(is_nonseparable(&families::path(2)));
        assert!(is_nonseparable(&families::path(1)));
    }

    #[test]
    fn cut_vertices_match_brute_force_on_zoo() {
        for g in [
            families::bull(),
            families::e_graph(),
            families::theta0(),
            families::r_graph(7),
            families::star(4),
            families::complete(5),
        ] {
            assert_eq!(blocks(&g).cut_vertices(), brute_cut_vertices(&g), "{g:?}");
        }
    }
}
