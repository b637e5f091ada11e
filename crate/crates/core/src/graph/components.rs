//! Strong and weak components, condensation, terminal components and the
//! arc closure.

use crate::graph::{Digraph, Graph};

/// Iterative Tarjan over nodes `0..count`.
///
/// Returns `(component_of, component_count)`; components are numbered in
/// the order Tarjan completes them, which is a reverse topological order of
/// the condensation (sinks first).
pub(crate) fn tarjan<F, I>(count: usize, successors: F) -> (Vec<usize>, usize)
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; count];
    let mut low = vec![0; count];
    let mut on_stack = vec![false; count];
    let mut comp = vec![UNSEEN; count];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, I)> = Vec::new();
    let mut next_index = 0;
    let mut ncomp = 0;

    for root in 0..count {
        if index[root] != UNSEEN {
            continue;
        }
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, successors(root)));

        while let Some((v, iter)) = call.last_mut() {
            let v = *v;
            if let Some(w) = iter.next() {
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, successors(w)));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some((parent, _)) = call.last() {
                low[*parent] = low[*parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp[w] = ncomp;
                    if w == v {
                        break;
                    }
                }
                ncomp += 1;
            }
        }
    }
    (comp, ncomp)
}

/// A vertex partition, parts sorted internally and ordered by least vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    part_of: Vec<usize>,
    parts: Vec<Vec<usize>>,
}

impl Partition {
    // `raw[v - 1]` is an arbitrary label in `0..count` for vertex v
    fn from_labels(raw: &[usize], count: usize) -> Self {
        let n = raw.len();
        let mut relabel = vec![usize::MAX; count];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        let mut part_of = vec![usize::MAX; n + 1];
        for v in 1..=n {
            let r = raw[v - 1];
            if relabel[r] == usize::MAX {
                relabel[r] = parts.len();
                parts.push(Vec::new());
            }
            part_of[v] = relabel[r];
            parts[relabel[r]].push(v);
        }
        Partition { part_of, parts }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Index into [`parts`](Self::parts) of the part holding `v`.
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn same_part(&self, u: usize, v: usize) -> bool {
        self.part_of[u] == self.part_of[v]
    }
}

pub fn strong_components(d: &Digraph) -> Partition {
    let (raw, count) = tarjan(d.n(), |i| d.out_neighbors(i + 1).iter().map(|&w| w - 1));
    Partition::from_labels(&raw, count)
}

/// Strong components together with their induced subdigraphs (relabelled
/// `1..=k` in increasing vertex order).
pub fn strong_component_digraphs(d: &Digraph) -> Vec<(Vec<usize>, Digraph)> {
    strong_components(d)
        .parts()
        .iter()
        .map(|part| (part.clone(), d.induced(part)))
        .collect()
}

pub fn is_strongly_connected(d: &Digraph) -> bool {
    d.n() <= 1 || strong_components(d).len() == 1
}

pub fn is_acyclic(d: &Digraph) -> bool {
    strong_components(d).len() == d.n()
}

/// Adds `(b, a)` for every arc `(a, b)` that lies on a cycle. An arc lies on
/// a cycle exactly when both endpoints share a strong component.
pub fn closure(d: &Digraph) -> Digraph {
    let scc = strong_components(d);
    let mut arcs: Vec<_> = d.arcs().to_vec();
    arcs.extend(
        d.arcs()
            .iter()
            .filter(|&&(u, v)| scc.same_part(u, v))
            .map(|&(u, v)| (v, u)),
    );
    arcs.sort_unstable();
    arcs.dedup();
    Digraph::from_sorted(d.n(), arcs)
}

pub fn is_closed(d: &Digraph) -> bool {
    closure(d).arc_count() == d.arc_count()
}

/// Quotient of a digraph by its strong components.
#[derive(Debug, Clone)]
pub struct Condensation {
    pub components: Partition,
    /// Vertex `i` of the quotient is `components.parts()[i - 1]`.
    pub quotient: Digraph,
    /// Strong components with no arc leaving them.
    pub terminals: Vec<Vec<usize>>,
}

pub fn condensation_and_terminals(d: &Digraph) -> Condensation {
    let components = strong_components(d);
    let arcs: Vec<_> = d
        .arcs()
        .iter()
        .filter(|&&(u, v)| !components.same_part(u, v))
        .map(|&(u, v)| (components.part_of(u) + 1, components.part_of(v) + 1))
        .collect();
    let quotient = Digraph::new(components.len(), arcs).expect("quotient arcs are valid");
    let terminals = (1..=components.len())
        .filter(|&c| quotient.out_degree(c) == 0)
        .map(|c| components.parts()[c - 1].clone())
        .collect();
    Condensation {
        components,
        quotient,
        terminals,
    }
}

/// The graph with an edge `{u, v}` for every arc `(u, v)`.
pub fn underlying_graph(d: &Digraph) -> Graph {
    let mut arcs: Vec<_> = d.arcs().iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
    arcs.sort_unstable();
    arcs.dedup();
    Graph::from_symmetric_unchecked(Digraph::from_sorted(d.n(), arcs))
}

/// Components of the underlying graph.
pub fn weak_components(d: &Digraph) -> Partition {
    let n = d.n();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = Vec::new();
    for start in 1..=n {
        if label[start - 1] != usize::MAX {
            continue;
        }
        label[start - 1] = count;
        queue.push(start);
        while let Some(v) = queue.pop() {
            for &w in d.out_neighbors(v).iter().chain(d.in_neighbors(v)) {
                if label[w - 1] == usize::MAX {
                    label[w - 1] = count;
                    queue.push(w);
                }
            }
        }
        count += 1;
    }
    Partition::from_labels(&label, count)
}

pub fn is_weakly_connected(d: &Digraph) -> bool {
    let n = d.n();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in d.out_neighbors(v).iter().chain(d.in_neighbors(v)) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}

/// Weak components that carry at least one arc, as induced subdigraphs.
pub fn nontrivial_components(d: &Digraph) -> Vec<(Vec<usize>, Digraph)> {
    weak_components(d)
        .parts()
        .iter()
        .filter(|part| part.len() > 1)
        .map(|part| (part.clone(), d.induced(part)))
        .collect()
}

/// True when at most one weak component carries arcs; isolated vertices are
/// ignored, as they do not change the generated semigroup.
pub fn is_connected_ignoring_isolated(d: &Digraph) -> bool {
    weak_components(d).parts().iter().filter(|p| p.len() > 1).count() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(n: usize, arcs: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, arcs.iter().copied()).unwrap()
    }

    // brute-force reachability used as an independent check
    fn reach(d: &Digraph) -> Vec<Vec<bool>> {
        let n = d.n();
        let mut r = vec![vec![false; n + 1]; n + 1];
        for v in 1..=n {
            r[v][v] = true;
        }
        for &(u, v) in d.arcs() {
            r[u][v] = true;
        }
        for k in 1..=n {
            for i in 1..=n {
                for j in 1..=n {
                    if r[i][k] && r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
        r
    }

    #[test]
    fn strong_component_examples() {
        let cyc = dg(3, &[(1, 2), (2, 3), (3, 1)]);
        assert_eq!(strong_components(&cyc).parts(), &[vec![1, 2, 3]]);

        let fan = dg(3, &[(1, 3), (2, 3)]);
        assert_eq!(strong_components(&fan).parts(), &[vec![1], vec![2], vec![3]]);

        let d = dg(3, &[(1, 2), (2, 1), (2, 3)]);
        let scc = strong_components(&d);
        assert_eq!(scc.parts(), &[vec![1, 2], vec![3]]);
        let r = reach(&d);
        for u in 1..=3 {
            for v in 1..=3 {
                assert_eq!(scc.same_part(u, v), r[u][v] && r[v][u]);
            }
        }
    }

    #[test]
    fn closure_examples() {
        let cyc = dg(3, &[(1, 2), (2, 3), (3, 1)]);
        assert_eq!(closure(&cyc).arc_count(), 6);
        let acyclic = dg(4, &[(1, 2), (2, 3), (1, 4)]);
        assert_eq!(closure(&acyclic), acyclic);
        let two = dg(2, &[(1, 2), (2, 1)]);
        assert_eq!(closure(&two), two);
        assert!(is_closed(&two));
    }

    #[test]
    fn terminal_examples() {
        let fan = dg(3, &[(1, 3), (2, 3)]);
        assert_eq!(condensation_and_terminals(&fan).terminals, vec![vec![3]]);
        let two = dg(2, &[(1, 2), (2, 1)]);
        assert_eq!(condensation_and_terminals(&two).terminals, vec![vec![1, 2]]);
        let out = dg(3, &[(1, 2), (1, 3)]);
        assert_eq!(
            condensation_and_terminals(&out).terminals,
            vec![vec![2], vec![3]]
        );
    }

    #[test]
    fn underlying_and_weak() {
        let g = underlying_graph(&dg(2, &[(1, 2)]));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        let g2 = underlying_graph(&dg(2, &[(1, 2), (2, 1)]));
        assert_eq!(g, g2);
        let d = dg(4, &[(1, 2), (3, 4)]);
        assert_eq!(weak_components(&d).len(), 2);
        assert!(!is_connected_ignoring_isolated(&d));
        assert!(is_connected_ignoring_isolated(&dg(4, &[(1, 2), (3, 2)])));
    }

    #[test]
    fn deep_path_does_not_overflow() {
        let n = 200_000;
        let arcs: Vec<_> = (1..n).map(|i| (i, i + 1)).chain([(n, 1)]).collect();
        let d = Digraph::new(n, arcs).unwrap();
        assert_eq!(strong_components(&d).len(), 1);
    }
}
