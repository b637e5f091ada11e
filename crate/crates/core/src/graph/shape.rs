//! Recognisers for the named graph families, fans, and the two flavours of
//! bipartiteness.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::components::is_weakly_connected;
use crate::graph::{Digraph, Graph};

/// Family a connected graph (or a fan digraph) belongs to.
///
/// Where families coincide the earlier rule wins: `K2`, then `Qn` (so
/// `Q_3 = K_3` is `Qn`), `Rn` (so `R_4 = K_{3,1}` is `Rn`), `Path`,
/// `CycleGraph`, `Complete`, `Star`. Tags are disjoint for `n >= 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum ShapeTag {
    Path { n: usize },
    CycleGraph { n: usize },
    Fan { n: usize },
    Qn { n: usize },
    Rn { n: usize },
    K2,
    Complete { n: usize },
    Star { k: usize },
    Other,
}

pub fn recognize_shape(g: &Graph) -> Result<ShapeTag> {
    let n = g.n();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.edge_count();
    let mut deg_count = [0usize; 4]; // degrees 0..=2 and ">= 3"
    for v in 1..=n {
        deg_count[g.degree(v).min(3)] += 1;
    }
    let max_deg = g.max_degree();
    let deg3: Vec<usize> = (1..=n).filter(|&v| g.degree(v) == 3).collect();

    if n == 1 {
        return Ok(ShapeTag::Path { n });
    }
    if n == 2 {
        return Ok(ShapeTag::K2);
    }
    if n == 3 && m == 3 {
        return Ok(ShapeTag::Qn { n });
    }
    if n >= 4 && m == n && max_deg == 3 && deg3.len() == 1 && deg_count[1] == 1 {
        let c = deg3[0];
        let nb = g.neighbors(c);
        let triangle = nb.iter().enumerate().any(|(i, &a)| {
            nb[i + 1..]
                .iter()
                .any(|&b| g.has_edge(a, b) && g.degree(a) == 2 && g.degree(b) == 2)
        });
        if triangle {
            return Ok(ShapeTag::Qn { n });
        }
    }
    if n >= 4 && m == n - 1 && max_deg == 3 && deg3.len() == 1 && deg_count[1] == 3 {
        let c = deg3[0];
        let leaves = g.neighbors(c).iter().filter(|&&w| g.degree(w) == 1).count();
        if leaves >= 2 {
            return Ok(ShapeTag::Rn { n });
        }
    }
    if m == n - 1 && max_deg <= 2 {
        return Ok(ShapeTag::Path { n });
    }
    if m == n && deg_count[2] == n {
        return Ok(ShapeTag::CycleGraph { n });
    }
    if m == n * (n - 1) / 2 {
        return Ok(ShapeTag::Complete { n });
    }
    if m == n - 1 && max_deg == n - 1 {
        return Ok(ShapeTag::Star { k: n - 1 });
    }
    Ok(ShapeTag::Other)
}

/// Fan tag for fan digraphs, otherwise the shape of a symmetric digraph;
/// `Other` for anything else.
pub fn shape_of(d: &Digraph) -> Result<ShapeTag> {
    if is_fan(d).is_some() {
        return Ok(ShapeTag::Fan { n: d.n() });
    }
    match Graph::try_from_digraph(d.clone()) {
        Ok(g) => recognize_shape(&g),
        Err(_) if is_weakly_connected(d) => Ok(ShapeTag::Other),
        Err(_) => Err(Error::Disconnected),
    }
}

pub fn is_path(g: &Graph) -> bool {
    let n = g.n();
    n >= 1 && g.edge_count() == n - 1 && g.max_degree() <= 2 && g.is_connected()
}

pub fn is_cycle_graph(g: &Graph) -> bool {
    let n = g.n();
    n >= 3 && (1..=n).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// The sink `z` when every other vertex has exactly the arc `(v, z)`.
/// A single vertex with no arcs is the 1-fan.
pub fn is_fan(d: &Digraph) -> Option<usize> {
    let n = d.n();
    if n == 0 {
        return None;
    }
    let sinks: Vec<usize> = d.vertices().filter(|&v| d.out_degree(v) == 0).collect();
    let &[z] = sinks.as_slice() else {
        return None;
    };
    let ok = d
        .vertices()
        .all(|v| v == z || d.out_neighbors(v) == [z])
        && d.in_degree(z) == n - 1;
    ok.then_some(z)
}

/// Witness partition for a directed-bipartite digraph: every arc runs from
/// `sources` to `targets`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedBipartition {
    pub sources: Vec<usize>,
    pub targets: Vec<usize>,
}

/// Directed-bipartite iff no vertex has both an incoming and an outgoing arc.
pub fn is_directed_bipartite(d: &Digraph) -> Option<DirectedBipartition> {
    if d
        .vertices()
        .any(|v| d.in_degree(v) > 0 && d.out_degree(v) > 0)
    {
        return None;
    }
    let (targets, sources) = d.vertices().partition(|&v| d.in_degree(v) > 0);
    Some(DirectedBipartition { sources, targets })
}

/// First vertex with both an in-arc and an out-arc, if any.
pub fn directed_bipartite_obstruction(d: &Digraph) -> Option<usize> {
    d.vertices()
        .find(|&v| d.in_degree(v) > 0 && d.out_degree(v) > 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bipartiteness {
    NotBipartite,
    /// Bipartite with an even number of vertices.
    Bipartite,
    /// Bipartite with an odd number of vertices.
    OddBipartite,
}

pub fn bipartite_test(g: &Graph) -> Bipartiteness {
    let n = g.n();
    let mut colour = vec![u8::MAX; n + 1];
    let mut stack = Vec::new();
    for s in 1..=n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    stack.push(w);
                } else if colour[w] == colour[v] {
                    return Bipartiteness::NotBipartite;
                }
            }
        }
    }
    if n % 2 == 1 {
        Bipartiteness::OddBipartite
    } else {
        Bipartiteness::Bipartite
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn shapes_of_families() {
        assert_eq!(recognize_shape(&path(5)), Ok(ShapeTag::Path { n: 5 }));
        assert_eq!(recognize_shape(&q_graph(6)), Ok(ShapeTag::Qn { n: 6 }));
        assert_eq!(recognize_shape(&r_graph(6)), Ok(ShapeTag::Rn { n: 6 }));
        assert_eq!(recognize_shape(&complete(3)), Ok(ShapeTag::Qn { n: 3 }));
        assert_eq!(recognize_shape(&star(3)), Ok(ShapeTag::Rn { n: 4 }));
        assert_eq!(recognize_shape(&path(2)), Ok(ShapeTag::K2));
        assert_eq!(recognize_shape(&cycle(4)), Ok(ShapeTag::CycleGraph { n: 4 }));
        assert_eq!(recognize_shape(&complete(5)), Ok(ShapeTag::Complete { n: 5 }));
        assert_eq!(recognize_shape(&star(5)), Ok(ShapeTag::Star { k: 5 }));
        assert_eq!(recognize_shape(&bull()), Ok(ShapeTag::Other));
        assert_eq!(recognize_shape(&e_graph()), Ok(ShapeTag::Other));
        assert_eq!(recognize_shape(&theta0()), Ok(ShapeTag::Other));
        let disconnected = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(recognize_shape(&disconnected), Err(Error::Disconnected));
    }

    #[test]
    fn family_round_trip_for_supported_sizes() {
        for n in 5..=12 {
            assert_eq!(recognize_shape(&path(n)), Ok(ShapeTag::Path { n }));
            assert_eq!(recognize_shape(&cycle(n)), Ok(ShapeTag::CycleGraph { n }));
            assert_eq!(recognize_shape(&q_graph(n)), Ok(ShapeTag::Qn { n }));
            assert_eq!(recognize_shape(&r_graph(n)), Ok(ShapeTag::Rn { n }));
            assert_eq!(recognize_shape(&complete(n)), Ok(ShapeTag::Complete { n }));
            assert_eq!(recognize_shape(&star(n - 1)), Ok(ShapeTag::Star { k: n - 1 }));
            assert_eq!(shape_of(&fan(n)), Ok(ShapeTag::Fan { n }));
        }
    }

    #[test]
    fn fans() {
        assert_eq!(is_fan(&fan(4)), Some(4));
        assert_eq!(is_fan(&Digraph::new(3, [(1, 2), (2, 3)]).unwrap()), None);
        assert_eq!(is_fan(&Digraph::empty(1)), Some(1));
        assert_eq!(is_fan(&Digraph::empty(2)), None);
        assert_eq!(is_fan(&Digraph::new(3, [(3, 1), (2, 1)]).unwrap()), Some(1));
    }

    #[test]
    fn directed_bipartite() {
        let d = Digraph::new(4, [(1, 3), (2, 3), (1, 4)]).unwrap();
        let w = is_directed_bipartite(&d).unwrap();
        assert_eq!(w.sources, vec![1, 2]);
        assert_eq!(w.targets, vec![3, 4]);
        assert!(is_directed_bipartite(&Digraph::new(3, [(1, 2), (2, 3)]).unwrap()).is_none());
        assert!(is_directed_bipartite(&Digraph::new(2, [(1, 2), (2, 1)]).unwrap()).is_none());
    }

    #[test]
    fn bipartiteness() {
        assert_eq!(bipartite_test(&cycle(6)), Bipartiteness::Bipartite);
        assert_eq!(bipartite_test(&cycle(5)), Bipartiteness::NotBipartite);
        assert_eq!(
            bipartite_test(&complete_bipartite(2, 3)),
            Bipartiteness::OddBipartite
        );
    }
}
