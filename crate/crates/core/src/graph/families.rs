//! Constructors for the named graphs and digraphs.
//!
//! The plain constructors panic on sizes outside their family's range;
//! [`Family::build`] validates instead.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

fn graph(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("family edges are valid")
}

/// `P_n`: edges `{i, i+1}`.
pub fn path(n: usize) -> Graph {
    graph(n, (1..n).map(|i| (i, i + 1)))
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "C_n needs n >= 3");
    graph(n, (1..n).map(|i| (i, i + 1)).chain([(n, 1)]))
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    graph(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
}

/// `K_{k,1}`: leaves `1..=k`, centre `k + 1`.
pub fn star(k: usize) -> Graph {
    graph(k + 1, (1..=k).map(|i| (i, k + 1)))
}

/// `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    graph(a + b, (1..=a).flat_map(|i| (a + 1..=a + b).map(move |j| (i, j))))
}

/// `Q_n`, `n >= 3`: `P_n` plus the edge `{n-2, n}`.
pub fn q_graph(n: usize) -> Graph {
    assert!(n >= 3, "Q_n needs n >= 3");
    graph(n, (1..n).map(|i| (i, i + 1)).chain([(n - 2, n)]))
}

/// `R_n`, `n >= 4`: `Q_n` without the edge `{n-1, n}`.
pub fn r_graph(n: usize) -> Graph {
    assert!(n >= 4, "R_n needs n >= 4");
    graph(n, (1..n - 1).map(|i| (i, i + 1)).chain([(n - 2, n)]))
}

/// The `n`-fan: arcs `(i, n)` for `i < n`.
pub fn fan(n: usize) -> Digraph {
    assert!(n >= 1);
    Digraph::new(n, (1..n).map(|i| (i, n))).expect("fan arcs are valid")
}

/// Arcs `(i, i+1)`; generates the Catalan monoid minus its identity.
pub fn oneway_path(n: usize) -> Digraph {
    Digraph::new(n, (1..n).map(|i| (i, i + 1))).expect("path arcs are valid")
}

/// Triangle `{3, 4, 5}` with pendant vertices 1 (at 3) and 2 (at 4).
pub fn bull() -> Graph {
    graph(5, [(1, 3), (2, 4), (3, 4), (4, 5), (5, 3)])
}

/// Path `1..5` with the extra leaf 6 at the middle vertex 3.
pub fn e_graph() -> Graph {
    graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])
}

/// Hexagon `1..6` plus a centre 7 adjacent to the antipodal vertices 1, 4.
pub fn theta0() -> Graph {
    graph(
        7,
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 7), (4, 7)],
    )
}

/// The two 3-vertex digraphs generating 0-simple semigroups.
pub fn zero_simple_catalog() -> [Digraph; 2] {
    [
        Digraph::new(3, [(2, 3), (3, 2), (3, 1)]).unwrap(),
        Digraph::new(3, [(2, 1), (2, 3), (3, 2), (3, 1)]).unwrap(),
    ]
}

/// The five digraphs generating congruence-free semigroups.
pub fn congruence_free_catalog() -> [Digraph; 5] {
    let [z1, z2] = zero_simple_catalog();
    [
        Digraph::new(2, [(1, 2)]).unwrap(),
        Digraph::new(2, [(1, 2), (2, 1)]).unwrap(),
        Digraph::new(3, [(2, 1), (2, 3)]).unwrap(),
        z1,
        z2,
    ]
}

/// `L ⊕_q R` with its attachment data.
#[derive(Debug, Clone)]
pub struct Oplus {
    pub graph: Graph,
    /// Labels in `graph`: `L` is `1..=m`, the path is `m+1..=m+q`, `R` follows.
    pub left_attach: usize,
    pub right_attach: usize,
    pub path: Vec<usize>,
}

/// Joins `left` and `right` by a `q`-vertex path whose ends attach to
/// `left_attach` and `right_attach`; both must have degree other than 1.
pub fn oplus(
    left: &Graph,
    left_attach: usize,
    q: usize,
    right: &Graph,
    right_attach: usize,
) -> Result<Oplus> {
    if q == 0 {
        return Err(Error::InvalidParameters("oplus needs q >= 1".into()));
    }
    for (g, a) in [(left, left_attach), (right, right_attach)] {
        if a == 0 || a > g.n() {
            return Err(Error::MissingVertex(a));
        }
        if g.degree(a) == 1 {
            return Err(Error::InvalidAttachment { vertex: a });
        }
    }
    let m = left.n();
    let off = m + q;
    let path: Vec<usize> = (m + 1..=m + q).collect();
    let edges = left
        .edges()
        .chain(path.windows(2).map(|w| (w[0], w[1])))
        .chain(right.edges().map(|(u, v)| (u + off, v + off)))
        .chain([(left_attach, m + 1), (m + q, right_attach + off)]);
    Ok(Oplus {
        graph: Graph::from_edges(off + right.n(), edges)?,
        left_attach,
        right_attach: right_attach + off,
        path,
    })
}

/// A named family with its size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Q(usize),
    R(usize),
    Fan(usize),
    OnewayPath(usize),
    Bull,
    EGraph,
    Theta0,
    /// Index 1 or 2 into [`zero_simple_catalog`].
    ZeroSimple(usize),
    /// Index 1..=5 into [`congruence_free_catalog`].
    CongruenceFree(usize),
}

impl Family {
    pub fn build(self) -> Result<Digraph> {
        let bad = |msg: &str| Err(Error::InvalidParameters(format!("{self}: {msg}")));
        Ok(match self {
            Family::Path(n) if n >= 1 => path(n).into(),
            Family::Cycle(n) if n >= 3 => cycle(n).into(),
            Family::Complete(n) if n >= 1 => complete(n).into(),
            Family::Star(k) if k >= 1 => star(k).into(),
            Family::CompleteBipartite(a, b) if a >= 1 && b >= 1 => complete_bipartite(a, b).into(),
            Family::Q(n) if n >= 3 => q_graph(n).into(),
            Family::R(n) if n >= 4 => r_graph(n).into(),
            Family::Fan(n) if n >= 1 => fan(n),
            Family::OnewayPath(n) if n >= 1 => oneway_path(n),
            Family::Bull => bull().into(),
            Family::EGraph => e_graph().into(),
            Family::Theta0 => theta0().into(),
            Family::ZeroSimple(i) if (1..=2).contains(&i) => zero_simple_catalog()[i - 1].clone(),
            Family::CongruenceFree(i) if (1..=5).contains(&i) => {
                congruence_free_catalog()[i - 1].clone()
            }
            _ => return bad("size out of range"),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::CompleteBipartite(a, b) => write!(f, "bipartite:{a},{b}"),
            Family::Q(n) => write!(f, "q:{n}"),
            Family::R(n) => write!(f, "r:{n}"),
            Family::Fan(n) => write!(f, "fan:{n}"),
            Family::OnewayPath(n) => write!(f, "oneway:{n}"),
            Family::Bull => write!(f, "bull"),
            Family::EGraph => write!(f, "egraph"),
            Family::Theta0 => write!(f, "theta0"),
            Family::ZeroSimple(i) => write!(f, "zero-simple:{i}"),
            Family::CongruenceFree(i) => write!(f, "congruence-free:{i}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name` or `name:params`, e.g. `q:6`, `bipartite:2,3`, `bull`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("unknown family {s:?}"));
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        let one = || match nums.as_slice() {
            [x] => Ok(*x),
            _ => Err(bad()),
        };
        Ok(match name.to_ascii_lowercase().as_str() {
            "path" | "p" => Family::Path(one()?),
            "cycle" | "c" => Family::Cycle(one()?),
            "complete" | "k" => Family::Complete(one()?),
            "star" => Family::Star(one()?),
            "bipartite" => match nums.as_slice() {
                [a, b] => Family::CompleteBipartite(*a, *b),
                _ => return Err(bad()),
            },
            "q" => Family::Q(one()?),
            "r" => Family::R(one()?),
            "fan" => Family::Fan(one()?),
            "oneway" | "catalan" => Family::OnewayPath(one()?),
            "bull" => Family::Bull,
            "egraph" | "e" => Family::EGraph,
            "theta0" => Family::Theta0,
            "zero-simple" => Family::ZeroSimple(one()?),
            "congruence-free" => Family::CongruenceFree(one()?),
            _ => return Err(bad()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_graphs() {
        let t = theta0();
        assert_eq!((t.n(), t.edge_count()), (7, 8));
        assert_eq!(t.neighbors(7), &[1, 4]);
        assert_eq!(fan(4).arcs(), &[(1, 4), (2, 4), (3, 4)]);
        let q6 = q_graph(6);
        assert!(q6.has_edge(4, 6) && q6.has_edge(5, 6));
        let r6 = r_graph(6);
        assert!(r6.has_edge(4, 6) && !r6.has_edge(5, 6));
    }

    #[test]
    fn oplus_figure() {
        let g = oplus(&star(3), 4, 4, &cycle(4), 1).unwrap();
        assert_eq!(g.graph.n(), 12);
        assert_eq!(g.graph.edge_count(), 3 + 3 + 2 + 4);
        assert_eq!(g.path, vec![5, 6, 7, 8]);
        assert_eq!(g.right_attach, 9);
        assert!(g.graph.has_edge(4, 5) && g.graph.has_edge(8, 9));
    }

    #[test]
    fn oplus_rejects_leaf_attachment() {
        assert_eq!(
            oplus(&star(3), 1, 4, &cycle(4), 1).unwrap_err(),
            Error::InvalidAttachment { vertex: 1 }
        );
        // K_1 attaches through its only (degree 0) vertex
        let p = oplus(&path(1), 1, 3, &path(1), 1).unwrap();
        assert_eq!(p.graph, path(5));
    }

    #[test]
    fn family_names_round_trip() {
        for f in [
            Family::Q(6),
            Family::CompleteBipartite(2, 3),
            Family::Theta0,
            Family::CongruenceFree(4),
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("q:2".parse::<Family>().unwrap().build().is_err());
        assert!("nope".parse::<Family>().is_err());
    }
}
