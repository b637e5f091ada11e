//! Input builders shared by the benchmarks.

use arcsemi::graph::families;
use arcsemi::{Digraph, Graph};

/// Sizes used for the linear-time decision benchmarks.
pub const DECIDE_SIZES: [usize; 4] = [1_000, 10_000, 100_000, 1_000_000];

/// `Q_n` for each size, paired with `n`.
pub fn q_instances(sizes: &[usize]) -> Vec<(usize, Graph)> {
    sizes.iter().map(|&n| (n, families::q_graph(n))).collect()
}

/// `K_{3,1} ⊕_q K_3` on `n` vertices; the decision ends at the branch step.
pub fn oplus_instance(n: usize) -> Graph {
    let star = families::star(3);
    let k3 = families::complete(3);
    families::oplus(&star, 4, n - 7, &k3, 1)
        .expect("valid attachment")
        .graph
}

/// Digraphs whose semigroups the oracle enumerates in well under a second.
pub fn oracle_inputs() -> Vec<(&'static str, Digraph)> {
    vec![
        ("fan_10", families::fan(10)),
        ("cycle_6", families::cycle(6).into()),
        ("complete_5", families::complete(5).into()),
        ("bull", families::bull().into()),
    ]
}
