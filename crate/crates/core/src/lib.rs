//! Arc-generated transformation semigroups.
//!
//! For a loop-free digraph `D` on `{1, ..., n}`, every arc `(a, b)` gives the
//! idempotent transformation that sends `a` to `b` and fixes everything
//! else; `⟨D⟩` is the semigroup these generate. This crate answers questions
//! about `⟨D⟩` two independent ways:
//!
//! - [`classifier`] reads semigroup properties straight off the digraph
//!   (acyclicity, out-degrees, terminal components, fans, ...);
//! - [`oracle`] enumerates `⟨D⟩` explicitly and computes the same
//!   properties from the multiplication tables.
//!
//! [`cycle_length`] computes `l(D)`, the length of the longest cycle of any
//! element of `⟨D⟩`, and decides `l(G) <= k` for connected graphs in linear
//! time.
//!
//! ```
//! use arcsemi::graph::families;
//! use arcsemi::{classify, decide_l_leq_k, generate, l_of, Property};
//!
//! let fan = families::fan(6);
//! assert_eq!(classify(&fan).value(Property::Inverse), Some(true));
//! assert_eq!(generate(&fan)?.len(), 31);
//!
//! let q = families::q_graph(50);
//! assert_eq!(l_of(q.as_digraph())?, 2);
//! assert!(decide_l_leq_k(&q, 2)?.verdict);
//! # Ok::<(), arcsemi::Error>(())
//! ```

pub mod census;
pub mod classifier;
pub mod cycle_length;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod verify;

pub use classifier::{classify, Property, PropertyReport, Verdict};
pub use cycle_length::{decide_l_leq_k, l_of, LDecision};
pub use error::{Error, Result};
pub use graph::{Digraph, Graph, ShapeTag};
pub use oracle::{generate, probe, ElementCap, OracleReport, SemigroupTable, Transformation};
