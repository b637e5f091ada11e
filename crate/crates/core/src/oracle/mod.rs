//! Brute-force ground truth: `⟨D⟩` enumerated as explicit transformations.
//!
//! Transformations act on the right and compose left to right, so
//! `v(αβ) = (vα)β`. Enumeration packs each map into a `u64` (four bits per
//! point), which limits the degree to 16.

pub mod congruence;
pub mod cycles;
pub mod green;
pub mod probe;
pub mod semigroup;
pub mod transformation;

pub use congruence::{is_congruence_free, principal_congruence, MAX_CONGRUENCE_SIZE};
pub use cycles::{l_brute, l_brute_exceeds, l_brute_with_cap};
pub use green::{green_structure, Classes, GreenStructure};
pub use probe::{probe, probe_with, OracleReport};
pub use semigroup::{generate, generate_with_cap, ElementCap, SemigroupTable};
pub use transformation::{
    arc_transform, compose, invariants_of, longest_cycle, Invariants, Transformation,
};
