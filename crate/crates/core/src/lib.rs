//! Exhaustive deciders and structural witnesses for (n,k,d)-graphs.
//!
//! A graph `G` is an (n,k,d)-graph when `n + 2k + d <= |V(G)| - 2`,
//! `|V(G)| - n - d` is even, and deleting any `n` vertices leaves a graph that
//! contains a `k`-matching in which every `k`-matching extends to a matching
//! missing exactly `d` vertices.
//!
//! The crate is organized bottom-up:
//!
//! - [`graph`]: immutable simple graphs, the counterexample families, graph6
//!   and edge-list I/O.
//! - [`matching`]: blossom maximum matching, deficiency, defect-d matchings,
//!   Berge barriers and k-matching enumeration.
//! - [`structure`]: components, odd-component counts, factor-criticality.
//! - [`decision`]: the two (n,k,d) deciders and decomposition witnesses.
//! - [`harness`]: executable recursive theorems run over graph censuses.
//! - [`census`]: connected-graph enumeration and seeded random samples.

mod bits;
mod dense;

pub mod census;
pub mod decision;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod structure;

pub use decision::{
    find_decomposition_witness, is_k_extendable, is_n_critical, is_nkd_by_characterization,
    is_nkd_by_definition, DecisionError, DecompositionWitness, Limits, NkdParams, ParamError,
    Variant, Verdict, Witness,
};
pub use graph::{Edge, Graph, GraphError, VertexSet};
pub use matching::Matching;
