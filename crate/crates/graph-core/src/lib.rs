//! Simple undirected graphs over `{0, …, n-1}` with the operations needed for
//! desk-scale extremal verification: join/disjoint-union constructors,
//! component and parity analysis, graph6 serialization, independent-set
//! enumeration, exact Hamilton-path decision and small-scale isomorphism.
//!
//! `Graph` values are immutable once built and cheap to clone; every operation
//! here is a pure function of its inputs.

mod canonical;
mod error;
mod graph;
mod graph6;
mod hamilton;
mod indep;
mod vset;

pub use canonical::{
    canonical_form, canonical_form_limit, is_isomorphic, is_isomorphic_limit,
    refinement_partition, CanonicalLabel, DEFAULT_ISO_LIMIT,
};
pub use error::{Graph6Error, GraphError};
pub use graph::Graph;
pub use graph6::{emit_graph6, parse_graph6, GRAPH6_MAX_ORDER};
pub use hamilton::{hamilton_path_exists, HAMILTON_LIMIT};
pub use indep::independent_sets_of_parity;
pub use vset::VertexSet;
