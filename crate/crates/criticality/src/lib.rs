//! ID-factor-criticality: a graph G is ID-factor-critical when for every
//! independent set I whose size has the same parity as |V(G)|, G − I has a
//! perfect matching (the empty set qualifies when |V(G)| is even, so
//! ID-factor-critical even-order graphs in particular have perfect matchings).
//!
//! Two independent decision routes are provided: [`is_id_factor_critical_def`]
//! checks the definition directly with a matching solver, while
//! [`is_id_factor_critical_tutte`] relies only on odd-component counting over
//! all pairs (I, S). Agreement of the two routes is part of the test suite.

mod decide;
mod structured;
mod witness;

use thiserror::Error;

pub use decide::{
    is_id_factor_critical_def, is_id_factor_critical_tutte, DefDecision, TutteDecision,
    CRITICALITY_LIMIT,
};
pub use structured::{structured_graph, structured_witness, StructuredWitnessReport};
pub use witness::CriticalityWitness;

#[derive(Debug, Error)]
pub enum CriticalityError {
    #[error("invalid construction parameters n={n}, delta={delta}, r={r}: {reason}")]
    BadParameters {
        n: usize,
        delta: usize,
        r: usize,
        reason: &'static str,
    },
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
    #[error(transparent)]
    Factor(#[from] factor_core::FactorError),
}
