//! Spectral-radius computation by deterministic power iteration, equitable
//! partition quotient matrices, and the Hong–Shu–Fang edge-count bound.

mod hsf;
mod quotient;
mod radius;

pub use hsf::hsf_bound;
pub use quotient::{quotient_matrix, quotient_perron, quotient_spectral_radius, QuotientMatrix};
pub use radius::{
    compare_spectral, perron_vector, spectral_radius, PerronVector, SpectralEstimate,
    SpectralOrdering,
};

use thiserror::Error;

/// Default eigenvalue tolerance.
pub const DEFAULT_EIG_TOL: f64 = 1e-10;
/// Default spectral comparison tolerance; ties at this scale escalate to
/// exact isomorphism checks rather than trusting floats.
pub const DEFAULT_CMP_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("spectral radius requires a non-empty vertex set")]
    EmptyGraph,
    #[error("power iteration did not reach tolerance {tol:e} after {iterations} iterations (residual {residual:e})")]
    NotConverged {
        iterations: usize,
        residual: f64,
        tol: f64,
    },
    #[error("Perron vector is only defined for connected graphs")]
    Disconnected,
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("partition does not cover the vertex set disjointly (vertex {vertex} covered {times} times)")]
    BadPartition { vertex: usize, times: usize },
    #[error("partition contains an empty class at index {class}")]
    EmptyClass { class: usize },
    #[error(
        "partition is not equitable: vertices {v1} and {v2} of class {from} have {c1} and {c2} neighbors in class {to}"
    )]
    NonEquitable {
        from: usize,
        to: usize,
        v1: usize,
        v2: usize,
        c1: usize,
        c2: usize,
    },
    #[error("negative radicand {0} in the edge-count bound (inconsistent e, n, delta)")]
    NegativeRadicand(f64),
    #[error("inconsistent bound inputs: {0}")]
    BadBoundInput(String),
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
}
