//! Fractional (g,f)- and [a,b]-factor decisions by two independent routes
//! (the exponential deficiency-criterion oracle and polynomial linear
//! feasibility), perfect matchings with Tutte-set witnesses, and the
//! edge-count sufficiency predicate.

mod bounds;
mod deficiency;
mod flow;
mod lp;
mod matching;
mod report;
mod sufficiency;

pub use bounds::DegreeBoundSpec;
pub use deficiency::{
    deficiency, fractional_factor_oracle, fractional_factor_oracle_limit, DeficiencyWitness,
    OracleDecision, ORACLE_LIMIT,
};
pub use lp::{fractional_factor_lp, FactorCertificate, LpDecision, CERT_TOL};
pub use matching::{
    has_perfect_matching, perfect_matching_exists, MatchingDecision, MATCHING_LIMIT,
};
pub use report::FactorReport;
pub use sufficiency::{edge_count_sufficiency, SufficiencyOutcome};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FactorError {
    #[error("degree bounds must satisfy g(v) <= f(v); violated at vertex {vertex}: g={g}, f={f}")]
    BadBounds { vertex: usize, g: u32, f: u32 },
    #[error("bounds defined on {bounds_n} vertices but the graph has {graph_n}")]
    BoundsMismatch { bounds_n: usize, graph_n: usize },
    #[error("uniform bounds require 1 <= a <= b, got a={a}, b={b}")]
    BadUniformBounds { a: u32, b: u32 },
    #[error("feasibility solver failure: {0}")]
    SolverFailure(String),
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
}
