use graph_core::Graph;
use serde::Serialize;

use crate::flow::FlowNetwork;
use crate::{DegreeBoundSpec, FactorError};

/// Feasibility tolerance for certificate re-validation.
pub const CERT_TOL: f64 = 1e-9;

/// An edge weighting h: E → [0,1] witnessing a fractional (g,f)-factor.
#[derive(Clone, Debug, Serialize)]
pub struct FactorCertificate {
    /// (u, v, h(uv)) triples, u < v, in the graph's edge order.
    pub edges: Vec<(usize, usize, f64)>,
}

#[derive(Clone, Debug)]
pub enum LpDecision {
    Yes(FactorCertificate),
    No,
}

impl LpDecision {
    pub fn exists(&self) -> bool {
        matches!(self, LpDecision::Yes(_))
    }
}

/// Polynomial fractional (g,f)-factor decision by direct linear feasibility
/// of {0 <= h(e) <= 1, g(v) <= Σ_{e∋v} h(e) <= f(v)}.
///
/// The system is solved exactly: on the bipartite double cover (each edge uv
/// becomes arcs u'→v'' and v'→u''), the constraint matrix is a network
/// matrix, so feasibility reduces to max-flow with lower bounds over integer
/// data and h(uv) = (flow(u'→v'') + flow(v'→u''))/2 is half-integral. The
/// double cover is degree-symmetric, so feasibility there coincides with
/// feasibility of the original system.
pub fn fractional_factor_lp(
    g: &Graph,
    bounds: &DegreeBoundSpec,
) -> Result<LpDecision, FactorError> {
    bounds.check_graph(g.n())?;
    let n = g.n();
    let edges = g.edges();
    // Nodes: 0 = source, 1 = sink, 2+v = left copy v', 2+n+v = right copy v''.
    let source = 0;
    let sink = 1;
    let left = |v: usize| 2 + v;
    let right = |v: usize| 2 + n + v;
    let mut net = FlowNetwork::new(2 + 2 * n);
    for v in 0..n {
        let (lo, hi) = (i64::from(bounds.lower(v)), i64::from(bounds.upper(v)));
        net.add_arc(source, left(v), lo, hi);
        net.add_arc(right(v), sink, lo, hi);
    }
    let mut handles = Vec::with_capacity(edges.len());
    for &(u, v) in &edges {
        let h_uv = net.add_arc(left(u), right(v), 0, 1);
        let h_vu = net.add_arc(left(v), right(u), 0, 1);
        handles.push((h_uv, h_vu));
    }
    if !net.feasible(sink, source) {
        return Ok(LpDecision::No);
    }
    let weights: Vec<(usize, usize, f64)> = edges
        .iter()
        .zip(&handles)
        .map(|(&(u, v), &(h1, h2))| (u, v, (net.flow(h1) + net.flow(h2)) as f64 / 2.0))
        .collect();
    let cert = FactorCertificate { edges: weights };
    match cert.validate(g, bounds) {
        Ok(()) => Ok(LpDecision::Yes(cert)),
        Err(msg) => Err(FactorError::SolverFailure(msg)),
    }
}

impl FactorCertificate {
    /// Checks every weight is in [0,1] and every vertex sum lies in
    /// [g(v), f(v)], within [`CERT_TOL`]. Returns a diagnostic on failure.
    pub fn validate(&self, g: &Graph, bounds: &DegreeBoundSpec) -> Result<(), String> {
        let mut sums = vec![0.0f64; g.n()];
        for &(u, v, w) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(format!("certificate edge ({u},{v}) is not in the graph"));
            }
            if !(-CERT_TOL..=1.0 + CERT_TOL).contains(&w) {
                return Err(format!("weight {w} on ({u},{v}) outside [0,1]"));
            }
            sums[u] += w;
            sums[v] += w;
        }
        for v in 0..g.n() {
            let (lo, hi) = (f64::from(bounds.lower(v)), f64::from(bounds.upper(v)));
            if sums[v] < lo - CERT_TOL || sums[v] > hi + CERT_TOL {
                return Err(format!(
                    "vertex {v} weight sum {} outside [{lo}, {hi}]",
                    sums[v]
                ));
            }
        }
        Ok(())
    }
}
