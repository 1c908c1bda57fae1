use graph_core::{Graph, GraphError, VertexSet};
use serde::Serialize;

use crate::{DegreeBoundSpec, FactorError};

/// Default exact-computation limit for the subset oracle.
pub const ORACLE_LIMIT: usize = 20;

/// A pair (S, T) with φ(S, T) <= -1 certifying that no fractional
/// (g,f)-factor exists. T is always derived from S by the defining rule
/// `T = {v ∉ S : d_{G-S}(v) < g(v)}`, never chosen freely.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeficiencyWitness {
    #[serde(rename = "S", serialize_with = "crate::report::serialize_vset")]
    pub s: VertexSet,
    #[serde(rename = "T", serialize_with = "crate::report::serialize_vset")]
    pub t: VertexSet,
    pub phi: i64,
}

/// Oracle verdict: either the factor exists, or here is a minimizing witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleDecision {
    Yes,
    No(DeficiencyWitness),
}

impl OracleDecision {
    pub fn exists(&self) -> bool {
        matches!(self, OracleDecision::Yes)
    }
}

/// Evaluates the deficiency φ(S, T) = b|S| - a|T| + Σ_{v∈T} d_{G-S}(v) for
/// uniform bounds, with T computed from S. Exact integer arithmetic.
pub fn deficiency(
    g: &Graph,
    a: u32,
    b: u32,
    s: &VertexSet,
) -> Result<(VertexSet, i64), FactorError> {
    let bounds = DegreeBoundSpec::uniform(g.n(), a, b)?;
    deficiency_general(g, &bounds, s)
}

/// φ(S, T) = f(S) - g(T) + Σ_{v∈T} d_{G-S}(v) with T = {v ∉ S : d_{G-S}(v) < g(v)}.
pub fn deficiency_general(
    g: &Graph,
    bounds: &DegreeBoundSpec,
    s: &VertexSet,
) -> Result<(VertexSet, i64), FactorError> {
    bounds.check_graph(g.n())?;
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(GraphError::InvalidVertex { vertex: v, n: g.n() }.into());
    }
    let mut phi: i64 = s.iter().map(|v| i64::from(bounds.upper(v))).sum();
    let mut t = Vec::new();
    for v in 0..g.n() {
        if s.contains(v) {
            continue;
        }
        let deg_minus_s = g.neighbors(v).filter(|&u| !s.contains(u)).count() as i64;
        if deg_minus_s < i64::from(bounds.lower(v)) {
            phi += deg_minus_s - i64::from(bounds.lower(v));
            t.push(v);
        }
    }
    Ok((VertexSet::from_slice(&t), phi))
}

/// Exhaustive fractional (g,f)-factor decision over all 2^n subsets S, using
/// the deficiency criterion: the factor exists iff φ(S, T) >= 0 for every S.
/// Returns the φ-minimizing witness on No. Exact integers throughout.
pub fn fractional_factor_oracle(
    g: &Graph,
    bounds: &DegreeBoundSpec,
) -> Result<OracleDecision, FactorError> {
    fractional_factor_oracle_limit(g, bounds, ORACLE_LIMIT)
}

pub fn fractional_factor_oracle_limit(
    g: &Graph,
    bounds: &DegreeBoundSpec,
    limit: usize,
) -> Result<OracleDecision, FactorError> {
    bounds.check_graph(g.n())?;
    let n = g.n();
    if n > limit {
        return Err(GraphError::SizeLimit { n, limit }.into());
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut worst: Option<(u64, u64, i64)> = None;
    for s_mask in 0..=all {
        let mut phi: i64 = 0;
        let mut t_mask = 0u64;
        let mut rest = all & !s_mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & !s_mask).count_ones() as i64;
            if d < i64::from(bounds.lower(v)) {
                phi += d - i64::from(bounds.lower(v));
                t_mask |= 1 << v;
            }
        }
        let mut s_rest = s_mask;
        while s_rest != 0 {
            let v = s_rest.trailing_zeros() as usize;
            s_rest &= s_rest - 1;
            phi += i64::from(bounds.upper(v));
        }
        if phi < 0 && worst.map_or(true, |(_, _, w)| phi < w) {
            worst = Some((s_mask, t_mask, phi));
        }
    }
    Ok(match worst {
        None => OracleDecision::Yes,
        Some((s_mask, t_mask, phi)) => OracleDecision::No(DeficiencyWitness {
            s: VertexSet::from_mask(s_mask, n),
            t: VertexSet::from_mask(t_mask, n),
            phi,
        }),
    })
}

impl DeficiencyWitness {
    /// Re-derives T and φ from S and checks the stored values and φ <= -1.
    pub fn validate(&self, g: &Graph, bounds: &DegreeBoundSpec) -> Result<bool, FactorError> {
        let (t, phi) = deficiency_general(g, bounds, &self.s)?;
        Ok(t == self.t && phi == self.phi && phi <= -1 && self.s.is_disjoint(&self.t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor_extremal(n: usize, a: usize) -> Graph {
        Graph::complete(a - 1).join(&Graph::complete(n - a).disjoint_union(&Graph::complete(1)))
    }

    #[test]
    fn empty_s_with_large_min_degree() {
        // δ(G) >= a and S = ∅ give T = ∅ and φ = 0.
        let g = Graph::complete(5);
        let (t, phi) = deficiency(&g, 2, 3, &VertexSet::new()).unwrap();
        assert!(t.is_empty());
        assert_eq!(phi, 0);
    }

    #[test]
    fn extremal_graph_deficiency() {
        // K_1 ∨ (K_3 + K_1), a=2, b=3: the pendant-class vertex has degree 1,
        // so S = ∅ gives T = {that vertex} and φ = 0 - 2 + 1 = -1.
        let g = factor_extremal(5, 2);
        let (t, phi) = deficiency(&g, 2, 3, &VertexSet::new()).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(phi, -1);
    }

    #[test]
    fn k4_with_one_removed() {
        let g = Graph::complete(4);
        let (t, phi) = deficiency(&g, 2, 2, &VertexSet::from_slice(&[0])).unwrap();
        assert!(t.is_empty());
        assert_eq!(phi, 2);
    }

    #[test]
    fn oracle_on_complete_graphs() {
        for (n, a, b) in [(5, 2, 2u32), (4, 1, 1), (6, 3, 3), (7, 2, 4)] {
            let bounds = DegreeBoundSpec::uniform(n, a, b).unwrap();
            let d = fractional_factor_oracle(&Graph::complete(n), &bounds).unwrap();
            assert!(d.exists(), "K_{n} with [{a},{b}] should have a factor");
        }
    }

    #[test]
    fn oracle_rejects_the_extremal_family() {
        for (n, a, b) in [(5usize, 2u32, 3u32), (6, 1, 1), (7, 3, 3), (8, 2, 2)] {
            let g = factor_extremal(n, a as usize);
            let bounds = DegreeBoundSpec::uniform(n, a, b).unwrap();
            match fractional_factor_oracle(&g, &bounds).unwrap() {
                OracleDecision::No(w) => assert!(w.validate(&g, &bounds).unwrap()),
                OracleDecision::Yes => panic!("extremal graph (n={n}, a={a}) must have no factor"),
            }
        }
    }

    #[test]
    fn odd_cycle_has_fractional_perfect_matching() {
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let bounds = DegreeBoundSpec::uniform(3, 1, 1).unwrap();
        assert!(fractional_factor_oracle(&c3, &bounds).unwrap().exists());
    }

    #[test]
    fn oracle_size_limit() {
        let g = Graph::empty(21);
        let bounds = DegreeBoundSpec::uniform(21, 1, 1).unwrap();
        assert!(fractional_factor_oracle(&g, &bounds).is_err());
    }
}
