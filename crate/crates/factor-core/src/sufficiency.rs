use graph_core::Graph;

/// Whether the edge-count sufficiency hypothesis applies to (G, a, b).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SufficiencyOutcome {
    /// n >= a+1, δ(G) >= a, e(G) >= C(n-1,2) + (a+1)/2, and na even when
    /// a = b; a fractional [a,b]-factor is then guaranteed.
    Applicable,
    NotApplicable,
}

/// Evaluates the edge-count sufficiency predicate in exact integer
/// arithmetic: `e >= C(n-1,2) + (a+1)/2` is tested as
/// `2e >= (n-1)(n-2) + a + 1`.
pub fn edge_count_sufficiency(g: &Graph, a: u32, b: u32) -> SufficiencyOutcome {
    debug_assert!(1 <= a && a <= b);
    let n = g.n();
    let a_us = a as usize;
    if n < a_us + 1 {
        return SufficiencyOutcome::NotApplicable;
    }
    if g.min_degree().unwrap_or(0) < a_us {
        return SufficiencyOutcome::NotApplicable;
    }
    if a == b && (n * a_us) % 2 == 1 {
        return SufficiencyOutcome::NotApplicable;
    }
    if 2 * g.edge_count() >= (n - 1) * (n - 2) + a_us + 1 {
        SufficiencyOutcome::Applicable
    } else {
        SufficiencyOutcome::NotApplicable
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_applies() {
        // K5, a=b=2: e=10 >= 6 + 1.5, δ=4 >= 2, 5*2 even.
        assert_eq!(edge_count_sufficiency(&Graph::complete(5), 2, 2), SufficiencyOutcome::Applicable);
    }

    #[test]
    fn parity_clause_blocks() {
        // K5 minus an edge, a=b=1: 5*1 odd.
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                if (u, v) != (0, 1) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(5, &edges).unwrap();
        assert_eq!(edge_count_sufficiency(&g, 1, 1), SufficiencyOutcome::NotApplicable);
        // Same graph with a < b escapes the parity clause.
        assert_eq!(edge_count_sufficiency(&g, 1, 2), SufficiencyOutcome::Applicable);
    }

    #[test]
    fn low_min_degree_blocks() {
        let star = Graph::complete(1).join(&Graph::empty(5));
        assert_eq!(edge_count_sufficiency(&star, 2, 3), SufficiencyOutcome::NotApplicable);
    }
}
