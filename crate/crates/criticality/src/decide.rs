use factor_core::perfect_matching_exists;
use graph_core::{independent_sets_of_parity, Graph, GraphError, VertexSet};

use crate::{CriticalityError, CriticalityWitness};

/// Exact-enumeration cap for both decision routes.
pub const CRITICALITY_LIMIT: usize = 14;

/// Outcome of the definition route; No carries the first independent set
/// whose removal leaves no perfect matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DefDecision {
    Yes,
    No(VertexSet),
}

impl DefDecision {
    pub fn holds(&self) -> bool {
        matches!(self, DefDecision::Yes)
    }
}

/// Outcome of the odd-component route; No carries a full (I, S) witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TutteDecision {
    Yes,
    No(CriticalityWitness),
}

impl TutteDecision {
    pub fn holds(&self) -> bool {
        matches!(self, TutteDecision::Yes)
    }
}

fn check_limit(n: usize) -> Result<(), CriticalityError> {
    if n > CRITICALITY_LIMIT {
        return Err(GraphError::SizeLimit { n, limit: CRITICALITY_LIMIT }.into());
    }
    Ok(())
}

/// Definition route: for every independent set I with |I| ≡ n (mod 2)
/// (enumerated in order of increasing size, so small refutations exit early),
/// G − I must have a perfect matching.
pub fn is_id_factor_critical_def(g: &Graph) -> Result<DefDecision, CriticalityError> {
    let n = g.n();
    check_limit(n)?;
    let parity = (n % 2) as u8;
    for i in independent_sets_of_parity(g, parity) {
        let keep = i.complement(n);
        let (h, _) = g.induced(&keep)?;
        if !perfect_matching_exists(&h)? {
            return Ok(DefDecision::No(i));
        }
    }
    Ok(DefDecision::Yes)
}

/// Odd-component route: G is ID-factor-critical exactly when
/// o(G − I − S) ≤ |S| for every qualifying independent set I and every
/// S ⊆ V(G) ∖ I. Uses no matching machinery, so it is an independent check
/// against [`is_id_factor_critical_def`].
pub fn is_id_factor_critical_tutte(g: &Graph) -> Result<TutteDecision, CriticalityError> {
    let n = g.n();
    check_limit(n)?;
    let parity = (n % 2) as u8;
    for i in independent_sets_of_parity(g, parity) {
        let keep = i.complement(n);
        let (h, map) = g.induced(&keep)?;
        let m = h.n();
        for s_mask in 0u64..(1u64 << m) {
            let s_local = VertexSet::from_mask(s_mask, m);
            let odd = h.odd_components(&s_local)?;
            if odd > s_local.len() {
                let s: VertexSet = s_local.iter().map(|j| map[j]).collect();
                return Ok(TutteDecision::No(CriticalityWitness {
                    i,
                    s,
                    odd_count: odd,
                }));
            }
        }
    }
    Ok(TutteDecision::Yes)
}
