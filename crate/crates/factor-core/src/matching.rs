use graph_core::{Graph, GraphError, VertexSet};

use crate::FactorError;

/// Exact-computation cap for the matching DP and the Tutte-set search.
pub const MATCHING_LIMIT: usize = 20;

/// Either an explicit perfect matching or a Tutte set S with o(G-S) > |S|.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingDecision {
    Yes(Vec<(usize, usize)>),
    No(VertexSet),
}

impl MatchingDecision {
    pub fn exists(&self) -> bool {
        matches!(self, MatchingDecision::Yes(_))
    }
}

/// Perfect-matching existence by memoized dynamic programming over vertex
/// subsets: always match the lowest unmatched vertex first. Exact up to
/// [`MATCHING_LIMIT`]; callers needing witnesses use [`has_perfect_matching`].
pub fn perfect_matching_exists(g: &Graph) -> Result<bool, FactorError> {
    let n = g.n();
    if n > MATCHING_LIMIT {
        return Err(GraphError::SizeLimit { n, limit: MATCHING_LIMIT }.into());
    }
    if n % 2 == 1 {
        return Ok(false);
    }
    if n == 0 {
        return Ok(true);
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut memo = vec![0u8; 1usize << n]; // 0 unknown, 1 yes, 2 no
    let full = (1u64 << n) - 1;
    Ok(can_match(full, &adj, &mut memo))
}

fn can_match(mask: u64, adj: &[u64], memo: &mut [u8]) -> bool {
    if mask == 0 {
        return true;
    }
    match memo[mask as usize] {
        1 => return true,
        2 => return false,
        _ => {}
    }
    let v = mask.trailing_zeros() as usize;
    let mut partners = adj[v] & mask;
    let mut ok = false;
    while partners != 0 {
        let u = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        if can_match(mask & !(1 << v) & !(1 << u), adj, memo) {
            ok = true;
            break;
        }
    }
    memo[mask as usize] = if ok { 1 } else { 2 };
    ok
}

/// Perfect-matching decision with witnesses: an explicit matching on Yes, a
/// Tutte set S with o(G-S) > |S| on No (found by subset enumeration in order
/// of increasing size; odd orders short-circuit to S = ∅).
pub fn has_perfect_matching(g: &Graph) -> Result<MatchingDecision, FactorError> {
    let n = g.n();
    if n > MATCHING_LIMIT {
        return Err(GraphError::SizeLimit { n, limit: MATCHING_LIMIT }.into());
    }
    if n % 2 == 1 {
        return Ok(MatchingDecision::No(VertexSet::new()));
    }
    if n == 0 {
        return Ok(MatchingDecision::Yes(Vec::new()));
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut memo = vec![0u8; 1usize << n];
    let full = (1u64 << n) - 1;
    if can_match(full, &adj, &mut memo) {
        // Peel the matching off the memoized table.
        let mut matching = Vec::with_capacity(n / 2);
        let mut mask = full;
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            let mut partners = adj[v] & mask;
            let mut found = false;
            while partners != 0 {
                let u = partners.trailing_zeros() as usize;
                partners &= partners - 1;
                let rest = mask & !(1 << v) & !(1 << u);
                if can_match(rest, &adj, &mut memo) {
                    matching.push((v, u));
                    mask = rest;
                    found = true;
                    break;
                }
            }
            debug_assert!(found, "matching reconstruction failed");
        }
        return Ok(MatchingDecision::Yes(matching));
    }
    // Tutte's theorem guarantees a violating S; search by increasing size.
    for size in 0..=n {
        let mut s_mask = if size == 0 { 0u64 } else { (1u64 << size) - 1 };
        loop {
            let s = VertexSet::from_mask(s_mask, n);
            if g.odd_components(&s)? > s.len() {
                return Ok(MatchingDecision::No(s));
            }
            if size == 0 {
                break;
            }
            // Gosper's hack.
            let c = s_mask & s_mask.wrapping_neg();
            let r = s_mask.wrapping_add(c);
            let next = (((r ^ s_mask) >> 2) / c) | r;
            if next >= 1u64 << n || next < s_mask {
                break;
            }
            s_mask = next;
        }
    }
    unreachable!("Tutte's theorem: a violating set must exist when no perfect matching does")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_even_clique() {
        match has_perfect_matching(&Graph::complete(4)).unwrap() {
            MatchingDecision::Yes(m) => assert_eq!(m.len(), 2),
            MatchingDecision::No(_) => panic!("K4 has a perfect matching"),
        }
    }

    #[test]
    fn star_tutte_set_is_the_center() {
        let star = Graph::complete(1).join(&Graph::empty(3));
        match has_perfect_matching(&star).unwrap() {
            MatchingDecision::No(s) => {
                assert_eq!(s.as_slice(), &[0]);
                assert_eq!(star.odd_components(&s).unwrap(), 3);
            }
            MatchingDecision::Yes(_) => panic!("S_{{4,1}} has no perfect matching"),
        }
    }

    #[test]
    fn lemma11_shaped_graph() {
        // K_δ ∨ (K_{n-2δ-r-1} + I_{δ+1}) with δ=4, r=1, n=13: the I_5 vertices
        // are only adjacent to K_4, so S = V(K_4) leaves 5 odd components.
        let (delta, r, n) = (4usize, 1usize, 13usize);
        let h = Graph::complete(delta).join(
            &Graph::complete(n - 2 * delta - r - 1).disjoint_union(&Graph::empty(delta + 1)),
        );
        assert_eq!(h.n(), 12); // the I_r class is already deleted here
        match has_perfect_matching(&h).unwrap() {
            MatchingDecision::No(s) => {
                assert_eq!(s.len(), delta);
                assert!(h.odd_components(&s).unwrap() > s.len());
            }
            MatchingDecision::Yes(_) => panic!("Tutte violation expected"),
        }
    }

    #[test]
    fn odd_order_immediate_no() {
        match has_perfect_matching(&Graph::complete(5)).unwrap() {
            MatchingDecision::No(s) => assert!(s.is_empty()),
            MatchingDecision::Yes(_) => panic!("odd order"),
        }
    }

    #[test]
    fn matching_edges_are_disjoint_and_present() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        match has_perfect_matching(&g).unwrap() {
            MatchingDecision::Yes(m) => {
                let mut seen = VertexSet::new();
                for &(u, v) in &m {
                    assert!(g.has_edge(u, v));
                    assert!(!seen.contains(u) && !seen.contains(v));
                    seen = seen.union(&VertexSet::from_slice(&[u, v]));
                }
                assert_eq!(seen.len(), 6);
            }
            MatchingDecision::No(_) => panic!("C6 has a perfect matching"),
        }
    }
}
