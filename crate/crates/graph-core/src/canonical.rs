//! Canonical labeling by degree-refinement pruned permutation backtracking.
//!
//! Only ever invoked on small graphs (spectral-equality boundary cases and
//! corpus deduplication), so a careful exhaustive search beats pulling in a
//! full nauty-style refinement machine.

use crate::{Graph, GraphError};

/// Default exact-computation limit for canonical labeling and isomorphism.
pub const DEFAULT_ISO_LIMIT: usize = 12;

/// A relabeling-invariant fingerprint: the lexicographically minimal
/// adjacency bit string over all labelings compatible with the stable
/// degree-refinement partition. Equal labels mean isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalLabel {
    n: usize,
    bits: Vec<u64>,
}

/// Iterated color refinement: start from degrees, refine by sorted neighbor
/// color multisets until stable. The class order is derived from the sorted
/// refinement keys, so it is invariant under vertex relabeling. The stable
/// partition is equitable by construction.
pub(crate) fn refinement_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut colors: Vec<usize> = vec![0; n];
    // Initial colors: degree rank.
    let mut degs: Vec<usize> = g.degrees();
    let mut uniq = degs.clone();
    uniq.sort_unstable();
    uniq.dedup();
    for v in 0..n {
        colors[v] = uniq.binary_search(&degs[v]).unwrap();
    }
    let mut class_count = uniq.len();
    loop {
        let mut keys: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
            nb.sort_unstable();
            keys.push((colors[v], nb));
        }
        let mut sorted: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        let new_count = sorted.len();
        for v in 0..n {
            colors[v] = sorted.binary_search(&&keys[v]).unwrap();
        }
        if new_count == class_count {
            break;
        }
        class_count = new_count;
    }
    degs.clear();
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); class_count];
    for v in 0..n {
        classes[colors[v]].push(v);
    }
    classes
}

/// The stable color-refinement partition of `g`, an equitable partition whose
/// class order is invariant under vertex relabeling. Often coarser than the
/// orbit partition, but always a valid equitable partition for quotient
/// computations.
pub fn refinement_partition(g: &Graph) -> Vec<Vec<usize>> {
    refinement_classes(g)
}

/// Canonical form under the default size limit.
pub fn canonical_form(g: &Graph) -> Result<CanonicalLabel, GraphError> {
    canonical_form_limit(g, DEFAULT_ISO_LIMIT)
}

/// Canonical form with an explicit exact-computation limit.
pub fn canonical_form_limit(g: &Graph, limit: usize) -> Result<CanonicalLabel, GraphError> {
    let n = g.n();
    if n > limit {
        return Err(GraphError::SizeLimit { n, limit });
    }
    let classes = refinement_classes(g);
    // class_of_position[k] = refinement class the k-th placed vertex comes from.
    let mut class_of_position = Vec::with_capacity(n);
    for (ci, class) in classes.iter().enumerate() {
        class_of_position.extend(std::iter::repeat(ci).take(class.len()));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut search = Search {
        g,
        classes: &classes,
        class_of_position: &class_of_position,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        cur: vec![0u8; nbits],
        best: None,
    };
    search.run(0, true);
    let best = search.best.unwrap_or_default();
    let mut bits = vec![0u64; nbits.div_ceil(64).max(1)];
    for (i, &b) in best.iter().enumerate() {
        if b == 1 {
            bits[i / 64] |= 1 << (i % 64);
        }
    }
    Ok(CanonicalLabel { n, bits })
}

/// Whether u and v agree on all adjacencies outside {u, v}. The row XOR can
/// then only contain the bits of u and v themselves (present exactly when the
/// two are adjacent).
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let (ru, rv) = (g.row(u), g.row(v));
    for (w, (&a, &b)) in ru.iter().zip(rv).enumerate() {
        let mut diff = a ^ b;
        for x in [u, v] {
            if x / 64 == w {
                diff &= !(1u64 << (x % 64));
            }
        }
        if diff != 0 {
            return false;
        }
    }
    true
}

struct Search<'a> {
    g: &'a Graph,
    classes: &'a [Vec<usize>],
    class_of_position: &'a [usize],
    placed: Vec<usize>,
    used: Vec<bool>,
    cur: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl Search<'_> {
    /// Depth-first over labelings compatible with the class order, keeping the
    /// lexicographically minimal adjacency bit string. `tight` means the
    /// current prefix equals the best prefix, which licenses pruning. Returns
    /// whether this subtree replaced `best`; a replacement from inside the
    /// subtree makes the caller's prefix tight again for later siblings.
    fn run(&mut self, k: usize, mut tight: bool) -> bool {
        let n = self.g.n();
        if k == n {
            if !tight || self.best.is_none() {
                self.best = Some(self.cur.clone());
                return true;
            }
            return false;
        }
        let off = k * k.saturating_sub(1) / 2;
        let classes = self.classes;
        let class = &classes[self.class_of_position[k]];
        let mut any_set = false;
        // Candidates already explored at this node, for twin pruning: if u and
        // v are twins (N(u)\{u,v} = N(v)\{u,v}), the transposition (u v) is an
        // automorphism, so v's subtree would only revisit u's labelings.
        let mut explored: Vec<usize> = Vec::new();
        for &v in class {
            if self.used[v] {
                continue;
            }
            if explored.iter().any(|&u| twins(self.g, u, v)) {
                continue;
            }
            explored.push(v);
            // Row bits of v against the already-placed prefix.
            let mut child_tight = tight && self.best.is_some();
            let mut pruned = false;
            for j in 0..k {
                let bit = u8::from(self.g.has_edge(v, self.placed[j]));
                self.cur[off + j] = bit;
                if child_tight {
                    let best = self.best.as_ref().unwrap();
                    if bit > best[off + j] {
                        pruned = true;
                        break;
                    }
                    if bit < best[off + j] {
                        child_tight = false;
                    }
                }
            }
            if pruned {
                continue;
            }
            self.used[v] = true;
            self.placed.push(v);
            if self.run(k + 1, child_tight) {
                tight = true;
                any_set = true;
            }
            self.placed.pop();
            self.used[v] = false;
        }
        any_set
    }
}

/// Isomorphism via canonical forms, after cheap degree-sequence screening.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    is_isomorphic_limit(g1, g2, DEFAULT_ISO_LIMIT)
}

pub fn is_isomorphic_limit(g1: &Graph, g2: &Graph, limit: usize) -> Result<bool, GraphError> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    Ok(canonical_form_limit(g1, limit)? == canonical_form_limit(g2, limit)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::VertexSet;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn relabelings_are_isomorphic() {
        let c5 = cycle(5);
        let perm = [2, 4, 1, 0, 3];
        assert!(is_isomorphic(&c5, &c5.permute(&perm)).unwrap());
    }

    #[test]
    fn same_edge_count_different_structure() {
        let k3_plus_k1 = Graph::complete(3).disjoint_union(&Graph::complete(1));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(k3_plus_k1.edge_count(), p4.edge_count());
        assert!(!is_isomorphic(&k3_plus_k1, &p4).unwrap());
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        // Brute-force classification of all 2^6 labeled graphs on 4 vertices.
        let mut forms = std::collections::HashSet::new();
        for mask in 0u32..64 {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn size_limit_enforced() {
        let g = Graph::empty(13);
        assert!(matches!(
            canonical_form(&g),
            Err(GraphError::SizeLimit { n: 13, limit: 12 })
        ));
        assert!(canonical_form_limit(&g, 13).is_ok());
    }

    #[test]
    fn refinement_is_equitable() {
        let g = Graph::complete(2).join(&Graph::complete(3).disjoint_union(&Graph::empty(2)));
        for class in refinement_classes(&g) {
            let deg_into = |v: usize, other: &[usize]| other.iter().filter(|&&u| g.has_edge(v, u)).count();
            for other in refinement_classes(&g) {
                let counts: Vec<usize> = class.iter().map(|&v| deg_into(v, &other)).collect();
                assert!(counts.windows(2).all(|w| w[0] == w[1]), "not equitable");
            }
        }
        // Sanity: classes partition the vertex set.
        let all: VertexSet = refinement_classes(&g).into_iter().flatten().collect();
        assert_eq!(all.len(), g.n());
    }
}
