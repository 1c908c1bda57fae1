use crate::{GraphError, VertexSet};

/// A finite, undirected, simple graph on vertices `{0, …, n-1}`.
///
/// Adjacency is stored as one bitset row per vertex so that adjacency tests
/// and row intersections are O(n/64); subset enumeration dominates every
/// downstream workload and lives on these rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The empty graph `I_n`: n vertices, no edges.
    pub fn empty(n: usize) -> Graph {
        let words_per_row = n.div_ceil(64).max(1);
        Graph {
            n,
            words_per_row,
            bits: vec![0; words_per_row * n.max(1)],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops and bad endpoints.
    /// Duplicate edges collapse silently (the graph stays simple).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words_per_row;
        self.bits[u * w + v / 64] |= 1u64 << (v % 64);
        self.bits[v * w + u / 64] |= 1u64 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || u == v {
            return false;
        }
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    /// e(G).
    pub fn edge_count(&self) -> usize {
        let total: u32 = self.bits.iter().map(|w| w.count_ones()).sum();
        total as usize / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// δ(G); `None` for the order-0 graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(wi, &word)| {
            let base = wi * 64;
            BitIter { word }.map(move |b| base + b)
        })
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Disjoint union `G₁ + G₂`: vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Join `G₁ ∨ G₂`: the disjoint union plus every edge between the parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        g
    }

    /// The subgraph induced by `s`, relabeled onto `{0, …, |s|-1}` in
    /// increasing vertex order. The returned map sends new labels back to the
    /// parent graph so witnesses can be lifted.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        s.validate(self.n)?;
        let map: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// Relabels by `perm`: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Connected components of `G - removed`, as sorted vertex lists in the
    /// parent labeling.
    pub fn components_after_removal(&self, removed: &VertexSet) -> Result<Vec<Vec<usize>>, GraphError> {
        removed.validate(self.n)?;
        let mut seen = vec![false; self.n];
        for v in removed.iter() {
            seen[v] = true;
        }
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        Ok(comps)
    }

    /// o(G - removed): the number of odd-order components after deletion.
    pub fn odd_components(&self, removed: &VertexSet) -> Result<usize, GraphError> {
        Ok(self
            .components_after_removal(removed)?
            .iter()
            .filter(|c| c.len() % 2 == 1)
            .count())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.components_after_removal(&VertexSet::new()).unwrap().len() == 1
    }

    /// True iff no two vertices of `s` are adjacent.
    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        let members: Vec<usize> = s.iter().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Neighbor bitmask of `v` as a single word; only valid for n <= 64.
    pub(crate) fn row_mask64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.row(v)[0]
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            None
        } else {
            let b = self.word.trailing_zeros() as usize;
            self.word &= self.word - 1;
            Some(b)
        }
    }
}
