use crate::GraphError;

/// A subset of the vertex set `{0, …, n-1}` of some associated graph.
/// Members are kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet { members: Vec::new() }
    }

    pub fn from_slice(vs: &[usize]) -> VertexSet {
        let mut members = vs.to_vec();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    /// Members of `{0, …, n-1}` whose bit is set in `mask`.
    pub fn from_mask(mask: u64, n: usize) -> VertexSet {
        debug_assert!(n <= 64);
        VertexSet {
            members: (0..n).filter(|&v| mask >> v & 1 == 1).collect(),
        }
    }

    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.members.last().map_or(true, |&v| v < 64));
        self.members.iter().fold(0u64, |m, &v| m | 1 << v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| !other.contains(v))
    }

    /// `{0, …, n-1} \ self`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet {
            members: (0..n).filter(|&v| !self.contains(v)).collect(),
        }
    }

    pub(crate) fn validate(&self, n: usize) -> Result<(), GraphError> {
        match self.members.last() {
            Some(&v) if v >= n => Err(GraphError::InvalidVertex { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let members: Vec<usize> = iter.into_iter().collect();
        VertexSet::from_slice(&members)
    }
}
