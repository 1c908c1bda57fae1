use graph_core::{Graph, VertexSet};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

pub(crate) fn serialize_vset<S: Serializer>(v: &VertexSet, ser: S) -> Result<S::Ok, S::Error> {
    let mut seq = ser.serialize_seq(Some(v.len()))?;
    for x in v.iter() {
        seq.serialize_element(&x)?;
    }
    seq.end()
}

/// A pair (I, S) refuting ID-factor-criticality: I is independent with
/// |I| ≡ n (mod 2), S is disjoint from I, and G − I − S has more than |S|
/// odd components. Wire form: `{I:[…], S:[…], odd: k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityWitness {
    #[serde(rename = "I", serialize_with = "serialize_vset")]
    pub i: VertexSet,
    #[serde(rename = "S", serialize_with = "serialize_vset")]
    pub s: VertexSet,
    #[serde(rename = "odd")]
    pub odd_count: usize,
}

impl CriticalityWitness {
    /// Re-validates every invariant against `g` by direct recomputation:
    /// independence and parity of I, disjointness of S, the odd-component
    /// count, and the violation odd_count ≥ |S| + 1. Returns a diagnostic on
    /// the first failure.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        if !g.is_independent_set(&self.i) {
            return Err("I is not independent".into());
        }
        if self.i.len() % 2 != g.n() % 2 {
            return Err(format!(
                "|I| = {} has the wrong parity for n = {}",
                self.i.len(),
                g.n()
            ));
        }
        if !self.i.is_disjoint(&self.s) {
            return Err("I and S intersect".into());
        }
        let keep = self.i.complement(g.n());
        let (h, map) = g.induced(&keep).map_err(|e| e.to_string())?;
        let s_local: VertexSet = (0..map.len()).filter(|&j| self.s.contains(map[j])).collect();
        if s_local.len() != self.s.len() {
            return Err("S is not contained in V(G) \\ I".into());
        }
        let odd = h.odd_components(&s_local).map_err(|e| e.to_string())?;
        if odd != self.odd_count {
            return Err(format!(
                "recorded odd count {} but o(G-I-S) = {odd}",
                self.odd_count
            ));
        }
        if odd < self.s.len() + 1 {
            return Err(format!(
                "o(G-I-S) = {odd} does not exceed |S| = {}",
                self.s.len()
            ));
        }
        Ok(())
    }
}
