use crate::{Graph, VertexSet};

/// Streams every independent set of `g` whose size has the given parity,
/// ordered by increasing size (∅ first when `parity == 0`). Sets of equal
/// size come out in ascending mask order.
///
/// Enumeration is inherently exponential and mask-based; callers stay within
/// exact-computation limits, so orders above 64 are rejected outright.
pub fn independent_sets_of_parity(g: &Graph, parity: u8) -> impl Iterator<Item = VertexSet> + '_ {
    assert!(g.n() <= 64, "independent-set enumeration requires n <= 64");
    assert!(parity <= 1);
    IndepIter {
        g,
        size: usize::from(parity),
        mask: None,
        done: false,
    }
}

struct IndepIter<'a> {
    g: &'a Graph,
    size: usize,
    mask: Option<u64>,
    done: bool,
}

impl IndepIter<'_> {
    fn is_independent(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.g.row_mask64(v) & mask != 0 {
                return false;
            }
        }
        true
    }
}

impl Iterator for IndepIter<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let n = self.g.n();
        loop {
            if self.done || self.size > n {
                return None;
            }
            let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let cur = match self.mask {
                None => {
                    // First subset of the current size.
                    let first = if self.size == 0 { 0 } else { (1u64 << self.size) - 1 };
                    self.mask = Some(first);
                    first
                }
                Some(prev) => {
                    // Gosper's hack: next subset of the same popcount.
                    if prev == 0 || self.size == 0 {
                        self.advance_size(n);
                        continue;
                    }
                    let c = prev & prev.wrapping_neg();
                    let r = prev.wrapping_add(c);
                    if r > limit || r < prev {
                        self.advance_size(n);
                        continue;
                    }
                    let next = (((r ^ prev) >> 2) / c) | r;
                    if next > limit {
                        self.advance_size(n);
                        continue;
                    }
                    self.mask = Some(next);
                    next
                }
            };
            if cur > limit {
                self.advance_size(n);
                continue;
            }
            if self.is_independent(cur) {
                return Some(VertexSet::from_mask(cur, n));
            }
        }
    }
}

impl IndepIter<'_> {
    fn advance_size(&mut self, n: usize) {
        self.size += 2;
        self.mask = None;
        if self.size > n {
            self.done = true;
        }
    }
}
