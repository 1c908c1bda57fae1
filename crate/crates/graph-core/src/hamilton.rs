use crate::{Graph, GraphError};

/// Largest order the exact (subset, endpoint) dynamic program accepts.
pub const HAMILTON_LIMIT: usize = 20;

/// Exact Hamilton-path decision by dynamic programming over
/// (visited subset, endpoint) states. O(2^n * n) time, so capped at
/// [`HAMILTON_LIMIT`].
pub fn hamilton_path_exists(g: &Graph) -> Result<bool, GraphError> {
    let n = g.n();
    if n == 0 {
        return Err(GraphError::InvalidVertex { vertex: 0, n: 0 });
    }
    if n > HAMILTON_LIMIT {
        return Err(GraphError::SizeLimit { n, limit: HAMILTON_LIMIT });
    }
    if n == 1 {
        return Ok(true);
    }
    // ends[mask] has bit v set iff some path visiting exactly `mask` ends at v.
    let full = (1u32 << n) - 1;
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let adj: Vec<u32> = (0..n).map(|v| g.row_mask64(v) as u32).collect();
    for mask in 1..=full {
        let reach = ends[mask as usize];
        if reach == 0 {
            continue;
        }
        if mask == full {
            return Ok(true);
        }
        let mut endpoints = reach;
        while endpoints != 0 {
            let v = endpoints.trailing_zeros() as usize;
            endpoints &= endpoints - 1;
            let mut next = adj[v] & !mask;
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[(mask | 1 << u) as usize] |= 1 << u;
            }
        }
    }
    Ok(ends[full as usize] != 0)
}
