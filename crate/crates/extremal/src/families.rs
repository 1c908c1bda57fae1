use graph_core::Graph;

use crate::ExtremalError;

fn bad(msg: String) -> ExtremalError {
    ExtremalError::BadParameters(msg)
}

/// K_{a−1} ∨ (K_{n−a} + K₁), the unique spectral-boundary graph without a
/// fractional [a,b]-factor. Layout: vertices 0..a−1 form K_{a−1}, the next
/// n−a form the large clique, and vertex n−1 is the pendant-class K₁.
pub fn build_factor_extremal(n: usize, a: usize) -> Result<Graph, ExtremalError> {
    if a < 1 || n < a + 1 {
        return Err(bad(format!("need a >= 1 and n >= a+1, got n={n}, a={a}")));
    }
    Ok(Graph::complete(a - 1)
        .join(&Graph::complete(n - a).disjoint_union(&Graph::complete(1))))
}

/// Equitable partition of [`build_factor_extremal`] in layout order
/// (K_{a−1}, K_{n−a}, K₁); the first class is dropped when a = 1.
pub fn factor_extremal_partition(n: usize, a: usize) -> Result<Vec<Vec<usize>>, ExtremalError> {
    if a < 1 || n < a + 1 {
        return Err(bad(format!("need a >= 1 and n >= a+1, got n={n}, a={a}")));
    }
    let mut classes = Vec::new();
    if a > 1 {
        classes.push((0..a - 1).collect());
    }
    classes.push((a - 1..n - 1).collect());
    classes.push(vec![n - 1]);
    Ok(classes)
}

/// S_{n,k} = K_k ∨ I_{n−k}: a clique dominating an independent set.
pub fn build_spanning_star(n: usize, k: usize) -> Result<Graph, ExtremalError> {
    if k >= n {
        return Err(bad(format!("need n > k, got n={n}, k={k}")));
    }
    Ok(Graph::complete(k).join(&Graph::empty(n - k)))
}

/// S_{δ+r,δ} ∨ (K_{n−2δ−r−1} + I_{δ+1}), the boundary graph that is not
/// ID-factor-critical. Layout (shared with the structured witness): K_δ,
/// then I_r, then the large clique, then I_{δ+1}.
pub fn build_id_extremal(n: usize, delta: usize, r: usize) -> Result<Graph, ExtremalError> {
    Ok(criticality::structured_graph(n, delta, r)?)
}

/// Equitable partition of [`build_id_extremal`] in layout order
/// (K_δ, I_r, K_{n−2δ−r−1}, I_{δ+1}).
pub fn id_extremal_partition(
    n: usize,
    delta: usize,
    r: usize,
) -> Result<Vec<Vec<usize>>, ExtremalError> {
    if delta == 0 || r == 0 || n < 2 * delta + r + 2 {
        return Err(bad(format!(
            "need delta,r >= 1 and n >= 2*delta+r+2, got n={n}, delta={delta}, r={r}"
        )));
    }
    Ok(vec![
        (0..delta).collect(),
        (delta..delta + r).collect(),
        (delta + r..n - delta - 1).collect(),
        (n - delta - 1..n).collect(),
    ])
}

/// G′ = I_r ∨ (K_s ∨ (K_{n₁} + … + K_{n_{s+2}})) for odd, non-increasing
/// parts summing to n−r−s. Layout: I_r, K_s, then the parts in order.
pub fn build_g_prime(
    n: usize,
    s: usize,
    r: usize,
    parts: &[usize],
) -> Result<Graph, ExtremalError> {
    if r == 0 {
        return Err(bad("need r >= 1".into()));
    }
    if parts.len() != s + 2 {
        return Err(bad(format!("need s+2 = {} parts, got {}", s + 2, parts.len())));
    }
    if parts.iter().any(|&p| p == 0 || p % 2 == 0) {
        return Err(bad(format!("parts must be odd and positive: {parts:?}")));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(bad(format!("parts must be non-increasing: {parts:?}")));
    }
    if parts.iter().sum::<usize>() + r + s != n {
        return Err(bad(format!(
            "parts must sum to n-r-s = {}, got {}",
            n as i64 - r as i64 - s as i64,
            parts.iter().sum::<usize>()
        )));
    }
    let mut inner = Graph::empty(0);
    for &p in parts {
        inner = inner.disjoint_union(&Graph::complete(p));
    }
    Ok(Graph::empty(r).join(&Graph::complete(s).join(&inner)))
}

/// Equitable partition of [`build_g_prime`]: I_r, K_s (dropped when s = 0),
/// then one class per part.
pub fn g_prime_partition(s: usize, r: usize, parts: &[usize]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = vec![(0..r).collect()];
    if s > 0 {
        classes.push((r..r + s).collect());
    }
    let mut at = r + s;
    for &p in parts {
        classes.push((at..at + p).collect());
        at += p;
    }
    classes
}

/// G″ = S_{s+r,s} ∨ (K_{n−2s−r−1} + I_{s+1}); identical in shape to
/// [`build_id_extremal`] with δ replaced by s.
pub fn build_g_double_prime(n: usize, s: usize, r: usize) -> Result<Graph, ExtremalError> {
    build_id_extremal(n, s, r)
}

/// Equitable partition of [`build_g_double_prime`] in layout order
/// (K_s, I_r, K_{n−2s−r−1}, I_{s+1}).
pub fn g_double_prime_partition(
    n: usize,
    s: usize,
    r: usize,
) -> Result<Vec<Vec<usize>>, ExtremalError> {
    id_extremal_partition(n, s, r)
}

/// G‴ = I_r ∨ (K_s ∨ (K_{n−s−r−(s+1)q} + (s+1)K_q)) with q = δ−s−r+1.
/// Layout: I_r, K_s, the large clique, then the s+1 small cliques.
pub fn build_g_triple_prime(
    n: usize,
    s: usize,
    r: usize,
    delta: usize,
) -> Result<Graph, ExtremalError> {
    let (q, big) = g_triple_prime_sizes(n, s, r, delta)?;
    let mut inner = Graph::complete(big);
    for _ in 0..s + 1 {
        inner = inner.disjoint_union(&Graph::complete(q));
    }
    Ok(Graph::empty(r).join(&Graph::complete(s).join(&inner)))
}

/// Equitable partition of [`build_g_triple_prime`]: I_r, K_s (dropped when
/// s = 0), the large clique, and all s+1 small cliques as a single class
/// (no edges run between them, so the class is equitable).
pub fn g_triple_prime_partition(
    n: usize,
    s: usize,
    r: usize,
    delta: usize,
) -> Result<Vec<Vec<usize>>, ExtremalError> {
    let (q, big) = g_triple_prime_sizes(n, s, r, delta)?;
    let mut classes: Vec<Vec<usize>> = vec![(0..r).collect()];
    if s > 0 {
        classes.push((r..r + s).collect());
    }
    classes.push((r + s..r + s + big).collect());
    classes.push((r + s + big..r + s + big + (s + 1) * q).collect());
    Ok(classes)
}

fn g_triple_prime_sizes(
    n: usize,
    s: usize,
    r: usize,
    delta: usize,
) -> Result<(usize, usize), ExtremalError> {
    if r == 0 {
        return Err(bad("need r >= 1".into()));
    }
    if s >= delta {
        return Err(bad(format!("need s < delta, got s={s}, delta={delta}")));
    }
    if delta < s + r {
        return Err(bad(format!(
            "need delta-s-r+1 >= 1, got s={s}, r={r}, delta={delta}"
        )));
    }
    let q = delta - s - r + 1;
    let used = s + r + (s + 1) * q;
    if n <= used {
        return Err(bad(format!(
            "need n > s+r+(s+1)(delta-s-r+1) = {used}, got n={n}"
        )));
    }
    Ok((q, n - used))
}
