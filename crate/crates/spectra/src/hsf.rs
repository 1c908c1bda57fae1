use crate::SpectraError;

/// The Hong–Shu–Fang spectral bound for a graph with `e` edges, order `n` and
/// minimum degree `delta`:
///
/// `(δ-1)/2 + sqrt(2e - δn + (δ+1)²/4)`.
///
/// The bound is decreasing in `delta` for fixed (n, e) with 2e ≤ n(n-1), and
/// tight on complete graphs.
pub fn hsf_bound(e: usize, n: usize, delta: usize) -> Result<f64, SpectraError> {
    if 2 * e > n * n.saturating_sub(1) {
        return Err(SpectraError::BadBoundInput(format!(
            "edge count {e} exceeds the simple-graph maximum for order {n}"
        )));
    }
    if n > 0 && delta > n - 1 {
        return Err(SpectraError::BadBoundInput(format!(
            "minimum degree {delta} exceeds n-1 = {}",
            n - 1
        )));
    }
    let (e, n, d) = (e as f64, n as f64, delta as f64);
    let radicand = 2.0 * e - d * n + (d + 1.0) * (d + 1.0) / 4.0;
    if radicand < 0.0 {
        return Err(SpectraError::NegativeRadicand(radicand));
    }
    Ok((d - 1.0) / 2.0 + radicand.sqrt())
}
