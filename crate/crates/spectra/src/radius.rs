use graph_core::{Graph, VertexSet};

use crate::SpectraError;

const MAX_ITERATIONS: usize = 500_000;

/// A spectral-radius estimate with its terminal residual `‖Ax − ρx‖∞`.
#[derive(Clone, Copy, Debug)]
pub struct SpectralEstimate {
    pub value: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// The positive unit eigenvector of a connected graph at its spectral radius.
#[derive(Clone, Debug)]
pub struct PerronVector {
    pub entries: Vec<f64>,
}

/// Outcome of a tolerance-aware spectral comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpectralOrdering {
    Less { rho1: f64, rho2: f64 },
    Greater { rho1: f64, rho2: f64 },
    TieWithinTol { rho1: f64, rho2: f64 },
}

/// Power iteration on `A + I` for a connected graph. The shift keeps bipartite
/// spectra from oscillating, and the all-ones start vector is positive, so the
/// iteration converges to the Perron root. Returns (rho, unit vector,
/// residual, iterations).
fn power_iterate_connected(
    g: &Graph,
    tol: f64,
) -> Result<(f64, Vec<f64>, f64, usize), SpectraError> {
    let n = g.n();
    debug_assert!(n >= 1);
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_ITERATIONS {
        // y = (A + I) x
        for v in 0..n {
            let mut acc = x[v];
            for u in g.neighbors(v) {
                acc += x[u];
            }
            y[v] = acc;
        }
        // Rayleigh quotient of the shifted matrix; x has unit norm.
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        residual = y
            .iter()
            .zip(&x)
            .map(|(&yv, &xv)| (yv - lambda * xv).abs())
            .fold(0.0f64, f64::max);
        let norm: f64 = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for v in 0..n {
            x[v] = y[v] / norm;
        }
        if residual <= tol {
            return Ok((lambda - 1.0, x, residual, it));
        }
    }
    Err(SpectraError::NotConverged {
        iterations: MAX_ITERATIONS,
        residual,
        tol,
    })
}

/// ρ(G) within `tol`, deterministic for a fixed input. Disconnected graphs are
/// handled as the maximum over their connected components.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralEstimate, SpectraError> {
    if g.n() == 0 {
        return Err(SpectraError::EmptyGraph);
    }
    if tol <= 0.0 {
        return Err(SpectraError::BadTolerance(tol));
    }
    let comps = g.components_after_removal(&VertexSet::new())?;
    let mut best = SpectralEstimate {
        value: f64::NEG_INFINITY,
        residual: 0.0,
        iterations: 0,
    };
    for comp in comps {
        let (sub, _) = g.induced(&VertexSet::from_slice(&comp))?;
        let (rho, _, residual, iterations) = power_iterate_connected(&sub, tol)?;
        if rho > best.value {
            best = SpectralEstimate {
                value: rho,
                residual,
                iterations,
            };
        }
    }
    Ok(best)
}

/// The Perron vector of a connected graph: `Ax = ρx` componentwise within
/// `tol`, entries positive, unit 2-norm.
pub fn perron_vector(g: &Graph, tol: f64) -> Result<PerronVector, SpectraError> {
    if g.n() == 0 {
        return Err(SpectraError::EmptyGraph);
    }
    if tol <= 0.0 {
        return Err(SpectraError::BadTolerance(tol));
    }
    if !g.is_connected() {
        return Err(SpectraError::Disconnected);
    }
    let (_, x, _, _) = power_iterate_connected(g, tol)?;
    Ok(PerronVector { entries: x })
}

/// Orders ρ(g1) against ρ(g2); differences at or below `tol` are reported as
/// a tie with both estimates attached, for the caller to escalate.
pub fn compare_spectral(
    g1: &Graph,
    g2: &Graph,
    tol: f64,
) -> Result<SpectralOrdering, SpectraError> {
    if tol <= 0.0 {
        return Err(SpectraError::BadTolerance(tol));
    }
    // Estimate an order of magnitude tighter than the comparison threshold.
    let eig_tol = (tol / 10.0).min(crate::DEFAULT_EIG_TOL);
    let rho1 = spectral_radius(g1, eig_tol)?.value;
    let rho2 = spectral_radius(g2, eig_tol)?.value;
    Ok(if rho1 < rho2 - tol {
        SpectralOrdering::Less { rho1, rho2 }
    } else if rho1 > rho2 + tol {
        SpectralOrdering::Greater { rho1, rho2 }
    } else {
        SpectralOrdering::TieWithinTol { rho1, rho2 }
    })
}
