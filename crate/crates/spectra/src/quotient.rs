use graph_core::Graph;

use crate::SpectraError;

/// Quotient matrix of an equitable vertex partition: entry (i, j) is the
/// number of neighbors in class j of any vertex of class i. Equitability is
/// validated on construction, so the quotient shares the graph's spectral
/// radius.
#[derive(Clone, Debug)]
pub struct QuotientMatrix {
    classes: Vec<Vec<usize>>,
    sizes: Vec<usize>,
    entries: Vec<f64>,
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order() + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order()..(i + 1) * self.order()]
    }
}

/// Builds the quotient matrix of `partition`, which must cover every vertex
/// exactly once with non-empty classes and be equitable; the offending class
/// pair and vertices are reported otherwise.
pub fn quotient_matrix(g: &Graph, partition: &[Vec<usize>]) -> Result<QuotientMatrix, SpectraError> {
    let n = g.n();
    let mut cover = vec![0usize; n];
    for class in partition {
        for &v in class {
            if v >= n {
                return Err(graph_core::GraphError::InvalidVertex { vertex: v, n }.into());
            }
            cover[v] += 1;
        }
    }
    if let Some(v) = (0..n).find(|&v| cover[v] != 1) {
        return Err(SpectraError::BadPartition { vertex: v, times: cover[v] });
    }
    if let Some(ci) = partition.iter().position(|c| c.is_empty()) {
        return Err(SpectraError::EmptyClass { class: ci });
    }
    let k = partition.len();
    let mut entries = vec![0.0; k * k];
    for (i, class) in partition.iter().enumerate() {
        for (j, other) in partition.iter().enumerate() {
            let count_into = |v: usize| other.iter().filter(|&&u| g.has_edge(v, u)).count();
            let c0 = count_into(class[0]);
            for &v in &class[1..] {
                let cv = count_into(v);
                if cv != c0 {
                    return Err(SpectraError::NonEquitable {
                        from: i,
                        to: j,
                        v1: class[0],
                        v2: v,
                        c1: c0,
                        c2: cv,
                    });
                }
            }
            entries[i * k + j] = c0 as f64;
        }
    }
    Ok(QuotientMatrix {
        classes: partition.to_vec(),
        sizes: partition.iter().map(|c| c.len()).collect(),
        entries,
    })
}

/// Largest eigenvalue of the quotient matrix, which equals ρ(G).
///
/// The quotient of an equitable partition is diagonally similar to a symmetric
/// matrix (scale by the square roots of the class sizes), so its spectrum is
/// real. For small orders we run Newton's method on the characteristic
/// polynomial from above the Perron bracket, which converges monotonically to
/// the largest root; larger quotients fall back to power iteration on the
/// symmetrized matrix.
pub fn quotient_spectral_radius(q: &QuotientMatrix) -> f64 {
    let k = q.order();
    if k <= 8 {
        newton_largest_root(q)
    } else {
        symmetrized_power_iteration(q)
    }
}

/// Characteristic polynomial coefficients of the k×k matrix via
/// Faddeev–LeVerrier: p(λ) = λ^k + c[1] λ^{k-1} + … + c[k].
fn char_poly(q: &QuotientMatrix) -> Vec<f64> {
    let k = q.order();
    let a = &q.entries;
    let mut m = vec![0.0; k * k]; // M_0 = 0
    let mut coeffs = vec![1.0];
    for step in 1..=k {
        // M_step = A * M_{step-1} + c_{step-1} I
        let mut next = vec![0.0; k * k];
        for i in 0..k {
            for j in 0..k {
                let mut acc = 0.0;
                for l in 0..k {
                    acc += a[i * k + l] * m[l * k + j];
                }
                next[i * k + j] = acc;
            }
        }
        let c_prev = *coeffs.last().unwrap();
        for i in 0..k {
            next[i * k + i] += c_prev;
        }
        let trace: f64 = (0..k).map(|i| {
            (0..k).map(|l| a[i * k + l] * next[l * k + i]).sum::<f64>()
        }).sum();
        coeffs.push(-trace / step as f64);
        m = next;
    }
    coeffs
}

fn newton_largest_root(q: &QuotientMatrix) -> f64 {
    let k = q.order();
    let coeffs = char_poly(q);
    let max_row_sum = (0..k)
        .map(|i| q.row(i).iter().sum::<f64>())
        .fold(0.0f64, f64::max);
    let mut x = max_row_sum + 1.0;
    for _ in 0..200 {
        // Horner for p and p'.
        let mut p = coeffs[0];
        let mut dp = 0.0;
        for &c in &coeffs[1..] {
            dp = dp * x + p;
            p = p * x + c;
        }
        if dp.abs() < f64::MIN_POSITIVE {
            break;
        }
        let step = p / dp;
        x -= step;
        if step.abs() <= 1e-14 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

/// Positive right Perron vector of the quotient matrix (one entry per class,
/// unit Euclidean norm), by shifted power iteration. Assumes the quotient is
/// irreducible, i.e. the underlying graph is connected.
pub fn quotient_perron(q: &QuotientMatrix) -> Vec<f64> {
    let k = q.order();
    let mut x = vec![1.0 / (k as f64).sqrt(); k];
    for _ in 0..200_000 {
        let mut y = vec![0.0; k];
        for i in 0..k {
            let mut acc = x[i]; // shift by 1 to avoid oscillation
            for j in 0..k {
                acc += q.entry(i, j) * x[j];
            }
            y[i] = acc;
        }
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = y
            .iter()
            .zip(&x)
            .map(|(&yv, &xv)| (yv - lambda * xv).abs())
            .fold(0.0f64, f64::max);
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for i in 0..k {
            x[i] = y[i] / norm;
        }
        if residual <= 1e-12 {
            break;
        }
    }
    x
}

fn symmetrized_power_iteration(q: &QuotientMatrix) -> f64 {
    // B = D^{1/2} Q D^{-1/2} with D = diag(class sizes) is symmetric and
    // isospectral with Q.
    let k = q.order();
    let s: Vec<f64> = q.sizes.iter().map(|&n| (n as f64).sqrt()).collect();
    let mut b = vec![0.0; k * k];
    for i in 0..k {
        for j in 0..k {
            b[i * k + j] = q.entry(i, j) * s[i] / s[j];
        }
    }
    let shift = 1.0;
    let mut x = vec![1.0 / (k as f64).sqrt(); k];
    let mut lambda = 0.0;
    for _ in 0..200_000 {
        let mut y = vec![0.0; k];
        for i in 0..k {
            let mut acc = shift * x[i];
            for j in 0..k {
                acc += b[i * k + j] * x[j];
            }
            y[i] = acc;
        }
        lambda = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = y
            .iter()
            .zip(&x)
            .map(|(&yv, &xv)| (yv - lambda * xv).abs())
            .fold(0.0f64, f64::max);
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for i in 0..k {
            x[i] = y[i] / norm;
        }
        if residual <= 1e-12 {
            break;
        }
    }
    lambda - shift
}
