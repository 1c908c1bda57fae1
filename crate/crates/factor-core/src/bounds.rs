use crate::FactorError;

/// Per-vertex degree bounds `g(v) <= f(v)` for (g,f)-factor decisions, with a
/// uniform `[a, b]` shortcut. Lower bounds of 0 are admitted in the general
/// form; the uniform form follows the positive-integer convention `1 <= a <= b`
/// (every uniform use downstream has `a >= 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBoundSpec {
    g: Vec<u32>,
    f: Vec<u32>,
}

impl DegreeBoundSpec {
    /// Constant bounds `g ≡ a`, `f ≡ b` on `n` vertices.
    pub fn uniform(n: usize, a: u32, b: u32) -> Result<DegreeBoundSpec, FactorError> {
        if a < 1 || a > b {
            return Err(FactorError::BadUniformBounds { a, b });
        }
        Ok(DegreeBoundSpec {
            g: vec![a; n],
            f: vec![b; n],
        })
    }

    /// Arbitrary per-vertex bounds with `0 <= g(v) <= f(v)`.
    pub fn general(g: Vec<u32>, f: Vec<u32>) -> Result<DegreeBoundSpec, FactorError> {
        assert_eq!(g.len(), f.len());
        for v in 0..g.len() {
            if g[v] > f[v] {
                return Err(FactorError::BadBounds {
                    vertex: v,
                    g: g[v],
                    f: f[v],
                });
            }
        }
        Ok(DegreeBoundSpec { g, f })
    }

    pub fn n(&self) -> usize {
        self.g.len()
    }

    pub fn lower(&self, v: usize) -> u32 {
        self.g[v]
    }

    pub fn upper(&self, v: usize) -> u32 {
        self.f[v]
    }

    pub(crate) fn check_graph(&self, graph_n: usize) -> Result<(), FactorError> {
        if self.n() != graph_n {
            return Err(FactorError::BoundsMismatch {
                bounds_n: self.n(),
                graph_n,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(DegreeBoundSpec::uniform(5, 2, 3).is_ok());
        assert!(matches!(
            DegreeBoundSpec::uniform(5, 0, 3),
            Err(FactorError::BadUniformBounds { .. })
        ));
        assert!(matches!(
            DegreeBoundSpec::uniform(5, 3, 2),
            Err(FactorError::BadUniformBounds { .. })
        ));
        assert!(DegreeBoundSpec::general(vec![0, 1], vec![0, 2]).is_ok());
        assert!(matches!(
            DegreeBoundSpec::general(vec![3], vec![2]),
            Err(FactorError::BadBounds { vertex: 0, g: 3, f: 2 })
        ));
    }
}
