use factor_core::{
    deficiency, fractional_factor_lp, fractional_factor_oracle, DeficiencyWitness,
    DegreeBoundSpec, OracleDecision, ORACLE_LIMIT,
};
use graph_core::VertexSet;

use crate::{build_factor_extremal, ExtremalError};

/// Outcome of checking that the factor-extremal family indeed has no
/// fractional [a,b]-factor. A false `no_factor` is a verification failure
/// for the caller to report, not a crash.
#[derive(Clone, Debug)]
pub struct TightnessReport {
    pub n: usize,
    pub a: u32,
    pub b: u32,
    pub no_factor: bool,
    /// Deficiency witness at S = ∅; the pendant-class vertex always lands in
    /// T with φ ≤ −1.
    pub witness: Option<DeficiencyWitness>,
}

/// Decides the fractional [a,b]-factor question on build_factor_extremal(n,a)
/// — by exhaustive oracle when within its limit, by the flow route otherwise —
/// and attaches the structural deficiency witness at S = ∅.
pub fn verify_factor_tightness(n: usize, a: u32, b: u32) -> Result<TightnessReport, ExtremalError> {
    let g = build_factor_extremal(n, a as usize)?;
    let bounds = DegreeBoundSpec::uniform(n, a, b)?;
    let no_factor = if n <= ORACLE_LIMIT {
        matches!(fractional_factor_oracle(&g, &bounds)?, OracleDecision::No(_))
    } else {
        !fractional_factor_lp(&g, &bounds)?.exists()
    };
    let (t, phi) = deficiency(&g, a, b, &VertexSet::new())?;
    let witness = DeficiencyWitness { s: VertexSet::new(), t, phi };
    let witness = if witness.validate(&g, &bounds)? {
        Some(witness)
    } else {
        None
    };
    Ok(TightnessReport { n, a, b, no_factor, witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_reference_cells() {
        let rep = verify_factor_tightness(5, 2, 3).unwrap();
        assert!(rep.no_factor);
        assert_eq!(rep.witness.as_ref().unwrap().phi, -1);

        // K_5 + K_1 at a = b = 1: the isolated vertex can never reach weight 1.
        let rep = verify_factor_tightness(6, 1, 1).unwrap();
        assert!(rep.no_factor);

        let rep = verify_factor_tightness(10, 3, 3).unwrap();
        assert!(rep.no_factor);
    }

    #[test]
    fn flow_path_beyond_oracle_limit() {
        let rep = verify_factor_tightness(25, 2, 3).unwrap();
        assert!(rep.no_factor);
        let w = rep.witness.unwrap();
        assert_eq!(w.phi, -1);
        assert_eq!(w.t.len(), 1);
    }
}
