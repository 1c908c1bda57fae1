use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use graph_core::VertexSet;

use crate::{DeficiencyWitness, FactorCertificate, LpDecision, OracleDecision};

pub(crate) fn serialize_vset<S: Serializer>(v: &VertexSet, ser: S) -> Result<S::Ok, S::Error> {
    let mut seq = ser.serialize_seq(Some(v.len()))?;
    for x in v.iter() {
        seq.serialize_element(&x)?;
    }
    seq.end()
}

/// Wire form of a factor decision:
/// `{decision, witness:{S,T,phi} | certificate:{edges:[[u,v,w],…]}}`.
#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub decision: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<DeficiencyWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    pub edges: Vec<(usize, usize, f64)>,
}

impl FactorReport {
    pub fn from_oracle(d: &OracleDecision) -> FactorReport {
        match d {
            OracleDecision::Yes => FactorReport {
                decision: "yes",
                witness: None,
                certificate: None,
            },
            OracleDecision::No(w) => FactorReport {
                decision: "no",
                witness: Some(w.clone()),
                certificate: None,
            },
        }
    }

    pub fn from_lp(d: &LpDecision) -> FactorReport {
        match d {
            LpDecision::Yes(c) => FactorReport {
                decision: "yes",
                witness: None,
                certificate: Some(CertificateJson {
                    edges: c.edges.clone(),
                }),
            },
            LpDecision::No => FactorReport {
                decision: "no",
                witness: None,
                certificate: None,
            },
        }
    }
}

impl From<&FactorCertificate> for CertificateJson {
    fn from(c: &FactorCertificate) -> CertificateJson {
        CertificateJson {
            edges: c.edges.clone(),
        }
    }
}
