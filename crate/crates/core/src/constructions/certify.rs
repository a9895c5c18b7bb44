use std::collections::BTreeMap;

use serde::Serialize;

use super::ConstructionError;
use crate::diagram::TangleDiagram;
use crate::invariants::{verify_equal, InvariantKind, SkeinConfig};

/// A record of one pair of diagrams and their compared invariants.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub construction: String,
    pub theorem: String,
    pub diagrams: [serde_json::Value; 2],
    pub invariants: BTreeMap<String, [String; 2]>,
    pub verdicts: BTreeMap<String, bool>,
    pub seed: Option<u64>,
}

impl Certificate {
    pub fn all_equal(&self) -> bool {
        self.verdicts.values().all(|&v| v)
    }

    /// A certificate from values computed elsewhere: `(name, left, right, equal)`.
    pub fn from_values(construction: &str, theorem: &str, pair: (&TangleDiagram, &TangleDiagram), values: Vec<(String, String, String, bool)>, seed: Option<u64>) -> Self {
        let mut invariants = BTreeMap::new();
        let mut verdicts = BTreeMap::new();
        for (name, l, r, eq) in values {
            invariants.insert(name.clone(), [l, r]);
            verdicts.insert(name, eq);
        }
        Certificate {
            construction: construction.into(),
            theorem: theorem.into(),
            diagrams: [pair.0.to_json_value(), pair.1.to_json_value()],
            invariants,
            verdicts,
            seed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }
}

pub fn certify(
    construction: &str,
    theorem: &str,
    pair: (&TangleDiagram, &TangleDiagram),
    kinds: &[InvariantKind],
    cfg: &SkeinConfig,
    seed: Option<u64>,
) -> Result<Certificate, ConstructionError> {
    let report = verify_equal(pair.0, pair.1, kinds, cfg)?;
    let values = report.entries.into_iter().map(|e| (e.kind.name().to_string(), e.left, e.right, e.equal)).collect();
    Ok(Certificate::from_values(construction, theorem, pair, values, seed))
}
