//! Machine-readable JSON reports.

use serde::Serialize;
use serde_json::{json, Value};
use syzygy_core::fpmod::FPMap;
use syzygy_core::freemod::ModuleMap;

/// Common envelope for every command's output.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs_echo: Value,
    pub paper_anchor: String,
    pub status: String,
    pub certificates: Value,
    pub seed: u64,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == "pass" || self.status == "ok"
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// A matrix of polynomial strings.
pub fn module_map_json(map: &ModuleMap) -> Value {
    let rows: Vec<Vec<String>> = map
        .matrix()
        .iter()
        .map(|r| r.iter().map(|e| e.to_string()).collect())
        .collect();
    json!({
        "rows": rows,
        "source_shifts": map.source().shifts(),
        "target_shifts": map.target().shifts(),
    })
}

pub fn fp_map_json(map: &FPMap) -> Value {
    let rows: Vec<Vec<String>> = map
        .matrix()
        .iter()
        .map(|r| r.iter().map(|e| e.to_string()).collect())
        .collect();
    json!({
        "rows": rows,
        "source_generators": map.source().generator_degrees(),
        "target_generators": map.target().generator_degrees(),
    })
}

pub fn split_certificate_json(cert: &syzygy_core::structure::SplitCertificate) -> Value {
    json!({
        "inclusion": fp_map_json(&cert.inclusion),
        "retraction": fp_map_json(&cert.retraction),
        "composite": fp_map_json(&cert.composite),
        "seed": cert.seed,
        "trial": cert.trial,
        "verified": cert.verify(),
    })
}

pub fn decomposition_json(cert: &syzygy_core::structure::DecompositionCertificate) -> Value {
    json!({
        "summand_a_generators": cert.summand_a.minimal_presentation().generator_degrees(),
        "summand_b_generators": cert.summand_b.minimal_presentation().generator_degrees(),
        "to_sum": fp_map_json(&cert.to_sum),
        "from_sum": fp_map_json(&cert.from_sum),
        "verified": cert.verify(),
    })
}
