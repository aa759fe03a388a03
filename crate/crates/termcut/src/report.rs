//! Machine-readable output.
//!
//! Every subcommand emits the same top-level object
//! `{lambda, alpha, cuts, witness, stats}`; fields that do not apply are
//! `null` (or an empty `cuts` array). Weights are the scaled integers the
//! graph was parsed into; `stats.weight_scale` gives the divisor.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use termcut_core::{Cut, VertexSet};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonCut {
    pub side: Vec<usize>,
    pub value: u64,
}

impl From<&Cut> for JsonCut {
    fn from(c: &Cut) -> Self {
        JsonCut { side: c.side.to_vec(), value: c.value.get() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonWitness {
    #[serde(rename = "S")]
    pub source: Vec<usize>,
    #[serde(rename = "T")]
    pub sink: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub lambda: Option<u64>,
    pub alpha: Option<String>,
    pub cuts: Vec<JsonCut>,
    pub witness: Option<JsonWitness>,
    pub stats: Map<String, Value>,
}

impl JsonReport {
    pub fn new(scale: u64) -> Self {
        let mut stats = Map::new();
        stats.insert("weight_scale".into(), scale.into());
        JsonReport { lambda: None, alpha: None, cuts: Vec::new(), witness: None, stats }
    }

    pub fn stat(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.stats.insert(key.into(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Comma-separated ascending vertex ids.
pub fn id_list(set: &VertexSet) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}
