//! Machine-readable check results.

use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of one verifier run. `values` is key-sorted, so serialization is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub theorem: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub values: Map<String, Value>,
}

impl Report {
    pub fn new(theorem: impl Into<String>) -> Self {
        Report {
            theorem: theorem.into(),
            pass: true,
            witness: None,
            values: Map::new(),
        }
    }

    pub fn value(mut self, key: &str, v: impl Serialize) -> Self {
        self.set(key, v);
        self
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) {
        self.values
            .insert(key.to_owned(), serde_json::to_value(v).expect("serializable value"));
    }

    /// Marks the report failed. The first recorded witness is kept.
    pub fn fail(&mut self, witness: impl Serialize) {
        self.pass = false;
        if self.witness.is_none() {
            self.witness = Some(serde_json::to_value(witness).expect("serializable witness"));
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
