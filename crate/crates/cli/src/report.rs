use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Everything a command prints. The text form is a flattening of the JSON
/// form, so both share one schema.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub input: String,
    pub input_digest: String,
    pub result: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<Map<String, Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entailment_calls: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: &'static str, input: &str, bytes: &[u8]) -> Self {
        Self {
            command,
            input: input.to_string(),
            input_digest: format!("sha256:{}", hex::encode(Sha256::digest(bytes))),
            result: Map::new(),
            trace: None,
            entailment_calls: None,
            wall_time_ms: None,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.result.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let value = serde_json::to_value(self).expect("reports serialize");
        if let Value::Object(fields) = value {
            for (key, v) in fields {
                flatten(&mut out, &key, &v);
            }
        }
        out
    }
}

// Objects become dotted keys, arrays become indexed keys, scalars are
// printed bare.
fn flatten(out: &mut String, key: &str, value: &Value) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(out, &format!("{key}.{k}"), v);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str(&format!("{key}: []\n"));
            }
            for (i, v) in items.iter().enumerate() {
                flatten(out, &format!("{key}[{i}]"), v);
            }
        }
        Value::String(s) => out.push_str(&format!("{key}: {s}\n")),
        other => out.push_str(&format!("{key}: {other}\n")),
    }
}
