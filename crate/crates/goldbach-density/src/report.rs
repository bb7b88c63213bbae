//! Structured result documents: every run echoes its full configuration,
//! the tool version, and a content hash of the inputs, so a rerun of the
//! same document reproduces it.

use serde::{Deserialize, Serialize};

/// Lists longer than this are summarized to count + head/tail samples.
pub const SUMMARY_CAP: usize = 10_000;
pub const SUMMARY_SAMPLE: usize = 100;

/// A possibly-large sorted list of indices. Small lists ship whole;
/// large ones carry the count and 100-element head/tail samples, with
/// the full list optionally spilled to a sidecar file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct SummarizedList {
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub items: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub head: Vec<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub tail: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sidecar: Option<String>,
}

impl SummarizedList {
    pub fn from_items(items: Vec<u64>) -> Self {
        let count = items.len() as u64;
        if items.len() <= SUMMARY_CAP {
            SummarizedList {
                count,
                items: Some(items),
                head: Vec::new(),
                tail: Vec::new(),
                sidecar: None,
            }
        } else {
            SummarizedList {
                count,
                items: None,
                head: items[..SUMMARY_SAMPLE].to_vec(),
                tail: items[items.len() - SUMMARY_SAMPLE..].to_vec(),
                sidecar: None,
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

/// The envelope every command emits.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument<C: Serialize, R: Serialize> {
    pub tool: ToolInfo,
    pub command: &'static str,
    pub config: C,
    /// FNV-1a over the canonical serialization of the configuration; the
    /// inputs of every command are fully determined by it.
    pub input_hash: String,
    pub results: R,
}

impl<C: Serialize, R: Serialize> ReportDocument<C, R> {
    pub fn new(command: &'static str, config: C, results: R) -> serde_json::Result<Self> {
        let canonical = serde_json::to_vec(&config)?;
        Ok(ReportDocument {
            tool: ToolInfo::default(),
            command,
            input_hash: format!("{:016x}", fnv1a64(&canonical)),
            config,
            results,
        })
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

/// key,value rows for scalar sections; used by the CSV output mode.
pub fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
