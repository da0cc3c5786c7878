use serde::Serialize;
use sha2::{Digest, Sha256};
use std::path::Path;

#[derive(Debug, Serialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

/// What was run, on which inputs, and what came out. Two runs of a
/// single-worker command with equal manifests produced equal outputs.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: Vec<String>,
    pub seeds: Vec<u64>,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    pub exit_code: u8,
    pub outcome: serde_json::Value,
}

fn digest(path: &Path, bytes: &[u8]) -> FileDigest {
    FileDigest { path: path.display().to_string(), sha256: format!("{:x}", Sha256::digest(bytes)) }
}

impl RunManifest {
    pub fn new(args: &[String]) -> Self {
        let command = args.iter().take_while(|a| !a.starts_with("--")).cloned().collect::<Vec<_>>().join(" ");
        RunManifest {
            command,
            parameters: args.to_vec(),
            seeds: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            exit_code: 0,
            outcome: serde_json::Value::Null,
        }
    }

    pub fn seed(&mut self, seed: u64) {
        self.seeds.push(seed);
    }

    pub fn input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs.push(digest(path, bytes));
    }

    pub fn output(&mut self, path: &Path, bytes: &[u8]) {
        self.outputs.push(digest(path, bytes));
    }

    pub fn finish(&mut self, exit_code: u8, outcome: serde_json::Value) {
        self.exit_code = exit_code;
        self.outcome = outcome;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&json_wrapper(self)).expect("manifest serializes")
    }
}

fn json_wrapper(m: &RunManifest) -> serde_json::Value {
    serde_json::json!({ "manifest": m })
}
