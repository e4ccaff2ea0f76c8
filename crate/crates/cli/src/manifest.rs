//! Run manifests: command line, input/output digests, seed, solver
//! statistics, and verdicts. Everything except the `timestamp` key is
//! reproducible for a fixed command, seed, and thread count.

use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use chromalift::Result;

#[derive(Serialize)]
struct FileDigest {
    path: PathBuf,
    sha256: String,
}

#[derive(Serialize)]
struct Manifest<'a> {
    command: &'a [String],
    version: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    threads: usize,
    inputs: &'a [FileDigest],
    outputs: &'a [FileDigest],
    solver: Solver,
    verdicts: &'a Map<String, Value>,
    /// The only non-reproducible key: wall-clock data lives here so the
    /// rest of the manifest is byte-identical across reruns.
    timestamp: Timestamp,
}

#[derive(Serialize)]
struct Solver {
    nodes: u64,
}

#[derive(Serialize)]
struct Timestamp {
    unix_seconds: u64,
    wall_ms: u64,
}

/// Accumulates manifest data over one CLI run.
pub struct Recorder {
    started: Instant,
    inputs: Vec<FileDigest>,
    outputs: Vec<FileDigest>,
    pub seed: Option<u64>,
    pub threads: usize,
    pub solver_nodes: u64,
    pub verdicts: Map<String, Value>,
}

impl Recorder {
    pub fn new(threads: usize) -> Self {
        Recorder {
            started: Instant::now(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            seed: None,
            threads,
            solver_nodes: 0,
            verdicts: Map::new(),
        }
    }

    pub fn input(&mut self, path: &Path) -> Result<()> {
        let digest = sha256_file(path)?;
        self.inputs.push(FileDigest {
            path: path.to_path_buf(),
            sha256: digest,
        });
        Ok(())
    }

    pub fn output(&mut self, path: &Path) -> Result<()> {
        let digest = sha256_file(path)?;
        self.outputs.push(FileDigest {
            path: path.to_path_buf(),
            sha256: digest,
        });
        Ok(())
    }

    pub fn verdict(&mut self, key: &str, value: Value) {
        self.verdicts.insert(key.to_string(), value);
    }

    pub fn write(&self, path: &Path, command: &[String]) -> Result<()> {
        let manifest = Manifest {
            command,
            version: env!("CARGO_PKG_VERSION"),
            seed: self.seed,
            threads: self.threads,
            inputs: &self.inputs,
            outputs: &self.outputs,
            solver: Solver {
                nodes: self.solver_nodes,
            },
            verdicts: &self.verdicts,
            timestamp: Timestamp {
                unix_seconds: SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
                wall_ms: self.started.elapsed().as_millis() as u64,
            },
        };
        let mut data = serde_json::to_string_pretty(&manifest)?;
        data.push('\n');
        std::fs::write(path, data)?;
        Ok(())
    }
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let data = std::fs::read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&data);
    Ok(format!("{:x}", hasher.finalize()))
}
