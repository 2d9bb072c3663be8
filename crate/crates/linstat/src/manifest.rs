use crate::config::RunConfig;
use crate::error::CliResult;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// How draws are assigned to random streams; part of the reproducibility
/// contract recorded with every run.
pub const PARTITION: &str = "draw i of a batch uses ChaCha8 seeded with the run seed on stream i; results are gathered in draw order and reduced by pairwise summation";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub core_version: String,
    pub config: RunConfig,
    pub seed: Option<u64>,
    pub threads: usize,
    pub partition: String,
    /// Files written by the run, relative to the output directory.
    pub outputs: Vec<String>,
    pub exit_code: i32,
}

impl Manifest {
    pub fn new(config: &RunConfig, threads: usize) -> Self {
        Manifest {
            tool: "linstat".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            core_version: linstat_core::VERSION.into(),
            seed: config.values.get("seed").and_then(|s| s.parse().ok()),
            config: config.clone(),
            threads,
            partition: PARTITION.into(),
            outputs: Vec::new(),
            exit_code: 0,
        }
    }

    pub fn write(&self, dir: &Path) -> CliResult<()> {
        std::fs::write(dir.join("manifest.json"), serde_json::to_string_pretty(self)? + "\n")?;
        Ok(())
    }

    pub fn read(path: &Path) -> CliResult<Manifest> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }
}
