//! Run configuration shared by every subcommand and embedded in every report.

use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;

use loopforge::group::DEFAULT_MAX_ORDER;
use loopforge::search::DEFAULT_NODE_BUDGET;

/// Environment variable overriding the default search node budget.
pub const BUDGET_ENV: &str = "LOOPFORGE_BUDGET";

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunConfig {
    pub max_group_order: usize,
    pub search_node_budget: u64,
    pub random_seed: u64,
    pub output_directory: Option<PathBuf>,
    pub emit_formats: Vec<Format>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_group_order: DEFAULT_MAX_ORDER,
            search_node_budget: DEFAULT_NODE_BUDGET,
            random_seed: DEFAULT_SEED,
            output_directory: None,
            emit_formats: vec![Format::Json],
        }
    }
}

impl RunConfig {
    /// Combines command-line values with the environment: an explicit `--budget` wins,
    /// then `LOOPFORGE_BUDGET`, then the default.
    pub fn resolve(
        max_order: Option<usize>,
        budget: Option<u64>,
        env_budget: Option<String>,
        seed: Option<u64>,
        output_directory: Option<PathBuf>,
        formats: Vec<Format>,
    ) -> Result<Self, String> {
        let mut cfg = RunConfig::default();
        if let Some(raw) = env_budget {
            cfg.search_node_budget =
                raw.trim().parse().map_err(|_| format!("{BUDGET_ENV} must be a positive integer, got {raw:?}"))?;
        }
        if let Some(b) = budget {
            cfg.search_node_budget = b;
        }
        if cfg.search_node_budget == 0 {
            return Err("the search node budget must be positive".into());
        }
        if let Some(m) = max_order {
            if m == 0 {
                return Err("--max-order must be positive".into());
            }
            cfg.max_group_order = m;
        }
        if let Some(s) = seed {
            cfg.random_seed = s;
        }
        cfg.output_directory = output_directory;
        if !formats.is_empty() {
            let mut f = formats;
            f.sort();
            f.dedup();
            cfg.emit_formats = f;
        }
        Ok(cfg)
    }
}
