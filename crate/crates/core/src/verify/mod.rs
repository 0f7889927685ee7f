//! The check suite behind `realchar verify`.
//!
//! Each check replays one published claim over a list of groups and yields a
//! [`VerificationReport`] with one item per group and claim. Expected values
//! are either quoted, elementary, or pinned in `data/oracles.json`; the pinned
//! ones are regenerated by independent brute-force computations with
//! [`regenerate_oracles`]. Group data is cached on disk between runs.

mod cache;
mod checks;
mod context;
mod oracles;
mod report;

use std::path::PathBuf;

pub use cache::{Cache, CacheEntry, CACHE_ENV, CACHE_VERSION};
pub use checks::{run_check, CheckId};
pub use context::{Context, GroupData, Missing, StructureSummary};
pub use oracles::{regenerate as regenerate_oracles, OracleFile, BRUTE_FORCE_LIMIT, PINNED_PATH};
pub use report::{ReportItem, Source, Status, VerificationReport, SCHEMA_VERSION};

use crate::Result;

/// Version of the computational engine; part of every cache key.
pub const ENGINE_VERSION: &str = concat!("realchar-core/", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub strict: bool,
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
    pub no_cache: bool,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            strict: false,
            jobs: 1,
            cache_dir: None,
            no_cache: false,
            seed: 1,
        }
    }
}

impl VerifyOptions {
    pub fn context(&self) -> Result<Context> {
        let cache = if self.no_cache {
            Cache::disabled()
        } else {
            Cache::resolve(self.cache_dir.clone())
        };
        Ok(Context::new(cache, OracleFile::pinned()?, self.seed, self.strict))
    }
}

/// The checks named by `target`: one id, or `all`.
pub fn select(target: &str) -> Result<Vec<CheckId>> {
    if target.eq_ignore_ascii_case("all") {
        Ok(CheckId::ALL.to_vec())
    } else {
        Ok(vec![target.parse()?])
    }
}

/// Runs the selected checks with a shared context.
pub fn run(target: &str, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let ids = select(target)?;
    let ctx = opts.context()?;
    Ok(ids.into_iter().map(|id| run_check(id, &ctx, opts.jobs)).collect())
}
