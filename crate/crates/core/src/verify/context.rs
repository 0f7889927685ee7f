use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::catalog::{build, identify, parse, small_group_sweep, SweepGroup};
use crate::chartab::{character_table, CharacterTable};
use crate::classes::{ClassInfo, ClassSet, RealData};
use crate::perm::PermGroup;
use crate::structure::{solvable_radical, Fingerprint};
use crate::{Error, Result};

use super::cache::Cache;
use super::oracles::OracleFile;

/// What is known about `G/Sol(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSummary {
    pub sol_order: u128,
    pub solvable: bool,
    pub quotient_order: u128,
    pub quotient_name: Option<String>,
    pub quotient_fingerprint: Fingerprint,
}

/// Everything the checks read about one group; this is what gets cached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupData {
    pub label: String,
    pub order: u128,
    pub degree: usize,
    pub classes: Vec<ClassInfo>,
    pub table: std::result::Result<CharacterTable, Missing>,
    pub structure: std::result::Result<StructureSummary, Missing>,
}

impl GroupData {
    pub fn real(&self) -> RealData {
        RealData::from_classes(&self.classes)
    }

    pub fn k_r(&self) -> usize {
        self.real().real_classes
    }

    fn compute(label: &str, group: &PermGroup, seed: u64) -> Result<GroupData> {
        let classes = ClassSet::new(group)?;
        let table = character_table(&classes, seed)
            .and_then(|t| t.check().map(|_| t))
            .map_err(Missing::from);
        let structure = solvable_radical(group)
            .map(|r| StructureSummary {
                sol_order: r.sol_radical.order(),
                solvable: r.sol_radical.order() == group.order(),
                quotient_order: r.quotient.image().order(),
                quotient_name: identify(&r.quotient_fingerprint),
                quotient_fingerprint: r.quotient_fingerprint,
            })
            .map_err(Missing::from);
        Ok(GroupData {
            label: label.to_string(),
            order: group.order(),
            degree: group.degree(),
            classes: classes.classes().to_vec(),
            table,
            structure,
        })
    }
}

/// Why a group's data is missing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Missing {
    /// Over a cap or optional: report as skipped rather than failed.
    pub skip: bool,
    pub reason: String,
}

impl From<Error> for Missing {
    fn from(e: Error) -> Self {
        Missing {
            skip: e.is_cap() || matches!(e, Error::Unavailable(_)),
            reason: e.to_string(),
        }
    }
}

type Slot = Arc<OnceLock<std::result::Result<Arc<GroupData>, Missing>>>;

/// Shared state of one `verify` run.
pub struct Context {
    pub cache: Cache,
    pub oracles: OracleFile,
    pub seed: u64,
    pub strict: bool,
    sweep: OnceLock<std::result::Result<Vec<SweepGroup>, Missing>>,
    memo: Mutex<HashMap<String, Slot>>,
}

impl Context {
    pub fn new(cache: Cache, oracles: OracleFile, seed: u64, strict: bool) -> Self {
        Context {
            cache,
            oracles,
            seed,
            strict,
            sweep: OnceLock::new(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Data for a group, computed at most once per run and cached on disk.
    pub fn data_with(
        &self,
        label: &str,
        make: impl FnOnce() -> Result<PermGroup>,
    ) -> std::result::Result<Arc<GroupData>, Missing> {
        let slot = self
            .memo
            .lock()
            .expect("memo lock")
            .entry(label.to_string())
            .or_default()
            .clone();
        slot.get_or_init(|| {
            let key = self.cache.key("group-data", label);
            if let Some(d) = self.cache.load::<GroupData>(&key) {
                return Ok(Arc::new(d));
            }
            let data = GroupData::compute(label, &make()?, self.seed)?;
            if let Err(e) = self.cache.store(&key, &data) {
                eprintln!("warning: cache write failed for {label}: {e}");
            }
            Ok(Arc::new(data))
        })
        .clone()
    }

    pub fn sweep(&self) -> std::result::Result<&[SweepGroup], Missing> {
        match self.sweep.get_or_init(|| small_group_sweep().map_err(Missing::from)) {
            Ok(v) => Ok(v),
            Err(m) => Err(m.clone()),
        }
    }

    /// Data for a group named by a descriptor.
    pub fn data(&self, descriptor: &str) -> std::result::Result<Arc<GroupData>, Missing> {
        let d = parse(descriptor).map_err(Missing::from)?;
        self.data_with(&d.to_string(), || Ok(build(&d)?.group))
    }
}
