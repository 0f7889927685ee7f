use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog::{build, catalog, enumerated_profile, parse, EntryStatus, Family};
use crate::classes::oracle::brute_force_classes;
use crate::classes::RealData;
use crate::perm::PermGroup;
use crate::{Error, Result};

use super::context::Context;

/// The pinned oracle values shipped with the crate.
const PINNED: &str = include_str!("../../data/oracles.json");

/// Source location of the pinned file, the default target of regeneration.
pub const PINNED_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/oracles.json");

/// Groups up to this order get their oracle values from brute-force
/// conjugation rather than the class engine.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000;

/// Expected values produced by independent computations, keyed by
/// `"<quantity>/<group>"`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct OracleFile {
    pub values: BTreeMap<String, Value>,
}

impl OracleFile {
    pub fn pinned() -> Result<Self> {
        Ok(serde_json::from_str(PINNED)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.values.get(key)
    }

    /// Keys whose values differ between two files, including keys present
    /// in only one of them.
    pub fn differences(&self, other: &OracleFile) -> Vec<String> {
        let keys: BTreeSet<&String> = self.values.keys().chain(other.values.keys()).collect();
        keys.into_iter()
            .filter(|k| self.values.get(*k) != other.values.get(*k))
            .cloned()
            .collect()
    }
}

pub const SET_GROUPS: [&str; 11] = [
    "A5", "SL(3,2)", "PSL(3,3)", "PSU(3,3)", "PSL(2,8)", "A6", "PSL(2,11)", "PSL(2,27)", "PSU(3,4)",
    "PSL(3,4)", "Sz(8)",
];

pub const SHAPE_GROUPS: [&str; 4] = ["A5 x C7", "(PSL(2,8) x C7).3", "(Sz(8) x C5).3", "PSL(2,8).3 x C7"];

pub const TREND_PSL2_MIN: u32 = 13;
pub const TREND_ALTERNATING: std::ops::RangeInclusive<u32> = 7..=10;

pub fn kfrak_key(family: Family, n: u32) -> String {
    format!("kfrak/{}", family.member(n))
}

/// Real data by brute-force conjugation when the group is small enough,
/// otherwise from the character table's real rows and the class engine.
fn independent_real_data(g: &PermGroup, ctx: &Context, label: &str) -> Result<RealData> {
    if g.order() <= BRUTE_FORCE_LIMIT {
        let classes = brute_force_classes(g);
        let mut orders = BTreeSet::new();
        let mut real = 0;
        for c in &classes {
            if c.contains(&c[0].inverse()) {
                real += 1;
                orders.insert(c[0].order());
            }
        }
        return Ok(RealData {
            real_classes: real,
            real_orders: orders.into_iter().collect(),
            rational_classes: 0,
        });
    }
    let data = ctx.data(label).map_err(|m| Error::Integrity(m.reason))?;
    let mut rd = data.real();
    if let Ok(t) = &data.table {
        rd.real_classes = t.real_rational_counts().0;
    }
    Ok(rd)
}

/// Recomputes every pinned value.
pub fn regenerate(ctx: &Context) -> Result<OracleFile> {
    let mut values = BTreeMap::new();
    for name in SET_GROUPS {
        let g = build(&parse(name)?)?.group;
        values.insert(format!("real_orders/{name}"), json!(independent_real_data(&g, ctx, name)?.real_orders));
    }
    for e in catalog().iter().filter(|e| e.status == EntryStatus::Buildable) {
        let g = build(&e.descriptor)?.group;
        let rd = independent_real_data(&g, ctx, e.name)?;
        values.insert(format!("c_group/{}", e.name), json!(rd.is_c_group()));
        values.insert(
            format!("fingerprint/{}", e.name),
            serde_json::to_value(crate::catalog::entry_fingerprint(e)?)?,
        );
    }
    for name in SHAPE_GROUPS {
        let d = parse(name)?;
        let g = build(&d)?.group;
        values.insert(format!("k_r/{d}"), json!(independent_real_data(&g, ctx, name)?.real_classes));
    }
    for q in crate::catalog::odd_prime_powers(crate::catalog::VALIDATION_LIMIT) {
        if q >= TREND_PSL2_MIN {
            // Enumeration, not the analytic model the check itself uses.
            let k = enumerated_profile(q)?.real_classes;
            let rec = kfrak_value(Family::Psl2, q, k)?;
            values.insert(kfrak_key(Family::Psl2, q), rec);
        }
    }
    for n in TREND_ALTERNATING {
        let g = PermGroup::alternating(n as usize)?;
        let k = independent_real_data(&g, ctx, &format!("A{n}"))?.real_classes as u64;
        values.insert(kfrak_key(Family::Alternating, n), kfrak_value(Family::Alternating, n, k)?);
    }
    let sz = independent_real_data(&build(&parse("Sz(8)")?)?.group, ctx, "Sz(8)")?;
    values.insert(
        kfrak_key(Family::Suzuki, 8),
        kfrak_value(Family::Suzuki, 8, sz.real_classes as u64)?,
    );
    Ok(OracleFile { values })
}

fn kfrak_value(family: Family, n: u32, k_r: u64) -> Result<Value> {
    let out = crate::catalog::out_order(&family.member(n))? as i64;
    let k = num_rational::Ratio::new(k_r as i64, out) - out;
    Ok(json!(k.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_file_parses_and_covers_the_checks() {
        let o = OracleFile::pinned().unwrap();
        for name in SET_GROUPS {
            assert!(o.get(&format!("real_orders/{name}")).is_some(), "{name}");
        }
        assert_eq!(o.get("real_orders/PSL(2,8)"), Some(&json!([1, 2, 3, 7, 9])));
        assert_eq!(o.get("kfrak/Sz(8)"), Some(&json!("0")));
    }

    #[test]
    fn differences_lists_changed_and_missing_keys() {
        let mut a = OracleFile::default();
        a.values.insert("x".into(), json!(1));
        a.values.insert("y".into(), json!(2));
        let mut b = a.clone();
        b.values.insert("y".into(), json!(3));
        b.values.insert("z".into(), json!(4));
        assert_eq!(a.differences(&b), vec!["y".to_string(), "z".to_string()]);
        assert!(a.differences(&a).is_empty());
    }
}
