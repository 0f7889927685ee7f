use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::classes::ClassSet;
use crate::structure::{fingerprint, Fingerprint};
use crate::{Error, Result};

use super::{build, closed_form_order, out_order, parse, Descriptor};

/// How much of an entry can be computed here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EntryStatus {
    Buildable,
    /// Needs generator data that is not bundled.
    Optional,
    /// Too large to enumerate; only the listed claim is carried, unchecked.
    AnalyticStub,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    #[serde(skip)]
    pub descriptor: Descriptor,
    pub order: u128,
    /// |Out(S)| when the entry is a tabulated simple group.
    pub out_order: Option<u64>,
    pub status: EntryStatus,
    /// A claim recorded without enumeration, for analytic stubs.
    pub unverified_claim: Option<&'static str>,
}

const NAMES: &[(&str, EntryStatus, Option<&str>)] = &[
    ("A5", EntryStatus::Buildable, None),
    ("A6", EntryStatus::Buildable, None),
    ("A7", EntryStatus::Buildable, None),
    ("A8", EntryStatus::Buildable, None),
    ("S5", EntryStatus::Buildable, None),
    ("S6", EntryStatus::Buildable, None),
    ("SL(3,2)", EntryStatus::Buildable, None),
    ("PSL(3,3)", EntryStatus::Buildable, None),
    ("PSU(3,3)", EntryStatus::Buildable, None),
    ("PSL(2,8)", EntryStatus::Buildable, None),
    ("PSL(2,11)", EntryStatus::Buildable, None),
    ("PSL(2,13)", EntryStatus::Buildable, None),
    ("PSL(2,27)", EntryStatus::Buildable, None),
    ("PSU(3,4)", EntryStatus::Buildable, None),
    ("PSL(3,4)", EntryStatus::Buildable, None),
    ("Sz(8)", EntryStatus::Buildable, None),
    ("PSL(2,8).3", EntryStatus::Buildable, None),
    ("Sz(8).3", EntryStatus::Buildable, None),
    ("PSL(2,27).3", EntryStatus::Buildable, None),
    ("J1", EntryStatus::Optional, Some("more than five real element orders")),
    ("PSU(3,8)", EntryStatus::AnalyticStub, Some("six real element orders")),
];

/// All catalog entries, in a fixed order.
pub fn catalog() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        NAMES
            .iter()
            .map(|&(name, status, claim)| {
                let descriptor = parse(name).expect("catalog names parse");
                CatalogEntry {
                    name,
                    order: closed_form_order(&descriptor).expect("catalog orders are tabulated"),
                    out_order: out_order(&descriptor).ok(),
                    descriptor,
                    status,
                    unverified_claim: claim,
                }
            })
            .collect()
    })
}

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.name == name)
}

/// The names that may appear as `G/Sol(G)` when `k_R(G) <= 5`.
pub const SMALL_KR_QUOTIENTS: [&str; 5] = ["1", "SL(3,2)", "A5", "PSL(2,8).3", "Sz(8).3"];

/// Fingerprint of a buildable entry, computed once per process.
pub fn entry_fingerprint(e: &CatalogEntry) -> Result<Fingerprint> {
    static CACHE: OnceLock<Mutex<HashMap<&'static str, Fingerprint>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(fp) = cache.lock().expect("fingerprint cache").get(e.name) {
        return Ok(fp.clone());
    }
    if e.status != EntryStatus::Buildable {
        return Err(Error::Unavailable(format!("{} cannot be enumerated here", e.name)));
    }
    let fp = fingerprint(&ClassSet::new(&build(&e.descriptor)?.group)?);
    cache.lock().expect("fingerprint cache").insert(e.name, fp.clone());
    Ok(fp)
}

/// Catalog name matching a fingerprint; `"1"` for the trivial group.
///
/// Only entries of the same order are built, so lookups stay cheap. A
/// fingerprint that matches nothing yields `None`, never a guess.
pub fn identify(fp: &Fingerprint) -> Option<String> {
    if fp.order == 1 {
        return Some("1".into());
    }
    catalog()
        .iter()
        .filter(|e| e.status == EntryStatus::Buildable && e.order == fp.order as u128)
        .find(|e| entry_fingerprint(e).is_ok_and(|f| &f == fp))
        .map(|e| e.name.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(name: &str) -> Fingerprint {
        fingerprint(&ClassSet::new(&build(&parse(name).unwrap()).unwrap().group).unwrap())
    }

    #[test]
    fn identifies_other_realizations() {
        // PSL(2,7) on 8 points is SL(3,2); PSL(2,4) and PSL(2,5) are A5.
        assert_eq!(identify(&fp("PSL(2,7)")).as_deref(), Some("SL(3,2)"));
        assert_eq!(identify(&fp("PSL(2,4)")).as_deref(), Some("A5"));
        assert_eq!(identify(&fp("PSL(2,5)")).as_deref(), Some("A5"));
        assert_eq!(identify(&fp("PSL(2,9)")).as_deref(), Some("A6"));
        assert_eq!(identify(&fp("C1")).as_deref(), Some("1"));
        assert_eq!(identify(&fp("C60")), None);
        assert_eq!(identify(&fp("SL(2,5)")), None);
    }

    #[test]
    fn entries_are_consistent() {
        assert_eq!(entry("Sz(8).3").unwrap().order, 87360);
        assert_eq!(entry("A6").unwrap().out_order, Some(4));
        assert_eq!(entry("J1").unwrap().status, EntryStatus::Optional);
        for name in SMALL_KR_QUOTIENTS.iter().skip(1) {
            assert!(entry(name).is_some(), "{name}");
        }
    }

    #[test]
    fn fingerprints_are_pairwise_distinct() {
        let mut seen: Vec<(&str, Fingerprint)> = Vec::new();
        for e in catalog().iter().filter(|e| e.status == EntryStatus::Buildable) {
            let f = entry_fingerprint(e).unwrap();
            assert_eq!(f.order as u128, e.order);
            if let Some((other, _)) = seen.iter().find(|(_, g)| *g == f) {
                panic!("{} and {other} share a fingerprint", e.name);
            }
            seen.push((e.name, f));
        }
    }
}
