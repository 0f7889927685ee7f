use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

/// Bumped whenever a field of [`VerificationReport`] changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Stated in the published literature.
    Published,
    /// Immediate from definitions.
    Elementary,
    /// Produced by an independent computation and pinned in the oracle file.
    Computed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportItem {
    pub group: String,
    pub claim: String,
    pub computed: String,
    pub expected: String,
    pub source: Source,
    pub status: Status,
    pub wall_ms: u64,
}

impl ReportItem {
    pub fn new(
        group: impl Into<String>,
        claim: impl Into<String>,
        computed: impl fmt::Display,
        expected: impl fmt::Display,
        source: Source,
        pass: bool,
    ) -> Self {
        ReportItem {
            group: group.into(),
            claim: claim.into(),
            computed: computed.to_string(),
            expected: expected.to_string(),
            source,
            status: if pass { Status::Pass } else { Status::Fail },
            wall_ms: 0,
        }
    }

    pub fn skipped(group: impl Into<String>, claim: impl Into<String>, reason: impl fmt::Display, source: Source) -> Self {
        ReportItem {
            group: group.into(),
            claim: claim.into(),
            computed: format!("skipped: {reason}"),
            expected: String::new(),
            source,
            status: Status::Skipped,
            wall_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub check: String,
    pub items: Vec<ReportItem>,
    /// True when no item failed; skipped items do not count against it.
    pub overall_pass: bool,
    pub toolchain: String,
    pub engine_version: String,
    pub cache_version: u32,
}

impl VerificationReport {
    pub fn new(check: &str, mut items: Vec<ReportItem>) -> Self {
        items.sort_by(|a, b| (&a.group, &a.claim).cmp(&(&b.group, &b.claim)));
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            check: check.to_string(),
            overall_pass: items.iter().all(ReportItem::passed),
            items,
            toolchain: format!(
                "realchar-core {} {}-{}",
                env!("CARGO_PKG_VERSION"),
                std::env::consts::ARCH,
                std::env::consts::OS
            ),
            engine_version: super::ENGINE_VERSION.to_string(),
            cache_version: super::cache::CACHE_VERSION,
        }
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let n = |s| self.items.iter().filter(|i| i.status == s).count();
        (n(Status::Pass), n(Status::Fail), n(Status::Skipped))
    }

    /// The report with every wall time zeroed, for comparing runs.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        r.items.iter_mut().for_each(|i| i.wall_ms = 0);
        r
    }

    /// A plain-text table for terminals.
    pub fn render_table(&self) -> String {
        let head = ["status", "group", "claim", "computed", "expected"];
        let rows: Vec<[String; 5]> = self
            .items
            .iter()
            .map(|i| {
                [
                    i.status.to_string(),
                    i.group.clone(),
                    i.claim.clone(),
                    clip(&i.computed),
                    clip(&i.expected),
                ]
            })
            .collect();
        let mut width = head.map(|h| h.chars().count());
        for r in &rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, cells: &[String]| {
            let parts: Vec<String> = cells
                .iter()
                .zip(width)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        let _ = writeln!(out, "== {} ==", self.check);
        line(&mut out, &head.map(String::from));
        for r in &rows {
            line(&mut out, r);
        }
        let (p, f, s) = self.counts();
        let verdict = if self.overall_pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{verdict}: {p} passed, {f} failed, {s} skipped");
        out
    }
}

fn clip(s: &str) -> String {
    const MAX: usize = 48;
    if s.chars().count() <= MAX {
        s.to_string()
    } else {
        let mut t: String = s.chars().take(MAX - 3).collect();
        t.push_str("...");
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_pass_ignores_skips() {
        let items = vec![
            ReportItem::new("A5", "k_R", 5, 5, Source::Published, true),
            ReportItem::skipped("J1", "orders", "no data", Source::Published),
        ];
        let r = VerificationReport::new("X", items);
        assert!(r.overall_pass);
        assert_eq!(r.counts(), (1, 0, 1));
        assert_eq!(r.items[0].group, "A5");
        let mut items = r.items.clone();
        items.push(ReportItem::new("S5", "k_R", 7, 6, Source::Computed, false));
        assert!(!VerificationReport::new("X", items).overall_pass);
    }

    #[test]
    fn table_and_json_shapes() {
        let r = VerificationReport::new(
            "X",
            vec![ReportItem::new("A5", "k_R", 5, 5, Source::Elementary, true)],
        );
        let t = r.render_table();
        let row = t.lines().nth(2).unwrap();
        assert_eq!(row.split_whitespace().collect::<Vec<_>>(), ["pass", "A5", "k_R", "5", "5"]);
        assert!(t.ends_with("PASS: 1 passed, 0 failed, 0 skipped\n"));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["items"][0]["source"], "elementary");
        assert_eq!(json["schema_version"], SCHEMA_VERSION);
        assert_eq!(clip(&"x".repeat(60)).len(), 48);
    }
}
