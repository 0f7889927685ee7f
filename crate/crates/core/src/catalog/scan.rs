use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::classes::{real_data, ClassSet};
use crate::{Error, Result};

use super::{build, closed_form_order, out_order, psl2_real_profile, Descriptor};

/// Families covered by [`asymptotic_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Alternating,
    Psl2,
    Suzuki,
}

impl Family {
    pub fn member(self, parameter: u32) -> Descriptor {
        match self {
            Family::Alternating => Descriptor::Alternating(parameter),
            Family::Psl2 => Descriptor::Psl { n: 2, q: parameter },
            Family::Suzuki => Descriptor::Suzuki(parameter),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Alternating => "A",
            Family::Psl2 => "PSL2",
            Family::Suzuki => "Sz",
        })
    }
}

/// `𝔎(S) = k_R(S)/|Out(S)| - |Out(S)|` for one family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticRecord {
    pub family: Family,
    pub parameter: u32,
    pub group_order: u128,
    pub k_r: u64,
    pub out_order: u64,
    /// True when `k_r` came from the analytic PSL(2,q) model.
    pub analytic: bool,
    pub kfrak: Ratio<i64>,
}

impl AsymptoticRecord {
    fn new(family: Family, parameter: u32, k_r: u64, analytic: bool) -> Result<Self> {
        let d = family.member(parameter);
        let out = out_order(&d)?;
        Ok(AsymptoticRecord {
            family,
            parameter,
            group_order: closed_form_order(&d).unwrap_or(0),
            k_r,
            out_order: out,
            analytic,
            kfrak: Ratio::new(k_r as i64, out as i64) - Ratio::from_integer(out as i64),
        })
    }
}

/// Computes `𝔎` for the given members, sorted by group order. PSL(2,q) with
/// q odd uses the analytic profile; everything else is enumerated.
pub fn asymptotic_scan(family: Family, parameters: &[u32]) -> Result<Vec<AsymptoticRecord>> {
    let mut out = Vec::with_capacity(parameters.len());
    for &n in parameters {
        let rec = if family == Family::Psl2 && n % 2 == 1 {
            AsymptoticRecord::new(family, n, psl2_real_profile(n)?.real_classes, true)?
        } else {
            let d = family.member(n);
            out_order(&d)?;
            let classes = ClassSet::new(&build(&d)?.group)?;
            AsymptoticRecord::new(family, n, real_data(&classes).real_classes as u64, false)?
        };
        out.push(rec);
    }
    out.sort_by_key(|r| r.group_order);
    Ok(out)
}

/// The first record at which `𝔎` decreases, if any.
pub fn first_decrease(records: &[AsymptoticRecord]) -> Option<(&AsymptoticRecord, &AsymptoticRecord)> {
    records
        .windows(2)
        .find(|w| w[1].kfrak < w[0].kfrak)
        .map(|w| (&w[0], &w[1]))
}

/// Fails with `Unsupported` for families without a scan path.
pub fn record_for(d: &Descriptor) -> Result<AsymptoticRecord> {
    let (family, n) = match *d {
        Descriptor::Alternating(n) => (Family::Alternating, n),
        Descriptor::Psl { n: 2, q } => (Family::Psl2, q),
        Descriptor::Suzuki(q) => (Family::Suzuki, q),
        _ => return Err(Error::Unsupported(format!("no scan path for {d}"))),
    };
    Ok(asymptotic_scan(family, &[n])?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suzuki_value() {
        let r = record_for(&Descriptor::Suzuki(8)).unwrap();
        assert_eq!((r.k_r, r.out_order), (9, 3));
        assert_eq!(r.kfrak, Ratio::from_integer(0));
    }

    #[test]
    fn alternating_values_are_stable() {
        let a = asymptotic_scan(Family::Alternating, &[7, 5, 6, 8]).unwrap();
        let k: Vec<u64> = a.iter().map(|r| r.k_r).collect();
        assert_eq!(k, vec![5, 7, 7, 10]);
        assert_eq!(a[1].kfrak, Ratio::new(7, 4) - 4);
        assert_eq!(a, asymptotic_scan(Family::Alternating, &[5, 6, 7, 8]).unwrap());
    }

    #[test]
    fn psl2_scan_uses_both_paths() {
        let r = asymptotic_scan(Family::Psl2, &[8, 7, 25]).unwrap();
        assert_eq!(r.iter().map(|r| r.parameter).collect::<Vec<_>>(), vec![7, 8, 25]);
        assert!(r[0].analytic && !r[1].analytic);
        // Every class of PSL(2,8) is real.
        assert_eq!(r[1].k_r, 9);
        assert_eq!(r[2].kfrak, Ratio::new(15, 4) - 4);
        assert!(first_decrease(&r).is_some());
    }

    #[test]
    fn unsupported_members() {
        assert!(record_for(&Descriptor::Psl { n: 3, q: 3 }).is_err());
        assert!(record_for(&Descriptor::Alternating(4)).is_err());
    }
}
