use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::algebra::{divisors, euler_phi, is_prime_power};
use crate::classes::ClassSet;
use crate::{Error, Result};

use super::linear::{linear_group, Linear};

/// Real class data of PSL(2,q), q odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Psl2Profile {
    pub q: u32,
    /// Orders of real elements, ascending.
    pub real_orders: Vec<u64>,
    /// Number of real classes, `k_R`.
    pub real_classes: u64,
    /// Real classes per element order.
    pub per_order: BTreeMap<u64, u64>,
}

/// The largest q for which the analytic model is checked against
/// enumeration before it is used anywhere.
pub const VALIDATION_LIMIT: u32 = 81;

/// Odd prime powers in `[5, limit]`.
pub fn odd_prime_powers(limit: u32) -> Vec<u32> {
    (5..=limit)
        .step_by(2)
        .filter(|&q| is_prime_power(q as u64).is_some())
        .collect()
}

/// Real class profile of PSL(2,q) for odd q ≥ 5.
///
/// Every semisimple element lies in a cyclic torus of order `(q-1)/2` or
/// `(q+1)/2` whose normalizer is dihedral, so it is real and contributes one
/// class per inverse pair. The two unipotent classes are real exactly when
/// `q ≡ 1 (mod 4)`. The first call validates the model against enumeration
/// for every odd q up to [`VALIDATION_LIMIT`].
pub fn psl2_real_profile(q: u32) -> Result<Psl2Profile> {
    let Some((p, _)) = is_prime_power(q as u64) else {
        return Err(Error::NotPrimePower(q as u64));
    };
    if p == 2 {
        return Err(Error::Unsupported(format!(
            "q = {q} is even; PSL(2,{q}) = SL(2,{q}) is handled by enumeration"
        )));
    }
    if q < 5 {
        return Err(Error::OutOfRange(format!("PSL(2,{q}) needs q >= 5")));
    }
    if let Err(msg) = validation() {
        return Err(Error::Integrity(msg.clone()));
    }
    Ok(analytic(q, p))
}

fn analytic(q: u32, p: u64) -> Psl2Profile {
    let mut per_order = BTreeMap::new();
    per_order.insert(1, 1);
    for m in [(q as u64 - 1) / 2, (q as u64).div_ceil(2)] {
        for d in divisors(m as u128) {
            let d = d as u64;
            if d >= 2 {
                let classes = if d == 2 { 1 } else { euler_phi(d as u128) as u64 / 2 };
                *per_order.entry(d).or_insert(0) += classes;
            }
        }
    }
    if q % 4 == 1 {
        per_order.insert(p, 2);
    }
    Psl2Profile {
        q,
        real_orders: per_order.keys().copied().collect(),
        real_classes: per_order.values().sum(),
        per_order,
    }
}

/// The same profile computed from the conjugacy classes of the group.
pub fn enumerated_profile(q: u32) -> Result<Psl2Profile> {
    let (group, _) = linear_group(Linear::Psl, 2, q)?;
    let classes = ClassSet::new(&group)?;
    let mut per_order = BTreeMap::new();
    for c in classes.classes().iter().filter(|c| c.real) {
        *per_order.entry(c.order).or_insert(0) += 1;
    }
    Ok(Psl2Profile {
        q,
        real_orders: per_order.keys().copied().collect(),
        real_classes: per_order.values().sum(),
        per_order,
    })
}

fn validation() -> &'static std::result::Result<(), String> {
    static GATE: OnceLock<std::result::Result<(), String>> = OnceLock::new();
    GATE.get_or_init(|| {
        for q in odd_prime_powers(VALIDATION_LIMIT) {
            let p = is_prime_power(q as u64).map(|(p, _)| p).unwrap_or(q as u64);
            let expected = analytic(q, p);
            let found = enumerated_profile(q).map_err(|e| format!("PSL(2,{q}): {e}"))?;
            if found != expected {
                return Err(format!(
                    "analytic PSL(2,{q}) profile {:?} disagrees with enumeration {:?}",
                    expected.per_order, found.per_order
                ));
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_profiles() {
        let p27 = psl2_real_profile(27).unwrap();
        assert_eq!(p27.real_orders, vec![1, 2, 7, 13, 14]);
        let p9 = psl2_real_profile(9).unwrap();
        assert_eq!(p9.real_orders, vec![1, 2, 3, 4, 5]);
        assert_eq!(p9.real_classes, 7);
        assert_eq!(psl2_real_profile(5).unwrap().real_classes, 5);
        assert_eq!(psl2_real_profile(7).unwrap().real_classes, 4);
        let big = psl2_real_profile(2187).unwrap();
        assert_eq!(big.per_order[&1093], 546);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(psl2_real_profile(8), Err(Error::Unsupported(_))));
        assert!(matches!(psl2_real_profile(15), Err(Error::NotPrimePower(_))));
        assert!(matches!(psl2_real_profile(3), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn validation_gate_passes() {
        assert_eq!(validation(), &Ok(()));
        assert_eq!(odd_prime_powers(81).len(), 25);
    }
}
