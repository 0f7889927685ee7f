//! Restriction checks for a normal subgroup `S ⊴ G` given on the same
//! points.

use serde::{Deserialize, Serialize};

use super::{character_table, integer_at_root_of_unity, Character, CharacterTable, Cyclotomic};
use crate::classes::{real_data, ClassSet};
use crate::perm::{PermGroup, QuotientAction};
use crate::{Error, Result};

/// A rational irreducible character of the overgroup restricting
/// irreducibly and non-trivially to the normal subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma41Witness {
    pub row: usize,
    pub degree: u64,
    /// Values on the classes of the subgroup, in its class order.
    pub restricted: Vec<Cyclotomic>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma31Report {
    pub kr_group: usize,
    pub kr_normal: usize,
    pub kr_quotient: usize,
    /// Real rows of the group whose kernel does not contain the subgroup.
    pub kr_relative: usize,
    pub out_order: u64,
    pub equality: bool,
    pub lower_bound: bool,
    pub quotient_bound: bool,
    pub relative_bound: bool,
}

impl Lemma31Report {
    pub fn holds(&self) -> bool {
        self.equality && self.lower_bound && self.quotient_bound && self.relative_bound
    }
}

/// Class of the overgroup containing each class of the subgroup.
fn fusion(sub: &ClassSet, over: &ClassSet) -> Result<Vec<usize>> {
    sub.classes()
        .iter()
        .map(|c| over.class_of(&c.representative).ok_or(Error::NotInGroup))
        .collect()
}

/// `Σ_k |C_k| |χ(s_k)|²` over the classes of the subgroup; equals `|S|`
/// exactly when the restriction is irreducible.
pub fn restriction_norm(row: &Character, fused: &[usize], sub_sizes: &[u64], exponent: u64) -> Option<i128> {
    let mut acc = vec![0i128; exponent as usize];
    for (k, &j) in fused.iter().enumerate() {
        row.values[j].accumulate_norm(sub_sizes[k] as i128, &mut acc);
    }
    integer_at_root_of_unity(acc)
}

fn check_normal(sub: &PermGroup, over: &PermGroup) -> Result<()> {
    if sub.degree() != over.degree() {
        return Err(Error::DegreeMismatch {
            expected: over.degree(),
            found: sub.degree(),
        });
    }
    if !sub.is_normal_in(over) {
        return Err(Error::NotNormal);
    }
    Ok(())
}

/// The least-degree rational irreducible character of `over` whose
/// restriction to `sub` is irreducible and non-principal, if any.
pub fn lemma41_check(sub: &PermGroup, over: &PermGroup, seed: u64) -> Result<Option<Lemma41Witness>> {
    check_normal(sub, over)?;
    let over_classes = ClassSet::new(over)?;
    let sub_classes = ClassSet::new(sub)?;
    let table = character_table(&over_classes, seed)?;
    lemma41_from_table(&table, &sub_classes, &over_classes)
}

pub(crate) fn lemma41_from_table(
    table: &CharacterTable,
    sub_classes: &ClassSet,
    over_classes: &ClassSet,
) -> Result<Option<Lemma41Witness>> {
    let fused = fusion(sub_classes, over_classes)?;
    let sizes: Vec<u64> = sub_classes.classes().iter().map(|c| c.size).collect();
    let sub_order = sub_classes.group_order() as i128;
    for (i, row) in table.rows.iter().enumerate() {
        if !row.rational || (row.degree == 1 && row.trivial_on(&fused)) {
            continue;
        }
        if restriction_norm(row, &fused, &sizes, table.exponent) == Some(sub_order) {
            return Ok(Some(Lemma41Witness {
                row: i,
                degree: row.degree,
                restricted: fused.iter().map(|&j| row.values[j].clone()).collect(),
            }));
        }
    }
    Ok(None)
}

/// `k_R(G|S) = k_R(G) − k_R(G/S)` together with `k_R(G) ≥ k_R(S)/|Out|`,
/// `k_R(G/S) ≤ |Out|` and `k_R(G|S) ≥ k_R(S)/|Out| − |Out|`.
pub fn lemma31_check(sub: &PermGroup, group: &PermGroup, out_order: u64, seed: u64) -> Result<Lemma31Report> {
    check_normal(sub, group)?;
    let g_classes = ClassSet::new(group)?;
    let s_classes = ClassSet::new(sub)?;
    let table = character_table(&g_classes, seed)?;
    let fused = fusion(&s_classes, &g_classes)?;
    let quotient = QuotientAction::new(group, sub)?;
    let kr_quotient = real_data(&ClassSet::new(quotient.image())?).real_classes;
    let kr_group = table.real_rational_counts().0;
    let kr_normal = real_data(&s_classes).real_classes;
    let kr_relative = table
        .rows
        .iter()
        .filter(|r| r.real && !r.trivial_on(&fused))
        .count();
    let (kg, ks, kq, krel, out) = (
        kr_group as i128,
        kr_normal as i128,
        kr_quotient as i128,
        kr_relative as i128,
        out_order as i128,
    );
    Ok(Lemma31Report {
        kr_group,
        kr_normal,
        kr_quotient,
        kr_relative,
        out_order,
        equality: krel == kg - kq,
        lower_bound: kg * out >= ks,
        quotient_bound: kq <= out,
        relative_bound: krel * out >= ks - out * out,
    })
}
