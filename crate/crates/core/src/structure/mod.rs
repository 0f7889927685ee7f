//! Normal structure: p-cores, the Fitting subgroup, the solvable radical
//! and invariant fingerprints.

pub mod oracle;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{factor, is_prime_power};
use crate::classes::{real_data, ClassSet};
use crate::perm::{PermGroup, Permutation, QuotientAction};
use crate::{Error, Result};

/// Maximal number of Fitting steps in the solvable-radical iteration.
pub const MAX_RADICAL_DEPTH: usize = 20;

/// Isomorphism invariants used to recognise small groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: u64,
    pub class_count: usize,
    pub real_classes: usize,
    pub real_orders: Vec<u64>,
    pub order_histogram: Vec<(u64, u64)>,
    pub solvable: bool,
}

#[derive(Debug, Clone)]
pub struct StructureReport {
    pub sol_radical: PermGroup,
    pub quotient: QuotientAction,
    pub fitting: PermGroup,
    pub p_cores: BTreeMap<u64, PermGroup>,
    pub o2prime: PermGroup,
    pub quotient_fingerprint: Fingerprint,
    /// Number of Fitting steps taken.
    pub depth: usize,
}

fn is_power_of(n: u128, p: u64) -> bool {
    n == 1 || matches!(is_prime_power(n as u64), Some((q, _)) if q == p)
}

/// The largest normal p-subgroup `O_p(G)`.
pub fn p_core(classes: &ClassSet, p: u64) -> Result<PermGroup> {
    let g = classes.group();
    let mut seeds = Vec::new();
    for c in classes.classes() {
        if c.order > 1 && is_power_of(c.order as u128, p) {
            let closure = g.normal_closure(std::slice::from_ref(&c.representative))?;
            if is_power_of(closure.order(), p) {
                seeds.push(c.representative.clone());
            }
        }
    }
    g.normal_closure(&seeds)
}

/// All p-cores for primes dividing `|G|`, with the Fitting subgroup.
pub fn fitting(classes: &ClassSet) -> Result<(PermGroup, BTreeMap<u64, PermGroup>)> {
    let g = classes.group();
    let mut cores = BTreeMap::new();
    let mut fit = PermGroup::trivial(g.degree());
    for p in factor(g.order()).primes() {
        let core = p_core(classes, p as u64)?;
        for x in core.generators() {
            fit.extend(x.clone());
        }
        cores.insert(p as u64, core);
    }
    Ok((fit, cores))
}

/// The normal closure of all elements of 2-power order.
pub fn o2prime(classes: &ClassSet) -> Result<PermGroup> {
    let seeds: Vec<Permutation> = classes
        .classes()
        .iter()
        .filter(|c| c.order > 1 && c.order.is_power_of_two())
        .map(|c| c.representative.clone())
        .collect();
    classes.group().normal_closure(&seeds)
}

pub fn fingerprint(classes: &ClassSet) -> Fingerprint {
    let rd = real_data(classes);
    Fingerprint {
        order: classes.group_order(),
        class_count: classes.len(),
        real_classes: rd.real_classes,
        real_orders: rd.real_orders,
        order_histogram: classes.order_histogram().into_iter().collect(),
        solvable: classes.group().is_solvable(),
    }
}

/// Catalog name of the group with this fingerprint, if any.
pub fn identify(fp: &Fingerprint) -> Option<String> {
    crate::catalog::identify(fp)
}

/// Solvable radical by iterated Fitting quotients.
pub fn solvable_radical(group: &PermGroup) -> Result<StructureReport> {
    let classes = ClassSet::new(group)?;
    let (fitting_g, p_cores) = fitting(&classes)?;
    let o2 = o2prime(&classes)?;
    let mut kernel = PermGroup::trivial(group.degree());
    let mut depth = 0;
    loop {
        let quotient = QuotientAction::new(group, &kernel)?;
        let q_classes = ClassSet::new(quotient.image())?;
        let (fit_q, _) = fitting(&q_classes)?;
        if fit_q.is_trivial() {
            return Ok(StructureReport {
                sol_radical: kernel,
                quotient_fingerprint: fingerprint(&q_classes),
                quotient,
                fitting: fitting_g,
                p_cores,
                o2prime: o2,
                depth,
            });
        }
        if depth == MAX_RADICAL_DEPTH {
            return Err(Error::CapExceeded {
                what: "Fitting series depth",
                limit: MAX_RADICAL_DEPTH as u128,
                actual: depth as u128 + 1,
            });
        }
        let elements = q_classes.elements();
        for f in fit_q.generators() {
            let i = elements.index_of(f.images()).ok_or(Error::NotInGroup)?;
            let mut pre = group.identity();
            for gi in elements.word(i) {
                pre = pre.mul(&group.generators()[gi]);
            }
            kernel.extend(pre);
        }
        depth += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn classes(g: &PermGroup) -> ClassSet {
        ClassSet::new(g).unwrap()
    }

    #[test]
    fn p_core_examples() {
        let s4 = PermGroup::symmetric(4).unwrap();
        assert_eq!(p_core(&classes(&s4), 2).unwrap().order(), 4);
        assert_eq!(p_core(&classes(&s4), 3).unwrap().order(), 1);
        let a5 = PermGroup::alternating(5).unwrap();
        assert!(p_core(&classes(&a5), 2).unwrap().is_trivial());
        let a4c3 = PermGroup::alternating(4)
            .unwrap()
            .direct_product(&PermGroup::cyclic(3).unwrap())
            .unwrap();
        let c = classes(&a4c3);
        let o3 = p_core(&c, 3).unwrap();
        assert_eq!(o3.order(), 3);
        assert!(o3.contains(&p(7, &[&[4, 5, 6]])).unwrap());
        assert_eq!(p_core(&c, 2).unwrap().order(), 4);
        assert_eq!(fitting(&c).unwrap().0.order(), 12);
    }

    #[test]
    fn radical_examples() {
        let a5c7 = PermGroup::alternating(5)
            .unwrap()
            .direct_product(&PermGroup::cyclic(7).unwrap())
            .unwrap();
        let r = solvable_radical(&a5c7).unwrap();
        assert_eq!(r.sol_radical.order(), 7);
        assert_eq!(r.quotient.image().order(), 60);
        assert_eq!(r.quotient_fingerprint.real_classes, 5);
        assert_eq!(r.o2prime.order(), 60);

        let s4 = PermGroup::symmetric(4).unwrap();
        let r = solvable_radical(&s4).unwrap();
        assert_eq!(r.sol_radical.order(), 24);
        assert_eq!(r.depth, 3);
        assert_eq!(r.quotient_fingerprint.order, 1);

        let s5 = PermGroup::symmetric(5).unwrap();
        let r = solvable_radical(&s5).unwrap();
        assert!(r.sol_radical.is_trivial());
        assert_eq!(r.o2prime.order(), 120);
    }

    #[test]
    fn radical_of_product_with_solvable_factor() {
        // Sol(A₅ × S₃) = S₃, reached in two Fitting steps.
        let g = PermGroup::alternating(5)
            .unwrap()
            .direct_product(&PermGroup::symmetric(3).unwrap())
            .unwrap();
        let r = solvable_radical(&g).unwrap();
        assert_eq!(r.sol_radical.order(), 6);
        assert_eq!(r.depth, 2);
        assert!(r.sol_radical.is_normal_in(&g));
        assert!(r.sol_radical.is_solvable());
        let again = solvable_radical(r.quotient.image()).unwrap();
        assert!(again.sol_radical.is_trivial());
    }

    #[test]
    fn o2prime_examples() {
        let s3 = PermGroup::symmetric(3).unwrap();
        assert_eq!(o2prime(&classes(&s3)).unwrap().order(), 6);
        let c15 = PermGroup::cyclic(15).unwrap();
        assert!(o2prime(&classes(&c15)).unwrap().is_trivial());
        let f21 = PermGroup::new(vec![p(7, &[&[0, 1, 2, 3, 4, 5, 6]]), p(7, &[&[1, 2, 4], &[3, 6, 5]])], 7)
            .unwrap();
        assert!(o2prime(&classes(&f21)).unwrap().is_trivial());
    }

    #[test]
    fn p_core_matches_oracle() {
        let groups = [
            PermGroup::symmetric(4).unwrap(),
            PermGroup::symmetric(3).unwrap().wreath_c2().unwrap(),
            PermGroup::alternating(4).unwrap().direct_product(&PermGroup::cyclic(3).unwrap()).unwrap(),
            PermGroup::new(vec![p(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]), p(8, &[&[0, 4], &[1, 7], &[2, 6], &[3, 5]])], 8)
                .unwrap(),
        ];
        for g in groups {
            let c = classes(&g);
            for q in factor(g.order()).primes() {
                let ours = p_core(&c, q as u64).unwrap();
                let oracle = oracle::largest_normal_p_subgroup(&g, q as u64);
                assert_eq!(ours.order(), oracle.len() as u128);
                assert!(oracle.iter().all(|x| ours.contains(x).unwrap()));
            }
        }
    }
}
