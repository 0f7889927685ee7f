//! Conjugacy classes, power maps and reality data.
//!
//! Classes are found by enumerating every element and taking orbits under
//! conjugation by the generators. Class order is canonical: element order,
//! then class size, then the lexicographically least representative.

mod enumerate;
pub mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{gcd, lcm};
use crate::perm::{PermGroup, Permutation};
use crate::Result;

pub use enumerate::{ElementIndex, MAX_ENUM_DEGREE, MAX_ENUM_ORDER};

/// One conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub representative: Permutation,
    pub size: u64,
    pub order: u64,
    pub real: bool,
    pub rational: bool,
}

/// The conjugacy classes of a permutation group with power maps.
#[derive(Debug, Clone)]
pub struct ClassSet {
    group: PermGroup,
    classes: Vec<ClassInfo>,
    /// `powers[k][l]` is the class of `g^l` for `g` in class `k`,
    /// `0 ≤ l < order(k)`.
    powers: Vec<Vec<u32>>,
    inverse: Vec<usize>,
    exponent: u64,
    elements: Arc<ElementIndex>,
    class_of: Vec<u32>,
    members: Vec<Vec<u32>>,
}

/// Real and rational class counts with the set of real element orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealData {
    pub real_classes: usize,
    pub real_orders: Vec<u64>,
    pub rational_classes: usize,
}

/// Enumerates the conjugacy classes of `group`.
pub fn conjugacy_classes(group: &PermGroup) -> Result<ClassSet> {
    ClassSet::new(group)
}

impl ClassSet {
    pub fn new(group: &PermGroup) -> Result<ClassSet> {
        let elements = ElementIndex::new(group)?;
        let n = elements.len();
        let degree = elements.degree();
        let gens: Vec<(Vec<u16>, Vec<u16>)> = group
            .generators()
            .iter()
            .map(|g| (g.images().to_vec(), g.inverse().images().to_vec()))
            .collect();

        const NONE: u32 = u32::MAX;
        let mut class_of = vec![NONE; n];
        let mut raw: Vec<(Vec<u32>, usize)> = Vec::new();
        let mut buf = vec![0u16; degree];
        for start in 0..n {
            if class_of[start] != NONE {
                continue;
            }
            let c = raw.len() as u32;
            class_of[start] = c;
            let mut orbit = vec![start as u32];
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i] as usize;
                for (g, ginv) in &gens {
                    let xi = elements.get(x);
                    for (p, b) in buf.iter_mut().enumerate() {
                        *b = g[xi[ginv[p] as usize] as usize];
                    }
                    let y = elements.index_of(&buf).expect("group is closed");
                    if class_of[y] == NONE {
                        class_of[y] = c;
                        orbit.push(y as u32);
                    }
                }
                i += 1;
            }
            let rep = *orbit
                .iter()
                .min_by(|&&a, &&b| elements.get(a as usize).cmp(elements.get(b as usize)))
                .unwrap() as usize;
            raw.push((orbit, rep));
        }

        let orders: Vec<u64> = raw
            .iter()
            .map(|(_, rep)| elements.element(*rep).order())
            .collect();
        let mut perm: Vec<usize> = (0..raw.len()).collect();
        perm.sort_by(|&a, &b| {
            (orders[a], raw[a].0.len())
                .cmp(&(orders[b], raw[b].0.len()))
                .then_with(|| elements.get(raw[a].1).cmp(elements.get(raw[b].1)))
        });
        let mut relabel = vec![0u32; raw.len()];
        for (new, &old) in perm.iter().enumerate() {
            relabel[old] = new as u32;
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c as usize];
        }

        let mut members = Vec::with_capacity(raw.len());
        let mut classes = Vec::with_capacity(raw.len());
        let mut powers = Vec::with_capacity(raw.len());
        for &old in &perm {
            let (orbit, rep) = &raw[old];
            let order = orders[old];
            let mut row = Vec::with_capacity(order as usize);
            let r = elements.get(*rep).to_vec();
            let mut cur: Vec<u16> = (0..degree as u16).collect();
            for _ in 0..order {
                row.push(class_of[elements.index_of(&cur).expect("closed")]);
                cur = cur.iter().map(|&p| r[p as usize]).collect();
            }
            let mut sorted = orbit.clone();
            sorted.sort_unstable();
            members.push(sorted);
            powers.push(row);
            classes.push(ClassInfo {
                representative: elements.element(*rep),
                size: orbit.len() as u64,
                order,
                real: false,
                rational: false,
            });
        }
        let inverse: Vec<usize> = powers.iter().map(|row| row[row.len() - 1] as usize).collect();
        for (k, info) in classes.iter_mut().enumerate() {
            info.real = inverse[k] == k;
            let o = info.order;
            info.rational = (1..o.max(2))
                .filter(|&l| gcd(l as u128, o as u128) == 1)
                .all(|l| powers[k][(l % o) as usize] as usize == k);
        }
        let exponent = classes.iter().fold(1u128, |e, c| lcm(e, c.order as u128)) as u64;
        Ok(ClassSet {
            group: group.clone(),
            classes,
            powers,
            inverse,
            exponent,
            elements: Arc::new(elements),
            class_of,
            members,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn inverse_map(&self) -> &[usize] {
        &self.inverse
    }

    /// Class of `g^m` for `g` in class `k`; `m` may be negative.
    pub fn power(&self, k: usize, m: i64) -> usize {
        let o = self.classes[k].order as i64;
        self.powers[k][m.rem_euclid(o) as usize] as usize
    }

    /// The map induced by `g ↦ g^m` on class indices.
    pub fn power_map(&self, m: i64) -> Vec<usize> {
        (0..self.len()).map(|k| self.power(k, m)).collect()
    }

    pub fn elements(&self) -> &ElementIndex {
        &self.elements
    }

    /// Class index of the element with index `i` in [`ClassSet::elements`].
    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    /// Class of an arbitrary group element; `None` for non-members.
    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.elements
            .index_of(g.images())
            .map(|i| self.class_of[i] as usize)
    }

    /// Element indices of class `k`, increasing.
    pub fn members(&self, k: usize) -> &[u32] {
        &self.members[k]
    }

    /// Histogram of element orders over the whole group.
    pub fn order_histogram(&self) -> BTreeMap<u64, u64> {
        let mut h = BTreeMap::new();
        for c in &self.classes {
            *h.entry(c.order).or_insert(0) += c.size;
        }
        h
    }
}

/// Real class count (equal to the number of real-valued irreducible
/// characters), the set of real element orders and the rational class count.
pub fn real_data(c: &ClassSet) -> RealData {
    RealData::from_classes(&c.classes)
}

/// True when no real element has order `2m` with `m > 1` odd.
pub fn is_c_group(c: &ClassSet) -> bool {
    real_data(c).is_c_group()
}

impl RealData {
    pub fn from_classes(classes: &[ClassInfo]) -> RealData {
        let orders: BTreeSet<u64> = classes.iter().filter(|k| k.real).map(|k| k.order).collect();
        RealData {
            real_classes: classes.iter().filter(|k| k.real).count(),
            real_orders: orders.into_iter().collect(),
            rational_classes: classes.iter().filter(|k| k.rational).count(),
        }
    }

    /// The (C)-group test on the real element orders.
    pub fn is_c_group(&self) -> bool {
        !self
            .real_orders
            .iter()
            .any(|&o| o % 2 == 0 && o / 2 > 1 && (o / 2) % 2 == 1)
    }
}

/// Number of real classes of elements of order `m`.
pub fn real_class_profile(c: &ClassSet, m: u64) -> usize {
    c.classes.iter().filter(|k| k.real && k.order == m).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn sl32() -> PermGroup {
        // Collineations of the Fano plane with lines {i, i+1, i+3} mod 7.
        PermGroup::new(
            vec![p(7, &[&[0, 1, 2, 3, 4, 5, 6]]), p(7, &[&[1, 2, 4], &[3, 6, 5]]), p(7, &[&[1, 3], &[2, 6]])],
            7,
        )
        .unwrap()
    }

    fn oracle_partition(g: &PermGroup) -> Vec<Vec<Permutation>> {
        oracle::brute_force_classes(g)
    }

    fn our_partition(c: &ClassSet) -> Vec<Vec<Permutation>> {
        let mut parts: Vec<Vec<Permutation>> = (0..c.len())
            .map(|k| {
                let mut v: Vec<Permutation> =
                    c.members(k).iter().map(|&i| c.elements().element(i as usize)).collect();
                v.sort();
                v
            })
            .collect();
        parts.sort();
        parts
    }

    #[test]
    fn a5_classes() {
        let c = conjugacy_classes(&PermGroup::alternating(5).unwrap()).unwrap();
        let sizes: Vec<u64> = c.classes().iter().map(|k| k.size).collect();
        assert_eq!(sizes, vec![1, 15, 20, 12, 12]);
        let rd = real_data(&c);
        assert_eq!(rd.real_orders, vec![1, 2, 3, 5]);
        assert_eq!(rd.real_classes, 5);
        assert_eq!(rd.rational_classes, 3);
        assert!(is_c_group(&c));
        assert_eq!(c.exponent(), 30);
        assert_eq!(our_partition(&c), oracle_partition(c.group()));
    }

    #[test]
    fn sl32_classes() {
        let g = sl32();
        assert_eq!(g.order(), 168);
        let c = conjugacy_classes(&g).unwrap();
        let orders: Vec<u64> = c.classes().iter().map(|k| k.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 7, 7]);
        assert_eq!(real_data(&c).real_classes, 4);
        assert_eq!(real_class_profile(&c, 7), 0);
        assert_eq!(real_class_profile(&c, 1), 1);
        assert_eq!(our_partition(&c), oracle_partition(&g));
    }

    #[test]
    fn s5_is_not_a_c_group() {
        let c = conjugacy_classes(&PermGroup::symmetric(5).unwrap()).unwrap();
        assert!(c.classes().iter().all(|k| k.real && k.rational));
        assert!(!is_c_group(&c));
        assert_eq!(real_class_profile(&c, 6), 1);
    }

    #[test]
    fn class_invariants() {
        let groups = [
            sl32(),
            PermGroup::symmetric(6).unwrap(),
            PermGroup::alternating(4).unwrap().wreath_c2().unwrap(),
            PermGroup::cyclic(15).unwrap(),
        ];
        for g in groups {
            let c = conjugacy_classes(&g).unwrap();
            let n = c.group_order();
            assert_eq!(c.classes().iter().map(|k| k.size).sum::<u64>(), n);
            assert!(c.classes().iter().all(|k| n.is_multiple_of(k.size)));
            assert_eq!(c.classes()[0].order, 1);
            for k in 0..c.len() {
                assert_eq!(c.inverse_map()[c.inverse_map()[k]], k);
                if c.classes()[k].rational {
                    assert!(c.classes()[k].real);
                }
                for a in [2i64, 3, 5, 7] {
                    for b in [2i64, 3, -1] {
                        assert_eq!(c.power(c.power(k, a), b), c.power(k, a * b));
                    }
                }
            }
            // Every divisor of a real order is a real order.
            let e = real_data(&c).real_orders;
            for &m in &e {
                for d in 1..=m {
                    if m % d == 0 {
                        assert!(e.contains(&d));
                    }
                }
            }
            assert_eq!(our_partition(&c), oracle_partition(&g));
        }
    }

    #[test]
    fn odd_order_groups_have_one_real_class() {
        let f21 = PermGroup::new(vec![p(7, &[&[0, 1, 2, 3, 4, 5, 6]]), p(7, &[&[1, 2, 4], &[3, 6, 5]])], 7)
            .unwrap();
        for g in [f21, PermGroup::cyclic(9).unwrap()] {
            assert_eq!(real_data(&conjugacy_classes(&g).unwrap()).real_classes, 1);
        }
    }

    #[test]
    fn products_multiply_real_data() {
        let a = PermGroup::symmetric(3).unwrap();
        let b = PermGroup::cyclic(5).unwrap();
        let ab = a.direct_product(&b).unwrap();
        let (ca, cb, cab) = (
            conjugacy_classes(&a).unwrap(),
            conjugacy_classes(&b).unwrap(),
            conjugacy_classes(&ab).unwrap(),
        );
        let (ra, rb, rab) = (real_data(&ca), real_data(&cb), real_data(&cab));
        assert_eq!(rab.real_classes, ra.real_classes * rb.real_classes);
        let mut lcms: Vec<u64> = ra
            .real_orders
            .iter()
            .flat_map(|&x| rb.real_orders.iter().map(move |&y| lcm(x as u128, y as u128) as u64))
            .collect();
        lcms.sort();
        lcms.dedup();
        assert_eq!(rab.real_orders, lcms);
    }

    #[test]
    fn representative_is_least_member() {
        let c = conjugacy_classes(&PermGroup::symmetric(5).unwrap()).unwrap();
        for k in 0..c.len() {
            let min = c
                .members(k)
                .iter()
                .map(|&i| c.elements().get(i as usize).to_vec())
                .min()
                .unwrap();
            assert_eq!(c.classes()[k].representative.images(), &min[..]);
        }
    }

    #[test]
    fn caps_are_enforced() {
        let err = conjugacy_classes(&PermGroup::symmetric(11).unwrap()).unwrap_err();
        assert!(err.is_cap());
    }

    #[test]
    fn word_reproduces_element() {
        let g = sl32();
        let e = ElementIndex::new(&g).unwrap();
        for i in (0..e.len()).step_by(7) {
            let w = e.word(i);
            let mut x = Permutation::identity(7);
            for gi in w {
                x = x.mul(&g.generators()[gi]);
            }
            assert_eq!(x, e.element(i));
        }
    }
}
