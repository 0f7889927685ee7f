use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::chain::Chain;
use super::slp::Word;
use super::{Permutation, MAX_DEGREE};
use crate::{Error, Result};

/// Largest group order for which a stabilizer chain is built.
pub const MAX_CHAIN_ORDER: u128 = 200_000_000;

/// A permutation group given by generators, with a stabilizer chain.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Arc<Chain>,
}

impl PermGroup {
    /// Builds the group generated by `generators` on `degree` points.
    pub fn new(generators: Vec<Permutation>, degree: usize) -> Result<PermGroup> {
        Self::build(generators, degree, false)
    }

    /// Like [`PermGroup::new`], but membership tests can also return words
    /// in the generators.
    pub fn with_witnesses(generators: Vec<Permutation>, degree: usize) -> Result<PermGroup> {
        Self::build(generators, degree, true)
    }

    fn build(generators: Vec<Permutation>, degree: usize, witness: bool) -> Result<PermGroup> {
        if degree > MAX_DEGREE {
            return Err(Error::CapExceeded {
                what: "permutation degree",
                limit: MAX_DEGREE as u128,
                actual: degree as u128,
            });
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let chain = Chain::new(degree, &generators, witness);
        if chain.order() > MAX_CHAIN_ORDER {
            return Err(Error::CapExceeded {
                what: "group order",
                limit: MAX_CHAIN_ORDER,
                actual: chain.order(),
            });
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: Arc::new(chain),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(Vec::new(), degree).expect("trivial group")
    }

    pub fn symmetric(n: usize) -> Result<PermGroup> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
        }
        if n >= 3 {
            let cycle: Vec<usize> = (0..n).collect();
            gens.push(Permutation::from_cycles(n, &[&cycle])?);
        }
        PermGroup::new(gens, n.max(1))
    }

    pub fn alternating(n: usize) -> Result<PermGroup> {
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1, 2]])?);
        }
        if n >= 4 {
            let cycle: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
            gens.push(Permutation::from_cycles(n, &[&cycle])?);
        }
        PermGroup::new(gens, n.max(1))
    }

    pub fn cyclic(n: usize) -> Result<PermGroup> {
        let cycle: Vec<usize> = (0..n).collect();
        let gens = if n >= 2 {
            vec![Permutation::from_cycles(n, &[&cycle])?]
        } else {
            Vec::new()
        };
        PermGroup::new(gens, n.max(1))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.chain.strong_generators()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub(crate) fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        Ok(self.chain.contains(g))
    }

    /// Membership with a word in the generators evaluating to `g`. Returns
    /// `Ok(None)` for non-members; requires a group built with witnesses.
    pub fn contains_with_witness(&self, g: &Permutation) -> Result<Option<Word>> {
        if !self.chain.has_witnesses() {
            return Err(Error::Unsupported(
                "group was built without witness tracking".into(),
            ));
        }
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        Ok(self.chain.witness(g))
    }

    /// A seeded uniformly random element.
    pub fn random_element(&self, rng: &mut ChaCha8Rng) -> Permutation {
        self.chain.random_element(rng)
    }

    pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// Adds a generator in place; returns false when it was already a member.
    pub fn extend(&mut self, g: Permutation) -> bool {
        if self.chain.contains(&g) {
            return false;
        }
        let index = self.generators.len();
        Arc::make_mut(&mut self.chain).add_indexed_generator(&g, index);
        self.generators.push(g);
        true
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.chain.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Whether `self` is normalized by every generator of `group`.
    pub fn is_normal_in(&self, group: &PermGroup) -> bool {
        self.is_subgroup_of(group)
            && group.generators.iter().all(|g| {
                self.generators
                    .iter()
                    .all(|h| self.chain.contains(&h.conjugate_by(g)))
            })
    }

    /// The smallest normal subgroup of `self` containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        for s in seeds {
            if !self.contains(s)? {
                return Err(Error::NotInGroup);
            }
        }
        let mut closure = PermGroup::trivial(self.degree);
        let mut queue: Vec<Permutation> = seeds.to_vec();
        while let Some(x) = queue.pop() {
            if closure.extend(x.clone()) {
                for g in &self.generators {
                    queue.push(x.conjugate_by(g));
                }
            }
        }
        Ok(closure)
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let gens = &self.generators;
        let mut commutators = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    commutators.push(c);
                }
            }
        }
        self.normal_closure(&commutators)
            .expect("commutators of generators are members")
    }

    /// `G = G⁽⁰⁾ ≥ G⁽¹⁾ ≥ …` until the series stabilizes; the last entry is
    /// the perfect core (trivial exactly when `G` is solvable).
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    /// Orbits of the group on points, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let pt = orbit[i];
                for g in &self.generators {
                    let img = g.image(pt);
                    if !seen[img] {
                        seen[img] = true;
                        orbit.push(img);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// `A × B` on `deg A + deg B` points, the left factor first.
    pub fn direct_product(&self, other: &PermGroup) -> Result<PermGroup> {
        let n = self.degree + other.degree;
        let mut gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| g.shifted(0, n))
            .collect();
        gens.extend(other.generators.iter().map(|g| g.shifted(self.degree, n)));
        PermGroup::new(gens, n)
    }

    /// The imprimitive wreath product `self ≀ top`: `deg(top)` copies of
    /// `self` on consecutive blocks, permuted by `top`.
    pub fn wreath(&self, top: &PermGroup) -> Result<PermGroup> {
        let n = self.degree;
        let m = top.degree;
        let total = n * m;
        let mut gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| g.shifted(0, total))
            .collect();
        for t in &top.generators {
            let mut images = vec![0usize; total];
            for block in 0..m {
                for i in 0..n {
                    images[block * n + i] = t.image(block) * n + i;
                }
            }
            gens.push(Permutation::from_images(images)?);
        }
        PermGroup::new(gens, total)
    }

    /// `(A × A) ⋊ C₂` with the factor swap.
    pub fn wreath_c2(&self) -> Result<PermGroup> {
        self.wreath(&PermGroup::cyclic(2)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use std::collections::HashSet;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    /// Closure of the generators by breadth-first multiplication.
    fn brute_force_elements(g: &PermGroup) -> HashSet<Permutation> {
        let mut set = HashSet::new();
        let id = g.identity();
        set.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for s in g.generators() {
                let y = x.mul(s);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    #[test]
    fn small_group_orders() {
        let a5 = PermGroup::new(vec![p(5, &[&[0, 1, 2, 3, 4]]), p(5, &[&[0, 1, 2]])], 5).unwrap();
        assert_eq!(a5.order(), 60);
        let s5 = PermGroup::new(vec![p(5, &[&[0, 1]]), p(5, &[&[0, 1, 2, 3, 4]])], 5).unwrap();
        assert_eq!(s5.order(), 120);
        assert!(a5.contains(&p(5, &[&[0, 1, 2]])).unwrap());
        assert!(!a5.contains(&p(5, &[&[0, 1]])).unwrap());
        assert!(a5.contains(&Permutation::identity(4)).is_err());
        assert!(matches!(
            PermGroup::symmetric(13),
            Err(Error::CapExceeded { .. })
        ));
        for n in 1..=9 {
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(PermGroup::symmetric(n).unwrap().order(), fact);
            assert_eq!(PermGroup::alternating(n).unwrap().order(), (fact / 2).max(1));
        }
    }

    #[test]
    fn chain_order_matches_enumeration() {
        let groups = vec![
            PermGroup::symmetric(6).unwrap(),
            PermGroup::alternating(7).unwrap(),
            PermGroup::new(vec![p(7, &[&[0, 1, 2, 3, 4, 5, 6]]), p(7, &[&[1, 2, 4], &[3, 6, 5]])], 7)
                .unwrap(),
            PermGroup::alternating(4).unwrap().wreath_c2().unwrap(),
            PermGroup::new(
                vec![p(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]), p(8, &[&[0, 4], &[1, 7], &[2, 6], &[3, 5]])],
                8,
            )
            .unwrap(),
        ];
        for g in groups {
            assert_eq!(g.order(), brute_force_elements(&g).len() as u128);
        }
    }

    #[test]
    fn witness_words_evaluate_correctly() {
        let s5 = PermGroup::with_witnesses(vec![p(5, &[&[0, 1]]), p(5, &[&[0, 1, 2, 3, 4]])], 5)
            .unwrap();
        let mut rng = PermGroup::seeded_rng(1);
        for _ in 0..50 {
            let g = s5.random_element(&mut rng);
            let w = s5.contains_with_witness(&g).unwrap().expect("member");
            assert_eq!(w.evaluate(s5.generators(), 5), g);
        }
        let a5 = PermGroup::with_witnesses(vec![p(5, &[&[0, 1, 2, 3, 4]]), p(5, &[&[0, 1, 2]])], 5)
            .unwrap();
        assert!(a5.contains_with_witness(&p(5, &[&[0, 1]])).unwrap().is_none());
    }

    #[test]
    fn normal_closures() {
        let s5 = PermGroup::symmetric(5).unwrap();
        assert_eq!(s5.normal_closure(&[p(5, &[&[0, 1, 2]])]).unwrap().order(), 60);
        let s4 = PermGroup::symmetric(4).unwrap();
        let v4 = s4.normal_closure(&[p(4, &[&[0, 1], &[2, 3]])]).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_normal_in(&s4));
        let a5 = PermGroup::alternating(5).unwrap();
        let a5a5 = a5.direct_product(&a5).unwrap();
        let left = a5a5
            .normal_closure(&[p(10, &[&[0, 1, 2]])])
            .unwrap();
        assert_eq!(left.order(), 60);
        assert!(left.orbits().iter().all(|o| o.iter().all(|&x| x < 5) || o.len() == 1));
        assert!(matches!(
            PermGroup::alternating(5).unwrap().normal_closure(&[p(5, &[&[0, 1]])]),
            Err(Error::NotInGroup)
        ));
    }

    #[test]
    fn derived_series() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let orders: Vec<u128> = s4.derived_series().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(s4.is_solvable());
        let a5 = PermGroup::alternating(5).unwrap();
        assert_eq!(a5.derived_subgroup().order(), 60);
        assert!(!a5.is_solvable());
        let f21 = PermGroup::new(vec![p(7, &[&[0, 1, 2, 3, 4, 5, 6]]), p(7, &[&[1, 2, 4], &[3, 6, 5]])], 7)
            .unwrap();
        assert_eq!(f21.order(), 21);
        assert_eq!(f21.derived_subgroup().order(), 7);
        assert!(f21.is_solvable());
    }

    #[test]
    fn products_and_wreaths() {
        let a5 = PermGroup::alternating(5).unwrap();
        let c7 = PermGroup::cyclic(7).unwrap();
        let g = a5.direct_product(&c7).unwrap();
        assert_eq!((g.degree(), g.order()), (12, 420));
        let w = a5.wreath_c2().unwrap();
        assert_eq!((w.degree(), w.order()), (10, 7200));
        assert_eq!(a5.direct_product(&a5).unwrap().order(), 3600);
    }

    #[test]
    fn membership_is_closed() {
        let g = PermGroup::alternating(6).unwrap().wreath_c2().unwrap();
        let mut rng = PermGroup::seeded_rng(9);
        for _ in 0..100 {
            let x = g.random_element(&mut rng);
            let y = g.random_element(&mut rng);
            assert!(g.contains(&x.mul(&y)).unwrap());
            assert!(g.contains(&x.inverse()).unwrap());
        }
        let mut outside = 0;
        for _ in 0..200 {
            let mut images: Vec<usize> = (0..12).collect();
            images.shuffle(&mut rng);
            if !g.contains(&Permutation::from_images(images).unwrap()).unwrap() {
                outside += 1;
            }
        }
        assert!(outside > 190);
    }
}
