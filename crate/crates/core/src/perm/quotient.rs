use std::collections::HashMap;

use super::{PermGroup, Permutation};
use crate::{Error, Result};

/// Largest number of cosets enumerated for a coset action.
pub const MAX_COSET_INDEX: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientMethod {
    /// Action on the orbits of the kernel.
    Blocks,
    /// Action on right cosets of the kernel.
    Cosets,
}

#[derive(Debug, Clone)]
enum Action {
    Blocks {
        block_of: Vec<u32>,
        block_rep: Vec<usize>,
    },
    Cosets {
        reps: Vec<Permutation>,
        index: HashMap<Vec<u16>, u32>,
    },
}

/// A faithful permutation representation of `G/N`.
///
/// The generators of [`QuotientAction::image`] are the images of the
/// generators of the source group, in the same order.
#[derive(Debug, Clone)]
pub struct QuotientAction {
    kernel: PermGroup,
    image: PermGroup,
    method: QuotientMethod,
    action: Action,
}

impl QuotientAction {
    /// Builds `G/N` for a normal subgroup `N` of `G`.
    pub fn new(group: &PermGroup, kernel: &PermGroup) -> Result<QuotientAction> {
        if !kernel.is_normal_in(group) {
            return Err(Error::NotNormal);
        }
        let index = group.order() / kernel.order();
        if let Some(q) = Self::on_blocks(group, kernel, index)? {
            return Ok(q);
        }
        Self::on_cosets(group, kernel, index)
    }

    fn on_blocks(group: &PermGroup, kernel: &PermGroup, index: u128) -> Result<Option<QuotientAction>> {
        let orbits = kernel.orbits();
        let mut block_of = vec![0u32; group.degree()];
        for (i, orbit) in orbits.iter().enumerate() {
            for &p in orbit {
                block_of[p] = i as u32;
            }
        }
        let block_rep: Vec<usize> = orbits.iter().map(|o| o[0]).collect();
        let action = Action::Blocks { block_of, block_rep };
        let gens = group
            .generators()
            .iter()
            .map(|g| Self::apply(&action, kernel, g))
            .collect::<Vec<_>>();
        let image = PermGroup::new(gens, orbits.len())?;
        if image.order() != index {
            return Ok(None);
        }
        Ok(Some(QuotientAction {
            kernel: kernel.clone(),
            image,
            method: QuotientMethod::Blocks,
            action,
        }))
    }

    fn on_cosets(group: &PermGroup, kernel: &PermGroup, index: u128) -> Result<QuotientAction> {
        if index > MAX_COSET_INDEX as u128 {
            return Err(Error::CapExceeded {
                what: "coset index",
                limit: MAX_COSET_INDEX as u128,
                actual: index,
            });
        }
        let mut reps = vec![canonical_coset_rep(kernel, &group.identity())];
        let mut lookup = HashMap::new();
        lookup.insert(reps[0].images().to_vec(), 0u32);
        let mut i = 0;
        while i < reps.len() {
            for g in group.generators() {
                let c = canonical_coset_rep(kernel, &reps[i].mul(g));
                if !lookup.contains_key(c.images()) {
                    lookup.insert(c.images().to_vec(), reps.len() as u32);
                    reps.push(c);
                }
            }
            i += 1;
        }
        debug_assert_eq!(reps.len() as u128, index);
        let action = Action::Cosets { reps, index: lookup };
        let gens = group
            .generators()
            .iter()
            .map(|g| Self::apply(&action, kernel, g))
            .collect::<Vec<_>>();
        let degree = index as usize;
        let image = PermGroup::new(gens, degree)?;
        Ok(QuotientAction {
            kernel: kernel.clone(),
            image,
            method: QuotientMethod::Cosets,
            action,
        })
    }

    fn apply(action: &Action, kernel: &PermGroup, g: &Permutation) -> Permutation {
        match action {
            Action::Blocks { block_of, block_rep } => Permutation::from_raw(
                block_rep
                    .iter()
                    .map(|&p| block_of[g.image(p)] as u16)
                    .collect(),
            ),
            Action::Cosets { reps, index } => Permutation::from_raw(
                reps.iter()
                    .map(|r| index[canonical_coset_rep(kernel, &r.mul(g)).images()] as u16)
                    .collect(),
            ),
        }
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    /// The quotient as a permutation group.
    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn method(&self) -> QuotientMethod {
        self.method
    }

    /// Image of an element of the source group.
    pub fn map_element(&self, g: &Permutation) -> Permutation {
        Self::apply(&self.action, &self.kernel, g)
    }
}

/// The element of the coset `Nx` whose images of the base points of `N`
/// are lexicographically least.
pub(crate) fn canonical_coset_rep(kernel: &PermGroup, x: &Permutation) -> Permutation {
    let chain = kernel.chain();
    let mut y = x.clone();
    for level in 0..chain.level_count() {
        let best = chain
            .orbit(level)
            .iter()
            .copied()
            .min_by_key(|&p| y.image(p))
            .expect("orbit contains the base point");
        let u = chain.transversal(level, best).expect("orbit point");
        y = u.mul(&y);
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn s4_mod_v4_is_s3() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let v4 = s4.normal_closure(&[p(4, &[&[0, 1], &[2, 3]])]).unwrap();
        let q = QuotientAction::new(&s4, &v4).unwrap();
        assert_eq!(q.method(), QuotientMethod::Cosets);
        assert_eq!(q.image().order(), 6);
        assert!(q.image().is_solvable());
        for g in s4.generators() {
            assert!(q.map_element(g).degree() == 6);
        }
        assert!(q.map_element(&p(4, &[&[0, 2], &[1, 3]])).is_identity());
        assert!(!q.map_element(&p(4, &[&[0, 1, 2]])).is_identity());
    }

    #[test]
    fn product_quotient_uses_blocks() {
        let a5 = PermGroup::alternating(5).unwrap();
        let s3 = PermGroup::symmetric(3).unwrap();
        let g = a5.direct_product(&s3).unwrap();
        let left = g.normal_closure(&[p(8, &[&[0, 1, 2]])]).unwrap();
        let q = QuotientAction::new(&g, &left).unwrap();
        assert_eq!(q.image().order(), 6);
        assert_eq!(q.method(), QuotientMethod::Blocks);
    }

    #[test]
    fn map_element_is_a_homomorphism() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let g = s4.wreath_c2().unwrap();
        let v = g
            .normal_closure(&[p(8, &[&[0, 1], &[2, 3]])])
            .unwrap();
        let q = QuotientAction::new(&g, &v).unwrap();
        assert_eq!(q.image().order() * v.order(), g.order());
        let mut rng = PermGroup::seeded_rng(3);
        for _ in 0..40 {
            let x = g.random_element(&mut rng);
            let y = g.random_element(&mut rng);
            assert_eq!(q.map_element(&x.mul(&y)), q.map_element(&x).mul(&q.map_element(&y)));
            let n = v.random_element(&mut rng);
            assert!(q.map_element(&n).is_identity());
        }
    }

    #[test]
    fn non_normal_kernel_is_rejected() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let h = PermGroup::new(vec![p(4, &[&[0, 1]])], 4).unwrap();
        assert!(matches!(QuotientAction::new(&s4, &h), Err(Error::NotNormal)));
    }
}
