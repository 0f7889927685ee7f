//! `Sz(8)` on the 65 points of its ovoid in `PG(3, 8)`.
//!
//! With `σ: x ↦ x⁴` the ovoid is `∞ = (0,0,0,1)` together with the points
//! `(1, a, b, ab + a^{σ+2} + b^σ)`; affine points are labelled by `(a, b)`.

use crate::algebra::Field;
use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

use super::linear::reduced_group;

pub(crate) const SUZUKI_ORDER: u128 = 29120;

struct Ovoid {
    f: Field,
}

impl Ovoid {
    fn sigma(&self, x: u32) -> u32 {
        self.f.pow(x, 4)
    }

    fn height(&self, a: u32, b: u32) -> u32 {
        let f = &self.f;
        f.add(f.add(f.mul(a, b), f.pow(a, 6)), self.sigma(b))
    }

    /// Point 0 is `∞`; `(a, b)` is point `1 + 8a + b`.
    fn index(a: u32, b: u32) -> usize {
        1 + 8 * a as usize + b as usize
    }

    fn coords(&self, pt: usize) -> [u32; 4] {
        if pt == 0 {
            return [0, 0, 0, 1];
        }
        let (a, b) = (((pt - 1) / 8) as u32, ((pt - 1) % 8) as u32);
        [1, a, b, self.height(a, b)]
    }

    fn point_of(&self, v: [u32; 4]) -> Result<usize> {
        let f = &self.f;
        let lead = *v.iter().find(|&&x| x != 0).ok_or(Error::ZeroInverse)?;
        let inv = f.inv(lead)?;
        let w: Vec<u32> = v.iter().map(|&x| f.mul(x, inv)).collect();
        if w[0] == 0 {
            return if w[..3] == [0, 0, 0] {
                Ok(0)
            } else {
                Err(Error::Integrity("point off the ovoid".into()))
            };
        }
        if w[3] != self.height(w[1], w[2]) {
            return Err(Error::Integrity("point off the ovoid".into()));
        }
        Ok(Self::index(w[1], w[2]))
    }

    fn affine_map(&self, map: impl Fn(u32, u32) -> (u32, u32)) -> Permutation {
        let mut images = vec![0usize; 65];
        for a in 0..8 {
            for b in 0..8 {
                let (c, d) = map(a, b);
                images[Self::index(a, b)] = Self::index(c, d);
            }
        }
        Permutation::from_images(images).expect("affine map is a bijection")
    }

    /// `(a, b) ↦ (a + α, b + β + α^σ a)`.
    fn translation(&self, alpha: u32, beta: u32) -> Permutation {
        let f = &self.f;
        self.affine_map(|a, b| {
            (f.add(a, alpha), f.add(f.add(b, beta), f.mul(self.sigma(alpha), a)))
        })
    }

    /// `(a, b) ↦ (κa, κ^{σ+1} b)`.
    fn torus(&self, kappa: u32) -> Permutation {
        let f = &self.f;
        self.affine_map(|a, b| (f.mul(kappa, a), f.mul(f.pow(kappa, 5), b)))
    }

    /// Reversal of the four coordinates.
    fn involution(&self) -> Result<Permutation> {
        let images = (0..65)
            .map(|pt| {
                let v = self.coords(pt);
                self.point_of([v[3], v[2], v[1], v[0]])
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

pub(crate) fn suzuki8() -> Result<PermGroup> {
    let o = Ovoid { f: Field::new(2, 3)? };
    let x = o.f.generator();
    let x2 = o.f.mul(x, x);
    let gens = vec![
        o.translation(1, 0),
        o.translation(0, 1),
        o.translation(x, 0),
        o.translation(x2, 0),
        o.torus(x),
        o.involution()?,
    ];
    reduced_group(gens, 65)
}

/// The field automorphism `(a, b) ↦ (a², b²)`, of order 3.
pub(crate) fn suzuki8_frobenius() -> Result<Permutation> {
    let o = Ovoid { f: Field::new(2, 3)? };
    let f = o.f.clone();
    Ok(o.affine_map(|a, b| (f.mul(a, a), f.mul(b, b))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suzuki_order_and_extension() {
        let g = suzuki8().unwrap();
        assert_eq!(g.order(), SUZUKI_ORDER);
        let phi = suzuki8_frobenius().unwrap();
        assert_eq!(phi.order(), 3);
        for x in g.generators() {
            assert!(g.contains(&x.conjugate_by(&phi)).unwrap());
        }
        let mut ext = g.clone();
        ext.extend(phi);
        assert_eq!(ext.order(), 3 * SUZUKI_ORDER);
    }

    #[test]
    fn group_is_transitive_on_the_ovoid() {
        assert_eq!(suzuki8().unwrap().orbits().len(), 1);
    }
}
