use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

/// Largest group order that is enumerated element by element.
pub const MAX_ENUM_ORDER: u128 = 2_000_000;
/// Largest degree for element enumeration.
pub const MAX_ENUM_DEGREE: usize = 300;

const EMPTY: u32 = u32::MAX;

/// Every element of a group stored as image arrays in one arena, with an
/// open-addressing index and a breadth-first spanning tree over the
/// generators.
#[derive(Debug, Clone)]
pub struct ElementIndex {
    degree: usize,
    arena: Vec<u16>,
    table: Vec<u32>,
    parent: Vec<u32>,
    via: Vec<u16>,
    generators: Vec<Permutation>,
}

fn hash(images: &[u16]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &x in images {
        h = (h.rotate_left(5) ^ x as u64).wrapping_mul(0x517c_c1b7_2722_0a95);
    }
    h ^ (h >> 29)
}

impl ElementIndex {
    pub fn new(group: &PermGroup) -> Result<ElementIndex> {
        check_caps(group)?;
        let degree = group.degree();
        let n = group.order() as usize;
        let slots = (2 * n).next_power_of_two().max(16);
        let mut idx = ElementIndex {
            degree,
            arena: Vec::with_capacity(n * degree),
            table: vec![EMPTY; slots],
            parent: Vec::with_capacity(n),
            via: Vec::with_capacity(n),
            generators: group.generators().to_vec(),
        };
        idx.insert(&(0..degree as u16).collect::<Vec<_>>(), EMPTY, 0);
        let mut buf = vec![0u16; degree];
        let mut i = 0;
        while i < idx.len() {
            for (gi, g) in group.generators().iter().enumerate() {
                let x = &idx.arena[i * degree..(i + 1) * degree];
                let gim = g.images();
                for (b, &p) in buf.iter_mut().zip(x) {
                    *b = gim[p as usize];
                }
                if idx.find(&buf).is_none() {
                    let copy = buf.clone();
                    idx.insert(&copy, i as u32, gi as u16);
                }
            }
            i += 1;
        }
        if idx.len() != n {
            return Err(Error::Integrity(format!(
                "enumerated {} elements, stabilizer chain gives {n}",
                idx.len()
            )));
        }
        Ok(idx)
    }

    fn slot_of(&self, images: &[u16]) -> (usize, Option<usize>) {
        let mask = self.table.len() - 1;
        let mut s = hash(images) as usize & mask;
        loop {
            let e = self.table[s];
            if e == EMPTY {
                return (s, None);
            }
            if self.get(e as usize) == images {
                return (s, Some(e as usize));
            }
            s = (s + 1) & mask;
        }
    }

    fn find(&self, images: &[u16]) -> Option<usize> {
        self.slot_of(images).1
    }

    fn insert(&mut self, images: &[u16], parent: u32, via: u16) {
        let (slot, _) = self.slot_of(images);
        self.table[slot] = self.parent.len() as u32;
        self.arena.extend_from_slice(images);
        self.parent.push(parent);
        self.via.push(via);
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Image array of element `i`; element 0 is the identity.
    pub fn get(&self, i: usize) -> &[u16] {
        &self.arena[i * self.degree..(i + 1) * self.degree]
    }

    pub fn element(&self, i: usize) -> Permutation {
        Permutation::from_raw(self.get(i).to_vec())
    }

    pub fn index_of(&self, images: &[u16]) -> Option<usize> {
        if images.len() != self.degree {
            return None;
        }
        self.find(images)
    }

    /// Generator indices `w` with element `i` equal to `g_{w₀} g_{w₁} ⋯`.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = i;
        while self.parent[cur] != EMPTY {
            w.push(self.via[cur] as usize);
            cur = self.parent[cur] as usize;
        }
        w.reverse();
        w
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Index of the product `a·b` given by indices.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.get(a), self.get(b));
        let prod: Vec<u16> = x.iter().map(|&p| y[p as usize]).collect();
        self.find(&prod).expect("group is closed")
    }

    pub fn inverse(&self, a: usize) -> usize {
        let x = self.get(a);
        let mut inv = vec![0u16; self.degree];
        for (i, &p) in x.iter().enumerate() {
            inv[p as usize] = i as u16;
        }
        self.find(&inv).expect("group is closed")
    }
}

pub(crate) fn check_caps(group: &PermGroup) -> Result<()> {
    if group.degree() > MAX_ENUM_DEGREE {
        return Err(Error::CapExceeded {
            what: "degree for element enumeration",
            limit: MAX_ENUM_DEGREE as u128,
            actual: group.degree() as u128,
        });
    }
    if group.order() > MAX_ENUM_ORDER {
        return Err(Error::CapExceeded {
            what: "group order for element enumeration",
            limit: MAX_ENUM_ORDER,
            actual: group.order(),
        });
    }
    Ok(())
}
