//! Dixon–Schneider: common eigenvectors of the class matrices modulo a
//! prime, followed by an exact lift of the values.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modp::{charpoly, nullspace, primitive_root, roots, rref, Fp};
use super::{Character, CharacterTable, Cyclotomic};
use crate::algebra::{divisors, is_prime};
use crate::classes::ClassSet;
use crate::{Error, Result};

/// Largest class count handled by [`character_table`].
pub const MAX_TABLE_CLASSES: usize = 120;

/// Consecutive non-splitting class matrices tried before switching to
/// random combinations.
const PLAIN_ATTEMPTS: usize = 3;
const RANDOM_ATTEMPTS: usize = 40;

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√n`.
pub fn dixon_prime(group_order: u64, exponent: u64) -> u64 {
    let mut p = exponent + 1;
    loop {
        if (p as u128) * (p as u128) > 4 * group_order as u128 && is_prime(p as u128) {
            return p;
        }
        p += exponent;
    }
}

/// `a[j][k] = #{(x, y) ∈ Cᵢ × Cⱼ : xy = z_k}` for a fixed `z_k ∈ C_k`.
pub fn class_matrix(classes: &ClassSet, i: usize) -> Vec<Vec<u64>> {
    let r = classes.len();
    let elements = classes.elements();
    let degree = elements.degree();
    let mut a = vec![vec![0u64; r]; r];
    let mut inv = vec![0u16; degree];
    let mut y = vec![0u16; degree];
    for k in 0..r {
        let z = classes.classes()[k].representative.images();
        for &x in classes.members(i) {
            let xs = elements.get(x as usize);
            for (p, &q) in xs.iter().enumerate() {
                inv[q as usize] = p as u16;
            }
            for (p, yp) in y.iter_mut().enumerate() {
                *yp = z[inv[p] as usize];
            }
            let j = classes.class_of_index(elements.index_of(&y).expect("group is closed"));
            a[j][k] += 1;
        }
    }
    a
}

/// All structure constants, indexed `[i][j][k]`.
pub fn class_matrices(classes: &ClassSet) -> Vec<Vec<Vec<u64>>> {
    (0..classes.len()).map(|i| class_matrix(classes, i)).collect()
}

struct Matrices<'a> {
    classes: &'a ClassSet,
    f: Fp,
    cache: Vec<Option<Vec<Vec<u64>>>>,
}

impl Matrices<'_> {
    fn get(&mut self, i: usize) -> &Vec<Vec<u64>> {
        if self.cache[i].is_none() {
            let f = self.f;
            let m = class_matrix(self.classes, i)
                .into_iter()
                .map(|row| row.into_iter().map(|x| f.reduce(x)).collect())
                .collect();
            self.cache[i] = Some(m);
        }
        self.cache[i].as_ref().unwrap()
    }
}

struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    cursor: usize,
}

fn mat_vec(f: Fp, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |s, (&a, &b)| f.add(s, f.mul(a, b))))
        .collect()
}

/// Splits `space` into eigenspaces of `m`; `None` when `m` acts as a scalar.
fn split_by(f: Fp, m: &[Vec<u64>], space: &Space, rng: &mut ChaCha8Rng) -> Result<Option<Vec<Space>>> {
    let d = space.basis.len();
    let images: Vec<Vec<u64>> = space.basis.iter().map(|b| mat_vec(f, m, b)).collect();
    // a[t][s] is the coordinate of M·b_s on b_t.
    let a: Vec<Vec<u64>> = (0..d)
        .map(|t| (0..d).map(|s| images[s][space.pivots[t]]).collect())
        .collect();
    let eigen = roots(f, &charpoly(f, &a), rng);
    if eigen.len() < 2 {
        if eigen.len() == 1 {
            return Ok(None);
        }
        return Err(Error::Integrity("class matrix has no eigenvalue in F_p".into()));
    }
    let mut parts = Vec::new();
    let mut total = 0;
    for lambda in eigen {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|t| {
                (0..d)
                    .map(|s| if s == t { f.sub(a[t][s], lambda) } else { a[t][s] })
                    .collect()
            })
            .collect();
        let coords = nullspace(f, shifted);
        let ambient: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u64; space.basis[0].len()];
                for (cs, b) in c.iter().zip(&space.basis) {
                    if *cs != 0 {
                        for (x, &y) in v.iter_mut().zip(b) {
                            *x = f.add(*x, f.mul(*cs, y));
                        }
                    }
                }
                v
            })
            .collect();
        let (basis, pivots) = rref(f, ambient);
        total += basis.len();
        parts.push(Space {
            basis,
            pivots,
            cursor: space.cursor,
        });
    }
    if total != d {
        return Err(Error::Integrity(
            "class matrix is not diagonalizable modulo the Dixon prime".into(),
        ));
    }
    Ok(Some(parts))
}

/// Common eigenvectors of all class matrices, each normalized to 1 on the
/// identity class.
fn eigenvectors(classes: &ClassSet, f: Fp, seed: u64) -> Result<Vec<Vec<u64>>> {
    let r = classes.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mats = Matrices {
        classes,
        f,
        cache: vec![None; r],
    };
    let mut by_size: Vec<usize> = (1..r).collect();
    by_size.sort_by_key(|&i| (classes.classes()[i].size, i));

    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut stack = vec![Space {
        basis: identity,
        pivots: (0..r).collect(),
        cursor: 0,
    }];
    let mut found = Vec::new();
    while let Some(mut space) = stack.pop() {
        if space.basis.len() == 1 {
            found.push(space.basis.pop().unwrap());
            continue;
        }
        let mut misses = 0;
        let mut random_tries = 0;
        loop {
            let parts = if misses < PLAIN_ATTEMPTS && space.cursor < by_size.len() {
                let i = by_size[space.cursor];
                space.cursor += 1;
                let m = mats.get(i).clone();
                split_by(f, &m, &space, &mut rng)?
            } else {
                if random_tries == RANDOM_ATTEMPTS {
                    return Err(Error::SplitFailed(format!(
                        "a {}-dimensional space survived {RANDOM_ATTEMPTS} random combinations",
                        space.basis.len()
                    )));
                }
                random_tries += 1;
                let mut m = vec![vec![0u64; r]; r];
                for i in 1..r {
                    let c = rng.random_range(0..f.p);
                    for (row, src) in m.iter_mut().zip(mats.get(i)) {
                        for (x, &y) in row.iter_mut().zip(src) {
                            *x = f.add(*x, f.mul(c, y));
                        }
                    }
                }
                split_by(f, &m, &space, &mut rng)?
            };
            match parts {
                Some(parts) => {
                    stack.extend(parts);
                    break;
                }
                None => misses += 1,
            }
        }
    }
    for w in found.iter_mut() {
        if w[0] == 0 {
            return Err(Error::Integrity("eigenvector vanishes on the identity class".into()));
        }
        let inv = f.inv(w[0]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
    }
    Ok(found)
}

/// The irreducible characters of the group behind `classes`.
pub fn character_table(classes: &ClassSet, seed: u64) -> Result<CharacterTable> {
    let r = classes.len();
    if r > MAX_TABLE_CLASSES {
        return Err(Error::CapExceeded {
            what: "class count for character tables",
            limit: MAX_TABLE_CLASSES as u128,
            actual: r as u128,
        });
    }
    let n = classes.group_order();
    let e = classes.exponent();
    let p = dixon_prime(n, e);
    let f = Fp::new(p);
    let sizes: Vec<u64> = classes.classes().iter().map(|c| c.size).collect();
    let inverse = classes.inverse_map();
    let vectors = eigenvectors(classes, f, seed)?;
    if vectors.len() != r {
        return Err(Error::Integrity(format!(
            "found {} characters for {r} classes",
            vectors.len()
        )));
    }
    let z_e = f.pow(primitive_root(p), (p - 1) / e);
    let degree_candidates: Vec<u64> = divisors(n as u128)
        .into_iter()
        .map(|d| d as u64)
        .filter(|&d| (d as u128) * (d as u128) <= n as u128)
        .collect();

    let mut rows = Vec::with_capacity(r);
    for w in vectors {
        let s = (0..r).fold(0u64, |acc, j| {
            let t = f.mul(f.mul(w[j], w[inverse[j]]), f.inv(f.reduce(sizes[j])));
            f.add(acc, t)
        });
        let target = f.mul(f.reduce(n), f.inv(s));
        let degree = *degree_candidates
            .iter()
            .find(|&&d| f.mul(d % p, d % p) == target)
            .ok_or_else(|| Error::Integrity("no admissible degree lifts d²".into()))?;
        let modp: Vec<u64> = (0..r)
            .map(|j| f.mul(f.mul(degree % p, w[j]), f.inv(f.reduce(sizes[j]))))
            .collect();
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let o = classes.classes()[k].order;
            let zeta = f.pow(z_e, e / o);
            let zeta_inv = f.inv(zeta);
            let o_inv = f.inv(f.reduce(o));
            let mut mults = Vec::with_capacity(o as usize);
            let mut step = 1u64;
            for _m in 0..o {
                // Σ_l χ(g^l) ζ^{−ml}, with step = ζ^{−m}.
                let mut acc = 0u64;
                let mut t = 1u64;
                for l in 0..o {
                    acc = f.add(acc, f.mul(modp[classes.power(k, l as i64)], t));
                    t = f.mul(t, step);
                }
                let mu = f.mul(acc, o_inv);
                if mu > degree {
                    return Err(Error::Integrity(format!(
                        "eigenvalue multiplicity {mu} exceeds degree {degree}"
                    )));
                }
                mults.push(mu as u32);
                step = f.mul(step, zeta_inv);
            }
            let value = Cyclotomic::new(mults);
            if value.total() != degree {
                return Err(Error::Integrity(
                    "eigenvalue multiplicities do not add up to the degree".into(),
                ));
            }
            values.push(value);
        }
        rows.push(Character::new(degree, values));
    }
    // Trivial character first: among equal degrees, larger multiplicities
    // of the eigenvalue 1 come first.
    rows.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| b.values.cmp(&a.values)));
    let table = CharacterTable::from_parts(classes, p, rows);
    table.check()?;
    Ok(table)
}
