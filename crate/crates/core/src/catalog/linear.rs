//! Classical groups as permutation groups on points of a vector space.

use std::collections::HashMap;

use crate::algebra::{gcd, Field};
use crate::perm::{PermGroup, Permutation, MAX_DEGREE};
use crate::{Error, Result};

pub(crate) type Matrix = Vec<Vec<u32>>;

/// Points of `F_q^n` (all nonzero vectors, or normalized projective
/// representatives) acted on from the right by matrices.
pub(crate) struct PointSet {
    pub field: Field,
    pub n: usize,
    projective: bool,
    points: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl PointSet {
    fn from_points(field: Field, n: usize, projective: bool, points: Vec<Vec<u32>>) -> Result<PointSet> {
        if points.len() > MAX_DEGREE {
            return Err(Error::CapExceeded {
                what: "permutation degree",
                limit: MAX_DEGREE as u128,
                actual: points.len() as u128,
            });
        }
        let index = points.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        Ok(PointSet {
            field,
            n,
            projective,
            points,
            index,
        })
    }

    fn all_vectors(field: &Field, n: usize) -> impl Iterator<Item = Vec<u32>> + '_ {
        let q = field.order() as u64;
        (1..q.pow(n as u32)).map(move |mut c| {
            let mut v = Vec::with_capacity(n);
            for _ in 0..n {
                v.push((c % q) as u32);
                c /= q;
            }
            v
        })
    }

    /// Projective points of `PG(n−1, q)`.
    pub fn projective(field: Field, n: usize) -> Result<PointSet> {
        let pts: Vec<Vec<u32>> = Self::all_vectors(&field, n)
            .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
            .collect();
        Self::from_points(field, n, true, pts)
    }

    /// Nonzero vectors of `F_q^n`.
    pub fn vectors(field: Field, n: usize) -> Result<PointSet> {
        let q = field.order() as u128;
        let count = q.pow(n as u32) - 1;
        if count > MAX_DEGREE as u128 {
            return Err(Error::CapExceeded {
                what: "permutation degree",
                limit: MAX_DEGREE as u128,
                actual: count,
            });
        }
        let pts: Vec<Vec<u32>> = Self::all_vectors(&field, n).collect();
        Self::from_points(field, n, false, pts)
    }

    /// Projective points satisfying `pred`.
    pub fn projective_filtered(field: Field, n: usize, pred: impl Fn(&[u32]) -> bool) -> Result<PointSet> {
        let pts: Vec<Vec<u32>> = Self::all_vectors(&field, n)
            .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1) && pred(v))
            .collect();
        Self::from_points(field, n, true, pts)
    }

    pub fn degree(&self) -> usize {
        self.points.len()
    }

    fn normalize(&self, mut v: Vec<u32>) -> Vec<u32> {
        if self.projective {
            if let Some(&lead) = v.iter().find(|&&x| x != 0) {
                let inv = self.field.inv(lead).expect("nonzero");
                for x in v.iter_mut() {
                    *x = self.field.mul(*x, inv);
                }
            }
        }
        v
    }

    fn lookup(&self, v: Vec<u32>) -> Result<usize> {
        let v = self.normalize(v);
        self.index
            .get(&v)
            .copied()
            .ok_or_else(|| Error::Integrity("map does not preserve the point set".into()))
    }

    /// The permutation `v ↦ vM`.
    pub fn matrix_perm(&self, m: &Matrix) -> Result<Permutation> {
        let f = &self.field;
        let images = self
            .points
            .iter()
            .map(|v| {
                let w: Vec<u32> = (0..self.n)
                    .map(|j| (0..self.n).fold(0, |acc, i| f.add(acc, f.mul(v[i], m[i][j]))))
                    .collect();
                self.lookup(w)
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    /// The permutation induced by applying `map` to every coordinate.
    pub fn coordinate_perm(&self, map: impl Fn(u32) -> u32) -> Result<Permutation> {
        let images = self
            .points
            .iter()
            .map(|v| self.lookup(v.iter().map(|&x| map(x)).collect()))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

pub(crate) fn field_for(q: u32) -> Result<Field> {
    let (p, k) = crate::algebra::is_prime_power(q as u64).ok_or(Error::NotPrimePower(q as u64))?;
    Field::new(p as u32, k)
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect()
}

/// Elementary transvections `I + tE_ij`, `t` running over an additive basis.
fn transvections(field: &Field, n: usize) -> Vec<Matrix> {
    let p = field.characteristic();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for e in 0..field.degree() {
                let mut m = identity(n);
                m[i][j] = p.pow(e);
                out.push(m);
            }
        }
    }
    out
}

/// Builds a group from candidate generators, keeping only those that
/// enlarge the group generated so far.
pub(crate) fn reduced_group(candidates: Vec<Permutation>, degree: usize) -> Result<PermGroup> {
    let mut g = PermGroup::new(Vec::new(), degree)?;
    for c in candidates {
        if !c.is_identity() {
            g.extend(c);
        }
    }
    PermGroup::new(g.generators().to_vec(), degree)
}

pub(crate) fn sl_order(n: u32, q: u32) -> u128 {
    let q = q as u128;
    let mut order = q.pow(n * (n - 1) / 2);
    for i in 2..=n {
        order *= q.pow(i) - 1;
    }
    order
}

pub(crate) fn psl_order(n: u32, q: u32) -> u128 {
    sl_order(n, q) / gcd(n as u128, q as u128 - 1)
}

pub(crate) fn psu3_order(q: u32) -> u128 {
    let q = q as u128;
    q.pow(3) * (q.pow(3) + 1) * (q * q - 1) / gcd(3, q + 1)
}

pub(crate) enum Linear {
    Psl,
    Sl,
    Pgl,
}

pub(crate) fn linear_points(kind: &Linear, n: u32, q: u32) -> Result<PointSet> {
    let field = field_for(q)?;
    match kind {
        Linear::Sl if gcd(n as u128, q as u128 - 1) > 1 => PointSet::vectors(field, n as usize),
        _ => PointSet::projective(field, n as usize),
    }
}

pub(crate) fn linear_group(kind: Linear, n: u32, q: u32) -> Result<(PermGroup, PointSet)> {
    let pts = linear_points(&kind, n, q)?;
    let mut gens = transvections(&pts.field, n as usize)
        .iter()
        .map(|m| pts.matrix_perm(m))
        .collect::<Result<Vec<_>>>()?;
    if let Linear::Pgl = kind {
        let mut d = identity(n as usize);
        d[0][0] = pts.field.generator();
        gens.push(pts.matrix_perm(&d)?);
    }
    let g = reduced_group(gens, pts.degree())?;
    Ok((g, pts))
}

/// Points of the Hermitian unital `x₁ȳ₃ + x₂ȳ₂ + x₃ȳ₁ = 0` over `F_{q²}`.
pub(crate) fn unital(q: u32) -> Result<PointSet> {
    let field = field_for(q * q)?;
    let f = field.clone();
    PointSet::projective_filtered(field, 3, move |v| hermitian(&f, q, v, v) == 0)
}

fn hermitian(f: &Field, q: u32, x: &[u32], y: &[u32]) -> u32 {
    let bar = |a: u32| f.pow(a, q as u64);
    let t1 = f.mul(x[0], bar(y[2]));
    let t2 = f.mul(x[1], bar(y[1]));
    let t3 = f.mul(x[2], bar(y[0]));
    f.add(f.add(t1, t2), t3)
}

/// `M J M̄ᵀ = J` for the antidiagonal Gram matrix `J`.
fn preserves_form(f: &Field, q: u32, m: &Matrix) -> bool {
    // Row i of M paired with row j of M must equal J_ij.
    (0..3).all(|i| {
        (0..3).all(|j| {
            let expect = u32::from(i + j == 2);
            hermitian(f, q, &m[i], &m[j]) == expect
        })
    })
}

/// `PSU(3, q)` on the `q³ + 1` isotropic points, generated by the
/// unitriangular matrices preserving the form.
pub(crate) fn psu3_group(q: u32) -> Result<(PermGroup, PointSet)> {
    let pts = unital(q)?;
    let f = pts.field.clone();
    let qq = f.order();
    let mut gens = Vec::new();
    for a in 0..qq {
        for b in 0..qq {
            for c in 0..qq {
                let upper = vec![vec![1, a, b], vec![0, 1, c], vec![0, 0, 1]];
                if preserves_form(&f, q, &upper) {
                    gens.push(pts.matrix_perm(&upper)?);
                    let lower = vec![vec![1, 0, 0], vec![a, 1, 0], vec![b, c, 1]];
                    gens.push(pts.matrix_perm(&lower)?);
                }
            }
        }
    }
    let g = reduced_group(gens, pts.degree())?;
    Ok((g, pts))
}

/// `x ↦ x^{p^e}` on coordinates.
pub(crate) fn frobenius_perm(pts: &PointSet, e: u32) -> Result<Permutation> {
    let f = pts.field.clone();
    let power = (f.characteristic() as u64).pow(e);
    pts.coordinate_perm(|x| f.pow(x, power))
}
