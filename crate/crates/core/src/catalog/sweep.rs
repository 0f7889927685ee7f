//! A breadth sample of small groups, all of order at most [`SWEEP_MAX_ORDER`].
//!
//! The sample is generated rather than read from a table: abelian groups of
//! every invariant type, the affine groups `Z/m ⋊ U` for subgroups `U` of the
//! unit group, affine groups over GF(4), GF(8) and GF(9), dicyclic groups, a
//! few named groups and direct products of these.

use std::collections::BTreeSet;

use crate::algebra::gcd;
use crate::perm::{PermGroup, Permutation};
use crate::Result;

use super::linear::field_for;
use super::{build, parse};

pub const SWEEP_MAX_ORDER: u128 = 100;

/// One sweep member.
#[derive(Debug, Clone)]
pub struct SweepGroup {
    pub name: String,
    pub group: PermGroup,
}

fn invariant_types(max: u128) -> Vec<Vec<u32>> {
    // Invariant factors n1 | n2 | ... with every n >= 2.
    fn extend(prefix: &mut Vec<u32>, order: u128, max: u128, out: &mut Vec<Vec<u32>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        let last = prefix.last().copied();
        let mut next = last.unwrap_or(2);
        while order * next as u128 <= max {
            if last.is_none_or(|l| next % l == 0) {
                prefix.push(next);
                extend(prefix, order * next as u128, max, out);
                prefix.pop();
            }
            next += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max, &mut out);
    out
}

fn abelian(invariants: &[u32]) -> Result<PermGroup> {
    let mut g = PermGroup::cyclic(invariants[0] as usize)?;
    for &n in &invariants[1..] {
        g = g.direct_product(&PermGroup::cyclic(n as usize)?)?;
    }
    Ok(g)
}

fn abelian_name(invariants: &[u32]) -> String {
    invariants.iter().map(|n| format!("C{n}")).collect::<Vec<_>>().join(" x ")
}

/// Subgroups of `(Z/m)^*` generated by at most two elements, excluding the
/// trivial one.
fn unit_subgroups(m: u32) -> Vec<BTreeSet<u32>> {
    let units: Vec<u32> = (1..m).filter(|&u| gcd(u as u128, m as u128) == 1).collect();
    let close = |gens: &[u32]| {
        let mut set = BTreeSet::from([1u32]);
        let mut frontier = vec![1u32];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = x * g % m;
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    };
    let mut found = BTreeSet::new();
    for &a in &units {
        for &b in &units {
            if a <= b {
                let h = close(&[a, b]);
                if h.len() > 1 {
                    found.insert(h);
                }
            }
        }
    }
    found.into_iter().collect()
}

fn affine_mod(m: u32, units: &BTreeSet<u32>) -> Result<PermGroup> {
    let m = m as usize;
    let mut gens = vec![Permutation::from_images((0..m).map(|x| (x + 1) % m).collect())?];
    for &u in units {
        gens.push(Permutation::from_images((0..m).map(|x| x * u as usize % m).collect())?);
    }
    PermGroup::new(gens, m)
}

/// `x ↦ a x + b` over GF(q) with `a` in the subgroup of order `d`.
fn affine_field(q: u32, d: u32) -> Result<PermGroup> {
    let f = field_for(q)?;
    let n = q as usize;
    let mut gens = Vec::new();
    // Translations by a basis of the additive group.
    let p = f.characteristic();
    let mut b = 1;
    while b < q {
        gens.push(Permutation::from_images((0..q).map(|x| f.add(x, b) as usize).collect())?);
        b *= p;
    }
    if d > 1 {
        let a = f.pow(f.generator(), ((q - 1) / d) as u64);
        gens.push(Permutation::from_images((0..q).map(|x| f.mul(a, x) as usize).collect())?);
    }
    PermGroup::new(gens, n)
}

/// `Dic_n = <a, x | a^(2n), x^2 = a^n, x a x^-1 = a^-1>` in its regular action.
fn dicyclic(n: usize) -> Result<PermGroup> {
    let m = 2 * n;
    // Point a^i x^j is i + m*j.
    let a: Vec<usize> = (0..2 * m)
        .map(|p| if p < m { (p + 1) % m } else { m + (p - m + m - 1) % m })
        .collect();
    let x: Vec<usize> = (0..2 * m)
        .map(|p| if p < m { p + m } else { (p - m + n) % m })
        .collect();
    PermGroup::new(
        vec![Permutation::from_images(a)?, Permutation::from_images(x)?],
        2 * m,
    )
}

/// Builds the sweep. Groups come back in a fixed order.
pub fn small_group_sweep() -> Result<Vec<SweepGroup>> {
    let mut abel = Vec::new();
    for inv in invariant_types(SWEEP_MAX_ORDER) {
        abel.push(SweepGroup {
            name: abelian_name(&inv),
            group: abelian(&inv)?,
        });
    }

    let mut nonabelian = Vec::new();
    for m in 3..=50u32 {
        for h in unit_subgroups(m) {
            if m as u128 * h.len() as u128 > SWEEP_MAX_ORDER {
                continue;
            }
            let group = affine_mod(m, &h)?;
            // Skip the abelian ones; they are already covered.
            if group.derived_subgroup().is_trivial() {
                continue;
            }
            let units: Vec<String> = h.iter().filter(|&&u| u != 1).map(|u| u.to_string()).collect();
            nonabelian.push(SweepGroup {
                name: format!("C{m}:<{}>", units.join(",")),
                group,
            });
        }
    }
    for (q, d) in [(4, 3), (8, 7), (9, 2), (9, 4), (9, 8)] {
        nonabelian.push(SweepGroup {
            name: format!("AGL(1,{q})_{d}"),
            group: affine_field(q, d)?,
        });
    }
    for n in 2..=25 {
        nonabelian.push(SweepGroup {
            name: format!("Dic{n}"),
            group: dicyclic(n)?,
        });
    }
    for name in ["S4", "A5", "SL(2,3)", "C2 wr C3", "C2 wr S3", "C2 wr C4", "C3 wr C2", "C4 wr C2", "C5 wr C2", "S3 wr C2", "C3 wr C3"] {
        nonabelian.push(SweepGroup {
            name: name.to_string(),
            group: build(&parse(name)?)?.group,
        });
    }

    let mut out = abel.clone();
    let mut products = Vec::new();
    for g in &nonabelian {
        for a in &abel {
            if g.group.order() * a.group.order() <= SWEEP_MAX_ORDER {
                products.push(SweepGroup {
                    name: format!("{} x {}", g.name, a.name),
                    group: g.group.direct_product(&a.group)?,
                });
            }
        }
    }
    for (i, g) in nonabelian.iter().enumerate() {
        for h in &nonabelian[i..] {
            if g.group.order() * h.group.order() <= SWEEP_MAX_ORDER {
                products.push(SweepGroup {
                    name: format!("{} x {}", g.name, h.name),
                    group: g.group.direct_product(&h.group)?,
                });
            }
        }
    }
    out.extend(nonabelian);
    out.extend(products);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_types_count_abelian_groups() {
        // Number of abelian groups of order n, summed over 2 <= n <= 100.
        let expected: u32 = (2..=100u32)
            .map(|n| {
                crate::algebra::factor(n as u128)
                    .factors
                    .iter()
                    .map(|&(_, e)| partitions(e))
                    .product::<u32>()
            })
            .sum();
        assert_eq!(invariant_types(100).len() as u32, expected);
    }

    fn partitions(n: u32) -> u32 {
        fn count(n: u32, max: u32) -> u32 {
            if n == 0 {
                return 1;
            }
            (1..=max.min(n)).map(|k| count(n - k, k)).sum()
        }
        count(n, n)
    }

    #[test]
    fn dicyclic_groups() {
        let q8 = dicyclic(2).unwrap();
        assert_eq!(q8.order(), 8);
        // Q8 has a single involution, so every element of order 4 squares to it.
        let z = q8.generators()[0].pow(2);
        assert!(q8.generators().iter().all(|g| g.pow(2) == z));
        for n in 2..=25 {
            assert_eq!(dicyclic(n).unwrap().order(), 4 * n as u128);
        }
    }

    #[test]
    fn sweep_is_within_bounds() {
        let s = small_group_sweep().unwrap();
        assert!(s.len() > 300, "{}", s.len());
        for g in &s {
            assert!(g.group.order() <= SWEEP_MAX_ORDER, "{}", g.name);
            assert!(g.group.order() >= 2, "{}", g.name);
        }
        let f21 = s.iter().find(|g| g.name == "C7:<2,4>").unwrap();
        assert_eq!(f21.group.order(), 21);
        assert!(s.iter().any(|g| g.name == "A5"));
        assert_eq!(s.iter().find(|g| g.name == "AGL(1,9)_8").unwrap().group.order(), 72);
    }
}
