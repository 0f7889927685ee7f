use crate::algebra::{gcd, is_prime_power, multiplicative_order};
use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

use super::linear::{frobenius_perm, linear_group, linear_points, psl_order, psu3_group, psu3_order, sl_order, unital, Linear};
use super::suzuki::{suzuki8, suzuki8_frobenius, SUZUKI_ORDER};
use super::Descriptor;

/// A built group, with the base group of an extension on the same points.
#[derive(Debug, Clone)]
pub struct Built {
    pub group: PermGroup,
    /// For `X.k`, the subgroup `X`; it is normal in `group`.
    pub normal: Option<PermGroup>,
}

/// Builds the permutation group named by a descriptor.
pub fn build(d: &Descriptor) -> Result<Built> {
    if let Descriptor::Extension(base, k) = d {
        let b = build_plain(base)?;
        let auto = automorphism(base, *k, &b)?.ok_or_else(|| {
            Error::Unsupported(format!("no cyclic extension of order {k} is defined for {base}"))
        })?;
        let mut g = b.clone();
        g.extend(auto);
        let g = PermGroup::new(g.generators().to_vec(), g.degree())?;
        if g.order() != b.order() * *k as u128 {
            return Err(Error::Unsupported(format!(
                "the automorphism chosen for {d} does not give an extension of order {k}"
            )));
        }
        return Ok(Built {
            group: g,
            normal: Some(b),
        });
    }
    Ok(Built {
        group: build_plain(d)?,
        normal: None,
    })
}

fn field_degree(q: u32) -> u32 {
    is_prime_power(q as u64).map_or(1, |(_, k)| k)
}

fn build_plain(d: &Descriptor) -> Result<PermGroup> {
    let g = match d {
        Descriptor::Alternating(n) => PermGroup::alternating(*n as usize)?,
        Descriptor::Symmetric(n) => PermGroup::symmetric(*n as usize)?,
        Descriptor::Cyclic(n) => PermGroup::cyclic(*n as usize)?,
        Descriptor::Dihedral(n) => dihedral(*n)?,
        Descriptor::Psl { n, q } => linear_group(Linear::Psl, *n, *q)?.0,
        Descriptor::Sl { n, q } => linear_group(Linear::Sl, *n, *q)?.0,
        Descriptor::Pgl { n, q } => linear_group(Linear::Pgl, *n, *q)?.0,
        Descriptor::Psu3(q) => psu3_group(*q)?.0,
        Descriptor::Suzuki(_) => suzuki8()?,
        Descriptor::J1 => {
            return Err(Error::Unavailable(
                "J1 needs generator data that is not bundled".into(),
            ))
        }
        Descriptor::Product(terms) => {
            let mut g = build(&terms[0])?.group;
            for t in &terms[1..] {
                g = g.direct_product(&build(t)?.group)?;
            }
            g
        }
        Descriptor::Wreath(a, b) => build(a)?.group.wreath(&build(b)?.group)?,
        Descriptor::Extension(..) => return build(d).map(|b| b.group),
    };
    if let Some(expected) = closed_form_order(d) {
        if g.order() != expected {
            return Err(Error::Integrity(format!(
                "{d} was built with order {} instead of {expected}",
                g.order()
            )));
        }
    }
    Ok(g)
}

/// `D n` has order `n`: the symmetries of an `n/2`-gon, with `D2 = C2` and
/// `D4` the Klein four-group in its regular action.
fn dihedral(n: u32) -> Result<PermGroup> {
    match n {
        2 => PermGroup::cyclic(2),
        4 => PermGroup::new(
            vec![
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]])?,
                Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?,
            ],
            4,
        ),
        _ => {
            let m = (n / 2) as usize;
            let rot = Permutation::from_images((0..m).map(|i| (i + 1) % m).collect())?;
            let refl = Permutation::from_images((0..m).map(|i| (m - i) % m).collect())?;
            PermGroup::new(vec![rot, refl], m)
        }
    }
}

/// The order of a family member from its closed formula.
pub fn closed_form_order(d: &Descriptor) -> Option<u128> {
    let fact = |n: u32| (1..=n as u128).product::<u128>();
    Some(match d {
        Descriptor::Alternating(n) => (fact(*n) / 2).max(1),
        Descriptor::Symmetric(n) => fact(*n),
        Descriptor::Cyclic(n) | Descriptor::Dihedral(n) => *n as u128,
        Descriptor::Psl { n, q } => psl_order(*n, *q),
        Descriptor::Sl { n, q } => sl_order(*n, *q),
        Descriptor::Pgl { n, q } => sl_order(*n, *q),
        Descriptor::Psu3(q) => psu3_order(*q),
        Descriptor::Suzuki(_) => SUZUKI_ORDER,
        Descriptor::J1 => 175_560,
        Descriptor::Product(terms) => terms.iter().map(closed_form_order).product::<Option<u128>>()?,
        Descriptor::Extension(base, k) => closed_form_order(base)? * *k as u128,
        Descriptor::Wreath(..) => return None,
    })
}

/// A permutation of the points of `built` (the group of `d`) inducing an
/// outer automorphism of order `k`; `None` when the catalog defines none.
fn automorphism(d: &Descriptor, k: u32, built: &PermGroup) -> Result<Option<Permutation>> {
    let degree = built.degree();
    Ok(match d {
        Descriptor::Alternating(n) if k == 2 && *n >= 2 => {
            Some(Permutation::from_cycles(degree, &[&[0, 1]])?)
        }
        Descriptor::Psl { n, q } | Descriptor::Pgl { n, q } | Descriptor::Sl { n, q } => {
            let nu = field_degree(*q);
            if !nu.is_multiple_of(k) {
                return Ok(None);
            }
            let kind = match d {
                Descriptor::Sl { .. } => Linear::Sl,
                _ => Linear::Psl,
            };
            let pts = linear_points(&kind, *n, *q)?;
            Some(frobenius_perm(&pts, nu / k)?)
        }
        Descriptor::Psu3(q) => {
            let nu = 2 * field_degree(*q);
            if !nu.is_multiple_of(k) {
                return Ok(None);
            }
            Some(frobenius_perm(&unital(*q)?, nu / k)?)
        }
        Descriptor::Suzuki(_) if k == 3 => Some(suzuki8_frobenius()?),
        Descriptor::Cyclic(m) => {
            let m = *m as u128;
            (2..m)
                .find(|&r| gcd(r, m) == 1 && multiplicative_order(r, m) == Some(k as u128))
                .map(|r| {
                    Permutation::from_images((0..m).map(|i| (i * r % m) as usize).collect())
                })
                .transpose()?
        }
        Descriptor::Product(terms) => {
            let mut images: Vec<usize> = Vec::with_capacity(degree);
            let mut any = false;
            for t in terms {
                let part = build(t)?.group;
                let offset = images.len();
                match automorphism(t, k, &part)? {
                    Some(a) => {
                        any = true;
                        images.extend(a.images().iter().map(|&x| x as usize + offset));
                    }
                    None => images.extend(offset..offset + part.degree()),
                }
            }
            if any {
                Some(Permutation::from_images(images)?)
            } else {
                None
            }
        }
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse;

    fn order(s: &str) -> u128 {
        build(&parse(s).unwrap()).unwrap().group.order()
    }

    #[test]
    fn documented_builds() {
        let sl32 = build(&parse("SL(3,2)").unwrap()).unwrap().group;
        assert_eq!((sl32.degree(), sl32.order()), (7, 168));
        let sz = build(&parse("Sz(8)").unwrap()).unwrap().group;
        assert_eq!((sz.degree(), sz.order()), (65, 29120));
        let u33 = build(&parse("PSU(3,3)").unwrap()).unwrap().group;
        assert_eq!((u33.degree(), u33.order()), (28, 6048));
    }

    #[test]
    fn extensions() {
        assert_eq!(order("PSL(2,8).3"), 1512);
        assert_eq!(order("Sz(8).3"), 87360);
        assert_eq!(order("A5.2"), 120);
        assert_eq!(order("A6.2"), 720);
        assert_eq!(order("PSL(2,27).3"), 29484);
        assert_eq!(order("C7.3"), 21);
        assert_eq!(order("(PSL(2,8) x C7).3"), 504 * 7 * 3);
        assert_eq!(order("PSL(2,8).3 x C7"), 504 * 7 * 3);
        assert!(build(&parse("S5.2").unwrap()).is_err());
        assert!(build(&parse("PSL(2,7).2").unwrap()).is_err());
        assert!(build(&parse("C5.3").unwrap()).is_err());
        let built = build(&parse("PSL(2,8).3").unwrap()).unwrap();
        let normal = built.normal.unwrap();
        assert_eq!(normal.order(), 504);
        assert!(normal.is_normal_in(&built.group));
    }

    #[test]
    fn products_wreaths_and_small_families() {
        assert_eq!(order("A5 x C7"), 420);
        assert_eq!(order("A5 wr C2"), 7200);
        assert_eq!(order("SL(3,2) wr C2"), 168 * 168 * 2);
        assert_eq!(order("D10"), 10);
        assert_eq!(order("D4"), 4);
        assert_eq!(order("D2"), 2);
        assert_eq!(order("C1"), 1);
        assert_eq!(order("SL(2,3)"), 24);
        assert_eq!(order("PGL(2,9)"), 720);
        assert!(matches!(build(&parse("J1").unwrap()), Err(Error::Unavailable(_))));
        let d4 = build(&parse("D4").unwrap()).unwrap().group;
        assert!(d4.generators().iter().all(|g| g.order() == 2));
    }
}
