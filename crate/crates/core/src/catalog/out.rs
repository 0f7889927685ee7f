use crate::algebra::{gcd, is_prime_power};
use crate::{Error, Result};

use super::Descriptor;

/// `ν(q)`: the exponent with `q = p^ν`.
pub fn nu(q: u32) -> u32 {
    is_prime_power(q as u64).map_or(0, |(_, k)| k)
}

/// |Out(S)| for a simple group from the standard formula table.
pub fn out_order(d: &Descriptor) -> Result<u64> {
    let gcd = |a: u32, b: u32| gcd(a as u128, b as u128) as u64;
    let not_simple = || Error::Unsupported(format!("{d} is not a tabulated simple group"));
    Ok(match *d {
        Descriptor::Alternating(6) => 4,
        Descriptor::Alternating(n) if n >= 5 => 2,
        Descriptor::Psl { n: 2, q } if q >= 4 => gcd(2, q - 1) * nu(q) as u64,
        Descriptor::Psl { n: 3, q } => 2 * gcd(3, q - 1) * nu(q) as u64,
        // SL(n,q) = PSL(n,q) exactly when the centre is trivial.
        Descriptor::Sl { n, q } if gcd(n, q - 1) == 1 && (n, q) != (2, 2) && (n, q) != (2, 3) => {
            return out_order(&Descriptor::Psl { n, q })
        }
        Descriptor::Psu3(q) if q > 2 => 2 * gcd(3, q + 1) * nu(q) as u64,
        Descriptor::Suzuki(q) => nu(q) as u64,
        Descriptor::J1 => 1,
        _ => return Err(not_simple()),
    })
}

/// The coarse |Out(S)| bound used in the growth estimates for the family,
/// or `None` when no bound is recorded.
pub fn out_bound(d: &Descriptor) -> Option<u64> {
    match *d {
        Descriptor::Alternating(_) => Some(4),
        // Rank r = n - 1 linear and unitary groups: 2(r+1)ν(q), and also
        // 2(q+1)ν(q).
        Descriptor::Psl { n, q } | Descriptor::Sl { n, q } => {
            Some(2 * n.min(q + 1) as u64 * nu(q) as u64)
        }
        Descriptor::Psu3(q) => Some(2 * 3u32.min(q + 1) as u64 * nu(q) as u64),
        Descriptor::Suzuki(q) => Some(24 * nu(q) as u64),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse;

    fn out(s: &str) -> u64 {
        out_order(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn documented_values() {
        assert_eq!(out("A6"), 4);
        assert_eq!(out("PSL(2,8)"), 3);
        assert_eq!(out("Sz(8)"), 3);
        assert_eq!(out("A5"), 2);
        assert_eq!(out("A7"), 2);
        assert_eq!(out("PSL(2,4)"), 2);
        assert_eq!(out("PSL(2,9)"), 4);
        assert_eq!(out("SL(3,2)"), 2);
        assert_eq!(out("PSL(2,7)"), 2);
        assert_eq!(out("PSL(3,4)"), 12);
        assert_eq!(out("PSU(3,3)"), 2);
        assert_eq!(out("PSU(3,4)"), 4);
        assert_eq!(out("PSU(3,8)"), 18);
        assert_eq!(out("PSL(2,27)"), 6);
        assert!(out_order(&parse("S5").unwrap()).is_err());
        assert!(out_order(&parse("SL(2,5)").unwrap()).is_err());
        assert!(out_order(&parse("A4").unwrap()).is_err());
    }

    #[test]
    fn values_respect_coarse_bounds() {
        let mut names: Vec<String> = (5..=12).map(|n| format!("A{n}")).collect();
        for q in [4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 125, 243, 256, 729] {
            names.push(format!("PSL(2,{q})"));
        }
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 64] {
            names.push(format!("PSL(3,{q})"));
            names.push(format!("PSU(3,{q})"));
        }
        names.push("Sz(8)".into());
        for name in names {
            let Ok(d) = parse(&name) else { continue };
            let Ok(o) = out_order(&d) else { continue };
            assert!(o <= out_bound(&d).unwrap(), "{name}: {o}");
        }
    }
}
