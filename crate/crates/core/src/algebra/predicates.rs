//! Integer facts behind the classification of simple groups with few real
//! element orders.

use crate::algebra::numtheory::is_prime;
use crate::{Error, Result};

/// Largest exponent accepted by [`lemma22_case3_scan`]; `3^80 < 2^127`.
pub const TERNARY_SCAN_MAX: u32 = 80;

/// Largest `2f + 1` accepted by [`suzuki_factor_check`].
pub const SUZUKI_MAX_EXPONENT: u32 = 60;

/// Odd primes `7 ≤ f ≤ f_max` for which `(3^f + 1)/4 = r` and
/// `(3^f - 1)/2 = s` are distinct odd primes.
///
/// These are the only candidates `q = 3^f` for `PSL(2, q)` to have exactly
/// five real element orders beyond the small exceptions.
pub fn lemma22_case3_scan(f_max: u32) -> Result<Vec<u32>> {
    if f_max > TERNARY_SCAN_MAX {
        return Err(Error::OutOfRange(format!(
            "f_max = {f_max} exceeds {TERNARY_SCAN_MAX}"
        )));
    }
    let mut found = Vec::new();
    for f in 7..=f_max {
        if f % 2 == 0 || !is_prime(f as u128) {
            continue;
        }
        let q = 3u128.pow(f);
        // q ≡ 3 (mod 4) for odd f, so 4 | q + 1.
        let r = (q + 1) / 4;
        let s = (q - 1) / 2;
        if r % 2 == 1 && s % 2 == 1 && r != s && is_prime(r) && is_prime(s) {
            found.push(f);
        }
    }
    Ok(found)
}

/// Checks `4^(2f+1) + 1 = (2^(2f+1) + 2^(f+1) + 1)(2^(2f+1) - 2^(f+1) + 1)`
/// and that 5 divides the left-hand side.
pub fn suzuki_factor_check(f: u32) -> Result<bool> {
    if f == 0 || 2 * f + 1 > SUZUKI_MAX_EXPONENT {
        return Err(Error::OutOfRange(format!(
            "suzuki_factor_check needs 1 <= f and 2f+1 <= {SUZUKI_MAX_EXPONENT}, got f = {f}"
        )));
    }
    let m = 2 * f + 1;
    let lhs = 4u128.pow(m) + 1;
    let a = 1u128 << m;
    let b = 1u128 << (f + 1);
    let rhs = (a + b + 1) * (a - b + 1);
    Ok(lhs == rhs && lhs.is_multiple_of(5))
}

/// Whether `(3^f - 3)/(8f) > 1`, compared exactly as `3^f - 3 > 8f`.
pub fn odd_prime_bound_exceeds_one(f: u32) -> Result<bool> {
    if f == 0 || f > TERNARY_SCAN_MAX {
        return Err(Error::OutOfRange(format!("f = {f}")));
    }
    Ok(3u128.pow(f) - 3 > 8 * f as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::factor;

    #[test]
    fn scan_examples() {
        assert_eq!(lemma22_case3_scan(7).unwrap(), vec![7]);
        assert!(lemma22_case3_scan(5).unwrap().is_empty());
        assert!(lemma22_case3_scan(3).unwrap().is_empty());
        assert!(lemma22_case3_scan(81).is_err());
    }

    #[test]
    fn scan_oracles() {
        // 3^7 + 1 = 4·547 and 3^7 - 1 = 2·1093.
        assert_eq!(3u128.pow(7) + 1, 4 * 547);
        assert_eq!(3u128.pow(7) - 1, 2 * 1093);
        // f = 5 fails: 3^5 - 1 = 242 = 2·11².
        assert_eq!(factor(242).factors, vec![(2, 1), (11, 2)]);
        // f = 3 would pass the primality conditions; only the f ≥ 7 filter drops it.
        assert_eq!(factor(7).factors, vec![(7, 1)]);
        assert_eq!(factor(13).factors, vec![(13, 1)]);
    }

    #[test]
    fn scan_outputs_only_odd_primes() {
        for f in lemma22_case3_scan(TERNARY_SCAN_MAX).unwrap() {
            assert!(f % 2 == 1 && is_prime(f as u128) && f >= 7);
        }
    }

    #[test]
    fn suzuki_identity_holds_in_range() {
        // f = 1: 65 = 13·5.
        assert_eq!(4u128.pow(3) + 1, 13 * 5);
        for f in 1..=29 {
            assert!(suzuki_factor_check(f).unwrap(), "f = {f}");
        }
        assert!(suzuki_factor_check(30).is_err());
        assert!(suzuki_factor_check(0).is_err());
    }

    #[test]
    fn ternary_bound() {
        for f in [7, 11, 13] {
            assert!(odd_prime_bound_exceeds_one(f).unwrap());
        }
        assert!(!odd_prime_bound_exceeds_one(2).unwrap());
    }
}
