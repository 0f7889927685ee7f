use serde::{Deserialize, Serialize};

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// `a * b mod m` without overflow for any `m < 2^127`.
pub fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    let (a, b) = (a % m, b % m);
    if m <= u64::MAX as u128 {
        return a * b % m;
    }
    // Double-and-add; m < 2^127 keeps every intermediate below 2^128.
    let mut result = 0u128;
    let mut base = a;
    let mut exp = b;
    while exp > 0 {
        if exp & 1 == 1 {
            result = (result + base) % m;
        }
        base = (base << 1) % m;
        exp >>= 1;
    }
    result
}

pub fn powmod(base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u128;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(result, b, m);
        }
        b = mulmod(b, b, m);
        exp >>= 1;
    }
    result
}

const SMALL_PRIMES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Largest n for which the first thirteen primes form a proven deterministic
/// Miller–Rabin witness set (Sorenson & Webster).
const THIRTEEN_BASE_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

fn miller_rabin_round(n: u128, d: u128, s: u32, a: u128) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let mut x = powmod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mulmod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality test for `n < 2^127`.
///
/// Below 3.3·10^24 the witnesses {2, 3, …, 41} are unconditionally correct.
/// Above that bound every base `2 ≤ a ≤ 2·ln²(n)` is tried, which is
/// deterministic under the generalized Riemann hypothesis (Bach's bound).
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    if !SMALL_PRIMES
        .iter()
        .all(|&a| miller_rabin_round(n, d, s, a))
    {
        return false;
    }
    if n < THIRTEEN_BASE_LIMIT {
        return true;
    }
    let ln = (n as f64).ln();
    let bound = ((2.0 * ln * ln).ceil() as u128).min(n - 2);
    (42..=bound).all(|a| miller_rabin_round(n, d, s, a))
}

/// Returns `(p, k)` when `q = p^k` with `p` prime and `k ≥ 1`.
pub fn is_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factor(q as u128);
    if f.factors.len() == 1 {
        let (p, k) = f.factors[0];
        Some((p as u64, k))
    } else {
        None
    }
}

/// A factorization `n = ∏ pᵢ^eᵢ` with primes in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntFact {
    pub n: u128,
    pub factors: Vec<(u128, u32)>,
}

impl IntFact {
    pub fn product(&self) -> u128 {
        self.factors
            .iter()
            .fold(1u128, |acc, &(p, e)| acc * p.pow(e))
    }

    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn divisor_count(&self) -> u128 {
        self.factors.iter().map(|&(_, e)| e as u128 + 1).product()
    }
}

fn pollard_brent(n: u128, seed: u128) -> Option<u128> {
    let c = seed % (n - 1) + 1;
    let f = |x: u128| (mulmod(x, x, n) + c) % n;
    let mut y = seed % n;
    let mut r = 1u64;
    let mut q = 1u128;
    let mut g = 1u128;
    let mut x = y;
    let mut ys = y;
    const M: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..M.min(r - k) {
                y = f(y);
                q = mulmod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += M;
        }
        r *= 2;
        if r > 1 << 26 {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn split_into(n: u128, out: &mut Vec<u128>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    for seed in 2u128.. {
        if let Some(d) = pollard_brent(n, seed) {
            split_into(d, out);
            split_into(n / d, out);
            return;
        }
    }
}

/// Trial division by small primes, then Brent's variant of Pollard rho.
pub fn factor(n: u128) -> IntFact {
    assert!(n > 0, "factor(0) is undefined");
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2u128;
    while p < 10_000 && p * p <= m {
        while m.is_multiple_of(p) {
            primes.push(p);
            m /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split_into(m, &mut primes);
    primes.sort_unstable();
    let mut factors: Vec<(u128, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    IntFact { n, factors }
}

/// All positive divisors of `n`, sorted increasingly.
pub fn divisors(n: u128) -> Vec<u128> {
    let mut divs = vec![1u128];
    for (p, e) in factor(n).factors {
        let len = divs.len();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn euler_phi(n: u128) -> u128 {
    factor(n)
        .factors
        .iter()
        .fold(1, |acc, &(p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// Multiplicative order of `a` modulo `m`, or `None` when `gcd(a, m) ≠ 1`.
pub fn multiplicative_order(a: u128, m: u128) -> Option<u128> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let mut order = euler_phi(m);
    for (p, _) in factor(order).factors {
        while order.is_multiple_of(p) && powmod(a, order / p, m) == 1 {
            order /= p;
        }
    }
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_division(n: u128) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn primality_examples() {
        assert!(trial_division(547) && is_prime(547));
        assert!(trial_division(1093) && is_prime(1093));
        assert!(!is_prime(121));
        assert!(!is_prime(0) && !is_prime(1));
        // Strong pseudoprime to bases 2..37.
        assert!(!is_prime(3_825_123_056_546_413_051));
        // Mersenne prime 2^89 - 1 and 2^127 - 1 exercise the large-n path.
        assert!(is_prime((1u128 << 89) - 1));
        assert!(is_prime((1u128 << 127) - 1));
        assert!(!is_prime((1u128 << 101) - 1));
    }

    #[test]
    fn primality_matches_trial_division_below_20000() {
        for n in 0..20_000u128 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn factor_large_semiprime() {
        let p = 1_000_000_007u128;
        let q = 998_244_353u128;
        let f = factor(p * q * 12);
        assert_eq!(f.factors, vec![(2, 2), (3, 1), (q, 1), (p, 1)]);
        assert_eq!(f.product(), p * q * 12);
    }

    #[test]
    fn multiplicative_orders() {
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(3, 7), Some(6));
        assert_eq!(multiplicative_order(2, 4), None);
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(is_prime_power(81), Some((3, 4)));
        assert_eq!(is_prime_power(6), None);
        assert_eq!(is_prime_power(1), None);
    }

    proptest! {
        #[test]
        fn factorization_is_consistent(n in 1u64..5_000_000u64) {
            let f = factor(n as u128);
            prop_assert_eq!(f.product(), n as u128);
            for p in f.primes() {
                prop_assert!(is_prime(p));
            }
            let divs = divisors(n as u128);
            prop_assert_eq!(divs.len() as u128, f.divisor_count());
            prop_assert!(divs.windows(2).all(|w| w[0] < w[1]));
            for &a in divs.iter().take(8) {
                for &b in divs.iter().rev().take(8) {
                    prop_assert!(divs.binary_search(&gcd(a, b)).is_ok());
                }
            }
        }
    }
}
