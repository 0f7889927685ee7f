use crate::algebra::numtheory::{factor, is_prime};
use crate::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Fixed moduli, coefficients listed from the constant term upwards.
///
/// Each entry is the smallest monic primitive polynomial of its degree when
/// the coefficient list is read as a base-p integer with the constant term as
/// the least significant digit; [`Field::new`] falls back to the same search
/// for fields not listed here, so builds are reproducible either way.
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 1, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 1, 0, 0, 1]),
    (5, 2, &[2, 1, 1]),
    (7, 2, &[3, 1, 1]),
];

/// The finite field GF(p^k).
///
/// Elements are `u32` values whose base-p digits are the coefficients of the
/// residue polynomial (digit `i` is the coefficient of `x^i`). The residue of
/// `x` is a primitive element; for prime fields the modulus is `x - g` with
/// `g` the least primitive root, so the same statement holds.
#[derive(Debug, Clone)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for Field {}

fn digits(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(k as usize);
    for _ in 0..k {
        d.push(a % p);
        a /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Multiplicative-order tables for the residue of `x`, or `None` when `x`
/// is not primitive modulo `modulus`.
fn exp_table(p: u32, k: u32, modulus: &[u32]) -> Option<Vec<u32>> {
    let q = p.checked_pow(k)?;
    let mut table = Vec::with_capacity(q as usize - 1);
    // Residue of x: for k = 1 the modulus is x - g, so x ≡ g.
    let mut cur = vec![0u32; k as usize];
    cur[0] = 1;
    for i in 0..(q - 1) {
        let v = undigits(&cur, p);
        if i > 0 && v == 1 {
            return None;
        }
        table.push(v);
        // Multiply by x and reduce with the monic modulus.
        let top = cur[k as usize - 1];
        for j in (1..k as usize).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if k == 1 {
            cur[0] = 0;
        }
        for j in 0..k as usize {
            cur[j] = (cur[j] + p - (top * modulus[j]) % p) % p;
        }
    }
    (undigits(&cur, p) == 1).then_some(table)
}

/// Polynomial remainder over GF(p), coefficient lists low to high.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let c = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        let shift = r.len() - 1 - db;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (c as u64 * bi as u64 % p as u64) as u32) % p;
        }
        r.pop();
        while r.len() > 1 && *r.last().unwrap() == 0 {
            r.pop();
        }
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    crate::algebra::numtheory::powmod(a as u128, p as u128 - 2, p as u128) as u32
}

/// Trial search for a monic factor of degree `1..=k/2`.
fn has_small_factor(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len() as u32 - 1;
    for d in 1..=k / 2 {
        for c in 0..p.pow(d) {
            let mut f = digits(c, p, d);
            f.push(1);
            if poly_rem(modulus, &f, p).iter().all(|&x| x == 0) {
                return true;
            }
        }
    }
    false
}

impl Field {
    pub fn new(p: u32, k: u32) -> Result<Field> {
        if !is_prime(p as u128) {
            return Err(Error::NotPrime(p as u64));
        }
        if k == 0 {
            return Err(Error::OutOfRange("field degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if q > MAX_FIELD_ORDER {
            return Err(Error::CapExceeded {
                what: "field order",
                limit: MAX_FIELD_ORDER as u128,
                actual: q as u128,
            });
        }
        let (modulus, exp) = match MODULI.iter().find(|&&(pp, kk, _)| pp == p && kk == k) {
            Some(&(_, _, m)) => {
                let exp = exp_table(p, k, m).ok_or_else(|| {
                    Error::Integrity(format!("tabulated modulus for GF({p}^{k}) is not primitive"))
                })?;
                (m.to_vec(), exp)
            }
            None => Self::search_modulus(p, k),
        };
        if k > 1 && has_small_factor(&modulus, p) {
            return Err(Error::Integrity(format!(
                "modulus for GF({p}^{k}) is reducible"
            )));
        }
        let q = q as u32;
        let mut log = vec![0u32; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        Ok(Field {
            p,
            k,
            q,
            modulus,
            exp,
            log,
        })
    }

    /// The smallest monic primitive polynomial in base-p digit order; for
    /// prime fields, `x - g` with `g` the least primitive root.
    fn search_modulus(p: u32, k: u32) -> (Vec<u32>, Vec<u32>) {
        if k == 1 {
            for g in 1..p {
                let m = vec![(p - g) % p, 1];
                if let Some(exp) = exp_table(p, 1, &m) {
                    return (m, exp);
                }
            }
        }
        for c in 1..p.pow(k) {
            let mut m = digits(c, p, k);
            m.push(1);
            if let Some(exp) = exp_table(p, k, &m) {
                return (m, exp);
            }
        }
        unreachable!("every finite field has a primitive polynomial")
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the modulus, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The stored primitive element (the residue of `x`).
    pub fn generator(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut r, mut place) = (a, b, 0, 1);
        for _ in 0..self.k {
            r += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        r
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let (mut a, mut r, mut place) = (a, 0, 1);
        for _ in 0..self.k {
            r += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        r
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.q as u64 - 1);
        self.exp[e as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let n = self.q - 1;
        Ok(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.q as u64 - 1;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// `a ↦ a^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    /// Discrete logarithm to the base [`Field::generator`].
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = self.q as u64 - 1;
        Some(n / crate::algebra::numtheory::gcd(l as u128, n as u128) as u64)
    }

    /// Prime divisors of `q - 1`, used by primitivity checks.
    pub fn unit_group_primes(&self) -> Vec<u64> {
        factor(self.q as u128 - 1)
            .primes()
            .map(|p| p as u64)
            .collect()
    }
}
