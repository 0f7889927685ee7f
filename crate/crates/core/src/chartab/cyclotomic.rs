//! Character values as eigenvalue multiplicities over roots of unity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{divisors, gcd};

/// `Σ_m μ_m ζ_n^m` with nonnegative integer multiplicities `μ_m`, where `n`
/// is the conductor. For a character value at `g`, `n` is the order of `g`
/// and `μ` counts the eigenvalues of the representing matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cyclotomic {
    mults: Vec<u32>,
}

impl Cyclotomic {
    /// Multiplicities indexed by exponent; the length is the conductor.
    pub fn new(mults: Vec<u32>) -> Cyclotomic {
        assert!(!mults.is_empty(), "conductor must be positive");
        Cyclotomic { mults }
    }

    /// The integer `d`, written as `d·ζ⁰`.
    pub fn integer(d: u32) -> Cyclotomic {
        Cyclotomic { mults: vec![d] }
    }

    pub fn conductor(&self) -> usize {
        self.mults.len()
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mults
    }

    /// `Σ μ_m`, the value at the identity of the underlying representation.
    pub fn total(&self) -> u64 {
        self.mults.iter().map(|&m| m as u64).sum()
    }

    /// Image under `ζ ↦ ζ^j`.
    pub fn galois(&self, j: i64) -> Cyclotomic {
        let n = self.conductor() as i64;
        let mut out = vec![0u32; n as usize];
        for (m, &mu) in self.mults.iter().enumerate() {
            out[(m as i64 * j).rem_euclid(n) as usize] += mu;
        }
        Cyclotomic { mults: out }
    }

    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        let n = self.conductor();
        (0..n).all(|m| self.mults[m] == self.mults[(n - m) % n])
    }

    pub fn is_rational(&self) -> bool {
        let n = self.conductor() as u64;
        (1..n.max(2))
            .filter(|&j| gcd(j as u128, n as u128) == 1)
            .all(|j| self.galois(j as i64) == *self)
    }

    /// True when the value is the integer `d` and all eigenvalues are 1.
    pub fn is_trivial_of_degree(&self, d: u64) -> bool {
        self.mults[0] as u64 == d && self.total() == d
    }

    /// The integer value of a rational value: exponents of order `k`
    /// contribute `μ(k)` each (Möbius), since primitive `k`-th roots sum to
    /// `μ(k)`.
    pub fn rational_value(&self) -> Option<i64> {
        if !self.is_rational() {
            return None;
        }
        let n = self.conductor() as u64;
        let mut total = 0i64;
        for k in divisors(n as u128) {
            let k = k as u64;
            let m = n / k;
            total += self.mults[m as usize % n as usize] as i64 * mobius(k);
        }
        Some(total)
    }

    /// Numerical value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor() as f64;
        self.mults.iter().enumerate().fold((0.0, 0.0), |(re, im), (m, &mu)| {
            let t = std::f64::consts::TAU * m as f64 / n;
            (re + mu as f64 * t.cos(), im + mu as f64 * t.sin())
        })
    }

    /// `self · conj(self)` in `Z[x]/(x^N − 1)` for a multiple `N` of the
    /// conductor, scaled by `weight` and added into `acc`.
    pub(crate) fn accumulate_norm(&self, weight: i128, acc: &mut [i128]) {
        let n = self.conductor();
        let big = acc.len();
        assert_eq!(big % n, 0, "conductor must divide the accumulator length");
        let scale = big / n;
        for (a, &ma) in self.mults.iter().enumerate() {
            if ma == 0 {
                continue;
            }
            for (b, &mb) in self.mults.iter().enumerate() {
                if mb != 0 {
                    let idx = ((a + n - b) % n) * scale;
                    acc[idx] += weight * ma as i128 * mb as i128;
                }
            }
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.rational_value() {
            return write!(f, "{v}");
        }
        let n = self.conductor();
        let mut first = true;
        for (m, &mu) in self.mults.iter().enumerate() {
            if mu == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if mu > 1 {
                write!(f, "{mu}*")?;
            }
            write!(f, "E({n})^{m}")?;
        }
        Ok(())
    }
}

pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// The cyclotomic polynomial `Φ_n`, coefficients from the constant term up.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i128> {
    // Φ_n = Π_{d | n} (x^d − 1)^{μ(n/d)}: multiply the numerator factors,
    // then divide exactly by the denominator factors.
    let mut num = vec![1i128];
    let mut den: Vec<usize> = Vec::new();
    for d in divisors(n as u128) {
        let d = d as usize;
        match mobius((n / d) as u64) {
            1 => {
                let mut next = vec![0i128; num.len() + d];
                for (i, &c) in num.iter().enumerate() {
                    next[i + d] += c;
                    next[i] -= c;
                }
                num = next;
            }
            -1 => den.push(d),
            _ => {}
        }
    }
    for d in den {
        // Divide by x^d − 1: q_i = q_{i−d} − a_i read from the bottom.
        let len = num.len() - d;
        let mut q = vec![0i128; len];
        for i in 0..len {
            let lower = if i >= d { q[i - d] } else { 0 };
            q[i] = lower - num[i];
        }
        num = q;
    }
    num
}

/// Remainder of `poly` modulo the monic polynomial `phi`, padded to
/// length `deg phi`.
pub fn reduce_mod(mut poly: Vec<i128>, phi: &[i128]) -> Vec<i128> {
    let deg = phi.len() - 1;
    let terms: Vec<(usize, i128)> = phi[..deg]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    for i in (deg..poly.len()).rev() {
        let c = poly[i];
        if c == 0 {
            continue;
        }
        poly[i] = 0;
        for &(t, a) in &terms {
            poly[i - deg + t] -= c * a;
        }
    }
    poly.resize(deg, 0);
    poly
}

/// The rational integer represented by `acc ∈ Z[x]/(x^N − 1)` under
/// `x ↦ ζ_N`, if it is one.
pub fn integer_at_root_of_unity(acc: Vec<i128>) -> Option<i128> {
    let n = acc.len();
    let phi = cyclotomic_polynomial(n);
    let r = reduce_mod(acc, &phi);
    r[1..].iter().all(|&c| c == 0).then_some(r[0])
}
