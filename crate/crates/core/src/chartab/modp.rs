//! Linear algebra and polynomials over a prime field `F_p`, `p < 2³¹`.

use rand::Rng;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Fp {
        assert!(p < 1 << 31, "prime too large for u64 products");
        Fp { p }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn reduce(self, a: u64) -> u64 {
        a % self.p
    }
}

/// Row echelon basis of the span of `rows`; returns `(basis, pivots)` with
/// each basis row normalized to 1 at its pivot and zero at other pivots.
pub(crate) fn rref(f: Fp, rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut m = rows;
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(sel) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, sel);
        let inv = f.inv(m[rank][col]);
        for x in m[rank].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let c = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    m.truncate(rank);
    (m, pivots)
}

/// Basis of `{v : A v = 0}` for a square or rectangular matrix `a`.
pub(crate) fn nullspace(f: Fp, a: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let (r, pivots) = rref(f, a);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = f.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial `det(xI − A)` by Hessenberg reduction,
/// coefficients from the constant term up.
pub(crate) fn charpoly(f: Fp, a: &[Vec<u64>]) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = f.inv(h[m][m - 1]);
        for i in m + 1..n {
            let u = f.mul(h[i][m - 1], inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let t = f.mul(u, h[m][j]);
                h[i][j] = f.sub(h[i][j], t);
            }
            for row in h.iter_mut() {
                let t = f.mul(u, row[i]);
                row[m] = f.add(row[m], t);
            }
        }
    }
    // p_k(x) = (x − h_kk) p_{k−1} − Σ_{i<k} h_ik Π_{j=i+1}^{k} h_{j,j−1} p_{i−1}.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.sub(next[i], f.mul(h[k][k], c));
        }
        let mut t = 1u64;
        for i in (0..k).rev() {
            t = f.mul(t, h[i + 1][i]);
            let coef = f.mul(t, h[i][k]);
            if coef != 0 {
                for (j, &c) in polys[i].iter().enumerate() {
                    next[j] = f.sub(next[j], f.mul(coef, c));
                }
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn poly_rem(f: Fp, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = f.inv(m[dm]);
    while r.len() > dm && !(r.len() == 1 && r[0] == 0) {
        let c = f.mul(*r.last().unwrap(), lead_inv);
        let shift = r.len() - 1 - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, mi));
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn poly_mulmod(f: Fp, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = f.add(prod[i + j], f.mul(x, y));
        }
    }
    poly_rem(f, &prod, m)
}

fn poly_powmod(f: Fp, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = poly_rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(f, &r, &b, m);
        }
        b = poly_mulmod(f, &b, &b, m);
        e >>= 1;
    }
    r
}

fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn poly_gcd(f: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !is_zero(&b) {
        let r = poly_rem(f, &a, &b);
        a = b;
        b = r;
    }
    let inv = f.inv(*a.last().unwrap());
    a.iter().map(|&c| f.mul(c, inv)).collect()
}

fn poly_div_exact(f: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    let inv = f.inv(b[db]);
    for k in (0..q.len()).rev() {
        let c = f.mul(r[k + db], inv);
        q[k] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[k + i] = f.sub(r[k + i], f.mul(c, bi));
        }
    }
    q
}

/// Distinct roots in `F_p` of a nonzero polynomial, sorted.
pub(crate) fn roots<R: Rng>(f: Fp, poly: &[u64], rng: &mut R) -> Vec<u64> {
    let mut a = poly.to_vec();
    trim(&mut a);
    if a.len() <= 1 {
        return Vec::new();
    }
    // g = gcd(a, x^p − x) is the product of the distinct linear factors.
    let xp = poly_powmod(f, &[0, 1], f.p, &a);
    let mut xp_minus_x = xp;
    if xp_minus_x.len() < 2 {
        xp_minus_x.resize(2, 0);
    }
    xp_minus_x[1] = f.sub(xp_minus_x[1], 1);
    let g = poly_gcd(f, &a, &xp_minus_x);
    let mut out = Vec::new();
    split(f, g, rng, &mut out);
    out.sort_unstable();
    out
}

fn split<R: Rng>(f: Fp, g: Vec<u64>, rng: &mut R, out: &mut Vec<u64>) {
    let deg = g.len() - 1;
    if deg == 0 {
        return;
    }
    if deg == 1 {
        out.push(f.mul(f.neg(g[0]), f.inv(g[1])));
        return;
    }
    if f.p == 2 {
        for x in 0..2 {
            if eval(f, &g, x) == 0 {
                out.push(x);
            }
        }
        return;
    }
    loop {
        let shift = rng.random_range(0..f.p);
        let mut h = poly_powmod(f, &[shift, 1], (f.p - 1) / 2, &g);
        h[0] = f.sub(h[0], 1);
        let d = poly_gcd(f, &g, &h);
        let dd = d.len() - 1;
        if dd > 0 && dd < deg {
            let rest = poly_div_exact(f, &g, &d);
            split(f, d, rng, out);
            split(f, rest, rng, out);
            return;
        }
    }
}

pub(crate) fn eval(f: Fp, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Least primitive root modulo the prime `p`.
pub(crate) fn primitive_root(p: u64) -> u64 {
    let f = Fp::new(p);
    let primes: Vec<u128> = crate::algebra::factor((p - 1) as u128).primes().collect();
    (1..p)
        .find(|&g| primes.iter().all(|&q| f.pow(g, (p - 1) / q as u64) != 1))
        .expect("prime fields have primitive roots")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn matmul(f: Fp, a: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
        a.iter()
            .map(|row| row.iter().zip(v).fold(0, |s, (&x, &y)| f.add(s, f.mul(x, y))))
            .collect()
    }

    /// Determinant by Gaussian elimination, for the charpoly oracle.
    fn det(f: Fp, mut m: Vec<Vec<u64>>) -> u64 {
        let n = m.len();
        let mut d = 1;
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| m[r][c] != 0) else {
                return 0;
            };
            if r != c {
                m.swap(r, c);
                d = f.neg(d);
            }
            d = f.mul(d, m[c][c]);
            let inv = f.inv(m[c][c]);
            for r in c + 1..n {
                let k = f.mul(m[r][c], inv);
                for j in c..n {
                    let t = f.mul(k, m[c][j]);
                    m[r][j] = f.sub(m[r][j], t);
                }
            }
        }
        d
    }

    #[test]
    fn charpoly_matches_determinants() {
        let f = Fp::new(101);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..7 {
            for _ in 0..5 {
                let a: Vec<Vec<u64>> = (0..n)
                    .map(|_| (0..n).map(|_| rng.random_range(0..3)).collect())
                    .collect();
                let cp = charpoly(f, &a);
                assert_eq!(cp.len(), n + 1);
                for x in 0..20u64 {
                    let m: Vec<Vec<u64>> = (0..n)
                        .map(|i| {
                            (0..n)
                                .map(|j| {
                                    let d = if i == j { x } else { 0 };
                                    f.sub(d, a[i][j])
                                })
                                .collect()
                        })
                        .collect();
                    assert_eq!(eval(f, &cp, x), det(f, m));
                }
            }
        }
    }

    #[test]
    fn roots_of_products() {
        let f = Fp::new(541);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // (x − 3)²(x − 7)(x − 500)(x² + 1); −1 is a residue mod 541, so
        // x² + 1 has two more roots.
        let mut poly = vec![1u64];
        for r in [3u64, 3, 7, 500] {
            poly = poly_mulmod(f, &poly, &[f.neg(r), 1], &vec![0; 20].into_iter().chain([1]).collect::<Vec<_>>());
        }
        poly = poly_mulmod(f, &poly, &[1, 0, 1], &vec![0; 20].into_iter().chain([1]).collect::<Vec<_>>());
        let brute: Vec<u64> = (0..541).filter(|&x| eval(f, &poly, x) == 0).collect();
        assert_eq!(roots(f, &poly, &mut rng), brute);
        assert_eq!(brute.len(), 5);
    }

    #[test]
    fn nullspace_and_rref() {
        let f = Fp::new(7);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        let ns = nullspace(f, a.clone());
        assert_eq!(ns.len(), 1);
        assert!(matmul(f, &a, &ns[0]).iter().all(|&x| x == 0));
        let (basis, pivots) = rref(f, a);
        assert_eq!(basis.len(), 2);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(541), 2);
        assert_eq!(primitive_root(337), 10);
    }
}
