//! Linear algebra over a prime field `F_p`, `p < 2^32`.

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
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

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p = 1 (mod exponent)` with `p > 2 sqrt(order)`.
pub(crate) fn choose_prime(exponent: u64, order: u64) -> u64 {
    let mut p = exponent + 1;
    loop {
        if p * p > 4 * order && is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

/// A primitive `e`-th root of unity mod `p`, derived from the least
/// primitive root so the choice is deterministic.
pub(crate) fn root_of_unity(f: Fp, e: u64) -> u64 {
    let p = f.p;
    debug_assert_eq!((p - 1) % e, 0);
    let factors = prime_factors(p - 1);
    let g = (2..p)
        .find(|&g| factors.iter().all(|&q| f.pow(g, (p - 1) / q) != 1))
        .unwrap_or(1);
    f.pow(g, (p - 1) / e)
}

/// Characteristic polynomial (monic, low degree first) via reduction to
/// upper Hessenberg form.
pub(crate) fn charpoly(f: Fp, mut h: Vec<Vec<u64>>) -> Vec<u64> {
    let n = h.len();
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
        let t_inv = f.inv(h[m][m - 1]);
        for i in m + 1..n {
            let u = f.mul(h[i][m - 1], t_inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let v = f.mul(u, h[m][j]);
                h[i][j] = f.sub(h[i][j], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(u, row[i]);
                row[m] = f.add(row[m], v);
            }
        }
    }
    // 1-based accessor
    let at = |a: usize, b: usize| h[a - 1][b - 1];
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut pm = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            pm[k + 1] = f.add(pm[k + 1], c);
            pm[k] = f.sub(pm[k], f.mul(at(m, m), c));
        }
        let mut t = 1u64;
        for i in 1..m {
            t = f.mul(t, at(m - i + 1, m - i));
            let coef = f.mul(at(m - i, m), t);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                pm[k] = f.sub(pm[k], f.mul(coef, c));
            }
        }
        polys.push(pm);
    }
    polys.pop().expect("nonempty")
}

pub(crate) fn eval(f: Fp, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Divides by `(x - root)`, returning the quotient.
pub(crate) fn deflate(f: Fp, poly: &[u64], root: u64) -> Vec<u64> {
    let n = poly.len() - 1;
    let mut q = vec![0u64; n];
    let mut carry = 0u64;
    for k in (0..n).rev() {
        carry = f.add(poly[k + 1], f.mul(carry, root));
        q[k] = carry;
    }
    q
}

/// Roots of `poly` in `F_p` with multiplicities, in increasing order.
pub(crate) fn roots(f: Fp, poly: &[u64]) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    let deg = poly.len() - 1;
    let mut found = 0;
    for x in 0..f.p {
        if found == deg {
            break;
        }
        if eval(f, poly, x) == 0 {
            let mut q = poly.to_vec();
            let mut mult = 0;
            while q.len() > 1 && eval(f, &q, x) == 0 {
                q = deflate(f, &q, x);
                mult += 1;
            }
            found += mult;
            out.push((x, mult));
        }
    }
    out
}

pub(crate) fn mat_vec(f: Fp, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| (acc + a * b) % f.p)
        })
        .collect()
}

/// Basis of the null space of a square or rectangular matrix.
pub(crate) fn nullspace(f: Fp, mut m: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(i) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(i, r);
        let inv = f.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let u = m[i][c];
                for j in 0..cols {
                    let v = f.mul(u, m[r][j]);
                    m[i][j] = f.sub(m[i][j], v);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = f.sub(0, m[i][free]);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        // exponent 4, order 8: p = 1 mod 4 and p^2 > 32
        assert_eq!(choose_prime(4, 8), 13);
        assert_eq!(choose_prime(60, 120), 61);
        let f = Fp { p: 13 };
        let z = root_of_unity(f, 4);
        assert_eq!(f.pow(z, 4), 1);
        assert_ne!(f.pow(z, 2), 1);
    }

    #[test]
    fn charpoly_and_roots() {
        let f = Fp { p: 101 };
        // companion-like matrix with eigenvalues 2, 3, 3
        let m = vec![vec![2, 5, 7], vec![0, 3, 1], vec![0, 0, 3]];
        let cp = charpoly(f, m.clone());
        assert_eq!(cp.len(), 4);
        assert_eq!(roots(f, &cp), vec![(2, 1), (3, 2)]);
        // a non-triangular similar matrix has the same polynomial
        let m2 = vec![vec![1, 2, 0], vec![3, 4, 5], vec![6, 7, 8]];
        let cp2 = charpoly(f, m2.clone());
        // trace = 13, det = 1*(32-35) - 2*(24-30) = -3 + 12 = 9
        assert_eq!(cp2[3], 1);
        assert_eq!(cp2[2], 101 - 13);
        assert_eq!(cp2[0], 101 - 9);
    }

    #[test]
    fn nullspace_basis() {
        let f = Fp { p: 7 };
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(f, m.clone());
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(mat_vec(f, &m, &v).iter().all(|&x| x == 0));
        }
    }
}
