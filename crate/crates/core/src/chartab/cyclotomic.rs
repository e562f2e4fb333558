//! Exact arithmetic in cyclotomic fields `Q(zeta_e)`.
//!
//! A value is stored in the power basis `1, z, .., z^(phi(e)-1)` of its
//! conductor `e`, i.e. reduced modulo the cyclotomic polynomial. Values of
//! different conductors are compared and combined in `Q(zeta_lcm)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::{gcd, lcm};
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

#[derive(Debug)]
pub(crate) struct Field {
    pub e: usize,
    pub phi: usize,
    /// Non-zero `(degree, coefficient)` terms of the monic `Phi_e` below
    /// its leading term.
    tail: Vec<(usize, i64)>,
    /// `e / p` for the smallest prime `p` dividing `e`.
    block: usize,
}

impl Field {
    fn new(e: usize) -> Self {
        let poly = cyclotomic_polynomial(e);
        let phi = poly.len() - 1;
        let tail = poly[..phi]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (j, c))
            .collect();
        let p = (2..=e).find(|p| e % p == 0).unwrap_or(1);
        Field {
            e,
            phi,
            tail,
            block: e / p,
        }
    }

    /// Reduces a dense exponent vector (length `e`) in place and returns
    /// the first `phi` entries.
    fn reduce<T>(&self, mut v: Vec<T>) -> Vec<T>
    where
        T: Copy + Zero + PartialEq + Sub<Output = T> + Mul<Output = T> + From<i64>,
    {
        debug_assert_eq!(v.len(), self.e);
        // Phi_e divides the sparse 1 + y + .. + y^(p-1) with y = x^(e/p);
        // reducing by that first leaves few steps for the dense Phi_e
        let b = self.block;
        let top = if self.e > 1 { self.e - b } else { self.e };
        for k in (top..self.e).rev() {
            let c = v[k];
            if c != T::zero() {
                for j in 0..self.e / b.max(1) - 1 {
                    v[k - top + j * b] = v[k - top + j * b] - c;
                }
                v[k] = T::zero();
            }
        }
        for k in (self.phi..top.max(self.phi)).rev() {
            let c = v[k];
            if c == T::zero() {
                continue;
            }
            let shift = k - self.phi;
            for &(j, p) in &self.tail {
                v[shift + j] = v[shift + j] - c * T::from(p);
            }
            v[k] = T::zero();
        }
        v.truncate(self.phi);
        v
    }
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `Phi_n(x) = prod_{d | n} (x^d - 1)^mu(n/d)`, low degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    assert!(n >= 1);
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let mut num: Vec<i64> = vec![1];
    let mut dens: Vec<usize> = Vec::new();
    for &d in &divisors {
        match mobius(n / d) {
            1 => {
                // multiply by x^d - 1
                let mut out = vec![0i64; num.len() + d];
                for (i, &c) in num.iter().enumerate() {
                    out[i + d] += c;
                    out[i] -= c;
                }
                num = out;
            }
            -1 => dens.push(d),
            _ => {}
        }
    }
    for d in dens {
        // exact division by x^d - 1
        let deg = num.len() - 1;
        let mut q = vec![0i64; deg - d + 1];
        let mut rem = num.clone();
        for k in (d..=deg).rev() {
            let c = rem[k];
            q[k - d] = c;
            rem[k] -= c;
            rem[k - d] += c;
        }
        debug_assert!(rem.iter().all(|&c| c == 0));
        num = q;
    }
    num
}

pub(crate) fn field(e: usize) -> Arc<Field> {
    static FIELDS: OnceLock<Mutex<HashMap<usize, Arc<Field>>>> = OnceLock::new();
    let cache = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().expect("field cache").get(&e) {
        return f.clone();
    }
    let f = Arc::new(Field::new(e));
    cache
        .lock()
        .expect("field cache")
        .entry(e)
        .or_insert(f)
        .clone()
}

#[derive(Clone)]
pub struct Cyclotomic {
    conductor: usize,
    coeffs: Vec<Rational64>,
}

impl Cyclotomic {
    /// Builds `sum_k dense[k] z_e^k`; exponents are taken modulo `e`.
    pub fn from_exponents(conductor: usize, dense: &[Rational64]) -> Self {
        assert!(conductor >= 1);
        let mut v = vec![Rational64::zero(); conductor];
        for (k, c) in dense.iter().enumerate() {
            v[k % conductor] += c;
        }
        Self::from_dense(conductor, v)
    }

    fn from_dense(conductor: usize, v: Vec<Rational64>) -> Self {
        let f = field(conductor);
        let coeffs = f.reduce(v);
        Cyclotomic { conductor, coeffs }
    }

    pub(crate) fn from_dense_int(conductor: usize, v: Vec<i64>, denominator: i64) -> Self {
        let f = field(conductor);
        let reduced = f.reduce(v);
        let coeffs = reduced
            .into_iter()
            .map(|c| Rational64::new(c, denominator))
            .collect();
        Cyclotomic { conductor, coeffs }
    }

    pub fn from_rational(q: Rational64) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational64::from_integer(n))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `z_e^k` for the primitive root `z_e = exp(2 pi i / e)`.
    pub fn zeta_power(e: usize, k: i64) -> Self {
        let mut v = vec![Rational64::zero(); e];
        v[k.rem_euclid(e as i64) as usize] = Rational64::one();
        Self::from_dense(e, v)
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// Coefficients in the reduced power basis of the conductor.
    pub fn coefficients(&self) -> &[Rational64] {
        &self.coeffs
    }

    /// Non-zero `(exponent, coefficient)` terms.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Rational64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational64> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub(crate) fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The same number written over conductor `target` (a multiple of the
    /// current one).
    pub fn embed(&self, target: usize) -> Self {
        assert_eq!(target % self.conductor, 0, "conductor must divide target");
        if target == self.conductor {
            return self.clone();
        }
        let step = target / self.conductor;
        let mut v = vec![Rational64::zero(); target];
        for (k, c) in self.terms() {
            v[k * step] = c;
        }
        Self::from_dense(target, v)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let l = lcm(self.conductor, other.conductor);
        (self.embed(l), other.embed(l))
    }

    /// The Galois automorphism `z -> z^k` (`k` coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        let e = self.conductor as i64;
        debug_assert_eq!(gcd(k.rem_euclid(e.max(1)), e), 1);
        let mut v = vec![Rational64::zero(); self.conductor];
        for (i, c) in self.terms() {
            v[((i as i64) * k).rem_euclid(e) as usize] += c;
        }
        Self::from_dense(self.conductor, v)
    }

    /// Complex conjugation, `z -> z^-1`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, q: Rational64) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Approximate complex value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        self.terms().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = *c.numer() as f64 / *c.denom() as f64;
            let t = 2.0 * std::f64::consts::PI * k as f64 / e;
            (re + c * t.cos(), im + c * t.sin())
        })
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the canonical coefficient vector over the common
/// conductor. Only meaningful as a deterministic tie-breaker.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.aligned(other);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.aligned(rhs);
        Cyclotomic {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.aligned(rhs);
        let e = a.conductor;
        let mut v = vec![Rational64::zero(); e];
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                v[(i + j) % e] += x * y;
            }
        }
        Cyclotomic::from_dense(e, v)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Written as a polynomial in `z<e>`, e.g. `-1 - 2*z8^3`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write!(f, "z{}", self.conductor)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Sums of weighted products of integral cyclotomics over a fixed
/// conductor, reduced once at the end.
pub(crate) struct IntAccumulator {
    e: usize,
    acc: Vec<i64>,
}

impl IntAccumulator {
    pub fn new(e: usize) -> Self {
        IntAccumulator {
            e,
            acc: vec![0; e],
        }
    }

    /// Adds `weight * a * b` (or `weight * a * conj(b)`). Both operands must
    /// have integer coefficients and conductors dividing `e`.
    pub fn add_product(&mut self, a: &Cyclotomic, b: &Cyclotomic, conj_b: bool, weight: i64) {
        debug_assert_eq!(self.e % a.conductor, 0);
        debug_assert_eq!(self.e % b.conductor, 0);
        let e = self.e;
        let sa = e / a.conductor;
        let sb = e / b.conductor;
        for (i, x) in a.terms() {
            let xi = *x.numer() * weight;
            for (j, y) in b.terms() {
                let ej = if conj_b { e - (j * sb) % e } else { j * sb };
                self.acc[(i * sa + ej) % e] += xi * *y.numer();
            }
        }
    }

    /// Adds `weight * a * conj(b)` for sparse `(exponent, coefficient)`
    /// terms over this accumulator's conductor.
    pub fn add_conj_product_terms(&mut self, a: &[(usize, i64)], b: &[(usize, i64)], weight: i64) {
        let e = self.e;
        for &(i, x) in a {
            let xi = x * weight;
            for &(j, y) in b {
                self.acc[(i + e - j) % e] += xi * y;
            }
        }
    }

    pub fn finish(self, denominator: i64) -> Cyclotomic {
        let e = self.e;
        if e % 4 == 2 && e > 2 {
            // z_e^k = -z_e^(k+m) = -z_m^((k+m)/2) for odd k, with m = e/2
            // odd, so the value lives over the smaller conductor
            let m = e / 2;
            let mut folded = vec![0i64; m];
            for (k, &c) in self.acc.iter().enumerate() {
                if k % 2 == 0 {
                    folded[k / 2] += c;
                } else {
                    folded[(k + m) / 2 % m] -= c;
                }
            }
            return Cyclotomic::from_dense_int(m, folded, denominator);
        }
        Cyclotomic::from_dense_int(e, self.acc, denominator)
    }
}
