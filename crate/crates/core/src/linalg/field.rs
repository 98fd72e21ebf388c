//! Arithmetic in GF(p^k).
//!
//! Elements are stored as `u32` codes: the element `Σ c_i x^i` (reduced
//! modulo the defining polynomial) is encoded as `Σ c_i p^i`. In particular
//! the prime subfield occupies the codes `0..p`, with `0` and `1` the
//! additive and multiplicative identities.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::poly::Poly;
use crate::error::{Error, Result};

/// Field element code.
pub type Elem = u32;

/// Default cap on the field order.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;

/// A finite field GF(p^k). Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    defining_poly: Vec<Elem>,
    arith: Arith,
}

enum Arith {
    Prime,
    Extension {
        exp: Vec<u32>,
        log: Vec<u32>,
        /// Full addition table for small orders, empty otherwise.
        add: Vec<u32>,
    },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

impl Field {
    /// GF(p^k) with the lexicographically least monic irreducible defining
    /// polynomial (coefficients compared from `x^(k-1)` down to `x^0`).
    pub fn new(p: u64, k: u32) -> Result<Field> {
        Self::with_cap(p, k, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(p: u64, k: u32, cap: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = p.checked_pow(k).unwrap_or(u64::MAX);
        if order > cap || order > u32::MAX as u64 {
            return Err(Error::FieldTooLarge { order, cap });
        }
        let p = p as u32;
        if k == 1 {
            return Ok(Field(Arc::new(Inner {
                p,
                k,
                q: p,
                defining_poly: vec![0, 1],
                arith: Arith::Prime,
            })));
        }
        let q = order as u32;
        let base = Field::new(p as u64, 1)?;
        let defining = (0..p.pow(k))
            .map(|c| {
                let mut coeffs = digits(c, p, k as usize);
                coeffs.push(1);
                Poly::new(coeffs)
            })
            .find(|f| f.is_irreducible(&base))
            .expect("an irreducible polynomial exists in every degree");

        let mulmod = |a: u32, b: u32| -> u32 {
            let pa = Poly::new(digits(a, p, k as usize));
            let pb = Poly::new(digits(b, p, k as usize));
            encode(&pa.mul(&pb, &base).rem(&defining, &base), p)
        };
        let n = (q - 1) as u64;
        let divisors = prime_divisors(n);
        let powmod = |g: u32, mut e: u64| -> u32 {
            let mut acc = 1u32;
            let mut b = g;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(acc, b);
                }
                b = mulmod(b, b);
                e >>= 1;
            }
            acc
        };
        let generator = (2..q)
            .find(|&g| divisors.iter().all(|&r| powmod(g, n / r) != 1))
            .expect("multiplicative group is cyclic");

        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..(q as usize - 1) {
            exp[i] = cur;
            log[cur as usize] = i as u32;
            cur = mulmod(cur, generator);
        }
        for i in 0..(q as usize - 1) {
            exp[i + q as usize - 1] = exp[i];
        }
        let add = if q <= 256 {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(a, b, p, k);
                }
            }
            t
        } else {
            Vec::new()
        };
        Ok(Field(Arc::new(Inner {
            p,
            k,
            q,
            defining_poly: defining.coeffs().to_vec(),
            arith: Arith::Extension { exp, log, add },
        })))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    /// Coefficients of the defining polynomial, lowest degree first.
    pub fn defining_poly(&self) -> &[Elem] {
        &self.0.defining_poly
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn one(&self) -> Elem {
        1
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.0.p as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.0;
        match &inner.arith {
            Arith::Prime => {
                let s = a + b;
                if s >= inner.p {
                    s - inner.p
                } else {
                    s
                }
            }
            Arith::Extension { add, .. } => {
                if inner.p == 2 {
                    a ^ b
                } else if !add.is_empty() {
                    add[(a * inner.q + b) as usize]
                } else {
                    digit_add(a, b, inner.p, inner.k)
                }
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let inner = &*self.0;
        match inner.arith {
            Arith::Prime => {
                if a == 0 {
                    0
                } else {
                    inner.p - a
                }
            }
            Arith::Extension { .. } => {
                if inner.p == 2 {
                    a
                } else {
                    let mut out = 0u32;
                    let mut pw = 1u32;
                    let mut x = a;
                    for _ in 0..inner.k {
                        let d = x % inner.p;
                        x /= inner.p;
                        out += ((inner.p - d) % inner.p) * pw;
                        pw *= inner.p;
                    }
                    out
                }
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.0;
        match &inner.arith {
            Arith::Prime => ((a as u64 * b as u64) % inner.p as u64) as Elem,
            Arith::Extension { exp, log, .. } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a as usize] + log[b as usize]) as usize]
                }
            }
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        let inner = &*self.0;
        match &inner.arith {
            Arith::Prime => self.pow(a, inner.p as u64 - 2),
            Arith::Extension { exp, log, .. } => {
                let l = log[a as usize];
                exp[((inner.q - 1 - l) % (inner.q - 1)) as usize]
            }
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut acc = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// The unique `b` with `b^p = a`.
    pub fn pth_root(&self, a: Elem) -> Elem {
        let q = self.0.q as u64;
        self.pow(a, q / self.0.p as u64)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        rng.gen_range(0..self.0.q)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        rng.gen_range(1..self.0.q)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.q
    }

    /// In-place `dst += c * src`.
    pub fn axpy(&self, dst: &mut [Elem], c: Elem, src: &[Elem]) {
        debug_assert_eq!(dst.len(), src.len());
        if c == 0 {
            return;
        }
        let inner = &*self.0;
        match &inner.arith {
            Arith::Prime => {
                let p = inner.p as u64;
                let c = c as u64;
                for (d, &s) in dst.iter_mut().zip(src) {
                    if s != 0 {
                        *d = ((*d as u64 + c * s as u64) % p) as Elem;
                    }
                }
            }
            Arith::Extension { .. } => {
                for (d, &s) in dst.iter_mut().zip(src) {
                    if s != 0 {
                        *d = self.add(*d, self.mul(c, s));
                    }
                }
            }
        }
    }

    /// In-place `v *= c`.
    pub fn scale(&self, v: &mut [Elem], c: Elem) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        let mut acc = 0;
        for (&x, &y) in a.iter().zip(b) {
            if x != 0 && y != 0 {
                acc = self.add(acc, self.mul(x, y));
            }
        }
        acc
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.k == other.0.k)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.k)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn digits(mut c: u32, p: u32, k: usize) -> Vec<Elem> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(c % p);
        c /= p;
    }
    out
}

fn encode(poly: &Poly, p: u32) -> u32 {
    poly.coeffs().iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn digit_add(a: u32, b: u32, p: u32, k: u32) -> u32 {
    let (mut x, mut y) = (a, b);
    let mut out = 0u32;
    let mut pw = 1u32;
    for _ in 0..k {
        out += ((x % p + y % p) % p) * pw;
        x /= p;
        y /= p;
        pw *= p;
    }
    out
}
