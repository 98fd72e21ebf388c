//! Univariate polynomials over a [`Field`], with factoring.

use rand::Rng;

use super::field::{prime_divisors, Elem, Field};

/// Dense polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly(Vec<Elem>);

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![1])
    }

    pub fn x() -> Poly {
        Poly(vec![0, 1])
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lead(&self) -> Elem {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            *o = f.add(a, b);
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        self.add(&other.scale(f.neg(1), f), f)
    }

    pub fn scale(&self, c: Elem, f: &Field) -> Poly {
        Poly::new(self.0.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a != 0 {
                f.axpy(&mut out[i..i + other.0.len()], a, &other.0);
            }
        }
        Poly::new(out)
    }

    pub fn monic(&self, f: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f.inv(self.lead()), f)
    }

    /// Quotient and remainder. Panics when dividing by zero.
    pub fn divrem(&self, d: &Poly, f: &Field) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.0.len() < d.0.len() {
            return (Poly::zero(), self.clone());
        }
        let dd = d.deg();
        let inv_lead = f.inv(d.lead());
        let mut r = self.0.clone();
        let mut q = vec![0; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = f.mul(r[i + dd], inv_lead);
            q[i] = c;
            if c != 0 {
                let nc = f.neg(c);
                f.axpy(&mut r[i..i + dd + 1], nc, &d.0);
            }
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly, f: &Field) -> Poly {
        self.divrem(d, f).1
    }

    /// Exact division (assumes `d` divides `self`).
    pub fn div_exact(&self, d: &Poly, f: &Field) -> Poly {
        let (q, r) = self.divrem(d, f);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly, f: &Field) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn mulmod(&self, other: &Poly, m: &Poly, f: &Field) -> Poly {
        self.mul(other, f).rem(m, f)
    }

    pub fn powmod(&self, mut e: u64, m: &Poly, f: &Field) -> Poly {
        let mut acc = Poly::one().rem(m, f);
        let mut b = self.rem(m, f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&b, m, f);
            }
            b = b.mulmod(&b, m, f);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self, f: &Field) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
                .collect(),
        )
    }

    pub fn eval(&self, x: Elem, f: &Field) -> Elem {
        self.0.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self, f: &Field) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let m = self.monic(f);
        let q = f.order() as u64;
        let x = Poly::x();
        let frob = |k: usize| {
            let mut h = x.clone();
            for _ in 0..k {
                h = h.powmod(q, &m, f);
            }
            h
        };
        if frob(n).sub(&x, f).rem(&m, f) != Poly::zero() {
            return false;
        }
        prime_divisors(n as u64)
            .into_iter()
            .all(|r| frob(n / r as usize).sub(&x, f).gcd(&m, f).is_one())
    }

    fn pth_root(&self, f: &Field) -> Poly {
        let p = f.characteristic() as usize;
        Poly::new(
            self.0
                .iter()
                .step_by(p)
                .map(|&c| f.pth_root(c))
                .collect(),
        )
    }

    fn squarefree(&self, f: &Field) -> Vec<(Poly, usize)> {
        let p = f.characteristic() as usize;
        let mut out = Vec::new();
        let d = self.derivative(f);
        if d.is_zero() {
            for (g, m) in self.pth_root(f).squarefree(f) {
                out.push((g, m * p));
            }
            return out;
        }
        let mut c = self.gcd(&d, f);
        let mut w = self.div_exact(&c, f);
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c, f);
            let fac = w.div_exact(&y, f);
            if !fac.is_one() {
                out.push((fac, i));
            }
            w = y;
            c = c.div_exact(&w, f);
            i += 1;
        }
        if !c.is_one() {
            for (g, m) in c.pth_root(f).squarefree(f) {
                out.push((g, m * p));
            }
        }
        out
    }

    fn distinct_degree(&self, f: &Field) -> Vec<(Poly, usize)> {
        let q = f.order() as u64;
        let mut rest = self.clone();
        let mut out = Vec::new();
        let x = Poly::x();
        let mut h = x.rem(&rest, f);
        let mut i = 1;
        while rest.deg() >= 2 * i {
            h = h.powmod(q, &rest, f);
            let g = h.sub(&x, f).gcd(&rest, f);
            if !g.is_one() {
                rest = rest.div_exact(&g, f);
                h = h.rem(&rest, f);
                out.push((g, i));
            }
            i += 1;
        }
        if rest.deg() > 0 {
            let d = rest.deg();
            out.push((rest, d));
        }
        out
    }

    fn equal_degree<R: Rng + ?Sized>(&self, d: usize, f: &Field, rng: &mut R, out: &mut Vec<Poly>) {
        let n = self.deg();
        if n == d {
            out.push(self.clone());
            return;
        }
        let q = f.order() as u64;
        loop {
            let a = Poly::new((0..n).map(|_| f.random(rng)).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = if q % 2 == 1 {
                let c = a.powmod((q - 1) / 2, self, f);
                let mut acc = c.clone();
                let mut cur = c;
                for _ in 1..d {
                    cur = cur.powmod(q, self, f);
                    acc = acc.mulmod(&cur, self, f);
                }
                acc.sub(&Poly::one(), f)
            } else {
                let rounds = f.degree() as usize * d;
                let mut t = a.rem(self, f);
                let mut s = t.clone();
                for _ in 1..rounds {
                    t = t.mulmod(&t, self, f);
                    s = s.add(&t, f);
                }
                s
            };
            let g = b.gcd(self, f);
            if let Some(gd) = g.degree() {
                if gd > 0 && gd < n {
                    let h = self.div_exact(&g, f);
                    g.equal_degree(d, f, rng, out);
                    h.equal_degree(d, f, rng, out);
                    return;
                }
            }
        }
    }

    /// Factorization into monic irreducibles with multiplicities, sorted by
    /// degree and then coefficients. The leading coefficient is dropped.
    pub fn factor<R: Rng + ?Sized>(&self, f: &Field, rng: &mut R) -> Vec<(Poly, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (sf, mult) in self.monic(f).squarefree(f) {
            for (block, d) in sf.distinct_degree(f) {
                let mut pieces = Vec::new();
                block.equal_degree(d, f, rng, &mut pieces);
                out.extend(pieces.into_iter().map(|g| (g, mult)));
            }
        }
        out.sort_by(|a, b| (a.0.degree(), &a.0 .0).cmp(&(b.0.degree(), &b.0 .0)));
        // Merge equal factors that arose from different squarefree parts.
        let mut merged: Vec<(Poly, usize)> = Vec::new();
        for (g, m) in out {
            match merged.last_mut() {
                Some((h, k)) if *h == g => *k += m,
                _ => merged.push((g, m)),
            }
        }
        merged
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn product(fs: &[(Poly, usize)], f: &Field) -> Poly {
        let mut acc = Poly::one();
        for (g, m) in fs {
            for _ in 0..*m {
                acc = acc.mul(g, f);
            }
        }
        acc
    }

    #[test]
    fn divrem_reconstructs() {
        let f = Field::new(5, 1).unwrap();
        let a = Poly::new(vec![1, 2, 3, 4, 1]);
        let b = Poly::new(vec![2, 0, 1]);
        let (q, r) = a.divrem(&b, &f);
        assert_eq!(q.mul(&b, &f).add(&r, &f), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn irreducibility_over_gf2() {
        let f = Field::new(2, 1).unwrap();
        assert!(Poly::new(vec![1, 1, 1]).is_irreducible(&f));
        assert!(!Poly::new(vec![1, 0, 1]).is_irreducible(&f));
        assert!(Poly::new(vec![1, 1, 0, 1]).is_irreducible(&f));
        assert!(!Poly::new(vec![1, 1, 1, 1]).is_irreducible(&f));
    }

    #[test]
    fn factoring_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for (p, k) in [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1), (2, 3)] {
            let f = Field::new(p, k).unwrap();
            for _ in 0..40 {
                let deg = rng.gen_range(1..12);
                let mut c: Vec<Elem> = (0..deg).map(|_| f.random(&mut rng)).collect();
                c.push(1);
                let poly = Poly::new(c);
                let fs = poly.factor(&f, &mut rng);
                assert_eq!(product(&fs, &f), poly, "{:?} over {:?}", poly, f);
                for (g, _) in &fs {
                    assert!(g.is_irreducible(&f));
                }
            }
        }
    }

    #[test]
    fn factors_pth_powers() {
        let f = Field::new(3, 1).unwrap();
        // (x+1)^3 (x^2+1)^2
        let a = Poly::new(vec![1, 1]);
        let b = Poly::new(vec![1, 0, 1]);
        let poly = a.mul(&a, &f).mul(&a, &f).mul(&b, &f).mul(&b, &f);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(poly.factor(&f, &mut rng), vec![(a, 3), (b, 2)]);
    }
}
