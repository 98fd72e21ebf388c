use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}`; displayed 1-based in cycle notation.
///
/// Products compose as functions: `(a * b)(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i as usize >= n || seen[i as usize] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[i as usize] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of degree `n` from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut moved = vec![false; n];
        for c in cycles {
            for &x in c {
                if x == 0 || x > n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} outside 1..={n}"
                    )));
                }
                if moved[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} repeated in cycle notation"
                    )));
                }
                moved[x - 1] = true;
            }
            for (i, &x) in c.iter().enumerate() {
                img[x - 1] = (c[(i + 1) % c.len()] - 1) as u32;
            }
        }
        Ok(Perm(img))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Same permutation on a larger domain.
    pub fn extend(&self, n: usize) -> Perm {
        assert!(n >= self.degree());
        let mut v = self.0.clone();
        v.extend(self.degree() as u32..n as u32);
        Perm(v)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x + 1);
                x = self.0[x] as usize;
            }
            out.push(c);
        }
        out
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert!(p.compose(&p).is_identity());
        let q = Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(q.apply(0), 1);
        assert_eq!(q.compose(&q.inverse()), Perm::identity(3));
    }

    #[test]
    fn compose_is_function_composition() {
        let a = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![2, 3]]).unwrap();
        // a(b(3)) = a(2) = 1
        assert_eq!(a.compose(&b).apply(2), 0);
    }

    #[test]
    fn rejects_repeated_points() {
        assert!(Perm::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Perm::from_cycles(3, &[vec![1, 4]]).is_err());
    }
}
