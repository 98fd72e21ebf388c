use super::field::{Elem, Field};
use crate::error::{Error, Result};

/// Coordinates relative to a fixed, linearly independent list of vectors.
///
/// Kept as a semi-echelon form together with the transform back to the
/// original vectors, so lookups cost one reduction pass.
#[derive(Clone, Debug)]
pub struct CoordSystem {
    field: Field,
    ambient: usize,
    vectors: Vec<Vec<Elem>>,
    echelon: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
    transform: Vec<Vec<Elem>>,
}

impl CoordSystem {
    pub fn new(field: &Field, ambient: usize, vectors: Vec<Vec<Elem>>) -> Result<CoordSystem> {
        let n = vectors.len();
        let mut cs = CoordSystem {
            field: field.clone(),
            ambient,
            vectors: Vec::with_capacity(n),
            echelon: Vec::with_capacity(n),
            pivots: Vec::with_capacity(n),
            transform: Vec::with_capacity(n),
        };
        for (i, v) in vectors.into_iter().enumerate() {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in ambient dimension {ambient}",
                    v.len()
                )));
            }
            let mut t = vec![0; n];
            t[i] = 1;
            let mut r = v.clone();
            cs.reduce_with(&mut r, &mut t);
            let Some(p) = r.iter().position(|&x| x != 0) else {
                return Err(Error::DimensionMismatch(format!(
                    "vector {i} is a combination of the earlier ones"
                )));
            };
            let inv = field.inv(r[p]);
            field.scale(&mut r, inv);
            field.scale(&mut t, inv);
            cs.echelon.push(r);
            cs.pivots.push(p);
            cs.transform.push(t);
            cs.vectors.push(v);
        }
        Ok(cs)
    }

    fn reduce_with(&self, r: &mut [Elem], t: &mut [Elem]) {
        let f = &self.field;
        for k in 0..self.echelon.len() {
            let x = r[self.pivots[k]];
            if x != 0 {
                let nx = f.neg(x);
                f.axpy(r, nx, &self.echelon[k]);
                f.axpy(t, nx, &self.transform[k]);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vectors(&self) -> &[Vec<Elem>] {
        &self.vectors
    }

    /// Coefficients `c` with `v = Σ c_i vectors[i]`, if `v` is in the span.
    pub fn coords(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let f = &self.field;
        let mut r = v.to_vec();
        let mut c = vec![0; self.vectors.len()];
        for k in 0..self.echelon.len() {
            let x = r[self.pivots[k]];
            if x != 0 {
                f.axpy(&mut r, f.neg(x), &self.echelon[k]);
                f.axpy(&mut c, x, &self.transform[k]);
            }
        }
        if r.iter().all(|&x| x == 0) {
            Some(c)
        } else {
            None
        }
    }

    pub fn combine(&self, coeffs: &[Elem]) -> Vec<Elem> {
        let mut v = vec![0; self.ambient];
        for (w, &c) in self.vectors.iter().zip(coeffs) {
            self.field.axpy(&mut v, c, w);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_round_trip() {
        let f = Field::new(5, 1).unwrap();
        let vs = vec![vec![1, 2, 0], vec![0, 1, 4], vec![3, 0, 2]];
        let cs = CoordSystem::new(&f, 3, vs).unwrap();
        let c = vec![2, 3, 4];
        let v = cs.combine(&c);
        assert_eq!(cs.coords(&v).unwrap(), c);
    }

    #[test]
    fn rejects_dependent_vectors() {
        let f = Field::new(2, 1).unwrap();
        let vs = vec![vec![1, 1], vec![1, 0], vec![0, 1]];
        assert!(CoordSystem::new(&f, 2, vs).is_err());
        let cs = CoordSystem::new(&f, 3, vec![vec![1, 1, 0]]).unwrap();
        assert_eq!(cs.coords(&[1, 0, 0]), None);
    }
}
