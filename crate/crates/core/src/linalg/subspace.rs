use super::field::{Elem, Field};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A subspace of `F^n`, stored as the rows of its reduced row echelon basis.
/// Equal subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace {
            field: field.clone(),
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I, V>(field: &Field, ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Elem]>,
    {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v.as_ref());
        }
        s
    }

    pub fn from_matrix_rows(m: &Matrix) -> Subspace {
        let r = m.rref();
        Subspace {
            field: m.field().clone(),
            ambient: m.cols(),
            basis: (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect(),
            pivots: r.pivots,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis as the rows of a `dim x ambient` matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.field, self.ambient, &self.basis)
    }

    /// Basis as the columns of an `ambient x dim` matrix.
    pub fn to_col_matrix(&self) -> Matrix {
        Matrix::from_cols(&self.field, self.ambient, &self.basis)
    }

    /// `v` minus its component in this subspace along the echelon basis.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        debug_assert_eq!(v.len(), self.ambient);
        let f = &self.field;
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p];
            if c != 0 {
                f.axpy(&mut r, f.neg(c), row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&p| v[p]).collect())
        } else {
            None
        }
    }

    /// Linear combination of the echelon basis.
    pub fn combine(&self, coeffs: &[Elem]) -> Vec<Elem> {
        let mut v = vec![0; self.ambient];
        for (row, &c) in self.basis.iter().zip(coeffs) {
            self.field.axpy(&mut v, c, row);
        }
        v
    }

    /// Standard basis indices complementing the pivots.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Coordinates of the class of `v` in `F^n / self`, using the standard
    /// complement from [`Subspace::complement_indices`].
    pub fn quotient_coords(&self, v: &[Elem]) -> Vec<Elem> {
        let r = self.reduce(v);
        self.complement_indices().into_iter().map(|i| r[i]).collect()
    }

    /// Adds `v` to the subspace; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient dimension");
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(c) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(r[c]);
        f.scale(&mut r, inv);
        for row in self.basis.iter_mut() {
            let x = row[c];
            if x != 0 {
                f.axpy(row, f.neg(x), &r);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < c);
        self.pivots.insert(pos, c);
        self.basis.insert(pos, r);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v);
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(&self.field, self.ambient);
        }
        let f = &self.field;
        // columns: self basis, then -other basis
        let mut m = Matrix::zeros(f, self.ambient, a + b);
        for (j, v) in self.basis.iter().enumerate() {
            for (i, &x) in v.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for (i, &x) in v.iter().enumerate() {
                m.set(i, a + j, f.neg(x));
            }
        }
        let vecs: Vec<Vec<Elem>> = m
            .kernel_basis()
            .into_iter()
            .map(|k| self.combine(&k[..a]))
            .collect();
        Subspace::span(f, self.ambient, vecs)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Image under a linear map acting on column vectors.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::span(&self.field, m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }

    pub fn is_stable_under(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }
}

/// Smallest subspace containing `seeds` and stable under every operator.
pub fn spin(field: &Field, seeds: &[Vec<Elem>], operators: &[Matrix]) -> Result<Subspace> {
    let n = match (operators.first(), seeds.first()) {
        (Some(op), _) => op.rows(),
        (None, Some(s)) => s.len(),
        (None, None) => 0,
    };
    for op in operators {
        if op.rows() != n || op.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "operator {}x{} in a spin over dimension {}",
                op.rows(),
                op.cols(),
                n
            )));
        }
    }
    if let Some(s) = seeds.iter().find(|s| s.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "seed of length {} in a spin over dimension {}",
            s.len(),
            n
        )));
    }
    let mut space = Subspace::zero(field, n);
    let mut queue: Vec<Vec<Elem>> = Vec::new();
    for s in seeds {
        if space.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if space.is_full() {
            break;
        }
        for op in operators {
            let w = op.mul_vec(&v);
            if space.insert(&w) {
                queue.push(w);
            }
        }
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_examples() {
        let f = Field::new(2, 1).unwrap();
        let swap = Matrix::from_ints(&f, &[&[0, 1], &[1, 0]]);
        let s = spin(&f, &[vec![1, 0]], std::slice::from_ref(&swap)).unwrap();
        assert!(s.is_full());
        let s = spin(&f, &[vec![0, 0]], std::slice::from_ref(&swap)).unwrap();
        assert!(s.is_zero());
        let s = spin(&f, &[vec![1, 0], vec![0, 1]], std::slice::from_ref(&swap)).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(spin(&f, &[vec![1, 0, 0]], &[swap]).is_err());
    }

    #[test]
    fn intersection_and_sum() {
        let f = Field::new(3, 1).unwrap();
        let a = Subspace::span(&f, 3, [vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::span(&f, 3, [vec![0, 1, 0], vec![0, 0, 1]]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(&f, 3, [vec![0, 1, 0]]));
        assert!(a.sum(&b).is_full());
        assert_eq!(a.quotient_coords(&[2, 1, 1]), vec![1]);
    }
}
