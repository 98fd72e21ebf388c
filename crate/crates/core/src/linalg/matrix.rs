use std::fmt;

use rand::Rng;

use super::field::{Elem, Field};
use super::poly::Poly;

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(field: &Field, n: usize, c: Elem) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        debug_assert!(data.iter().all(|&x| x < field.order()));
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from rows; `cols` is needed when `rows` is empty.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Elem>]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix::from_vec(field, rows.len(), cols, data)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(field: &Field, rows: usize, cols: &[Vec<Elem>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    /// Entries given as integers, reduced into the prime subfield.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
            .collect();
        Matrix::from_rows(field, cols, &rows)
    }

    pub fn random<R: Rng + ?Sized>(field: &Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
        let data = (0..rows * cols).map(|_| field.random(rng)).collect();
        Matrix::from_vec(field, rows, cols, data)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        let oc = other.cols;
        for i in 0..self.rows {
            let (lo, hi) = (i * oc, (i + 1) * oc);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a != 0 {
                    self.field
                        .axpy(&mut out.data[lo..hi], a, &other.data[k * oc..(k + 1) * oc]);
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| self.field.dot(self.row(i), v))
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        self.field.axpy(&mut out.data, 1, &other.data);
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        self.field.axpy(&mut out.data, self.field.neg(1), &other.data);
        out
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let mut out = self.clone();
        self.field.scale(&mut out.data, c);
        out
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, c: Elem, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.field.axpy(&mut self.data, c, &other.data);
    }

    /// `Σ c_i M_i`; all matrices must share a shape.
    pub fn lincomb(field: &Field, rows: usize, cols: usize, terms: &[(Elem, &Matrix)]) -> Matrix {
        let mut out = Matrix::zeros(field, rows, cols);
        for (c, m) in terms {
            out.add_scaled(*c, m);
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(&self.field, self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Kronecker product: block `(i, j)` is `self[i][j] * other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(&self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b != 0 {
                            out.set(i * other.rows + k, j * other.cols + l, self.field.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal matrix.
    pub fn block_diag(field: &Field, blocks: &[Matrix]) -> Matrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j));
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(&self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r0 + i, c0 + j));
            }
        }
        out
    }

    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            f.scale(m.row_mut(r), inv);
            let pivot_row = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i != r {
                    let x = m.get(i, c);
                    if x != 0 {
                        let nx = f.neg(x);
                        let cols = m.cols;
                        f.axpy(&mut m.data[i * cols + c..(i + 1) * cols], nx, &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(matrix.get(r, free));
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Matrix::identity(&self.field, n));
        let red = aug.rref();
        if red.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) || red.rank < n {
            return None;
        }
        Some(red.matrix.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Characteristic polynomial via reduction to Hessenberg form.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else {
                continue;
            };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let inv = f.inv(h.get(m, m - 1));
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), inv);
                if u == 0 {
                    continue;
                }
                let nu = f.neg(u);
                for j in 0..n {
                    let x = f.add(h.get(i, j), f.mul(nu, h.get(m, j)));
                    h.set(i, j, x);
                }
                for r in 0..n {
                    let x = f.add(h.get(r, m), f.mul(u, h.get(r, i)));
                    h.set(r, m, x);
                }
            }
        }
        // p_{m+1} = (x - h_mm) p_m - Σ_{i<m} h_im (Π_{j=i+1..m} h_{j,j-1}) p_i
        let mut ps: Vec<Poly> = vec![Poly::one()];
        for m in 0..n {
            let mut next = Poly::x()
                .sub(&Poly::constant(h.get(m, m)), f)
                .mul(&ps[m], f);
            let mut t = 1;
            for i in (0..m).rev() {
                t = f.mul(t, h.get(i + 1, i));
                let c = f.mul(h.get(i, m), t);
                if c != 0 {
                    next = next.sub(&ps[i].scale(c, f), f);
                }
            }
            ps.push(next);
        }
        ps.pop().unwrap()
    }

    /// Evaluate a polynomial at this (square) matrix.
    pub fn eval_poly(&self, poly: &Poly) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zeros(&self.field, n, n);
        for &c in poly.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let x = self.field.add(acc.get(i, i), c);
                acc.set(i, i, x);
            }
        }
        acc
    }

    pub fn trace(&self) -> Elem {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rref_examples() {
        let f3 = Field::new(3, 1).unwrap();
        let id = Matrix::identity(&f3, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);

        let z = Matrix::zeros(&f3, 2, 4);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank, 0);

        let f5 = Field::new(5, 1).unwrap();
        let m = Matrix::from_ints(&f5, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_ints(&f5, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let f2 = Field::new(2, 1).unwrap();
        assert!(Matrix::identity(&f2, 4).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(&f2, 2, 3).kernel_basis().len(), 3);
        let m = Matrix::from_ints(&f2, &[&[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn kron_examples() {
        let f = Field::new(3, 1).unwrap();
        let i2 = Matrix::identity(&f, 2);
        let i3 = Matrix::identity(&f, 3);
        assert_eq!(i2.kron(&i3), Matrix::identity(&f, 6));
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let a = Matrix::random(&f, 2, 2, &mut rng);
        assert_eq!(a.kron(&Matrix::identity(&f, 1)), a);
    }

    #[test]
    fn inverse_and_charpoly() {
        let f = Field::new(7, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a = Matrix::random(&f, 5, 5, &mut rng);
            if let Some(inv) = a.inverse() {
                assert!(a.mul(&inv).is_identity());
            } else {
                assert!(a.rank() < 5);
            }
            // Cayley-Hamilton
            assert!(a.eval_poly(&a.charpoly()).is_zero());
        }
    }

    #[test]
    fn charpoly_of_companion() {
        let f = Field::new(5, 1).unwrap();
        // companion of x^3 + 2x + 3
        let c = Matrix::from_ints(&f, &[&[0, 0, -3], &[1, 0, -2], &[0, 1, 0]]);
        assert_eq!(c.charpoly(), Poly::new(vec![3, 2, 0, 1]));
    }
}
