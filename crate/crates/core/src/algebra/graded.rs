use std::sync::Arc;

use super::pair::SubalgebraPair;
use super::{sparse, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{Elem, Field, Matrix, Subspace};

/// A descending chain `V_0 = F^d ⊇ V_1 ⊇ ... ⊇ V_L = 0` with an adapted
/// basis: block `n` of the basis lifts a basis of `V_n / V_{n+1}`.
///
/// Lifts for layer `n` are the echelon rows of `V_n` that are independent
/// modulo `V_{n+1}`, taken in order.
#[derive(Clone, Debug)]
pub struct Filtration {
    field: Field,
    spaces: Vec<Subspace>,
    offsets: Vec<usize>,
    basis: Matrix,
    inverse: Matrix,
}

impl Filtration {
    pub fn new(spaces: Vec<Subspace>) -> Result<Filtration> {
        let first = spaces
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty filtration".into()))?;
        let field = first.field().clone();
        let d = first.ambient();
        if !first.is_full() {
            return Err(Error::DimensionMismatch("filtration must start at the whole space".into()));
        }
        let mut spaces = spaces;
        if !spaces.last().unwrap().is_zero() {
            spaces.push(Subspace::zero(&field, d));
        }
        while spaces.len() >= 2 && spaces[spaces.len() - 2].is_zero() {
            spaces.pop();
        }
        for w in spaces.windows(2) {
            if !w[1].is_subspace_of(&w[0]) {
                return Err(Error::DimensionMismatch("filtration is not descending".into()));
            }
        }
        let mut cols = Vec::with_capacity(d);
        let mut offsets = Vec::with_capacity(spaces.len());
        for w in spaces.windows(2) {
            offsets.push(cols.len());
            let mut s = w[1].clone();
            for row in w[0].basis() {
                if s.insert(row) {
                    cols.push(row.clone());
                }
            }
        }
        offsets.push(cols.len());
        let basis = Matrix::from_cols(&field, d, &cols);
        let inverse = basis.inverse().expect("adapted basis is a basis");
        Ok(Filtration {
            field,
            spaces,
            offsets,
            basis,
            inverse,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    /// Number of nonzero layers `L`.
    pub fn layers(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn layer_dim(&self, n: usize) -> usize {
        if n >= self.layers() {
            0
        } else {
            self.offsets[n + 1] - self.offsets[n]
        }
    }

    pub fn layer_dims(&self) -> Vec<usize> {
        (0..self.layers()).map(|n| self.layer_dim(n)).collect()
    }

    pub fn offset(&self, n: usize) -> usize {
        self.offsets[n.min(self.layers())]
    }

    /// `V_n`; zero beyond the last layer.
    pub fn space(&self, n: usize) -> &Subspace {
        &self.spaces[n.min(self.layers())]
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    /// Grade of each adapted basis vector.
    pub fn grades(&self) -> Vec<usize> {
        let mut g = Vec::with_capacity(self.ambient());
        for n in 0..self.layers() {
            g.extend(std::iter::repeat_n(n, self.layer_dim(n)));
        }
        g
    }

    /// Adapted basis as columns.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    /// The lift of basis vector `i` of layer `n`.
    pub fn lift(&self, n: usize, i: usize) -> Vec<Elem> {
        self.basis.col(self.offsets[n] + i)
    }

    /// Coordinates of the class of `v ∈ V_n` in `V_n / V_{n+1}`.
    pub fn project(&self, n: usize, v: &[Elem]) -> Vec<Elem> {
        if n >= self.layers() {
            return Vec::new();
        }
        let (lo, hi) = (self.offsets[n], self.offsets[n + 1]);
        (lo..hi)
            .map(|r| self.field.dot(self.inverse.row(r), v))
            .collect()
    }

    /// Class of `v ∈ V_n` as a full coordinate vector of the associated
    /// graded space (zero outside block `n`).
    pub fn class_of(&self, n: usize, v: &[Elem]) -> Vec<Elem> {
        let mut out = vec![0; self.ambient()];
        if n < self.layers() {
            let p = self.project(n, v);
            out[self.offsets[n]..self.offsets[n + 1]].copy_from_slice(&p);
        }
        out
    }
}

/// An associated graded algebra together with the filtration it came from.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    algebra: Algebra,
    grades: Vec<usize>,
    filtration: Arc<Filtration>,
    source: Algebra,
}

impl GradedAlgebra {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn filtration(&self) -> &Filtration {
        &self.filtration
    }

    pub fn grades(&self) -> &[usize] {
        &self.grades
    }

    pub fn grade(&self, i: usize) -> usize {
        self.grades[i]
    }

    pub fn layer_dims(&self) -> Vec<usize> {
        self.filtration.layer_dims()
    }

    pub fn layers(&self) -> usize {
        self.filtration.layers()
    }

    /// The class `[v]_n` of `v ∈ J^n` in the graded algebra.
    pub fn class_of(&self, n: usize, v: &[Elem]) -> Vec<Elem> {
        self.filtration.class_of(n, v)
    }

    /// Lift of basis element `i` to the source algebra.
    pub fn lift(&self, i: usize) -> Vec<Elem> {
        self.filtration.basis().col(i)
    }

    /// Whether every product of homogeneous basis elements lands in the sum
    /// of their grades.
    pub fn respects_grading(&self) -> bool {
        let d = self.algebra.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                self.algebra
                    .basis_product(i, j)
                    .iter()
                    .all(|&(k, _)| self.grades[k as usize] == self.grades[i] + self.grades[j])
            })
        })
    }
}

/// `gr B = ⊕ J^n / J^{n+1}` for `J = (rad a) B`, with multiplication induced
/// from `B`.
pub fn graded_algebra(pair: &SubalgebraPair) -> Result<GradedAlgebra> {
    let b = pair.big();
    let filt = Filtration::new(pair.j_powers())?;
    let d = b.dim();
    let grades = filt.grades();
    let lifts: Vec<Vec<Elem>> = (0..d).map(|i| filt.basis().col(i)).collect();
    let mut table = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let m = grades[i] + grades[j];
            if m >= filt.layers() {
                table.push(Vec::new());
                continue;
            }
            let prod = b.mul(&lifts[i], &lifts[j]);
            table.push(sparse(&filt.class_of(m, &prod)));
        }
    }
    let unit = filt.class_of(0, b.unit());
    let labels = grades
        .iter()
        .enumerate()
        .map(|(i, &n)| format!("[{}]{}", i - filt.offset(n), n))
        .collect();
    let algebra = Algebra::from_parts(b.field(), d, table, unit, labels, None);
    let gr = GradedAlgebra {
        algebra,
        grades,
        filtration: Arc::new(filt),
        source: b.clone(),
    };
    debug_assert!(gr.respects_grading());
    Ok(gr)
}

/// The map `gr a -> gr B` on classes, checked to be injective and
/// multiplicative. Columns are images of the basis of `small`.
pub fn graded_embedding(
    pair: &SubalgebraPair,
    small: &GradedAlgebra,
    big: &GradedAlgebra,
) -> Result<Matrix> {
    if !small.source().same(pair.small()) || !big.source().same(pair.big()) {
        return Err(Error::AlgebraMismatch);
    }
    let e = pair.embedding();
    let f = pair.big().field();
    let mut cols = Vec::with_capacity(small.algebra().dim());
    for i in 0..small.algebra().dim() {
        let n = small.grade(i);
        let v = e.mul_vec(&small.lift(i));
        if !big.filtration().space(n).contains(&v) {
            return Err(Error::BadEmbedding);
        }
        cols.push(big.class_of(n, &v));
    }
    let m = Matrix::from_cols(f, big.algebra().dim(), &cols);
    if m.rank() != small.algebra().dim() {
        return Err(Error::BadEmbedding);
    }
    let sa = small.algebra();
    for i in 0..sa.dim() {
        for j in 0..sa.dim() {
            let lhs = m.mul_vec(&sa.mul(&sa.basis_vec(i), &sa.basis_vec(j)));
            let rhs = big.algebra().mul(&cols[i], &cols[j]);
            if lhs != rhs {
                return Err(Error::BadEmbedding);
            }
        }
    }
    Ok(m)
}
