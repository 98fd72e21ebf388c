use super::ideal::{radical, IdealBasis};
use super::{sparse, Algebra, AxiomCheck};
use crate::error::{Error, Result};
use crate::linalg::{CoordSystem, Elem, Matrix, Subspace};

/// A subalgebra `a` of `B` (given by an embedding) whose radical generates
/// the same right and left ideal `J = (rad a) B = B (rad a)`.
#[derive(Clone, Debug)]
pub struct SubalgebraPair {
    big: Algebra,
    small: Algebra,
    embedding: Matrix,
    rad_small: IdealBasis,
    rad_image: Subspace,
    j: IdealBasis,
}

fn check_embedding(big: &Algebra, small: &Algebra, e: &Matrix) -> Result<()> {
    if e.rows() != big.dim() || e.cols() != small.dim() || big.field() != small.field() {
        return Err(Error::BadEmbedding);
    }
    if e.mul_vec(small.unit()) != big.unit() {
        return Err(Error::BadEmbedding);
    }
    if e.rank() != small.dim() {
        return Err(Error::BadEmbedding);
    }
    let cols: Vec<Vec<Elem>> = (0..small.dim()).map(|i| e.col(i)).collect();
    for i in 0..small.dim() {
        for j in 0..small.dim() {
            let lhs = e.mul_vec(&small.mul(&small.basis_vec(i), &small.basis_vec(j)));
            if lhs != big.mul(&cols[i], &cols[j]) {
                return Err(Error::BadEmbedding);
            }
        }
    }
    Ok(())
}

fn one_sided(big: &Algebra, rad_image: &Subspace) -> (Subspace, Subspace) {
    let f = big.field();
    let mut right = Subspace::zero(f, big.dim());
    let mut left = Subspace::zero(f, big.dim());
    for r in rad_image.basis() {
        for j in 0..big.dim() {
            let b = big.basis_vec(j);
            right.insert(&big.mul(r, &b));
            left.insert(&big.mul(&b, r));
        }
    }
    (right, left)
}

/// Whether `(rad a) B = B (rad a)` for the embedded subalgebra.
pub fn pair_normality_check(big: &Algebra, small: &Algebra, embedding: &Matrix) -> Result<bool> {
    check_embedding(big, small, embedding)?;
    let rad_image = radical(small).space().image(embedding);
    let (right, left) = one_sided(big, &rad_image);
    Ok(right == left)
}

impl SubalgebraPair {
    pub fn new(big: &Algebra, small: &Algebra, embedding: Matrix) -> Result<SubalgebraPair> {
        check_embedding(big, small, &embedding)?;
        let rad_small = radical(small);
        let rad_image = rad_small.space().image(&embedding);
        let (right, left) = one_sided(big, &rad_image);
        if right != left {
            return Err(Error::NormalityFailure);
        }
        Ok(SubalgebraPair {
            big: big.clone(),
            small: small.clone(),
            embedding,
            rad_small,
            rad_image,
            j: IdealBasis::trusted(big, right),
        })
    }

    /// The algebra as a subalgebra of itself.
    pub fn identity(a: &Algebra) -> SubalgebraPair {
        let rad = radical(a);
        SubalgebraPair {
            big: a.clone(),
            small: a.clone(),
            embedding: Matrix::identity(a.field(), a.dim()),
            rad_image: rad.space().clone(),
            j: rad.clone(),
            rad_small: rad,
        }
    }

    pub fn big(&self) -> &Algebra {
        &self.big
    }

    pub fn small(&self) -> &Algebra {
        &self.small
    }

    pub fn embedding(&self) -> &Matrix {
        &self.embedding
    }

    pub fn rad_small(&self) -> &IdealBasis {
        &self.rad_small
    }

    pub fn rad_image(&self) -> &Subspace {
        &self.rad_image
    }

    /// `J = (rad a) B`.
    pub fn j(&self) -> &IdealBasis {
        &self.j
    }

    /// `J^0 = B ⊇ J ⊇ J^2 ⊇ ... ⊇ 0`, ending with the first zero power.
    pub fn j_powers(&self) -> Vec<Subspace> {
        let b = &self.big;
        let mut out = vec![Subspace::full(b.field(), b.dim())];
        let mut cur = self.j.space().clone();
        loop {
            let done = cur.is_zero();
            out.push(cur.clone());
            if done || out.len() > b.dim() + 1 {
                break;
            }
            let mut next = Subspace::zero(b.field(), b.dim());
            for x in self.j.basis() {
                for y in cur.basis() {
                    next.insert(&b.mul(x, y));
                }
            }
            cur = next;
        }
        out
    }
}

/// The subalgebra spanned by `vectors`, with its structure constants
/// expressed in that basis, and the embedding matrix.
pub fn subalgebra_spanned(big: &Algebra, vectors: &[Vec<Elem>]) -> Result<(Algebra, Matrix)> {
    let f = big.field();
    let cs = CoordSystem::new(f, big.dim(), vectors.to_vec()).map_err(|_| Error::BadEmbedding)?;
    let d = cs.len();
    let mut table = Vec::with_capacity(d * d);
    for x in vectors {
        for y in vectors {
            let c = cs.coords(&big.mul(x, y)).ok_or(Error::BadEmbedding)?;
            table.push(sparse(&c));
        }
    }
    let unit = cs.coords(big.unit()).ok_or(Error::BadEmbedding)?;
    let labels = (0..d).map(|i| format!("a{i}")).collect();
    let small = Algebra::new(f, d, table, unit, labels, AxiomCheck::Auto)?;
    Ok((small, Matrix::from_cols(f, big.dim(), vectors)))
}
