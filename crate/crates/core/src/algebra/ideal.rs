use super::{sparse, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{spin, Elem, Matrix, Subspace};

/// A two-sided ideal of an algebra, as an echelon basis of coordinate
/// vectors.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    algebra: Algebra,
    space: Subspace,
}

impl IdealBasis {
    /// Checks that `space` is closed under left and right multiplication.
    pub fn new(algebra: &Algebra, space: Subspace) -> Result<IdealBasis> {
        if space.ambient() != algebra.dim() {
            return Err(Error::DimensionMismatch("ideal ambient dimension".into()));
        }
        for &g in algebra.generators() {
            if !space.is_stable_under(&algebra.left_basis_matrix(g))
                || !space.is_stable_under(&algebra.right_basis_matrix(g))
            {
                return Err(Error::NotTwoSided);
            }
        }
        Ok(IdealBasis {
            algebra: algebra.clone(),
            space,
        })
    }

    pub(crate) fn trusted(algebra: &Algebra, space: Subspace) -> IdealBasis {
        IdealBasis {
            algebra: algebra.clone(),
            space,
        }
    }

    pub fn zero(algebra: &Algebra) -> IdealBasis {
        IdealBasis::trusted(algebra, Subspace::zero(algebra.field(), algebra.dim()))
    }

    pub fn whole(algebra: &Algebra) -> IdealBasis {
        IdealBasis::trusted(algebra, Subspace::full(algebra.field(), algebra.dim()))
    }

    /// Smallest two-sided ideal containing `vectors`.
    pub fn generated(algebra: &Algebra, vectors: &[Vec<Elem>]) -> Result<IdealBasis> {
        let mut ops = Vec::new();
        for &g in algebra.generators() {
            ops.push(algebra.left_basis_matrix(g));
            ops.push(algebra.right_basis_matrix(g));
        }
        let space = spin(algebra.field(), vectors, &ops)?;
        Ok(IdealBasis::trusted(algebra, space))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        self.space.basis()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.space.contains(v)
    }
}

/// The Jacobson radical.
pub fn radical(a: &Algebra) -> IdealBasis {
    IdealBasis::trusted(a, a.radical_space().clone())
}

/// Span of all products `x y` with `x ∈ I`, `y ∈ J`.
pub fn ideal_product(i: &IdealBasis, j: &IdealBasis) -> Result<IdealBasis> {
    if !i.algebra.same(&j.algebra) {
        return Err(Error::ParentMismatch);
    }
    let a = &i.algebra;
    let mut s = Subspace::zero(a.field(), a.dim());
    for x in i.basis() {
        for y in j.basis() {
            s.insert(&a.mul(x, y));
            if s.is_full() {
                return Ok(IdealBasis::trusted(a, s));
            }
        }
    }
    Ok(IdealBasis::trusted(a, s))
}

/// `I^n`, with `I^0` the whole algebra.
pub fn ideal_power(i: &IdealBasis, n: usize) -> IdealBasis {
    let mut acc = IdealBasis::whole(&i.algebra);
    for _ in 0..n {
        acc = ideal_product(i, &acc).expect("same parent");
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `A / I` on the standard complement of `I`, with the projection matrix
/// `dim(A/I) x dim A`.
pub fn quotient_algebra(a: &Algebra, i: &IdealBasis) -> Result<(Algebra, Matrix)> {
    if !i.algebra.same(a) {
        return Err(Error::ParentMismatch);
    }
    IdealBasis::new(a, i.space.clone())?;
    let comp = i.space.complement_indices();
    let d = comp.len();
    let f = a.field();
    let mut table = Vec::with_capacity(d * d);
    for &x in &comp {
        for &y in &comp {
            let v = a.mul(&a.basis_vec(x), &a.basis_vec(y));
            table.push(sparse(&i.space.quotient_coords(&v)));
        }
    }
    let unit = i.space.quotient_coords(a.unit());
    let labels = comp.iter().map(|&x| a.label(x).to_string()).collect();
    let q = Algebra::from_parts(f, d, table, unit, labels, None);
    let cols: Vec<Vec<Elem>> = (0..a.dim())
        .map(|x| i.space.quotient_coords(&a.basis_vec(x)))
        .collect();
    let proj = Matrix::from_cols(f, d, &cols);
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::group_algebra;
    use crate::groups::{FiniteGroup, Perm};
    use crate::linalg::Field;

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        let c: Vec<usize> = (1..=n).collect();
        Arc::new(FiniteGroup::from_permutations("C", &[Perm::from_cycles(n, &[c]).unwrap()]).unwrap())
    }

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(
            FiniteGroup::from_permutations(
                "S3",
                &[
                    Perm::from_cycles(3, &[vec![1, 2]]).unwrap(),
                    Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap(),
                ],
            )
            .unwrap(),
        )
    }

    fn augmentation(a: &Algebra) -> IdealBasis {
        let f = a.field();
        let vs: Vec<Vec<Elem>> = (1..a.dim())
            .map(|g| {
                let mut v = vec![0; a.dim()];
                v[0] = f.neg(1);
                v[g] = 1;
                v
            })
            .collect();
        IdealBasis::generated(a, &vs).unwrap()
    }

    #[test]
    fn radical_examples() {
        let a = group_algebra(&cyclic(3), &Field::new(2, 1).unwrap());
        assert!(radical(&a).is_zero());
        let a = group_algebra(&cyclic(2), &Field::new(2, 1).unwrap());
        let r = radical(&a);
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&[1, 1]));
        let a = group_algebra(&s3(), &Field::new(3, 1).unwrap());
        assert_eq!(radical(&a).dim(), 4);
    }

    #[test]
    fn products_and_powers() {
        let a = group_algebra(&cyclic(2), &Field::new(2, 1).unwrap());
        let j = augmentation(&a);
        assert!(ideal_product(&j, &IdealBasis::zero(&a)).unwrap().is_zero());
        assert!(ideal_power(&j, 2).is_zero());
        assert_eq!(ideal_power(&j, 0).dim(), 2);

        let a = group_algebra(&cyclic(3), &Field::new(3, 1).unwrap());
        let j = augmentation(&a);
        let dims: Vec<usize> = (1..=3).map(|n| ideal_power(&j, n).dim()).collect();
        // (g - 1)^n spans J^n
        let g_minus_1 = vec![2, 1, 0];
        let mut power = a.unit().to_vec();
        for (n, &d) in dims.iter().enumerate() {
            power = a.mul(&power, &g_minus_1);
            let oracle = IdealBasis::generated(&a, &[power.clone()]).unwrap();
            assert_eq!(oracle.dim(), d, "n = {}", n + 1);
        }
        assert_eq!(dims, vec![2, 1, 0]);
    }

    #[test]
    fn quotients() {
        let f = Field::new(3, 1).unwrap();
        let a = group_algebra(&s3(), &f);
        let (q, _) = quotient_algebra(&a, &IdealBasis::zero(&a)).unwrap();
        assert_eq!(q.dim(), 6);
        let (q, proj) = quotient_algebra(&a, &radical(&a)).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_commutative());
        assert!(radical(&q).is_zero());
        // projection is a unital algebra map
        assert_eq!(proj.mul_vec(a.unit()), q.unit().to_vec());
        for i in 0..6 {
            for j in 0..6 {
                let lhs = proj.mul_vec(&a.mul(&a.basis_vec(i), &a.basis_vec(j)));
                let rhs = q.mul(&proj.col(i), &proj.col(j));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn one_sided_ideals_are_rejected() {
        let a = group_algebra(&s3(), &Field::new(2, 1).unwrap());
        // left ideal generated by 1 + t for a transposition t
        let t = a.generators()[0];
        let mut v = vec![0; 6];
        v[0] = 1;
        v[t] = 1;
        let left = spin(a.field(), &[v], &[a.right_basis_matrix(a.generators()[0]), a.right_basis_matrix(a.generators()[1])]).unwrap();
        assert!(matches!(IdealBasis::new(&a, left), Err(Error::NotTwoSided)));
    }
}
