use std::collections::VecDeque;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{CoordSystem, Elem, Field, Matrix, Subspace};

/// A finite-dimensional left module: one action matrix per algebra basis
/// element, acting on column vectors.
#[derive(Clone)]
pub struct AModule {
    algebra: Algebra,
    dim: usize,
    action: Arc<Vec<Matrix>>,
}

impl std::fmt::Debug for AModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AModule(dim {} over {:?})", self.dim, self.algebra)
    }
}

impl AModule {
    /// Checks shapes, the unit and every product of basis elements.
    pub fn new(algebra: &Algebra, action: Vec<Matrix>) -> Result<AModule> {
        if action.len() != algebra.dim() {
            return Err(Error::ModuleAxioms(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map_or(0, |m| m.rows());
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::ModuleAxioms("action matrices must be square of one size".into()));
        }
        if action.iter().any(|m| m.field() != algebra.field()) {
            return Err(Error::ModuleAxioms("action over a different field".into()));
        }
        let m = AModule::trusted(algebra, dim, action);
        m.check_axioms()?;
        Ok(m)
    }

    pub(crate) fn trusted(algebra: &Algebra, dim: usize, action: Vec<Matrix>) -> AModule {
        debug_assert_eq!(action.len(), algebra.dim());
        AModule {
            algebra: algebra.clone(),
            dim,
            action: Arc::new(action),
        }
    }

    /// The zero module.
    pub fn zero(algebra: &Algebra) -> AModule {
        let f = algebra.field();
        AModule::trusted(algebra, 0, vec![Matrix::zeros(f, 0, 0); algebra.dim()])
    }

    pub fn check_axioms(&self) -> Result<()> {
        let a = &self.algebra;
        let f = a.field();
        let n = self.dim;
        let unit = self.act(a.unit());
        if !unit.is_identity() {
            return Err(Error::ModuleAxioms("unit does not act as the identity".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                let mut rhs = Matrix::zeros(f, n, n);
                for &(k, c) in a.basis_product(i, j) {
                    rhs.add_scaled(c, &self.action[k as usize]);
                }
                if lhs != rhs {
                    return Err(Error::ModuleAxioms(format!(
                        "action of {} * {} does not match the structure constants",
                        a.label(i),
                        a.label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    /// The left regular module.
    pub fn regular(a: &Algebra) -> AModule {
        let action = (0..a.dim()).map(|i| a.left_basis_matrix(i)).collect();
        AModule::trusted(a, a.dim(), action)
    }

    /// Module over a group algebra from matrices for the group generators
    /// (in the order of `a.generators()`); relations are verified.
    pub fn from_group_generators(a: &Algebra, gens: &[Matrix]) -> Result<AModule> {
        let g = a.group().ok_or(Error::NotGroupPair)?;
        if gens.len() != g.generators().len() {
            return Err(Error::ModuleAxioms("one matrix per group generator expected".into()));
        }
        let f = a.field();
        let n = gens.first().map_or(0, |m| m.rows());
        if gens.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::ModuleAxioms("generator matrices must be square of one size".into()));
        }
        let mut rho: Vec<Option<Matrix>> = vec![None; g.order()];
        rho[0] = Some(Matrix::identity(f, n));
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (s, m) in g.generators().iter().zip(gens) {
                let y = g.mul(x, *s);
                let cand = rho[x].as_ref().unwrap().mul(m);
                match &rho[y] {
                    Some(existing) => {
                        if *existing != cand {
                            return Err(Error::ModuleAxioms(format!(
                                "relation fails at {} * {}",
                                g.label(x),
                                g.label(*s)
                            )));
                        }
                    }
                    None => {
                        rho[y] = Some(cand);
                        queue.push_back(y);
                    }
                }
            }
        }
        let action = rho.into_iter().map(|m| m.expect("generators generate")).collect();
        Ok(AModule::trusted(a, n, action))
    }

    /// The trivial module of a group algebra.
    pub fn trivial(a: &Algebra) -> Result<AModule> {
        a.group().ok_or(Error::NotGroupPair)?;
        let f = a.field();
        Ok(AModule::trusted(a, 1, vec![Matrix::identity(f, 1); a.dim()]))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, x: &[Elem]) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m.add_scaled(c, &self.action[i]);
            }
        }
        m
    }

    /// Matrices of the algebra generators.
    pub fn generator_matrices(&self) -> Vec<Matrix> {
        self.algebra
            .generators()
            .iter()
            .map(|&i| self.action[i].clone())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.algebra.is_group_algebra()
            && self.dim == 1
            && self.action.iter().all(|m| m.get(0, 0) == 1)
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        self.algebra
            .generators()
            .iter()
            .all(|&i| s.is_stable_under(&self.action[i]))
    }

    /// The submodule on the echelon basis of `s`.
    pub fn submodule(&self, s: &Subspace) -> Result<AModule> {
        if s.ambient() != self.dim || !self.is_submodule(s) {
            return Err(Error::ModuleAxioms("subspace is not a submodule".into()));
        }
        let f = self.field();
        let k = s.dim();
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vec<Elem>> = s
                    .basis()
                    .iter()
                    .map(|v| s.coords(&m.mul_vec(v)).expect("stable"))
                    .collect();
                Matrix::from_cols(f, k, &cols)
            })
            .collect();
        Ok(AModule::trusted(&self.algebra, k, action))
    }

    /// The quotient by a submodule, on the standard complement of `s`.
    pub fn quotient(&self, s: &Subspace) -> Result<AModule> {
        if s.ambient() != self.dim || !self.is_submodule(s) {
            return Err(Error::ModuleAxioms("subspace is not a submodule".into()));
        }
        let f = self.field();
        let comp = s.complement_indices();
        let k = comp.len();
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vec<Elem>> = comp
                    .iter()
                    .map(|&c| s.quotient_coords(&m.col(c)))
                    .collect();
                Matrix::from_cols(f, k, &cols)
            })
            .collect();
        Ok(AModule::trusted(&self.algebra, k, action))
    }

    /// `big / small` for submodules `small ⊆ big`.
    pub fn subquotient(&self, big: &Subspace, small: &Subspace) -> Result<AModule> {
        let sub = self.submodule(big)?;
        let inner: Vec<Vec<Elem>> = small
            .basis()
            .iter()
            .map(|v| big.coords(v))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::ModuleAxioms("subquotient of non-nested spaces".into()))?;
        sub.quotient(&Subspace::span(self.field(), big.dim(), inner))
    }

    /// Pull back along an algebra map given by its matrix
    /// (`self.algebra().dim() x small.dim()`).
    pub fn restrict_along(&self, small: &Algebra, map: &Matrix) -> AModule {
        assert_eq!(map.rows(), self.algebra.dim());
        assert_eq!(map.cols(), small.dim());
        let action = (0..small.dim()).map(|i| self.act(&map.col(i))).collect();
        AModule::trusted(small, self.dim, action)
    }

    /// Same algebra, with basis change: `P^{-1} ρ P` for invertible `P`.
    pub fn transport(&self, p: &Matrix) -> Result<AModule> {
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::ModuleAxioms("basis change is singular".into()))?;
        let action = self.action.iter().map(|m| pinv.mul(m).mul(p)).collect();
        Ok(AModule::trusted(&self.algebra, self.dim, action))
    }

    pub fn direct_sum(mods: &[AModule]) -> Result<AModule> {
        let first = mods.first().ok_or(Error::ZeroModule)?;
        if mods.iter().any(|m| !m.algebra.same(&first.algebra)) {
            return Err(Error::AlgebraMismatch);
        }
        let f = first.field();
        let dim = mods.iter().map(|m| m.dim).sum();
        let action = (0..first.algebra.dim())
            .map(|i| {
                let blocks: Vec<Matrix> = mods.iter().map(|m| m.action[i].clone()).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        Ok(AModule::trusted(&first.algebra, dim, action))
    }

    /// `V^{⊕n}`.
    pub fn power(&self, n: usize) -> AModule {
        if n == 0 {
            return AModule::zero(&self.algebra);
        }
        AModule::direct_sum(&vec![self.clone(); n]).expect("same algebra")
    }

    /// Diagonal tensor product over a group algebra; basis `x_i ⊗ y_j` at
    /// index `i * dim(other) + j`.
    pub fn tensor(&self, other: &AModule) -> Result<AModule> {
        if !self.algebra.same(&other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if !self.algebra.is_group_algebra() {
            return Err(Error::NotGroupPair);
        }
        let action = self
            .action
            .iter()
            .zip(other.action.iter())
            .map(|(a, b)| a.kron(b))
            .collect();
        Ok(AModule::trusted(&self.algebra, self.dim * other.dim, action))
    }

    /// Spin of `seeds` under the algebra.
    pub fn spin(&self, seeds: &[Vec<Elem>]) -> Subspace {
        crate::linalg::spin(self.field(), seeds, &self.generator_matrices())
            .expect("seed dimensions match the module")
    }

    /// Coordinates of the vectors of `sub` (a basis of a submodule) after a
    /// change to that basis; used when a submodule is given by arbitrary
    /// spanning vectors rather than an echelon basis.
    pub fn submodule_on(&self, vectors: Vec<Vec<Elem>>) -> Result<AModule> {
        let f = self.field();
        let k = vectors.len();
        let cs = CoordSystem::new(f, self.dim, vectors)?;
        let mut action = Vec::with_capacity(self.action.len());
        for m in self.action.iter() {
            let mut cols = Vec::with_capacity(k);
            for v in cs.vectors() {
                let c = cs
                    .coords(&m.mul_vec(v))
                    .ok_or_else(|| Error::ModuleAxioms("span is not a submodule".into()))?;
                cols.push(c);
            }
            action.push(Matrix::from_cols(f, k, &cols));
        }
        Ok(AModule::trusted(&self.algebra, k, action))
    }

    /// Truncated SHA-256 of the field, dimension and action matrices.
    pub fn hash_hex(&self) -> String {
        let f = self.field();
        let mut h = Sha256::new();
        h.update(f.characteristic().to_le_bytes());
        h.update(f.degree().to_le_bytes());
        h.update((self.dim as u64).to_le_bytes());
        for m in self.action.iter() {
            for &x in m.data() {
                h.update(x.to_le_bytes());
            }
        }
        hex::encode(&h.finalize()[..8])
    }
}

/// Truncated SHA-256 of a matrix; used for witnesses.
pub fn matrix_hash(m: &Matrix) -> String {
    let mut h = Sha256::new();
    h.update((m.rows() as u64).to_le_bytes());
    h.update((m.cols() as u64).to_le_bytes());
    for &x in m.data() {
        h.update(x.to_le_bytes());
    }
    hex::encode(&h.finalize()[..8])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group_algebra;
    use crate::groups::{FiniteGroup, Perm};

    fn s3_algebra(p: u64) -> Algebra {
        let g = Arc::new(
            FiniteGroup::from_permutations(
                "S3",
                &[
                    Perm::from_cycles(3, &[vec![1, 2]]).unwrap(),
                    Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap(),
                ],
            )
            .unwrap(),
        );
        group_algebra(&g, &Field::new(p, 1).unwrap())
    }

    #[test]
    fn regular_and_trivial_satisfy_axioms() {
        let a = s3_algebra(3);
        AModule::regular(&a).check_axioms().unwrap();
        AModule::trivial(&a).unwrap().check_axioms().unwrap();
    }

    #[test]
    fn generators_must_satisfy_relations() {
        let a = s3_algebra(3);
        let f = a.field().clone();
        let sign = AModule::from_group_generators(
            &a,
            &[Matrix::from_ints(&f, &[&[-1]]), Matrix::from_ints(&f, &[&[1]])],
        )
        .unwrap();
        assert_eq!(sign.dim(), 1);
        // a transposition acting with order 3 breaks a relation
        let bad = AModule::from_group_generators(
            &a,
            &[Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]), Matrix::identity(&f, 2)],
        );
        assert!(bad.is_err());
        let shape = AModule::new(&a, vec![Matrix::identity(&f, 2); 5]);
        assert!(shape.is_err());
    }

    #[test]
    fn submodules_and_quotients() {
        let a = s3_algebra(3);
        let reg = AModule::regular(&a);
        let f = a.field().clone();
        let sum = reg.spin(&[vec![1; 6]]);
        assert_eq!(sum.dim(), 1);
        let sub = reg.submodule(&sum).unwrap();
        assert!(sub.is_trivial());
        let q = reg.quotient(&sum).unwrap();
        assert_eq!(q.dim(), 5);
        q.check_axioms().unwrap();
        let not_sub = Subspace::span(&f, 6, [a.basis_vec(1)]);
        assert!(reg.submodule(&not_sub).is_err());
    }

    #[test]
    fn tensor_dimension_and_hash() {
        let a = s3_algebra(2);
        let reg = AModule::regular(&a);
        let t = reg.tensor(&AModule::trivial(&a).unwrap()).unwrap();
        assert_eq!(t.dim(), 6);
        assert_eq!(t.hash_hex(), reg.hash_hex());
        t.check_axioms().unwrap();
        let tt = reg.tensor(&reg).unwrap();
        assert_eq!(tt.dim(), 36);
    }
}
