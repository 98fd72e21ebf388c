//! Finite-dimensional associative algebras given by structure constants.

pub mod graded;
pub mod ideal;
pub mod pair;
pub mod text;

use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{spin, Elem, Field, Matrix, Subspace};

pub use graded::{graded_algebra, graded_embedding, Filtration, GradedAlgebra};
pub use ideal::{ideal_power, ideal_product, quotient_algebra, radical, IdealBasis};
pub use pair::{pair_normality_check, SubalgebraPair};

/// Above this dimension the associativity check samples triples.
pub const FULL_CHECK_DIM: usize = 300;
const SAMPLED_TRIPLES: usize = 10_000;

/// How thoroughly a constructor verifies the algebra axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomCheck {
    /// Every basis triple up to [`FULL_CHECK_DIM`], sampled above.
    Auto,
    /// Every basis triple regardless of dimension.
    Strict,
}

/// An associative unital algebra. Cloning is cheap and clones compare as the
/// same algebra.
#[derive(Clone)]
pub struct Algebra(Arc<Inner>);

struct Inner {
    field: Field,
    dim: usize,
    /// `table[i * dim + j]` lists the nonzero coordinates of `b_i b_j`.
    table: Vec<Vec<(u32, Elem)>>,
    unit: Vec<Elem>,
    labels: Vec<String>,
    group: Option<Arc<FiniteGroup>>,
    generators: OnceLock<Vec<usize>>,
    radical: OnceLock<Subspace>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {} over {})", self.0.dim, self.0.field)
    }
}

impl Algebra {
    /// Builds an algebra from sparse structure constants and checks the
    /// axioms.
    pub fn new(
        field: &Field,
        dim: usize,
        table: Vec<Vec<(u32, Elem)>>,
        unit: Vec<Elem>,
        labels: Vec<String>,
        check: AxiomCheck,
    ) -> Result<Algebra> {
        if table.len() != dim * dim || unit.len() != dim || labels.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "structure constants for dimension {dim}"
            )));
        }
        for entry in &table {
            if entry.iter().any(|&(k, c)| k as usize >= dim || c >= field.order()) {
                return Err(Error::DimensionMismatch("structure constant out of range".into()));
            }
        }
        let table = table.into_iter().map(normalize).collect();
        let a = Algebra::from_parts(field, dim, table, unit, labels, None);
        a.check_unit()?;
        a.check_associative(check)?;
        Ok(a)
    }

    /// Builds an algebra from a dense product rule `(i, j) -> b_i b_j`.
    pub fn from_products<F>(
        field: &Field,
        dim: usize,
        mut product: F,
        unit: Vec<Elem>,
        labels: Vec<String>,
        check: AxiomCheck,
    ) -> Result<Algebra>
    where
        F: FnMut(usize, usize) -> Vec<Elem>,
    {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch("product vector length".into()));
                }
                table.push(sparse(&v));
            }
        }
        Algebra::new(field, dim, table, unit, labels, check)
    }

    pub(crate) fn from_parts(
        field: &Field,
        dim: usize,
        table: Vec<Vec<(u32, Elem)>>,
        unit: Vec<Elem>,
        labels: Vec<String>,
        group: Option<Arc<FiniteGroup>>,
    ) -> Algebra {
        Algebra(Arc::new(Inner {
            field: field.clone(),
            dim,
            table,
            unit,
            labels,
            group,
            generators: OnceLock::new(),
            radical: OnceLock::new(),
        }))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn unit(&self) -> &[Elem] {
        &self.0.unit
    }

    /// The group when this is a group algebra; basis element `i` is group
    /// element `i`.
    pub fn group(&self) -> Option<&Arc<FiniteGroup>> {
        self.0.group.as_ref()
    }

    pub fn is_group_algebra(&self) -> bool {
        self.0.group.is_some()
    }

    /// True for the same allocation or identical structure constants.
    pub fn same(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.dim == other.0.dim
                && self.0.unit == other.0.unit
                && self.0.table == other.0.table)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(u32, Elem)] {
        &self.0.table[i * self.0.dim + j]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Elem> {
        let mut v = vec![0; self.0.dim];
        v[i] = 1;
        v
    }

    pub fn mul(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        let f = &self.0.field;
        let d = self.0.dim;
        let mut out = vec![0; d];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in &self.0.table[i * d + j] {
                    let k = k as usize;
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    /// Matrix of `y -> x y` on column vectors.
    pub fn left_mul_matrix(&self, x: &[Elem]) -> Matrix {
        let d = self.0.dim;
        let cols: Vec<Vec<Elem>> = (0..d).map(|j| self.mul(x, &self.basis_vec(j))).collect();
        Matrix::from_cols(&self.0.field, d, &cols)
    }

    /// Matrix of `y -> y x` on column vectors.
    pub fn right_mul_matrix(&self, x: &[Elem]) -> Matrix {
        let d = self.0.dim;
        let cols: Vec<Vec<Elem>> = (0..d).map(|j| self.mul(&self.basis_vec(j), x)).collect();
        Matrix::from_cols(&self.0.field, d, &cols)
    }

    /// Left multiplication by `b_i`; the regular action of a basis element.
    pub fn left_basis_matrix(&self, i: usize) -> Matrix {
        let d = self.0.dim;
        let f = &self.0.field;
        let mut m = Matrix::zeros(f, d, d);
        for j in 0..d {
            for &(k, c) in self.basis_product(i, j) {
                m.set(k as usize, j, c);
            }
        }
        m
    }

    pub fn right_basis_matrix(&self, i: usize) -> Matrix {
        let d = self.0.dim;
        let f = &self.0.field;
        let mut m = Matrix::zeros(f, d, d);
        for j in 0..d {
            for &(k, c) in self.basis_product(j, i) {
                m.set(k as usize, j, c);
            }
        }
        m
    }

    /// Basis indices generating the algebra together with the unit. Group
    /// algebras use the group generators; otherwise chosen greedily.
    pub fn generators(&self) -> &[usize] {
        self.0.generators.get_or_init(|| {
            if let Some(g) = &self.0.group {
                return g.generators().to_vec();
            }
            let d = self.0.dim;
            let f = &self.0.field;
            let mut gens = Vec::new();
            let mut ops = Vec::new();
            let unit = vec![self.0.unit.clone()];
            let mut closure = spin(f, &unit, &ops).expect("dimensions agree");
            for i in 0..d {
                if closure.is_full() {
                    break;
                }
                if !closure.contains(&self.basis_vec(i)) {
                    gens.push(i);
                    ops.push(self.left_basis_matrix(i));
                    closure = spin(f, &unit, &ops).expect("dimensions agree");
                }
            }
            gens
        })
    }

    /// Echelon basis of the Jacobson radical, computed once.
    pub fn radical_space(&self) -> &Subspace {
        self.0
            .radical
            .get_or_init(|| crate::rep::structure::compute_radical(self))
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.0.dim;
        (0..d).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    fn check_unit(&self) -> Result<()> {
        let u = &self.0.unit;
        for i in 0..self.0.dim {
            let b = self.basis_vec(i);
            if self.mul(u, &b) != b || self.mul(&b, u) != b {
                return Err(Error::NotUnital);
            }
        }
        Ok(())
    }

    fn triple_ok(&self, i: usize, j: usize, k: usize) -> bool {
        let bi = self.basis_vec(i);
        let bj = self.basis_vec(j);
        let bk = self.basis_vec(k);
        self.mul(&self.mul(&bi, &bj), &bk) == self.mul(&bi, &self.mul(&bj, &bk))
    }

    fn check_associative(&self, check: AxiomCheck) -> Result<()> {
        let d = self.0.dim;
        if check == AxiomCheck::Strict || d <= FULL_CHECK_DIM {
            for i in 0..d {
                for j in 0..d {
                    let bij = self.mul(&self.basis_vec(i), &self.basis_vec(j));
                    for k in 0..d {
                        let bk = self.basis_vec(k);
                        let lhs = self.mul(&bij, &bk);
                        let rhs = self.mul(&self.basis_vec(i), &self.mul(&self.basis_vec(j), &bk));
                        if lhs != rhs {
                            return Err(Error::NotAssociative(i, j, k));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..SAMPLED_TRIPLES {
                let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
                if !self.triple_ok(i, j, k) {
                    return Err(Error::NotAssociative(i, j, k));
                }
            }
        }
        Ok(())
    }
}

/// Group algebra `F[G]` with basis indexed by the group elements.
pub fn group_algebra(g: &Arc<FiniteGroup>, field: &Field) -> Algebra {
    let n = g.order();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(vec![(g.mul(a, b) as u32, 1)]);
        }
    }
    let mut unit = vec![0; n];
    unit[0] = 1;
    Algebra::from_parts(
        field,
        n,
        table,
        unit,
        g.labels().to_vec(),
        Some(Arc::clone(g)),
    )
}

pub(crate) fn sparse(v: &[Elem]) -> Vec<(u32, Elem)> {
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| (k as u32, c))
        .collect()
}

fn normalize(mut entry: Vec<(u32, Elem)>) -> Vec<(u32, Elem)> {
    entry.retain(|&(_, c)| c != 0);
    entry.sort_unstable();
    entry.dedup_by_key(|e| e.0);
    entry
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Perm;

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        let c: Vec<usize> = (1..=n).collect();
        Arc::new(FiniteGroup::from_permutations("C", &[Perm::from_cycles(n, &[c]).unwrap()]).unwrap())
    }

    #[test]
    fn group_algebra_examples() {
        let f = Field::new(2, 1).unwrap();
        let triv = Arc::new(FiniteGroup::from_permutations("1", &[Perm::identity(1)]).unwrap());
        assert_eq!(group_algebra(&triv, &f).dim(), 1);
        let a = group_algebra(&cyclic(2), &f);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.mul(&[0, 1], &[0, 1]), vec![1, 0]);
        let s3 = Arc::new(
            FiniteGroup::from_permutations(
                "S3",
                &[
                    Perm::from_cycles(3, &[vec![1, 2]]).unwrap(),
                    Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap(),
                ],
            )
            .unwrap(),
        );
        assert_eq!(group_algebra(&s3, &Field::new(3, 1).unwrap()).dim(), 6);
    }

    #[test]
    fn rejects_non_associative_and_non_unital() {
        let f = Field::new(3, 1).unwrap();
        // b1 b1 = b0 + b1 with b0 the unit is fine; break it with b1 b1 = 2 b1
        // while b0 is not a unit.
        let bad = Algebra::from_products(
            &f,
            2,
            |i, j| match (i, j) {
                (0, 0) => vec![1, 0],
                (0, 1) => vec![0, 1],
                (1, 0) => vec![0, 0],
                _ => vec![0, 1],
            },
            vec![1, 0],
            vec!["1".into(), "x".into()],
            AxiomCheck::Auto,
        );
        assert!(matches!(bad, Err(Error::NotUnital)));

        let nonassoc = Algebra::from_products(
            &f,
            3,
            |i, j| {
                let mut v = vec![0; 3];
                match (i, j) {
                    (0, k) | (k, 0) => v[k] = 1,
                    (1, 1) => v[2] = 1,
                    (1, 2) => v[1] = 1,
                    (2, 1) => v[0] = 1,
                    _ => {}
                }
                v
            },
            vec![1, 0, 0],
            vec!["1".into(), "x".into(), "y".into()],
            AxiomCheck::Auto,
        );
        assert!(matches!(nonassoc, Err(Error::NotAssociative(..))));
    }

    #[test]
    fn greedy_generators_generate() {
        let f = Field::new(2, 1).unwrap();
        // k[x]/(x^3) with basis 1, x, x^2
        let a = Algebra::from_products(
            &f,
            3,
            |i, j| {
                let mut v = vec![0; 3];
                if i + j < 3 {
                    v[i + j] = 1;
                }
                v
            },
            vec![1, 0, 0],
            vec!["1".into(), "x".into(), "x2".into()],
            AxiomCheck::Strict,
        )
        .unwrap();
        assert_eq!(a.generators(), &[1]);
        assert!(a.is_commutative());
    }
}
