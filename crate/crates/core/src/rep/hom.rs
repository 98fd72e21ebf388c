//! Intertwiner spaces and isomorphism testing.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::meataxe::chop;
use super::module::AModule;
use crate::error::{Error, Result};
use crate::linalg::{Elem, Field, Matrix, Subspace};

/// Random combinations of a Hom basis tried before exhaustive search.
pub const ISO_TRIALS: usize = 64;

#[derive(Clone, Copy, Debug)]
enum Origin {
    Seed(usize),
    Image { op: usize, parent: usize },
}

/// All `X` (`r x n`) with `dst[i] X = X src[i]` for every `i`, where the
/// `src` operators act on `F^n` and the `dst` operators on `F^r`.
///
/// The source space is spun from standard basis seeds; `X` is determined by
/// the images of the seeds, and the remaining relations of the spin tree
/// cut out the solution space.
pub fn intertwiners(
    field: &Field,
    n: usize,
    r: usize,
    src: &[Matrix],
    dst: &[Matrix],
) -> Vec<Matrix> {
    assert_eq!(src.len(), dst.len());
    if n == 0 || r == 0 {
        return Vec::new();
    }
    // spin tree
    let mut span = Subspace::zero(field, n);
    let mut nodes: Vec<(Vec<Elem>, Origin)> = Vec::with_capacity(n);
    let mut seeds = 0usize;
    for s in 0..n {
        if span.is_full() {
            break;
        }
        let mut e = vec![0; n];
        e[s] = 1;
        if span.contains(&e) {
            continue;
        }
        let start = nodes.len();
        span.insert(&e);
        nodes.push((e, Origin::Seed(seeds)));
        seeds += 1;
        let mut k = start;
        while k < nodes.len() {
            for (i, op) in src.iter().enumerate() {
                let w = op.mul_vec(&nodes[k].0);
                if span.insert(&w) {
                    nodes.push((w, Origin::Image { op: i, parent: k }));
                }
            }
            k += 1;
        }
    }
    let unknowns = r * seeds;
    let mut t: Vec<Matrix> = Vec::with_capacity(n);
    for (_, origin) in &nodes {
        let m = match *origin {
            Origin::Seed(s) => {
                let mut m = Matrix::zeros(field, r, unknowns);
                for a in 0..r {
                    m.set(a, s * r + a, 1);
                }
                m
            }
            Origin::Image { op, parent } => dst[op].mul(&t[parent]),
        };
        t.push(m);
    }
    let w = Matrix::from_cols(field, n, &nodes.iter().map(|(v, _)| v.clone()).collect::<Vec<_>>());
    let winv = w.inverse().expect("spin tree spans");
    let mut created = vec![vec![false; n]; src.len()];
    for (_, origin) in &nodes {
        if let Origin::Image { op, parent } = *origin {
            created[op][parent] = true;
        }
    }
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for (i, op) in src.iter().enumerate() {
        for k in 0..n {
            if created[i][k] {
                continue;
            }
            let c = winv.mul_vec(&op.mul_vec(&nodes[k].0));
            let mut lhs = dst[i].mul(&t[k]);
            for (j, &cj) in c.iter().enumerate() {
                if cj != 0 {
                    lhs.add_scaled(field.neg(cj), &t[j]);
                }
            }
            for row in lhs.row_vecs() {
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let sols = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut e = vec![0; unknowns];
                e[i] = 1;
                e
            })
            .collect()
    } else {
        Matrix::from_rows(field, unknowns, &rows).kernel_basis()
    };
    sols.into_iter()
        .map(|u| {
            let cols: Vec<Vec<Elem>> = t.iter().map(|tk| tk.mul_vec(&u)).collect();
            Matrix::from_cols(field, r, &cols).mul(&winv)
        })
        .collect()
}

fn check_same(m: &AModule, n: &AModule) -> Result<()> {
    if !m.algebra().same(n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// Basis of `Hom_A(M, N)`.
pub fn hom_space(m: &AModule, n: &AModule) -> Result<Vec<Matrix>> {
    check_same(m, n)?;
    Ok(intertwiners(
        m.field(),
        m.dim(),
        n.dim(),
        &m.generator_matrices(),
        &n.generator_matrices(),
    ))
}

pub fn end_dim(m: &AModule) -> usize {
    hom_space(m, m).expect("same algebra").len()
}

/// Diagonal projections onto the grades of a graded basis.
pub fn grade_projections(field: &Field, grades: &[usize]) -> Vec<Matrix> {
    let top = grades.iter().copied().max().map_or(0, |g| g + 1);
    (0..top)
        .map(|g| {
            let mut p = Matrix::zeros(field, grades.len(), grades.len());
            for (i, &h) in grades.iter().enumerate() {
                if h == g {
                    p.set(i, i, 1);
                }
            }
            p
        })
        .collect()
}

/// Degree-preserving intertwiners between modules whose basis vectors carry
/// the given grades.
pub fn graded_hom_space(
    m: &AModule,
    m_grades: &[usize],
    n: &AModule,
    n_grades: &[usize],
) -> Result<Vec<Matrix>> {
    check_same(m, n)?;
    let f = m.field();
    let mut src = m.generator_matrices();
    let mut dst = n.generator_matrices();
    let top = m_grades.iter().chain(n_grades).copied().max().map_or(0, |g| g + 1);
    let mut pm = grade_projections(f, m_grades);
    let mut pn = grade_projections(f, n_grades);
    pm.resize(top, Matrix::zeros(f, m.dim(), m.dim()));
    pn.resize(top, Matrix::zeros(f, n.dim(), n.dim()));
    src.extend(pm);
    dst.extend(pn);
    Ok(intertwiners(f, m.dim(), n.dim(), &src, &dst))
}

#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Isomorphic(Matrix),
    NotIsomorphic,
    Undecided,
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }

    pub fn witness(&self) -> Option<&Matrix> {
        match self {
            IsoOutcome::Isomorphic(x) => Some(x),
            _ => None,
        }
    }
}

/// Searches a space of square matrices for an invertible element.
pub fn find_invertible(field: &Field, basis: &[Matrix], seed: u64) -> IsoOutcome {
    if basis.is_empty() {
        return IsoOutcome::NotIsomorphic;
    }
    if let Some(x) = basis.iter().find(|b| b.is_invertible()) {
        return IsoOutcome::Isomorphic(x.clone());
    }
    if basis.len() == 1 {
        return IsoOutcome::NotIsomorphic;
    }
    let (rows, cols) = (basis[0].rows(), basis[0].cols());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_TRIALS {
        let terms: Vec<(Elem, &Matrix)> = basis.iter().map(|b| (field.random(&mut rng), b)).collect();
        let x = Matrix::lincomb(field, rows, cols, &terms);
        if x.is_invertible() {
            return IsoOutcome::Isomorphic(x);
        }
    }
    if basis.len() == 2 {
        // det(a A + b B) is homogeneous of degree n; all of B and A + tB for
        // n + 1 values of t decide whether it vanishes identically
        let q = field.order() as usize;
        for t in field.elements().take(q.min(rows + 1)) {
            let x = Matrix::lincomb(field, rows, cols, &[(1, &basis[0]), (t, &basis[1])]);
            if x.is_invertible() {
                return IsoOutcome::Isomorphic(x);
            }
        }
        return IsoOutcome::NotIsomorphic;
    }
    IsoOutcome::Undecided
}

/// Decides `M ≅ N`: dimensions, composition factors, then a search for an
/// invertible element of `Hom(M, N)`.
pub fn is_isomorphic(m: &AModule, n: &AModule, seed: u64) -> Result<IsoOutcome> {
    check_same(m, n)?;
    if m.dim() != n.dim() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    if m.dim() == 0 {
        return Ok(IsoOutcome::Isomorphic(Matrix::zeros(m.field(), 0, 0)));
    }
    if m.actions() == n.actions() {
        return Ok(IsoOutcome::Isomorphic(Matrix::identity(m.field(), m.dim())));
    }
    let hom = hom_space(m, n)?;
    if hom.len() != end_dim(m) {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    if !chop(m, seed)?.same_as(&chop(n, seed)?)? {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    Ok(find_invertible(m.field(), &hom, seed))
}

/// Isomorphism by a degree-preserving intertwiner.
pub fn is_graded_isomorphic(
    m: &AModule,
    m_grades: &[usize],
    n: &AModule,
    n_grades: &[usize],
    seed: u64,
) -> Result<IsoOutcome> {
    check_same(m, n)?;
    let mut a = m_grades.to_vec();
    let mut b = n_grades.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    if m.dim() == 0 {
        return Ok(IsoOutcome::Isomorphic(Matrix::zeros(m.field(), 0, 0)));
    }
    let hom = graded_hom_space(m, m_grades, n, n_grades)?;
    let end = graded_hom_space(m, m_grades, m, m_grades)?;
    if hom.len() != end.len() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    Ok(find_invertible(m.field(), &hom, seed))
}

/// Whether `x` intertwines the two modules.
pub fn is_intertwiner(m: &AModule, n: &AModule, x: &Matrix) -> bool {
    x.rows() == n.dim()
        && x.cols() == m.dim()
        && m
            .algebra()
            .generators()
            .iter()
            .all(|&i| n.action(i).mul(x) == x.mul(m.action(i)))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{group_algebra, Algebra};
    use crate::groups::{FiniteGroup, Perm};

    fn s3(p: u64) -> Algebra {
        let g = FiniteGroup::from_permutations(
            "S3",
            &[
                Perm::from_cycles(3, &[vec![1, 2]]).unwrap(),
                Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        group_algebra(&Arc::new(g), &Field::new(p, 1).unwrap())
    }

    fn sign(a: &Algebra) -> AModule {
        let f = a.field();
        AModule::from_group_generators(a, &[Matrix::scalar(f, 1, f.neg(1)), Matrix::identity(f, 1)])
            .unwrap()
    }

    #[test]
    fn brute_force_agrees_on_small_cases() {
        // all 2x2 matrices over GF(2) against the solver
        let f = Field::new(2, 1).unwrap();
        let swap = Matrix::from_ints(&f, &[&[0, 1], &[1, 0]]);
        let sols = intertwiners(&f, 2, 2, std::slice::from_ref(&swap), std::slice::from_ref(&swap));
        let space = Subspace::span(&f, 4, sols.iter().map(|m| m.data().to_vec()));
        let mut count = 0;
        for bits in 0u32..16 {
            let x = Matrix::from_vec(&f, 2, 2, (0..4).map(|i| (bits >> i) & 1).collect());
            let ok = swap.mul(&x) == x.mul(&swap);
            assert_eq!(ok, space.contains(x.data()));
            count += ok as usize;
        }
        assert_eq!(count, 1 << space.dim());
    }

    #[test]
    fn schur_and_distinct_simples() {
        let a = s3(3);
        let triv = AModule::trivial(&a).unwrap();
        assert_eq!(end_dim(&triv), 1);
        assert!(hom_space(&triv, &sign(&a)).unwrap().is_empty());
    }

    #[test]
    fn regular_module_is_free() {
        let a = s3(3);
        let reg = AModule::regular(&a);
        for m in [AModule::trivial(&a).unwrap(), sign(&a), reg.clone()] {
            assert_eq!(hom_space(&reg, &m).unwrap().len(), m.dim());
        }
    }

    #[test]
    fn isomorphism_outcomes() {
        let a = s3(3);
        let reg = AModule::regular(&a);
        let mut p = Matrix::identity(a.field(), 6);
        p.set(0, 5, 2);
        p.set(3, 1, 1);
        let moved = reg.transport(&p).unwrap();
        let out = is_isomorphic(&reg, &moved, 0).unwrap();
        let x = out.witness().expect("isomorphic").clone();
        assert!(is_intertwiner(&reg, &moved, &x));
        assert!(x.is_invertible());
        assert!(matches!(
            is_isomorphic(&AModule::trivial(&a).unwrap(), &sign(&a), 0).unwrap(),
            IsoOutcome::NotIsomorphic
        ));
        assert!(matches!(
            is_isomorphic(&reg, &AModule::trivial(&a).unwrap(), 0).unwrap(),
            IsoOutcome::NotIsomorphic
        ));
    }

    #[test]
    fn graded_hom_respects_grades() {
        let f = Field::new(2, 1).unwrap();
        let a = s3(2);
        let triv = AModule::trivial(&a).unwrap();
        let two = triv.power(2);
        let g0 = graded_hom_space(&two, &[0, 1], &two, &[0, 1]).unwrap();
        assert_eq!(g0.len(), 2);
        let g1 = graded_hom_space(&two, &[0, 1], &two, &[1, 2]).unwrap();
        assert_eq!(g1.len(), 1);
        let _ = f;
    }
}
