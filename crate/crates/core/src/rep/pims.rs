//! Simple modules, projective indecomposables and the Cartan matrix.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::hom::{end_dim, hom_space};
use super::meataxe::chop;
use super::module::AModule;
use super::structure::head;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{CoordSystem, Elem, Matrix, Subspace};

/// Random elements tried per summand before giving up on splitting it.
pub const FITTING_ATTEMPTS: usize = 256;

/// Simple modules of `a` up to isomorphism, in canonical order.
pub fn simples(a: &Algebra, seed: u64) -> Result<Vec<AModule>> {
    let ms = chop(&AModule::regular(a), seed)?;
    Ok(ms.factors().iter().map(|(s, _)| s.clone()).collect())
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Fails with the degree of a field extension over the prime field that
/// splits all the given simples unless each has scalar endomorphisms only.
pub fn check_splitting(simples: &[AModule]) -> Result<()> {
    let Some(first) = simples.first() else { return Ok(()) };
    let mut l = 1u32;
    for s in simples {
        let e = end_dim(s) as u32;
        l = l / gcd(l, e) * e;
    }
    if l > 1 {
        return Err(Error::NonSplitting {
            suggested_degree: first.field().degree() * l,
        });
    }
    Ok(())
}

/// A projective indecomposable `P = A e` with its simple head.
#[derive(Clone, Debug)]
pub struct Pim {
    /// Index into the list returned by [`simples`].
    pub simple_index: usize,
    pub simple: AModule,
    pub projective: AModule,
    pub idempotent: Vec<Elem>,
}

fn left_ideal(a: &Algebra, e: &[Elem]) -> Subspace {
    let f = a.field();
    let vecs: Vec<Vec<Elem>> = (0..a.dim()).map(|i| a.mul(&a.basis_vec(i), e)).collect();
    Subspace::span(f, a.dim(), vecs)
}

fn split_idempotent(
    a: &Algebra,
    e: &[Elem],
    ae: &Subspace,
    rng: &mut ChaCha8Rng,
) -> Result<(Vec<Elem>, Vec<Elem>)> {
    let f = a.field();
    for _ in 0..FITTING_ATTEMPTS {
        let r: Vec<Elem> = (0..a.dim()).map(|_| f.random(rng)).collect();
        let x = a.mul(&a.mul(e, &r), e);
        let rx = a.right_mul_matrix(&x).pow(ae.dim() as u64);
        let image = ae.image(&rx);
        if image.is_zero() || image.dim() == ae.dim() {
            continue;
        }
        let kernel = Subspace::span(f, a.dim(), rx.kernel_basis()).intersection(ae);
        let mut vecs = kernel.basis().to_vec();
        let nk = vecs.len();
        vecs.extend(image.basis().iter().cloned());
        let cs = CoordSystem::new(f, a.dim(), vecs)?;
        let c = cs.coords(e).ok_or_else(|| Error::Undecided("Fitting parts do not span".into()))?;
        let mut in_kernel = c.clone();
        let mut in_image = c;
        in_kernel[nk..].iter_mut().for_each(|x| *x = 0);
        in_image[..nk].iter_mut().for_each(|x| *x = 0);
        let (u, v) = (cs.combine(&in_image), cs.combine(&in_kernel));
        return Ok((u, v));
    }
    Err(Error::Undecided(format!(
        "no Fitting splitting found after {FITTING_ATTEMPTS} random endomorphisms"
    )))
}

/// Projective covers of the simples, one per simple in the order of
/// [`simples`]; requires a splitting field.
pub fn pims(a: &Algebra, seed: u64) -> Result<Vec<Pim>> {
    let simples = simples(a, seed)?;
    check_splitting(&simples)?;
    let reg = AModule::regular(a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<Option<Pim>> = vec![None; simples.len()];
    let mut total = 0usize;
    let mut stack = vec![a.unit().to_vec()];
    while let Some(e) = stack.pop() {
        let ae = left_ideal(a, &e);
        if ae.is_zero() {
            continue;
        }
        let p = reg.submodule(&ae)?;
        let h = head(&p)?;
        if end_dim(&h) == 1 {
            let idx = simples
                .iter()
                .position(|s| s.dim() == h.dim() && !hom_space(s, &h).unwrap().is_empty())
                .ok_or_else(|| Error::Undecided("head outside the list of simples".into()))?;
            total += p.dim();
            if found[idx].is_none() {
                found[idx] = Some(Pim {
                    simple_index: idx,
                    simple: simples[idx].clone(),
                    projective: p,
                    idempotent: e,
                });
            }
            continue;
        }
        let (u, v) = split_idempotent(a, &e, &ae, &mut rng)?;
        stack.push(u);
        stack.push(v);
    }
    debug_assert_eq!(total, a.dim());
    found
        .into_iter()
        .map(|p| p.ok_or_else(|| Error::Undecided("a simple module has no projective cover".into())))
        .collect()
}

/// `C[i][j]` is the multiplicity of simple `j` in the cover of simple `i`.
pub fn cartan_matrix(pims: &[Pim], seed: u64) -> Result<Vec<Vec<usize>>> {
    let simples: Vec<AModule> = pims.iter().map(|p| p.simple.clone()).collect();
    pims.iter()
        .map(|p| chop(&p.projective, seed)?.counts_against(&simples))
        .collect()
}

/// Whether `e` is idempotent.
pub fn is_idempotent(a: &Algebra, e: &[Elem]) -> bool {
    a.mul(e, e) == e
}

/// Matrix whose columns span `A e`.
pub fn left_ideal_matrix(a: &Algebra, e: &[Elem]) -> Matrix {
    left_ideal(a, e).to_col_matrix()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::group_algebra;
    use crate::groups::{FiniteGroup, Perm};
    use crate::linalg::Field;

    fn group(name: &str, n: usize, gens: &[Vec<Vec<usize>>]) -> Arc<FiniteGroup> {
        let perms: Vec<Perm> = gens.iter().map(|c| Perm::from_cycles(n, c).unwrap()).collect();
        Arc::new(FiniteGroup::from_permutations(name, &perms).unwrap())
    }

    #[test]
    fn semisimple_pims_are_simple() {
        let g = group("S3", 3, &[vec![vec![1, 2]], vec![vec![1, 2, 3]]]);
        let a = group_algebra(&g, &Field::new(5, 1).unwrap());
        let ps = pims(&a, 0).unwrap();
        let dims: Vec<usize> = ps.iter().map(|p| p.projective.dim()).collect();
        assert_eq!(dims, vec![1, 1, 2]);
        for p in &ps {
            assert!(is_idempotent(&a, &p.idempotent));
        }
    }

    #[test]
    fn cyclic_two_group_is_local() {
        let g = group("C4", 4, &[vec![vec![1, 2, 3, 4]]]);
        let a = group_algebra(&g, &Field::new(2, 1).unwrap());
        let ps = pims(&a, 0).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].projective.dim(), 4);
    }

    #[test]
    fn non_splitting_field_is_reported() {
        let g = group("C3", 3, &[vec![vec![1, 2, 3]]]);
        let a = group_algebra(&g, &Field::new(2, 1).unwrap());
        assert_eq!(pims(&a, 0).unwrap_err(), Error::NonSplitting { suggested_degree: 2 });
        let a4 = group_algebra(&g, &Field::new(2, 2).unwrap());
        assert_eq!(pims(&a4, 0).unwrap().len(), 3);
    }

    #[test]
    fn s3_at_three() {
        let g = group("S3", 3, &[vec![vec![1, 2]], vec![vec![1, 2, 3]]]);
        let a = group_algebra(&g, &Field::new(3, 1).unwrap());
        let ps = pims(&a, 1).unwrap();
        assert_eq!(ps.len(), 2);
        for p in &ps {
            assert_eq!(p.projective.dim(), 3);
            assert!(is_idempotent(&a, &p.idempotent));
        }
        assert_eq!(cartan_matrix(&ps, 0).unwrap(), vec![vec![2, 1], vec![1, 2]]);
    }
}
