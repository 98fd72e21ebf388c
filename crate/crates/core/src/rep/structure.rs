//! Radicals, heads, socles and radical series.

use super::meataxe::composition_series_factors;
use super::module::AModule;
use crate::algebra::Algebra;
use crate::error::Result;
use crate::linalg::{Elem, Matrix, Subspace};

/// Jacobson radical of `a`: the elements acting as zero on every
/// composition factor of the regular module. Group algebras of p-groups in
/// characteristic p use the augmentation ideal directly.
pub(crate) fn compute_radical(a: &Algebra) -> Subspace {
    let f = a.field();
    let d = a.dim();
    if let Some(g) = a.group() {
        if g.is_p_group(f.characteristic() as u64) {
            let minus_one = f.neg(1);
            let vecs = (1..d).map(|i| {
                let mut v = vec![0; d];
                v[0] = minus_one;
                v[i] = 1;
                v
            });
            return Subspace::span(f, d, vecs);
        }
    }
    let factors = composition_series_factors(&AModule::regular(a), 0)
        .expect("composition series of the regular module");
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    let mut seen: Vec<AModule> = Vec::new();
    for s in factors {
        if seen.iter().any(|t| t.actions() == s.actions()) {
            continue;
        }
        let n = s.dim();
        for r in 0..n {
            for c in 0..n {
                rows.push((0..d).map(|i| s.action(i).get(r, c)).collect());
            }
        }
        seen.push(s);
    }
    let kernel = Matrix::from_rows(f, d, &rows).kernel_basis();
    Subspace::span(f, d, kernel)
}

/// `rad(A) V` for a subspace `V` of a module.
pub fn radical_times(m: &AModule, v: &Subspace) -> Subspace {
    let rad = m.algebra().radical_space();
    let mut out = Subspace::zero(m.field(), m.dim());
    let acts: Vec<Matrix> = rad.basis().iter().map(|j| m.act(j)).collect();
    for x in v.basis() {
        for a in &acts {
            out.insert(&a.mul_vec(x));
        }
    }
    out
}

/// `M ⊇ rad(A)M ⊇ rad(A)^2 M ⊇ ... ⊇ 0`, ending at the first zero term.
pub fn radical_filtration(m: &AModule) -> Vec<Subspace> {
    let mut out = vec![Subspace::full(m.field(), m.dim())];
    loop {
        let last = out.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = radical_times(m, last);
        out.push(next);
    }
    out
}

/// The layers `rad^n M / rad^{n+1} M`, omitting the final zero.
pub fn radical_layers(m: &AModule) -> Result<Vec<AModule>> {
    let filt = radical_filtration(m);
    filt.windows(2)
        .map(|w| m.subquotient(&w[0], &w[1]))
        .collect()
}

/// `M / rad(A) M`.
pub fn head(m: &AModule) -> Result<AModule> {
    let full = Subspace::full(m.field(), m.dim());
    m.quotient(&radical_times(m, &full))
}

/// Vectors killed by the radical.
pub fn socle_space(m: &AModule) -> Subspace {
    let f = m.field();
    let rad = m.algebra().radical_space();
    if rad.is_zero() {
        return Subspace::full(f, m.dim());
    }
    let rows: Vec<Vec<Elem>> = rad
        .basis()
        .iter()
        .flat_map(|j| m.act(j).row_vecs())
        .collect();
    Subspace::span(f, m.dim(), Matrix::from_rows(f, m.dim(), &rows).kernel_basis())
}

pub fn socle(m: &AModule) -> Result<AModule> {
    m.submodule(&socle_space(m))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::groups::{FiniteGroup, Perm};
    use crate::linalg::Field;
    use crate::rep::hom::end_dim;

    fn group(name: &str, n: usize, gens: &[Vec<Vec<usize>>]) -> Arc<FiniteGroup> {
        let perms: Vec<Perm> = gens.iter().map(|c| Perm::from_cycles(n, c).unwrap()).collect();
        Arc::new(FiniteGroup::from_permutations(name, &perms).unwrap())
    }

    #[test]
    fn semisimple_module() {
        let g = group("C3", 3, &[vec![vec![1, 2, 3]]]);
        let a = crate::algebra::group_algebra(&g, &Field::new(2, 1).unwrap());
        let reg = AModule::regular(&a);
        assert_eq!(head(&reg).unwrap().dim(), 3);
        assert_eq!(socle(&reg).unwrap().dim(), 3);
        assert_eq!(radical_filtration(&reg).len(), 2);
    }

    #[test]
    fn cyclic_two_group() {
        let g = group("C2", 2, &[vec![vec![1, 2]]]);
        let a = crate::algebra::group_algebra(&g, &Field::new(2, 1).unwrap());
        let reg = AModule::regular(&a);
        let h = head(&reg).unwrap();
        assert!(h.is_trivial());
        assert!(socle(&reg).unwrap().is_trivial());
        let dims: Vec<usize> = radical_filtration(&reg).iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![2, 1, 0]);
    }

    #[test]
    fn s3_radical_and_projective_layers() {
        let g = group("S3", 3, &[vec![vec![1, 2]], vec![vec![1, 2, 3]]]);
        let f = Field::new(3, 1).unwrap();
        let a = crate::algebra::group_algebra(&g, &f);
        assert_eq!(a.radical_space().dim(), 4);
        // e = (1 + t)/2 for the transposition t; kG e is the cover of k
        let t = g.generators()[0];
        let mut e = vec![0; 6];
        e[0] = f.inv(2);
        e[t] = f.inv(2);
        let reg = AModule::regular(&a);
        let vecs: Vec<Vec<Elem>> = (0..6).map(|i| a.mul(&a.basis_vec(i), &e)).collect();
        let p = reg.submodule(&Subspace::span(&f, 6, vecs)).unwrap();
        assert_eq!(p.dim(), 3);
        let layers = radical_layers(&p).unwrap();
        let kinds: Vec<(usize, bool)> = layers.iter().map(|l| (l.dim(), l.is_trivial())).collect();
        assert_eq!(kinds, vec![(1, true), (1, false), (1, true)]);
        assert_eq!(end_dim(&layers[1]), 1);
        assert_eq!(socle(&p).unwrap().dim(), 1);
    }
}
