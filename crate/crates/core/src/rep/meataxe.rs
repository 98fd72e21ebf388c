//! Norton's irreducibility test and composition series.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::hom_space;
use super::module::AModule;
use crate::error::{Error, Result};
use crate::linalg::{spin, Elem, Matrix, Poly, Subspace};

/// Random elements tried before giving up on a module.
pub const MEATAXE_ATTEMPTS: usize = 256;

/// The random element and characteristic-polynomial factor that proved
/// irreducibility.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub element: Vec<Elem>,
    pub factor: Poly,
    pub attempts: usize,
}

#[derive(Clone, Debug)]
pub enum Irreducibility {
    Irreducible(Certificate),
    /// A proper nonzero submodule.
    Reducible(Subspace),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible(_))
    }
}

pub fn is_irreducible(m: &AModule, seed: u64) -> Result<Irreducibility> {
    if m.dim() == 0 {
        return Err(Error::ZeroModule);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    split(m, &mut rng)
}

fn random_element<R: Rng + ?Sized>(m: &AModule, rng: &mut R) -> (Vec<Elem>, Matrix) {
    let f = m.field();
    let x: Vec<Elem> = (0..m.algebra().dim()).map(|_| f.random(rng)).collect();
    let theta = m.act(&x);
    (x, theta)
}

/// Annihilator in `F^n` of a subspace of the dual.
fn annihilator(w: &Subspace) -> Subspace {
    let kernel = w.to_matrix().kernel_basis();
    Subspace::span(w.field(), w.ambient(), kernel)
}

pub(crate) fn split<R: Rng + ?Sized>(m: &AModule, rng: &mut R) -> Result<Irreducibility> {
    let n = m.dim();
    let f = m.field().clone();
    if n == 1 {
        return Ok(Irreducibility::Irreducible(Certificate {
            element: m.algebra().unit().to_vec(),
            factor: Poly::new(vec![f.neg(1), 1]),
            attempts: 0,
        }));
    }
    let gens = m.generator_matrices();
    let gens_t: Vec<Matrix> = gens.iter().map(|g| g.transpose()).collect();
    for attempt in 1..=MEATAXE_ATTEMPTS {
        let (x, theta) = random_element(m, rng);
        let mut factors = theta.charpoly().factor(&f, rng);
        factors.sort_by(|a, b| match a.0.degree().cmp(&b.0.degree()) {
            Ordering::Equal => a.0.coeffs().cmp(b.0.coeffs()),
            o => o,
        });
        for (p, _) in factors {
            let ft = theta.eval_poly(&p);
            let ker = ft.kernel_basis();
            let Some(v) = ker.first() else { continue };
            let s = spin(&f, std::slice::from_ref(v), &gens)?;
            if s.dim() < n {
                return Ok(Irreducibility::Reducible(s));
            }
            let ker_t = ft.transpose().kernel_basis();
            let w = spin(&f, &ker_t[..1], &gens_t)?;
            if w.dim() < n {
                return Ok(Irreducibility::Reducible(annihilator(&w)));
            }
            if ker.len() == p.degree().unwrap_or(0) {
                return Ok(Irreducibility::Irreducible(Certificate {
                    element: x,
                    factor: p,
                    attempts: attempt,
                }));
            }
        }
    }
    Err(Error::Undecided(format!(
        "irreducibility undecided after {MEATAXE_ATTEMPTS} random elements"
    )))
}

/// Sort key that orders simple modules independently of their basis.
pub fn canonical_key(m: &AModule) -> (usize, bool, Vec<Elem>, Vec<usize>) {
    let traces = m.actions().iter().map(|a| a.trace()).collect();
    let ranks = m.actions().iter().map(|a| a.rank()).collect();
    (m.dim(), !m.is_trivial(), traces, ranks)
}

/// Composition factors up to isomorphism, with multiplicities, in the
/// order given by [`canonical_key`].
#[derive(Clone, Debug)]
pub struct CompositionMultiset {
    factors: Vec<(AModule, usize)>,
}

fn simples_isomorphic(a: &AModule, b: &AModule) -> Result<bool> {
    if a.dim() != b.dim() {
        return Ok(false);
    }
    Ok(!hom_space(a, b)?.is_empty())
}

impl CompositionMultiset {
    /// Groups irreducible modules into isomorphism classes.
    pub fn from_irreducibles(mods: Vec<AModule>) -> Result<CompositionMultiset> {
        let mut factors: Vec<(AModule, usize)> = Vec::new();
        'outer: for s in mods {
            for (rep, mult) in factors.iter_mut() {
                if simples_isomorphic(rep, &s)? {
                    *mult += 1;
                    continue 'outer;
                }
            }
            factors.push((s, 1));
        }
        factors.sort_by_cached_key(|(s, _)| canonical_key(s));
        Ok(CompositionMultiset { factors })
    }

    pub fn factors(&self) -> &[(AModule, usize)] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|(s, m)| s.dim() * m).sum()
    }

    /// Total number of factors counted with multiplicity.
    pub fn length(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    /// Multiplicity of the class of the simple module `s`.
    pub fn multiplicity(&self, s: &AModule) -> Result<usize> {
        for (rep, mult) in &self.factors {
            if simples_isomorphic(rep, s)? {
                return Ok(*mult);
            }
        }
        Ok(0)
    }

    /// Multiset equality, matching representatives by isomorphism.
    pub fn same_as(&self, other: &CompositionMultiset) -> Result<bool> {
        if self.factors.len() != other.factors.len() || self.total_dim() != other.total_dim() {
            return Ok(false);
        }
        for (rep, mult) in &self.factors {
            if other.multiplicity(rep)? != *mult {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiset union.
    pub fn union(&self, other: &CompositionMultiset) -> Result<CompositionMultiset> {
        let mut all = Vec::new();
        for (s, m) in self.factors.iter().chain(other.factors.iter()) {
            for _ in 0..*m {
                all.push(s.clone());
            }
        }
        CompositionMultiset::from_irreducibles(all)
    }

    /// Multiplicities against a fixed list of pairwise non-isomorphic
    /// simples; fails if a factor is not in the list.
    pub fn counts_against(&self, simples: &[AModule]) -> Result<Vec<usize>> {
        let mut out = vec![0; simples.len()];
        for (rep, mult) in &self.factors {
            let mut found = false;
            for (i, s) in simples.iter().enumerate() {
                if simples_isomorphic(s, rep)? {
                    out[i] += mult;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::Undecided("composition factor outside the list of simples".into()));
            }
        }
        Ok(out)
    }
}

/// Irreducible subquotients of a composition series, in series order.
pub fn composition_series_factors(m: &AModule, seed: u64) -> Result<Vec<AModule>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.dim() == 0 {
            continue;
        }
        match split(&x, &mut rng)? {
            Irreducibility::Irreducible(_) => out.push(x),
            Irreducibility::Reducible(s) => {
                // quotient is pushed first so the submodule is chopped first
                stack.push(x.quotient(&s)?);
                stack.push(x.submodule(&s)?);
            }
        }
    }
    Ok(out)
}

/// Composition factors with multiplicities.
pub fn chop(m: &AModule, seed: u64) -> Result<CompositionMultiset> {
    CompositionMultiset::from_irreducibles(composition_series_factors(m, seed)?)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{group_algebra, Algebra};
    use crate::groups::{FiniteGroup, Perm};
    use crate::linalg::Field;

    fn algebra(name: &str, n: usize, gens: &[&[&[usize]]], p: u64, k: u32) -> Algebra {
        let perms: Vec<Perm> = gens
            .iter()
            .map(|c| {
                let cycles: Vec<Vec<usize>> = c.iter().map(|x| x.to_vec()).collect();
                Perm::from_cycles(n, &cycles).unwrap()
            })
            .collect();
        let g = Arc::new(FiniteGroup::from_permutations(name, &perms).unwrap());
        group_algebra(&g, &Field::new(p, k).unwrap())
    }

    #[test]
    fn one_dimensional_and_sums() {
        let a = algebra("S3", 3, &[&[&[1, 2]], &[&[1, 2, 3]]], 3, 1);
        let triv = AModule::trivial(&a).unwrap();
        assert!(is_irreducible(&triv, 0).unwrap().is_irreducible());
        let sum = AModule::direct_sum(&[triv.clone(), triv.clone()]).unwrap();
        match is_irreducible(&sum, 0).unwrap() {
            Irreducibility::Reducible(s) => assert_eq!(s.dim(), 1),
            _ => panic!("direct sum reported irreducible"),
        }
        assert!(matches!(is_irreducible(&AModule::zero(&a), 0), Err(Error::ZeroModule)));
    }

    #[test]
    fn regular_a3_at_three_is_reducible() {
        let a = algebra("A3", 3, &[&[&[1, 2, 3]]], 3, 1);
        let reg = AModule::regular(&a);
        match is_irreducible(&reg, 1).unwrap() {
            Irreducibility::Reducible(s) => {
                assert!(s.dim() > 0 && s.dim() < 3);
                assert!(reg.is_submodule(&s));
            }
            _ => panic!("regular module reported irreducible"),
        }
    }

    #[test]
    fn natural_s3_module_over_gf2_is_irreducible() {
        // the 2-dimensional reflection module of S3 at p = 2
        let a = algebra("S3", 3, &[&[&[1, 2]], &[&[1, 2, 3]]], 2, 1);
        let f = a.field().clone();
        let reg = AModule::regular(&a);
        let factors = chop(&reg, 0).unwrap();
        assert_eq!(factors.total_dim(), 6);
        let dims: Vec<(usize, usize)> = factors.factors().iter().map(|(s, m)| (s.dim(), *m)).collect();
        assert_eq!(dims, vec![(1, 2), (2, 2)]);
        let two = &factors.factors()[1].0;
        assert!(is_irreducible(two, 5).unwrap().is_irreducible());
        let _ = f;
    }

    #[test]
    fn chop_examples() {
        let c2 = algebra("C2", 2, &[&[&[1, 2]]], 2, 1);
        let m = chop(&AModule::regular(&c2), 0).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.factors()[0].1, 2);
        assert!(m.factors()[0].0.is_trivial());

        let s3 = algebra("S3", 3, &[&[&[1, 2]], &[&[1, 2, 3]]], 3, 1);
        let m = chop(&AModule::regular(&s3), 0).unwrap();
        let dims: Vec<(usize, usize, bool)> = m
            .factors()
            .iter()
            .map(|(s, k)| (s.dim(), *k, s.is_trivial()))
            .collect();
        assert_eq!(dims, vec![(1, 3, true), (1, 3, false)]);
    }

    #[test]
    fn non_absolutely_irreducible_is_found_irreducible() {
        // C3 over GF(2): the 2-dimensional simple has endomorphisms GF(4)
        let c3 = algebra("C3", 3, &[&[&[1, 2, 3]]], 2, 1);
        let m = chop(&AModule::regular(&c3), 3).unwrap();
        let dims: Vec<(usize, usize)> = m.factors().iter().map(|(s, k)| (s.dim(), *k)).collect();
        assert_eq!(dims, vec![(1, 1), (2, 1)]);
    }
}
