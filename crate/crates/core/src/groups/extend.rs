//! Extending an absolutely irreducible `kN`-module to `G`.

use super::finite::Subgroup;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Elem, Matrix};
use crate::rep::hom::{end_dim, intertwiners};
use crate::rep::meataxe::is_irreducible;
use crate::rep::AModule;

/// Scalar assignments tried before the extension search gives up.
pub const EXTENSION_SCALAR_CAP: u64 = 1 << 16;

/// A `kG`-module structure on `L` restricting to the given `kN`-action.
///
/// `l` is a module over the group algebra of `n` (element `i` of that group
/// is `n.elements()[i]`). For each generator `s ∉ N` the intertwiner
/// `ρ(s) ρ_L(m) = ρ_L(s m s^{-1}) ρ(s)` is unique up to a scalar; scalars
/// are searched until every relation of the multiplication table holds.
pub fn extend_irreducible_to_g(kg: &Algebra, n: &Subgroup, l: &AModule) -> Result<AModule> {
    let g = kg.group().ok_or(Error::NotGroupPair)?.clone();
    let kn = l.algebra();
    let ng = kn.group().ok_or(Error::NotGroupPair)?;
    if ng.order() != n.order() || kn.field() != kg.field() {
        return Err(Error::AlgebraMismatch);
    }
    if l.dim() == 0 {
        return Err(Error::ZeroModule);
    }
    if !is_irreducible(l, 0)?.is_irreducible() || end_dim(l) != 1 {
        return Err(Error::NotAbsolutelyIrreducible);
    }
    let f = kg.field().clone();
    let d = l.dim();
    let src: Vec<Matrix> = ng.generators().iter().map(|&i| l.action(i).clone()).collect();
    let rho_l = |x: usize| l.action(n.position(x).expect("element of N"));

    let mut outside: Vec<(usize, Matrix)> = Vec::new();
    for &s in g.generators() {
        if n.contains(s) {
            continue;
        }
        let dst: Vec<Matrix> = ng
            .generators()
            .iter()
            .map(|&i| rho_l(g.conj(s, n.elements()[i])).clone())
            .collect();
        let xs = intertwiners(&f, d, d, &src, &dst);
        let x = xs
            .into_iter()
            .find(|x| x.is_invertible())
            .ok_or_else(|| Error::NotStable {
                generator: g.label(s).to_string(),
            })?;
        outside.push((s, x));
    }

    let r = outside.len() as u32;
    let units = f.order() as u64 - 1;
    let combos = units.checked_pow(r).unwrap_or(u64::MAX);
    if combos > EXTENSION_SCALAR_CAP {
        return Err(Error::Undecided(format!(
            "{combos} scalar assignments exceed the search cap"
        )));
    }
    let nonzero: Vec<Elem> = f.elements().filter(|&x| x != 0).collect();
    let mut last_failure = String::new();
    for idx in 0..combos {
        let mut rest = idx;
        let scalars: Vec<Elem> = (0..r)
            .map(|_| {
                let c = nonzero[(rest % units) as usize];
                rest /= units;
                c
            })
            .collect();
        let mut gen_mats: Vec<(usize, Matrix)> = Vec::with_capacity(g.generators().len());
        let mut k = 0;
        for &s in g.generators() {
            if n.contains(s) {
                gen_mats.push((s, rho_l(s).clone()));
            } else {
                gen_mats.push((s, outside[k].1.scale(scalars[k])));
                k += 1;
            }
        }
        match assemble(&g, n, &rho_l, &gen_mats) {
            Ok(rho) => {
                let action = rho;
                return Ok(AModule::trusted(kg, d, action));
            }
            Err(rel) => last_failure = rel,
        }
    }
    Err(Error::ExtensionObstructed {
        relation: last_failure,
    })
}

/// Propagates generator matrices from the `N`-action over the whole group,
/// returning the first relation `x * s` that fails.
fn assemble<'a, F>(
    g: &super::FiniteGroup,
    n: &Subgroup,
    rho_l: &F,
    gen_mats: &[(usize, Matrix)],
) -> std::result::Result<Vec<Matrix>, String>
where
    F: Fn(usize) -> &'a Matrix,
{
    let mut rho: Vec<Option<Matrix>> = vec![None; g.order()];
    let mut queue = std::collections::VecDeque::new();
    for &x in n.elements() {
        rho[x] = Some(rho_l(x).clone());
        queue.push_back(x);
    }
    while let Some(x) = queue.pop_front() {
        for (s, m) in gen_mats {
            let y = g.mul(x, *s);
            let cand = rho[x].as_ref().unwrap().mul(m);
            match &rho[y] {
                Some(existing) => {
                    if *existing != cand {
                        return Err(format!("{} * {}", g.label(x), g.label(*s)));
                    }
                }
                None => {
                    rho[y] = Some(cand);
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(rho.into_iter().map(|m| m.expect("generators generate")).collect())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::group_algebra;
    use crate::groups::{FiniteGroup, Perm};
    use crate::linalg::Field;

    fn perm(n: usize, c: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, &c.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn s3_a3(p: u64, k: u32) -> (Algebra, Subgroup, Algebra) {
        let g = Arc::new(
            FiniteGroup::from_permutations("S3", &[perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])]).unwrap(),
        );
        let three = g.generators()[1];
        let n = Subgroup::generated(&g, "A3", &[three]);
        let f = Field::new(p, k).unwrap();
        let kn = group_algebra(&Arc::new(n.as_group(&g)), &f);
        (group_algebra(&g, &f), n, kn)
    }

    #[test]
    fn trivial_extends_trivially() {
        let (kg, n, kn) = s3_a3(3, 1);
        let l = AModule::trivial(&kn).unwrap();
        let m = extend_irreducible_to_g(&kg, &n, &l).unwrap();
        assert!(m.is_trivial());
        m.check_axioms().unwrap();
    }

    #[test]
    fn restriction_is_the_input() {
        let (kg, n, kn) = s3_a3(2, 1);
        let l = AModule::trivial(&kn).unwrap();
        let m = extend_irreducible_to_g(&kg, &n, &l).unwrap();
        for (i, &x) in n.elements().iter().enumerate() {
            assert_eq!(m.action(x), l.action(i));
        }
    }

    #[test]
    fn swapped_characters_are_not_stable() {
        let (kg, n, kn) = s3_a3(2, 2);
        let f = kg.field().clone();
        // ω a primitive cube root of unity in GF(4)
        let omega = f.elements().find(|&x| x > 1 && f.pow(x, 3) == 1).unwrap();
        let ng = kn.group().unwrap().clone();
        let gen = Matrix::scalar(&f, 1, omega);
        let l = AModule::from_group_generators(&kn, &vec![gen; ng.generators().len()]).unwrap();
        assert!(matches!(
            extend_irreducible_to_g(&kg, &n, &l),
            Err(Error::NotStable { .. })
        ));
    }

    #[test]
    fn whole_group_is_identity_extension() {
        let (kg, _, _) = s3_a3(3, 1);
        let g = kg.group().unwrap().clone();
        let whole = Subgroup::whole(&g);
        let kw = group_algebra(&Arc::new(whole.as_group(&g)), kg.field());
        let f = kg.field().clone();
        let sign = AModule::from_group_generators(
            &kw,
            &kw.group()
                .unwrap()
                .generators()
                .iter()
                .map(|&s| {
                    let x = whole.elements()[s];
                    let odd = g.perm(x).unwrap().sign() < 0;
                    Matrix::scalar(&f, 1, if odd { f.neg(1) } else { 1 })
                })
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let m = extend_irreducible_to_g(&kg, &whole, &sign).unwrap();
        for (i, &x) in whole.elements().iter().enumerate() {
            assert_eq!(m.action(x), sign.action(i));
        }
    }
}
