//! `M ↦ Hom_N(L, M_N)` for an absolutely irreducible `L` extended to `G`.

use super::hom::{end_dim, hom_space, is_intertwiner};
use super::module::AModule;
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::linalg::{CoordSystem, Elem, Matrix};

/// `Hom_N(L, M_N)` with basis and the `k[G/N]`-action `(g f)(x) = g f(g^{-1} x)`.
#[derive(Clone, Debug)]
pub struct CliffordImage {
    pub module: AModule,
    /// Basis of the Hom space, each `dim M x dim L`.
    pub basis: Vec<Matrix>,
}

fn flatten(m: &Matrix) -> Vec<Elem> {
    m.data().to_vec()
}

pub fn clifford_functor(ctx: &GroupContext, l: &AModule, m: &AModule) -> Result<CliffordImage> {
    if !l.algebra().same(ctx.kg()) || !m.algebra().same(ctx.kg()) {
        return Err(Error::AlgebraMismatch);
    }
    let ln = ctx.restrict(l);
    let mn = ctx.restrict(m);
    if end_dim(&ln) != 1 {
        return Err(Error::NotAbsolutelyIrreducible);
    }
    let h = hom_space(&ln, &mn)?;
    if h.len() * l.dim() != m.dim() {
        return Err(Error::NotIsotypic);
    }
    let f = ctx.field();
    let q = ctx.q_group();
    let size = m.dim() * l.dim();
    let cs = CoordSystem::new(f, size, h.iter().map(flatten).collect())?;
    let g = ctx.g();
    let act = |x: usize| -> Result<Matrix> {
        let lx = l.action(g.inv(x));
        let cols: Vec<Vec<Elem>> = h
            .iter()
            .map(|fj| {
                let img = m.action(x).mul(fj).mul(lx);
                cs.coords(&flatten(&img))
                    .ok_or_else(|| Error::ModuleAxioms("G does not preserve the Hom space".into()))
            })
            .collect::<Result<_>>()?;
        Ok(Matrix::from_cols(f, h.len(), &cols))
    };
    for &y in ctx.n().generators() {
        if !act(y)?.is_identity() {
            return Err(Error::DoesNotFactor);
        }
    }
    let action = (0..q.order())
        .map(|c| act(ctx.transversal()[c]))
        .collect::<Result<Vec<_>>>()?;
    let module = AModule::new(ctx.kq(), action)?;
    Ok(CliffordImage { module, basis: h })
}

/// The evaluation map `L ⊗ Hom_N(L, M_N) -> M`, `v ⊗ f ↦ f(v)`, on the
/// basis `e_i ⊗ f_j` at index `i * dim H + j`.
pub fn evaluation_map(l: &AModule, image: &CliffordImage) -> Matrix {
    let f = l.field();
    let dh = image.basis.len();
    let rows = image.basis.first().map_or(0, |b| b.rows());
    let mut cols = Vec::with_capacity(l.dim() * dh);
    for i in 0..l.dim() {
        for fj in &image.basis {
            cols.push(fj.col(i));
        }
    }
    Matrix::from_cols(f, rows, &cols)
}

/// Whether the evaluation map is a `kG`-isomorphism
/// `L ⊗ Hom_N(L, M_N) ≅ M`.
pub fn clifford_inverse_check(ctx: &GroupContext, l: &AModule, m: &AModule) -> Result<bool> {
    let image = clifford_functor(ctx, l, m)?;
    let tensor = l.tensor(&ctx.inflate(&image.module))?;
    let phi = evaluation_map(l, &image);
    Ok(phi.is_square() && phi.is_invertible() && is_intertwiner(&tensor, m, &phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::fixture as catalog_fixture;
    use crate::groups::extend_irreducible_to_g;

    #[test]
    fn identity_and_multiples() {
        let ctx = catalog_fixture("S3:A3", 3);
        let l = extend_irreducible_to_g(ctx.kg(), ctx.n(), &AModule::trivial(ctx.kn()).unwrap()).unwrap();
        let one = clifford_functor(&ctx, &l, &l).unwrap();
        assert_eq!(one.module.dim(), 1);
        assert!(one.module.is_trivial());
        assert!(clifford_inverse_check(&ctx, &l, &l).unwrap());
        let three = l.power(3);
        assert_eq!(clifford_functor(&ctx, &l, &three).unwrap().module.dim(), 3);
        assert!(clifford_inverse_check(&ctx, &l, &three).unwrap());
    }

    #[test]
    fn non_isotypic_is_rejected() {
        let ctx = catalog_fixture("S3:A3", 2);
        let l = extend_irreducible_to_g(ctx.kg(), ctx.n(), &AModule::trivial(ctx.kn()).unwrap()).unwrap();
        let reg = AModule::regular(ctx.kg());
        assert_eq!(clifford_functor(&ctx, &l, &reg).unwrap_err(), Error::NotIsotypic);
    }
}
