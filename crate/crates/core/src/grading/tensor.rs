//! Tensoring a graded `gr kG`-module with a `k[G/N]`-module.

use super::module::GradedModule;
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::linalg::{Elem, Matrix};
use crate::rep::AModule;

/// Action matrices of `gr kG` on `X ⊗ Y`.
///
/// A grade-`m` basis element with lift `Σ_t t u_t` (`u_t ∈ (rad kN)^m`) acts
/// on `x ⊗ y` as `Σ_t [t u_t]_m x ⊗ t̄ y`. Basis `x_k ⊗ y_j` sits at index
/// `k * dim Y + j`, with the grade of `x_k`.
pub fn tensor_graded(ctx: &GroupContext, x: &GradedModule, y: &AModule) -> Result<GradedModule> {
    let gr = ctx.gr_g();
    if !x.graded_algebra().algebra().same(gr.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if !y.algebra().same(ctx.kq()) {
        return Err(Error::DoesNotFactor);
    }
    let f = ctx.field();
    let g = ctx.g();
    let reps = ctx.transversal();
    let n_elems = ctx.n().elements();
    let (dx, dy) = (x.dim(), y.dim());
    let alg = gr.algebra();
    let mut action = Vec::with_capacity(alg.dim());
    for i in 0..alg.dim() {
        let m = gr.grade(i);
        let parts = ctx.decompose(&gr.lift(i));
        let mut total = Matrix::zeros(f, dx * dy, dx * dy);
        for (t, u) in parts.iter().enumerate() {
            if u.iter().all(|&c| c == 0) {
                continue;
            }
            let mut tu: Vec<Elem> = vec![0; g.order()];
            for (j, &c) in u.iter().enumerate() {
                if c != 0 {
                    tu[g.mul(reps[t], n_elems[j])] = c;
                }
            }
            let class = gr.class_of(m, &tu);
            let block = x.module().act(&class).kron(y.action(t));
            total.add_scaled(1, &block);
        }
        action.push(total);
    }
    let module = AModule::new(alg, action)?;
    let grades = x.grades().iter().flat_map(|&n| std::iter::repeat_n(n, dy)).collect();
    GradedModule::new(gr, module, grades, &format!("{} tensored with a dim {dy} quotient module", x.note()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::fixture;
    use crate::grading::module::gr_module;
    use crate::rep::hom::{is_graded_isomorphic, is_isomorphic};

    fn sign_q(ctx: &GroupContext) -> AModule {
        let s = ctx.simples_q().unwrap();
        s.iter().find(|m| !m.is_trivial()).unwrap().clone()
    }

    #[test]
    fn trivial_factor_is_identity() {
        let ctx = fixture("S3:A3", 3);
        let x = gr_module(ctx.gr_g(), &AModule::regular(ctx.kg())).unwrap();
        let t = tensor_graded(&ctx, &x, &AModule::trivial(ctx.kq()).unwrap()).unwrap();
        assert_eq!(t.module().actions(), x.module().actions());
        assert_eq!(t.grades(), x.grades());
    }

    #[test]
    fn dimension_law() {
        let ctx = fixture("S4:V4", 2);
        let x = gr_module(ctx.gr_g(), &AModule::regular(ctx.kg())).unwrap();
        for y in ctx.simples_q().unwrap() {
            let t = tensor_graded(&ctx, &x, y).unwrap();
            let expected: Vec<usize> = x.layer_dims().iter().map(|d| d * y.dim()).collect();
            assert_eq!(t.layer_dims(), expected);
        }
    }

    #[test]
    fn sign_twist_moves_grade_zero_to_sign() {
        let ctx = fixture("S3:A3", 3);
        let k = AModule::trivial(ctx.kg()).unwrap();
        let p = ctx.cover_g(&k).unwrap().projective.clone();
        let x = gr_module(ctx.gr_g(), &p).unwrap();
        let sign = sign_q(&ctx);
        let t = tensor_graded(&ctx, &x, &sign).unwrap();
        // The ungraded module gr P(k) ⊗ sign is gr P(sign).
        let sign_g = ctx.inflate(&sign);
        let ps = ctx.cover_g(&sign_g).unwrap().projective.clone();
        let y = gr_module(ctx.gr_g(), &ps).unwrap();
        assert!(is_graded_isomorphic(t.module(), t.grades(), y.module(), y.grades(), 0)
            .unwrap()
            .is_isomorphic());
        let grade0: Vec<Matrix> = ctx
            .g()
            .generators()
            .iter()
            .map(|&g| {
                let mut e = vec![0; ctx.g().order()];
                e[g] = 1;
                let a = t.module().act(&ctx.gr_g().class_of(0, &e));
                a.block(0, 0, 1, 1)
            })
            .collect();
        let layer0 = AModule::from_group_generators(ctx.kg(), &grade0).unwrap();
        assert!(is_isomorphic(&layer0, &sign_g, 0).unwrap().is_isomorphic());
    }

    #[test]
    fn grade_zero_concentrated_is_ordinary_tensor() {
        let ctx = fixture("A4:V4", 3);
        let reg = AModule::regular(ctx.kg());
        let x = gr_module(ctx.gr_g(), &reg).unwrap();
        assert_eq!(x.layer_dims(), vec![12]);
        for y in ctx.simples_q().unwrap() {
            let t = tensor_graded(&ctx, &x, y).unwrap();
            let ordinary = reg.tensor(&ctx.inflate(y)).unwrap();
            assert_eq!(t.module().actions(), ordinary.actions());
        }
    }
}
