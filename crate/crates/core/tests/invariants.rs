//! Structural invariants checked on every catalog fixture.

use gradekit::catalog::{entries, splitting_context};
use gradekit::grading::{
    conjugation_layers, gr_module, run_instance, solve_graded_extension, tensor_graded, ExtensionOptions,
    InstanceRequest, Outcome, Which,
};
use gradekit::groups::extend_irreducible_to_g;
use gradekit::rep::{chop, is_isomorphic, AModule};
use gradekit::{Error, GroupContext};
use proptest::prelude::*;

fn fixtures() -> Vec<(String, GroupContext)> {
    let mut out = Vec::new();
    for e in entries() {
        let (g, n) = e.build().unwrap();
        for &p in e.primes {
            out.push((format!("{} p={p}", e.name), splitting_context(&g, &n, p, 0).unwrap()));
        }
    }
    out
}

fn extensions(ctx: &GroupContext) -> Vec<AModule> {
    ctx.simples_n()
        .unwrap()
        .iter()
        .filter_map(|l| match extend_irreducible_to_g(ctx.kg(), ctx.n(), l) {
            Ok(x) => Some(x),
            Err(Error::NotStable { .. } | Error::ExtensionObstructed { .. }) => None,
            Err(e) => panic!("{e}"),
        })
        .collect()
}

#[test]
fn layer_dims_sum_to_dimension() {
    for (name, ctx) in fixtures() {
        assert_eq!(ctx.gr_g().layer_dims().iter().sum::<usize>(), ctx.kg().dim(), "{name}");
        assert_eq!(ctx.gr_n().layer_dims().iter().sum::<usize>(), ctx.kn().dim(), "{name}");
        for m in ctx.simples_g().unwrap().iter().chain([&AModule::regular(ctx.kg())]) {
            let x = gr_module(ctx.gr_g(), m).unwrap();
            assert_eq!(x.layer_dims().iter().sum::<usize>(), m.dim(), "{name}");
        }
    }
}

#[test]
fn tensoring_with_trivial_is_identity() {
    for (name, ctx) in fixtures() {
        let k = AModule::trivial(ctx.kq()).unwrap();
        for l in extensions(&ctx) {
            let ext = solve_graded_extension(&ctx, &l, &ExtensionOptions::default()).unwrap();
            let t = tensor_graded(&ctx, &ext.module, &k).unwrap();
            assert_eq!(t.module().actions(), ext.module.module().actions(), "{name}");
            assert_eq!(t.grades(), ext.module.grades(), "{name}");
        }
    }
}

#[test]
fn extension_restricts_to_stored_structure() {
    for (name, ctx) in fixtures() {
        for l in extensions(&ctx) {
            let ext = solve_graded_extension(&ctx, &l, &ExtensionOptions::default()).unwrap();
            let back = ext.module.restrict(ctx.gr_n(), ctx.gr_embedding(), "restricted").unwrap();
            assert_eq!(back.module().actions(), ext.stored.module().actions(), "{name}");
            assert_eq!(back.grades(), ext.stored.grades(), "{name}");
            assert!(is_isomorphic(&ext.head, &l, 0).unwrap().is_isomorphic(), "{name}: head");
        }
    }
}

#[test]
fn factorization_implies_factors() {
    for (name, ctx) in fixtures() {
        let req = InstanceRequest {
            l: None,
            s: None,
            which: Which::All,
            seed: 0,
        };
        let reports = run_instance(&ctx, &req).unwrap();
        let hashes = |kind: &str, o: Outcome| -> Vec<String> {
            reports
                .iter()
                .filter(|r| r.kind == kind && r.outcome() == o)
                .map(|r| r.instance.l.as_ref().unwrap().hash.clone())
                .collect()
        };
        let factors = hashes("composition-factors", Outcome::Pass);
        for h in hashes("graded-factorization", Outcome::Pass) {
            assert!(factors.contains(&h), "{name}: factorization passes but factors do not");
        }
    }
}

#[test]
fn coprime_order_gives_one_layer() {
    for (name, ctx) in fixtures() {
        let p = ctx.field().characteristic() as usize;
        if ctx.n().order() % p == 0 {
            continue;
        }
        assert_eq!(ctx.gr_g().layers(), 1, "{name}");
        for m in ctx.simples_g().unwrap().iter().chain([&AModule::regular(ctx.kg())]) {
            assert_eq!(gr_module(ctx.gr_g(), m).unwrap().layer_dims().len(), 1, "{name}");
        }
    }
}

#[test]
fn conjugation_layers_match_trivial_extension() {
    for (name, ctx) in fixtures() {
        let k = AModule::trivial(ctx.kg()).unwrap();
        let ext = solve_graded_extension(&ctx, &k, &ExtensionOptions::default()).unwrap();
        let conj = conjugation_layers(&ctx).unwrap();
        assert_eq!(conj.dims(), ext.stored.layer_dims(), "{name}");
        assert!(conj.chain_certified, "{name}");
    }
}

#[test]
fn tensor_dimension_law() {
    for (name, ctx) in fixtures() {
        let x = gr_module(ctx.gr_g(), &AModule::regular(ctx.kg())).unwrap();
        for y in ctx.simples_q().unwrap().iter().chain(ctx.pims_q().unwrap().iter().map(|p| &p.projective)) {
            let t = tensor_graded(&ctx, &x, y).unwrap();
            let expected: Vec<usize> = x.layer_dims().iter().map(|d| d * y.dim()).collect();
            assert_eq!(t.layer_dims(), expected, "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    #[test]
    fn chop_ignores_seed(seed in 1u64..u64::MAX) {
        for (name, ctx) in fixtures() {
            for m in [AModule::regular(ctx.kg()), AModule::regular(ctx.kn())] {
                let a = chop(&m, 0).unwrap();
                let b = chop(&m, seed).unwrap();
                prop_assert!(a.same_as(&b).unwrap(), "{}", name);
            }
        }
    }
}
