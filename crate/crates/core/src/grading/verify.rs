//! Checks of the graded factorization `gr Q ≅ gr T ⊗ Q̃`, of its
//! composition-factor shadow, and of the graded shape of a general pair.

use super::extension::{layers_as_group_module, solve_graded_extension, ExtensionOptions, GradedExtension};
use super::module::{gr_module, gr_sharp, GradedModule};
use super::report::{multiset_table, simple_label, Claim, InstanceInfo, Selector, VerificationReport};
use super::tensor::tensor_graded;
use crate::algebra::{graded_algebra, graded_embedding, pair_normality_check, Algebra, SubalgebraPair};
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::linalg::{Elem, Matrix, Subspace};
use crate::rep::hom::{is_graded_isomorphic, is_isomorphic};
use crate::rep::structure::radical_filtration;
use crate::rep::{chop, matrix_hash, AModule, IsoOutcome};

fn iso_claim(name: &str, out: &IsoOutcome, what: &str) -> Claim {
    match out {
        IsoOutcome::Isomorphic(x) => Claim::pass(name, matrix_hash(x), format!("{what}: intertwiner found")),
        IsoOutcome::NotIsomorphic => Claim::fail(name, format!("{what}: not isomorphic")),
        IsoOutcome::Undecided => Claim::undecided(name, format!("{what}: no invertible intertwiner found")),
    }
}

fn instance(ctx: &GroupContext, l: &AModule, s: Option<&AModule>) -> Result<InstanceInfo> {
    let mut info = InstanceInfo::of(ctx);
    info.l = Selector::of(ctx.simples_n()?, &ctx.restrict(l));
    if let Some(s) = s {
        info.s = Selector::of(ctx.simples_q()?, s);
    }
    Ok(info)
}

/// Runs the extension solver, turning an undecided search into a claim.
fn extension_claim(
    ctx: &GroupContext,
    l: &AModule,
    options: &ExtensionOptions,
    report: &mut VerificationReport,
) -> Result<Option<GradedExtension>> {
    match solve_graded_extension(ctx, l, options) {
        Ok(ext) => {
            report.strategy = Some(ext.strategy.name().to_string());
            report.claims.push(Claim::pass(
                "graded_extension",
                ext.module.module().hash_hex(),
                "restricts to gr T exactly; grade-0 layer isomorphic to L",
            ));
            report.push_layers("gr T", ext.stored.layer_dims());
            Ok(Some(ext))
        }
        Err(Error::Undecided(msg)) => {
            report.claims.push(Claim::undecided("graded_extension", msg));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Both sides of the factorization together with the report.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub report: VerificationReport,
    /// `gr Q`.
    pub lhs: Option<GradedModule>,
    /// `gr T ⊗ Q̃`.
    pub rhs: Option<GradedModule>,
    /// Degree-0 intertwiner `gr Q -> gr T ⊗ Q̃`.
    pub intertwiner: Option<Matrix>,
}

/// `Q = P(L ⊗ S)`, `Q̃ = P(S)` over `k[G/N]`, `T = P(L_N)`; checks
/// `gr Q ≅ gr T ⊗ Q̃` as graded `gr kG`-modules and
/// `gr Q ≅ (gr T)^{dim Q̃}` over `gr kN`.
pub fn graded_factorization(
    ctx: &GroupContext,
    l: &AModule,
    s: &AModule,
    options: &ExtensionOptions,
    seed: u64,
) -> Result<Factorization> {
    let mut report = VerificationReport::new("graded-factorization", instance(ctx, l, Some(s))?, seed);
    if ctx.is_degenerate() {
        report
            .notes
            .push("p does not divide |N|: every grading sits in grade 0".to_string());
    }
    let Some(ext) = extension_claim(ctx, l, options, &mut report)? else {
        return Ok(Factorization {
            report,
            lhs: None,
            rhs: None,
            intertwiner: None,
        });
    };
    let ls = l.tensor(&ctx.inflate(s))?;
    let q = ctx.cover_g(&ls)?.projective.clone();
    let qt = ctx.cover_q(s)?.projective.clone();
    let lhs = gr_module(ctx.gr_g(), &q)?;
    let rhs = tensor_graded(ctx, &ext.module, &qt)?;
    report.push_layers("gr Q", lhs.layer_dims());
    report.push_layers("gr T (x) Q~", rhs.layer_dims());

    let graded = is_graded_isomorphic(lhs.module(), lhs.grades(), rhs.module(), rhs.grades(), seed)?;
    report
        .claims
        .push(iso_claim("graded_iso", &graded, "gr Q vs gr T (x) Q~ by degree-0 maps"));

    let down = lhs.restrict(ctx.gr_n(), ctx.gr_embedding(), "gr Q over gr kN")?;
    let copies = ext.stored.power(qt.dim());
    let over_n = is_graded_isomorphic(down.module(), down.grades(), copies.module(), copies.grades(), seed)?;
    report.claims.push(iso_claim(
        "gr_kn_iso",
        &over_n,
        &format!("gr Q vs {} copies of gr T over gr kN", qt.dim()),
    ));

    let ungraded = is_isomorphic(lhs.module(), rhs.module(), seed)?;
    report
        .claims
        .push(iso_claim("ungraded_iso", &ungraded, "gr Q vs gr T (x) Q~ ignoring grades"));

    if ctx.is_degenerate() {
        let single = lhs.layer_dims().len() == 1 && ext.stored.layer_dims().len() == 1;
        report.claims.push(Claim::check(
            "single_layer",
            single,
            format!("{:?}", lhs.layer_dims()),
            "gr Q and gr T each have one layer",
        ));
        let plain = l.tensor(&ctx.inflate(&qt))?;
        let out = is_isomorphic(&q, &plain, seed)?;
        report
            .claims
            .push(iso_claim("clifford_degenerate", &out, "Q vs L (x) Q~ over kG"));
    } else {
        report
            .claims
            .push(Claim::not_applicable("clifford_degenerate", "p divides |N|"));
    }
    let intertwiner = graded.witness().cloned();
    Ok(Factorization {
        report,
        lhs: Some(lhs),
        rhs: Some(rhs),
        intertwiner,
    })
}

pub fn verify_graded_factorization(ctx: &GroupContext, l: &AModule, s: &AModule, seed: u64) -> Result<VerificationReport> {
    Ok(graded_factorization(ctx, l, s, &ExtensionOptions::default(), seed)?.report)
}

/// `M = ⊕_n (gr T)_n` as a `kG`-module; for every simple `S` of `k[G/N]`
/// compares the composition factors of `P(L ⊗ S)` with those of `M ⊗ Q̃_S`,
/// and checks that `M_N` is semisimple with the factors of `T`.
pub fn verify_composition_factors(ctx: &GroupContext, l: &AModule, seed: u64) -> Result<VerificationReport> {
    verify_composition_factors_with(ctx, l, &ExtensionOptions::default(), seed)
}

pub fn verify_composition_factors_with(
    ctx: &GroupContext,
    l: &AModule,
    options: &ExtensionOptions,
    seed: u64,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("composition-factors", instance(ctx, l, None)?, seed);
    let Some(ext) = extension_claim(ctx, l, options, &mut report)? else {
        return Ok(report);
    };
    let f = ctx.field();
    let m = layers_as_group_module(ctx, &ext.module)?;
    let sg = ctx.simples_g()?;
    let sn = ctx.simples_n()?;
    report.push_layers("M", ext.module.layer_dims());
    for n in 0..ext.module.layer_dims().len() {
        let idx = ext.module.layer_indices(n);
        let span = Subspace::span(
            f,
            m.dim(),
            idx.iter()
                .map(|&i| {
                    let mut v: Vec<Elem> = vec![0; m.dim()];
                    v[i] = 1;
                    v
                })
                .collect::<Vec<_>>(),
        );
        let layer = m.submodule(&span)?;
        report
            .multisets
            .push(multiset_table(&format!("M grade {n}"), sg, &chop(&layer, seed)?));
    }
    for s in ctx.simples_q()? {
        let label = simple_label(ctx.simples_q()?, s);
        let ls = l.tensor(&ctx.inflate(s))?;
        let q = &ctx.cover_g(&ls)?.projective;
        let qt = &ctx.cover_q(s)?.projective;
        let lhs = chop(q, seed)?;
        let rhs = chop(&m.tensor(&ctx.inflate(qt))?, seed)?;
        let same = lhs.same_as(&rhs)?;
        let table = multiset_table(&format!("Q[S={label}]"), sg, &lhs);
        let witness = table
            .factors
            .iter()
            .map(|(n, d, k)| format!("{n}/{d}x{k}"))
            .collect::<Vec<_>>()
            .join(",");
        report.multisets.push(table);
        report
            .multisets
            .push(multiset_table(&format!("M (x) Q~[S={label}]"), sg, &rhs));
        report.claims.push(Claim::check(
            &format!("factors[S={label}]"),
            same,
            witness,
            format!("composition factors of P(L (x) S) vs M (x) Q~ for S = {label}"),
        ));
    }
    let mn = ctx.restrict(&m);
    let mn_factors = chop(&mn, seed)?;
    let t_factors = chop(&ext.cover, seed)?;
    let same = mn_factors.same_as(&t_factors)?;
    let table = multiset_table("M over kN", sn, &mn_factors);
    let witness = table
        .factors
        .iter()
        .map(|(n, d, k)| format!("{n}/{d}x{k}"))
        .collect::<Vec<_>>()
        .join(",");
    report.multisets.push(table);
    report.multisets.push(multiset_table("T", sn, &t_factors));
    report.claims.push(Claim::check(
        "restriction_factors",
        same,
        witness,
        "composition factors of M over kN vs those of T",
    ));
    let rad = radical_filtration(&mn);
    let semisimple = rad.len() <= 2;
    report.claims.push(Claim::check(
        "restriction_semisimple",
        semisimple,
        format!("radical length {}", rad.len().saturating_sub(1)),
        "M over kN has zero radical",
    ));
    Ok(report)
}

/// For a pair `a ⊆ B` with `(rad a) B = B (rad a)`, a `B`-module `Q` and a
/// subspace `V`: `gr Q` is a graded `gr B`-module whose restriction to `gr a`
/// has the radical layers of `Q_a`, and `gr# V` is tested for stability.
pub fn verify_pair_shape(
    b: &Algebra,
    a: &Algebra,
    embedding: &Matrix,
    q: &AModule,
    v: &Subspace,
    seed: u64,
) -> Result<VerificationReport> {
    if !pair_normality_check(b, a, embedding)? {
        return Err(Error::NormalityFailure);
    }
    let pair = SubalgebraPair::new(b, a, embedding.clone())?;
    let gr = graded_algebra(&pair)?;
    let gr_small = graded_algebra(&SubalgebraPair::identity(a))?;
    let emb = graded_embedding(&pair, &gr_small, &gr)?;
    let f = b.field();
    let info = InstanceInfo {
        group: format!("B (dim {})", b.dim()),
        subgroup: format!("a (dim {})", a.dim()),
        group_order: b.dim(),
        subgroup_order: a.dim(),
        p: f.characteristic(),
        k: f.degree(),
        l: None,
        s: None,
        degenerate: pair.rad_small().is_zero(),
    };
    let mut report = VerificationReport::new("pair-shape", info, seed);
    report.push_layers("gr B", gr.layer_dims());
    let grq = match gr_module(&gr, q) {
        Ok(m) => m,
        Err(Error::ModuleAxioms(msg)) => {
            report.claims.push(Claim::fail("graded_module_axioms", msg));
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.claims.push(Claim::pass(
        "graded_module_axioms",
        grq.module().hash_hex(),
        "gr Q satisfies the gr B module axioms and grade additivity",
    ));
    report.push_layers("gr Q", grq.layer_dims());
    let down = grq.restrict(&gr_small, &emb, "gr Q over gr a")?;
    let qa = q.restrict_along(a, embedding);
    let rad_dims: Vec<usize> = radical_filtration(&qa)
        .windows(2)
        .map(|w| w[0].dim() - w[1].dim())
        .collect();
    report.claims.push(Claim::check(
        "small_radical_layers",
        down.layer_dims() == rad_dims,
        format!("{rad_dims:?}"),
        "restriction to gr a has the radical layers of Q over a",
    ));
    let sharp = gr_sharp(&gr, q, v)?;
    report.push_layers("gr# V", sharp.piece_dims());
    report.notes.push(if q.is_submodule(v) {
        "V is a B-submodule".to_string()
    } else {
        "V is not a B-submodule".to_string()
    });
    report.claims.push(Claim::check(
        "graded_subquotient_stable",
        sharp.stable,
        format!("{:?}", sharp.piece_dims()),
        "gr# V is stable under gr B",
    ));
    report.claims.push(Claim::check(
        "grade_pieces_grade0_modules",
        sharp.pieces_grade_zero_stable,
        format!("{:?}", sharp.piece_dims()),
        "each piece of gr# V is a module over the grade-0 part of gr B",
    ));
    Ok(report)
}
