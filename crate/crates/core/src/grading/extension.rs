//! Graded `gr kG`-structures on `gr T` for the projective cover `T` of an
//! irreducible `kN`-module that extends to `G`.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::module::{gr_module, GradedModule};
use super::tensor::tensor_graded;
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::linalg::{CoordSystem, Elem, Matrix, Subspace};
use crate::rep::hom::{grade_projections, intertwiners, is_graded_isomorphic, is_isomorphic};
use crate::rep::AModule;

/// Partial assignments explored by the search rung before it gives up.
pub const DEFAULT_NODE_BUDGET: u64 = 1 << 14;

/// Candidates enumerated per generator before switching to sampling.
const CANDIDATE_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// `p ∤ |N|`: everything sits in grade 0.
    Semisimple,
    /// `p ∤ [G:N]`: the graded projective cover over `kG`.
    CoprimeIndex,
    /// `L_N` trivial: the layers `J^n / J^n A` under conjugation.
    Conjugation,
    /// Solve for the grade-0 group action and search over solutions.
    Search,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Semisimple => "semisimple",
            Strategy::CoprimeIndex => "coprime-index",
            Strategy::Conjugation => "conjugation",
            Strategy::Search => "search",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExtensionOptions {
    pub force: Option<Strategy>,
    pub node_budget: u64,
}

impl Default for ExtensionOptions {
    fn default() -> Self {
        ExtensionOptions {
            force: None,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GradedExtension {
    /// The `gr kG`-structure on the carrier of `stored`.
    pub module: GradedModule,
    /// `gr T` over `gr kN`.
    pub stored: GradedModule,
    /// The projective cover `T` over `kN`.
    pub cover: AModule,
    pub strategy: Strategy,
    /// Graded `gr kN`-isomorphism used to move the structure onto `gr T`.
    pub witness: Matrix,
    /// The grade-0 layer as a `kG`-module, isomorphic to `L`.
    pub head: AModule,
}

fn unit_vec(len: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

/// Matrix of `ρ([g]_0)` for a group element `g`.
fn grade_zero_action(ctx: &GroupContext, x: &GradedModule, g: usize) -> Matrix {
    let class = ctx.gr_g().class_of(0, &unit_vec(ctx.g().order(), g));
    x.module().act(&class)
}

/// The grade-0 layer of a graded `gr kG`-module as a `kG`-module.
pub fn grade_zero_layer(ctx: &GroupContext, x: &GradedModule) -> Result<AModule> {
    let idx = x.layer_indices(0);
    let k = idx.len();
    let f = ctx.field();
    let action = (0..ctx.g().order())
        .map(|g| {
            let a = grade_zero_action(ctx, x, g);
            let mut b = Matrix::zeros(f, k, k);
            for (r, &i) in idx.iter().enumerate() {
                for (c, &j) in idx.iter().enumerate() {
                    b.set(r, c, a.get(i, j));
                }
            }
            b
        })
        .collect();
    AModule::new(ctx.kg(), action)
}

/// `M = ⊕_n X_n` as a `kG`-module through the grade-0 subalgebra.
pub fn layers_as_group_module(ctx: &GroupContext, x: &GradedModule) -> Result<AModule> {
    let action = (0..ctx.g().order()).map(|g| grade_zero_action(ctx, x, g)).collect();
    AModule::new(ctx.kg(), action)
}

/// A `gr kG`-structure on `gr T` restricting to the stored `gr kN`-action,
/// with grade-0 layer isomorphic to `l`.
///
/// `l` is a `kG`-module whose restriction to `N` is absolutely irreducible.
pub fn solve_graded_extension(ctx: &GroupContext, l: &AModule, options: &ExtensionOptions) -> Result<GradedExtension> {
    if !l.algebra().same(ctx.kg()) {
        return Err(Error::AlgebraMismatch);
    }
    let ln = ctx.restrict(l);
    let cover = ctx.cover_n(&ln)?.projective.clone();
    let stored = gr_module(ctx.gr_n(), &cover)?;
    let strategy = match options.force {
        Some(s) => s,
        None => choose(ctx, &ln),
    };
    let candidate = match strategy {
        Strategy::Semisimple => {
            if !ctx.is_degenerate() {
                return Err(Error::BadSelector("p divides |N|".into()));
            }
            gr_module(ctx.gr_g(), l)?
        }
        Strategy::CoprimeIndex => {
            if (ctx.index() as u64).is_multiple_of(ctx.field().characteristic() as u64) {
                return Err(Error::BadSelector("p divides [G:N]".into()));
            }
            gr_module(ctx.gr_g(), &ctx.cover_g(l)?.projective)?
        }
        Strategy::Conjugation => {
            if !ln.is_trivial() {
                return Err(Error::BadSelector("L does not restrict to the trivial module".into()));
            }
            let w = conjugation_module(ctx)?;
            if l.is_trivial() {
                w
            } else {
                tensor_graded(ctx, &w, &deflate(ctx, l)?)?
            }
        }
        Strategy::Search => {
            let m = search(ctx, l, &stored, options.node_budget)?;
            return finish(ctx, l, stored, cover, strategy, m, None);
        }
    };
    let restricted = candidate.restrict(ctx.gr_n(), ctx.gr_embedding(), "restricted")?;
    if restricted.grades() != stored.grades() {
        return Err(Error::Undecided(format!(
            "layer dimensions {:?} differ from those of gr T {:?}",
            restricted.layer_dims(),
            stored.layer_dims()
        )));
    }
    let phi = match is_graded_isomorphic(
        stored.module(),
        stored.grades(),
        restricted.module(),
        restricted.grades(),
        ctx.seed(),
    )? {
        crate::rep::IsoOutcome::Isomorphic(x) => x,
        crate::rep::IsoOutcome::NotIsomorphic => {
            return Err(Error::Undecided("candidate does not restrict to gr T".into()))
        }
        crate::rep::IsoOutcome::Undecided => {
            return Err(Error::Undecided("no graded isomorphism onto gr T found".into()))
        }
    };
    let moved = candidate.transport(&phi, &format!("{} structure on gr T", strategy.name()))?;
    finish(ctx, l, stored, cover, strategy, moved, Some(phi))
}

fn choose(ctx: &GroupContext, ln: &AModule) -> Strategy {
    if ctx.is_degenerate() {
        Strategy::Semisimple
    } else if !(ctx.index() as u64).is_multiple_of(ctx.field().characteristic() as u64) {
        Strategy::CoprimeIndex
    } else if ln.is_trivial() {
        Strategy::Conjugation
    } else {
        Strategy::Search
    }
}

fn finish(
    ctx: &GroupContext,
    l: &AModule,
    stored: GradedModule,
    cover: AModule,
    strategy: Strategy,
    module: GradedModule,
    witness: Option<Matrix>,
) -> Result<GradedExtension> {
    let back = module.restrict(ctx.gr_n(), ctx.gr_embedding(), "restricted")?;
    if back.module().actions() != stored.module().actions() {
        return Err(Error::Undecided("restriction differs from the stored gr T action".into()));
    }
    let head = grade_zero_layer(ctx, &module)?;
    if !is_isomorphic(&head, l, ctx.seed())?.is_isomorphic() {
        return Err(Error::Undecided("grade-0 layer is not isomorphic to L".into()));
    }
    let witness = witness.unwrap_or_else(|| Matrix::identity(ctx.field(), stored.dim()));
    Ok(GradedExtension {
        module,
        stored,
        cover,
        strategy,
        witness,
        head,
    })
}

/// The `k[G/N]`-module of a one-dimensional `l` trivial on `N`.
fn deflate(ctx: &GroupContext, l: &AModule) -> Result<AModule> {
    let action = ctx.transversal().iter().map(|&t| l.action(t).clone()).collect();
    AModule::new(ctx.kq(), action)
}

/// The spaces `W_n = J^n / J^n A` inside `kN`, with lifts and coordinates.
struct ConjugationLayers {
    lifts: Vec<Vec<Vec<Elem>>>,
    coords: Vec<CoordSystem>,
}

impl ConjugationLayers {
    fn new(ctx: &GroupContext) -> Result<ConjugationLayers> {
        let kn = ctx.kn();
        let f = ctx.field();
        let d = kn.dim();
        let filt = ctx.gr_n().filtration();
        let aug: Vec<Vec<Elem>> = (1..d)
            .map(|i| {
                let mut v = unit_vec(d, i);
                v[0] = f.neg(1);
                v
            })
            .collect();
        let mut lifts = Vec::new();
        let mut coords = Vec::new();
        for n in 0..=filt.layers() {
            let jn = filt.space(n);
            if jn.is_zero() {
                break;
            }
            let mut jna = Subspace::zero(f, d);
            for x in jn.basis() {
                for a in &aug {
                    jna.insert(&kn.mul(x, a));
                }
            }
            let mut s = jna.clone();
            let mut layer = Vec::new();
            for row in jn.basis() {
                if s.insert(row) {
                    layer.push(row.clone());
                }
            }
            let mut all = layer.clone();
            all.extend(jna.basis().iter().cloned());
            coords.push(CoordSystem::new(f, d, all)?);
            lifts.push(layer);
        }
        Ok(ConjugationLayers { lifts, coords })
    }

    /// Coordinates of the class of `v ∈ J^n` in `W_n`.
    fn class(&self, n: usize, v: &[Elem]) -> Vec<Elem> {
        if n >= self.lifts.len() {
            return Vec::new();
        }
        let c = self.coords[n].coords(v).expect("vector lies in J^n");
        c[..self.lifts[n].len()].to_vec()
    }

    fn dims(&self) -> Vec<usize> {
        self.lifts.iter().map(|l| l.len()).collect()
    }
}

fn conjugate(ctx: &GroupContext, t: usize, v: &[Elem]) -> Vec<Elem> {
    let n = ctx.n();
    let g = ctx.g();
    let mut out = vec![0; v.len()];
    for (j, &c) in v.iter().enumerate() {
        if c != 0 {
            let y = g.conj(t, n.elements()[j]);
            out[n.position(y).expect("normal subgroup")] = c;
        }
    }
    out
}

/// `⊕_n J^n / J^n A` as a graded `gr kG`-module: `[Σ_t t u_t]_m` sends the
/// class of `y` to the class of `Σ_t t (u_t y) t^{-1}`.
fn conjugation_module(ctx: &GroupContext) -> Result<GradedModule> {
    let layers = ConjugationLayers::new(ctx)?;
    let dims = layers.dims();
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let total: usize = dims.iter().sum();
    let grades: Vec<usize> = dims
        .iter()
        .enumerate()
        .flat_map(|(n, &d)| std::iter::repeat_n(n, d))
        .collect();
    let f = ctx.field();
    let kn = ctx.kn();
    let gr = ctx.gr_g();
    let reps = ctx.transversal();
    let alg = gr.algebra();
    let mut action = Vec::with_capacity(alg.dim());
    for i in 0..alg.dim() {
        let m = gr.grade(i);
        let parts = ctx.decompose(&gr.lift(i));
        let mut a = Matrix::zeros(f, total, total);
        for (n, layer) in layers.lifts.iter().enumerate() {
            let target = m + n;
            if target >= dims.len() {
                continue;
            }
            for (k, y) in layer.iter().enumerate() {
                let mut z = vec![0; kn.dim()];
                for (t, u) in parts.iter().enumerate() {
                    if u.iter().any(|&c| c != 0) {
                        let w = conjugate(ctx, reps[t], &kn.mul(u, y));
                        f.axpy(&mut z, 1, &w);
                    }
                }
                for (r, c) in layers.class(target, &z).into_iter().enumerate() {
                    a.set(offsets[target] + r, offsets[n] + k, c);
                }
            }
        }
        action.push(a);
    }
    let module = AModule::new(alg, action)?;
    GradedModule::new(gr, module, grades, "conjugation layers J^n / J^n A")
}

/// The layers `J^n / J^n A` of `kN` under conjugation, with the check
/// against `J^n e / J^{n+1} e` for the primitive idempotent `e` of the
/// trivial module.
#[derive(Clone, Debug)]
pub struct ConjugationReport {
    /// Each layer as a `kG`-module under conjugation.
    pub layers: Vec<AModule>,
    /// Layer dimensions of `gr T` for `T = P_N(k)`.
    pub cover_dims: Vec<usize>,
    /// Whether each `J^n / J^n A ≅ J^n e / J^{n+1} e` as `kN`-modules was
    /// certified; `false` means only dimensions were compared.
    pub chain_certified: bool,
}

impl ConjugationReport {
    pub fn dims(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.dim()).collect()
    }
}

pub fn conjugation_layers(ctx: &GroupContext) -> Result<ConjugationReport> {
    let w = ConjugationLayers::new(ctx)?;
    let f = ctx.field();
    let kn = ctx.kn();
    let layers = w
        .lifts
        .iter()
        .enumerate()
        .map(|(n, lifts)| {
            let d = lifts.len();
            let action = (0..ctx.g().order())
                .map(|g| {
                    let cols: Vec<Vec<Elem>> = lifts.iter().map(|y| w.class(n, &conjugate(ctx, g, y))).collect();
                    Matrix::from_cols(f, d, &cols)
                })
                .collect();
            AModule::new(ctx.kg(), action)
        })
        .collect::<Result<Vec<_>>>()?;
    let triv = AModule::trivial(kn)?;
    let pim = ctx.cover_n(&triv)?;
    let cover_dims = gr_module(ctx.gr_n(), &pim.projective)?.layer_dims();
    let filt = ctx.gr_n().filtration();
    let e = &pim.idempotent;
    let mut chain_certified = cover_dims == layers.iter().map(|l| l.dim()).collect::<Vec<_>>();
    if chain_certified {
        for (n, lifts) in w.lifts.iter().enumerate() {
            let d = lifts.len();
            let left: Vec<Matrix> = (0..kn.dim())
                .map(|x| {
                    let cols: Vec<Vec<Elem>> = lifts
                        .iter()
                        .map(|y| w.class(n, &kn.mul(&unit_vec(kn.dim(), x), y)))
                        .collect();
                    Matrix::from_cols(f, d, &cols)
                })
                .collect();
            let wn = AModule::new(kn, left)?;
            let reg = AModule::regular(kn);
            let span = |k: usize| {
                Subspace::span(f, kn.dim(), filt.space(k).basis().iter().map(|x| kn.mul(x, e)).collect::<Vec<_>>())
            };
            let chain = reg.subquotient(&span(n), &span(n + 1))?;
            if !is_isomorphic(&wn, &chain, ctx.seed())?.is_isomorphic() {
                chain_certified = false;
                break;
            }
        }
    }
    Ok(ConjugationReport {
        layers,
        cover_dims,
        chain_certified,
    })
}

/// Conjugation of `gr kN` by `g`, as a matrix on the basis of `gr kN`.
fn conjugation_on_gr_n(ctx: &GroupContext, g: usize) -> Matrix {
    let grn = ctx.gr_n();
    let f = ctx.field();
    let d = grn.algebra().dim();
    let cols: Vec<Vec<Elem>> = (0..d)
        .map(|i| grn.class_of(grn.grade(i), &conjugate(ctx, g, &grn.lift(i))))
        .collect();
    Matrix::from_cols(f, d, &cols)
}

/// Solves for grade-preserving `X_s` with `X_s ρ_T(b) = ρ_T(s b s^{-1}) X_s`
/// for each generator `s ∉ N`, with grade-0 block fixed by `L`, and then
/// searches for a choice satisfying every group relation.
fn search(ctx: &GroupContext, l: &AModule, stored: &GradedModule, budget: u64) -> Result<GradedModule> {
    let f = ctx.field();
    let g = ctx.g();
    let n = ctx.n();
    let grn = ctx.gr_n();
    let rho_t = stored.module();
    let d = stored.dim();
    let gens_n: Vec<usize> = grn.algebra().generators().to_vec();
    let src: Vec<Matrix> = gens_n.iter().map(|&i| rho_t.action(i).clone()).collect();
    let mut src_all = src.clone();
    let projections = grade_projections(f, stored.grades());
    src_all.extend(projections.iter().cloned());

    let head_idx = stored.layer_indices(0);
    let h = head_idx.len();
    let ln = ctx.restrict(l);
    // Grade-0 block of gr T as a kN-module, and an iso L_N -> (gr T)_0.
    let grade0_block = |m: &Matrix| -> Matrix {
        let mut b = Matrix::zeros(f, h, h);
        for (r, &i) in head_idx.iter().enumerate() {
            for (c, &j) in head_idx.iter().enumerate() {
                b.set(r, c, m.get(i, j));
            }
        }
        b
    };
    let t0_action: Vec<Matrix> = (0..n.order())
        .map(|x| {
            let class = grn.class_of(0, &unit_vec(n.order(), x));
            grade0_block(&rho_t.act(&class))
        })
        .collect();
    let t0 = AModule::new(ctx.kn(), t0_action)?;
    let phi0 = match is_isomorphic(&ln, &t0, ctx.seed())? {
        crate::rep::IsoOutcome::Isomorphic(x) => x,
        _ => return Err(Error::Undecided("head of gr T does not match L".into())),
    };
    let phi0_inv = phi0.inverse().expect("isomorphism");
    let n_mat = |x: usize| -> Matrix { rho_t.act(&grn.class_of(0, &unit_vec(n.order(), n.position(x).unwrap()))) };

    let mut outside: Vec<usize> = Vec::new();
    let mut candidates: Vec<Vec<Matrix>> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed());
    for &s in g.generators() {
        if n.contains(s) {
            continue;
        }
        let conj = conjugation_on_gr_n(ctx, s);
        let mut dst: Vec<Matrix> = gens_n.iter().map(|&i| rho_t.act(&conj.col(i))).collect();
        dst.extend(projections.iter().cloned());
        let space = intertwiners(f, d, d, &src_all, &dst);
        let target = phi0.mul(l.action(s)).mul(&phi0_inv);
        let blocks: Vec<Matrix> = space.iter().map(&grade0_block).collect();
        let list = affine_candidates(f, &space, &blocks, &target, &mut rng);
        if list.is_empty() {
            return Err(Error::Undecided(format!(
                "no graded intertwiner for {} with the prescribed head",
                g.label(s)
            )));
        }
        outside.push(s);
        candidates.push(list);
    }

    let mut nodes = 0u64;
    let mut choice = vec![0usize; outside.len()];
    let mut depth = 0usize;
    loop {
        if depth == outside.len() {
            let gen_mats: Vec<(usize, Matrix)> = g
                .generators()
                .iter()
                .map(|&s| match outside.iter().position(|&o| o == s) {
                    Some(k) => (s, candidates[k][choice[k]].clone()),
                    None => (s, n_mat(s)),
                })
                .collect();
            if let Ok(rho) = assemble(ctx, &n_mat, &gen_mats) {
                if let Ok(m) = graded_from_group(ctx, stored, &rho) {
                    return Ok(m);
                }
            }
            // advance the last level
            if depth == 0 {
                break;
            }
            depth -= 1;
            choice[depth] += 1;
        }
        nodes += 1;
        if nodes > budget {
            return Err(Error::Undecided(format!("search budget of {budget} nodes exhausted")));
        }
        if choice[depth] >= candidates[depth].len() {
            if depth == 0 {
                break;
            }
            choice[depth] = 0;
            depth -= 1;
            choice[depth] += 1;
            continue;
        }
        depth += 1;
    }
    Err(Error::Undecided("no candidate satisfies the group relations".into()))
}

/// Elements `x = Σ c_i basis_i` with `Σ c_i blocks_i = target` and `x`
/// invertible: all of them in seeded order when few, otherwise a seeded
/// sample.
fn affine_candidates(
    f: &crate::linalg::Field,
    basis: &[Matrix],
    blocks: &[Matrix],
    target: &Matrix,
    rng: &mut ChaCha8Rng,
) -> Vec<Matrix> {
    if basis.is_empty() {
        return Vec::new();
    }
    let h = target.rows() * target.cols();
    // Columns of the linear system: flattened blocks.
    let sys = Matrix::from_cols(f, h, &blocks.iter().map(|b| b.data().to_vec()).collect::<Vec<_>>());
    let mut aug = Matrix::zeros(f, h, basis.len() + 1);
    aug.set_block(0, 0, &sys);
    for (r, &x) in target.data().iter().enumerate() {
        aug.set(r, basis.len(), x);
    }
    let rr = aug.rref();
    if rr.pivots.contains(&basis.len()) {
        return Vec::new();
    }
    let mut particular = vec![0; basis.len()];
    for (r, &p) in rr.pivots.iter().enumerate() {
        particular[p] = rr.matrix.get(r, basis.len());
    }
    let kernel = sys.kernel_basis();
    let combine = |coeffs: &[Elem]| -> Matrix {
        let mut c = particular.clone();
        for (k, &a) in kernel.iter().zip(coeffs) {
            f.axpy(&mut c, a, k);
        }
        let mut m = Matrix::zeros(f, basis[0].rows(), basis[0].cols());
        for (b, &x) in basis.iter().zip(&c) {
            if x != 0 {
                m.add_scaled(x, b);
            }
        }
        m
    };
    let q = f.order() as usize;
    let count = q.checked_pow(kernel.len() as u32).filter(|&c| c <= CANDIDATE_CAP);
    let mut out = Vec::new();
    match count {
        Some(c) => {
            let mut order: Vec<usize> = (0..c).collect();
            order[1..].shuffle(rng);
            for mut idx in order {
                let coeffs: Vec<Elem> = (0..kernel.len())
                    .map(|_| {
                        let x = (idx % q) as Elem;
                        idx /= q;
                        x
                    })
                    .collect();
                let m = combine(&coeffs);
                if m.is_invertible() {
                    out.push(m);
                }
            }
        }
        None => {
            out.push(combine(&vec![0; kernel.len()]));
            for _ in 0..CANDIDATE_CAP {
                let coeffs: Vec<Elem> = (0..kernel.len()).map(|_| f.random(rng)).collect();
                let m = combine(&coeffs);
                if m.is_invertible() {
                    out.push(m);
                }
            }
            out.retain(|m| m.is_invertible());
        }
    }
    out
}

/// Propagates the generator matrices over `G` from the preassigned `N`.
fn assemble<F>(ctx: &GroupContext, n_mat: &F, gen_mats: &[(usize, Matrix)]) -> std::result::Result<Vec<Matrix>, String>
where
    F: Fn(usize) -> Matrix,
{
    let g = ctx.g();
    let mut rho: Vec<Option<Matrix>> = vec![None; g.order()];
    let mut queue = VecDeque::new();
    for &x in ctx.n().elements() {
        rho[x] = Some(n_mat(x));
        queue.push_back(x);
    }
    while let Some(x) = queue.pop_front() {
        for (s, m) in gen_mats {
            let y = g.mul(x, *s);
            let cand = rho[x].as_ref().unwrap().mul(m);
            match &rho[y] {
                Some(e) if *e != cand => return Err(format!("{} * {}", g.label(x), g.label(*s))),
                Some(_) => {}
                None => {
                    rho[y] = Some(cand);
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(rho.into_iter().map(|m| m.expect("generators generate")).collect())
}

/// `ρ([Σ_t t u_t]_m) = Σ_t ρ(t) ρ_T([u_t]_m)` for a grade-0 group action.
fn graded_from_group(ctx: &GroupContext, stored: &GradedModule, rho: &[Matrix]) -> Result<GradedModule> {
    let gr = ctx.gr_g();
    let grn = ctx.gr_n();
    let f = ctx.field();
    let d = stored.dim();
    let reps = ctx.transversal();
    let alg = gr.algebra();
    let mut action = Vec::with_capacity(alg.dim());
    for i in 0..alg.dim() {
        let m = gr.grade(i);
        let mut a = Matrix::zeros(f, d, d);
        for (t, u) in ctx.decompose(&gr.lift(i)).iter().enumerate() {
            if u.iter().all(|&c| c == 0) {
                continue;
            }
            let inner = stored.module().act(&grn.class_of(m, u));
            a.add_scaled(1, &rho[reps[t]].mul(&inner));
        }
        action.push(a);
    }
    let module = AModule::new(alg, action)?;
    GradedModule::new(gr, module, stored.grades().to_vec(), "searched structure on gr T")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::fixture;

    fn trivial(ctx: &GroupContext) -> AModule {
        AModule::trivial(ctx.kg()).unwrap()
    }

    #[test]
    fn coprime_index_layers_are_k_sign_k() {
        let ctx = fixture("S3:A3", 3);
        let ext = solve_graded_extension(&ctx, &trivial(&ctx), &ExtensionOptions::default()).unwrap();
        assert_eq!(ext.strategy, Strategy::CoprimeIndex);
        assert_eq!(ext.module.layer_dims(), vec![1, 1, 1]);
        let m = layers_as_group_module(&ctx, &ext.module).unwrap();
        let signs: Vec<bool> = (0..3)
            .map(|n| {
                let i = ext.module.layer_indices(n)[0];
                let s = ctx.g().generators()[0];
                m.action(s).get(i, i) == 1
            })
            .collect();
        // generator 0 is the transposition
        assert_eq!(signs, vec![true, false, true]);
    }

    #[test]
    fn conjugation_on_cyclic_pair() {
        let ctx = fixture("C4:C2", 2);
        let ext = solve_graded_extension(&ctx, &trivial(&ctx), &ExtensionOptions::default()).unwrap();
        assert_eq!(ext.strategy, Strategy::Conjugation);
        assert_eq!(ext.module.layer_dims(), vec![1, 1]);
        let m = layers_as_group_module(&ctx, &ext.module).unwrap();
        assert!(m.actions().iter().all(|a| a.is_identity()));
    }

    #[test]
    fn search_agrees_with_coprime_rung() {
        let ctx = fixture("S3:A3", 3);
        let forced = ExtensionOptions {
            force: Some(Strategy::Search),
            ..Default::default()
        };
        let a = solve_graded_extension(&ctx, &trivial(&ctx), &forced).unwrap();
        let b = solve_graded_extension(&ctx, &trivial(&ctx), &ExtensionOptions::default()).unwrap();
        assert_eq!(a.strategy, Strategy::Search);
        assert!(is_graded_isomorphic(a.module.module(), a.module.grades(), b.module.module(), b.module.grades(), 0)
            .unwrap()
            .is_isomorphic());
    }

    #[test]
    fn search_budget_exhaustion_is_undecided() {
        let ctx = fixture("S3:A3", 3);
        let opts = ExtensionOptions {
            force: Some(Strategy::Search),
            node_budget: 0,
        };
        assert!(matches!(
            solve_graded_extension(&ctx, &trivial(&ctx), &opts),
            Err(Error::Undecided(_))
        ));
    }

    #[test]
    fn whole_group_is_its_own_structure() {
        let f = fixture("S3:A3", 3);
        let g = f.g().clone();
        let whole = crate::groups::Subgroup::whole(&g);
        let ctx = GroupContext::new(g, whole, f.field(), 0).unwrap();
        let l = trivial(&ctx);
        let ext = solve_graded_extension(&ctx, &l, &ExtensionOptions::default()).unwrap();
        let back = ext.module.restrict(ctx.gr_n(), ctx.gr_embedding(), "r").unwrap();
        assert_eq!(back.module().actions(), ext.stored.module().actions());
        assert_eq!(ext.module.layer_dims(), vec![1, 1, 1]);
    }

    #[test]
    fn conjugation_layer_examples() {
        let ctx = fixture("S3:A3", 3);
        let r = conjugation_layers(&ctx).unwrap();
        assert_eq!(r.dims(), vec![1, 1, 1]);
        assert!(r.chain_certified);
        let t = ctx.g().generators()[0];
        let signs: Vec<Elem> = r.layers.iter().map(|l| l.action(t).get(0, 0)).collect();
        assert_eq!(signs, vec![1, 2, 1]);

        let ctx = fixture("S4:V4", 2);
        let r = conjugation_layers(&ctx).unwrap();
        assert_eq!(r.dims(), vec![1, 2, 1]);
        assert!(r.chain_certified);
        assert!(crate::rep::is_irreducible(&r.layers[1], 0).unwrap().is_irreducible());
    }

    #[test]
    fn trivial_subgroup_has_one_layer() {
        let f = fixture("S3:A3", 3);
        let g = f.g().clone();
        let ctx = GroupContext::new(g.clone(), crate::groups::Subgroup::trivial(&g), f.field(), 0).unwrap();
        let r = conjugation_layers(&ctx).unwrap();
        assert_eq!(r.dims(), vec![1]);
        assert!(r.layers[0].is_trivial());
    }

    #[test]
    fn nontrivial_character_via_conjugation() {
        let ctx = fixture("S3:A3", 3);
        let sign = ctx.simples_g().unwrap().iter().find(|m| !m.is_trivial()).unwrap().clone();
        let forced = ExtensionOptions {
            force: Some(Strategy::Conjugation),
            ..Default::default()
        };
        let a = solve_graded_extension(&ctx, &sign, &forced).unwrap();
        let b = solve_graded_extension(&ctx, &sign, &ExtensionOptions::default()).unwrap();
        assert_eq!(b.strategy, Strategy::CoprimeIndex);
        assert!(is_graded_isomorphic(a.module.module(), a.module.grades(), b.module.module(), b.module.grades(), 0)
            .unwrap()
            .is_isomorphic());
    }
}
