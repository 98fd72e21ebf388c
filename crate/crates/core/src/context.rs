//! A group with a normal subgroup over a fixed field, with the algebras,
//! maps and gradings derived from it.

use std::sync::{Arc, OnceLock};

use crate::algebra::{graded_algebra, graded_embedding, group_algebra, Algebra, GradedAlgebra, SubalgebraPair};
use crate::error::{Error, Result};
use crate::groups::{quotient_group, FiniteGroup, Quotient, Subgroup};
use crate::linalg::{Elem, Field, Matrix};
use crate::rep::pims::{pims, simples, Pim};
use crate::rep::AModule;

pub struct GroupContext {
    field: Field,
    seed: u64,
    g: Arc<FiniteGroup>,
    n: Subgroup,
    n_group: Arc<FiniteGroup>,
    quotient: Quotient,
    q_group: Arc<FiniteGroup>,
    kg: Algebra,
    kn: Algebra,
    kq: Algebra,
    emb: Matrix,
    proj: Matrix,
    pair: SubalgebraPair,
    gr_g: GradedAlgebra,
    gr_n: GradedAlgebra,
    gr_emb: Matrix,
    simples_g: OnceLock<Result<Vec<AModule>>>,
    simples_n: OnceLock<Result<Vec<AModule>>>,
    simples_q: OnceLock<Result<Vec<AModule>>>,
    pims_g: OnceLock<Result<Vec<Pim>>>,
    pims_n: OnceLock<Result<Vec<Pim>>>,
    pims_q: OnceLock<Result<Vec<Pim>>>,
}

impl std::fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupContext({}:{} over {})", self.g.name(), self.n.name(), self.field)
    }
}

impl GroupContext {
    pub fn new(g: Arc<FiniteGroup>, n: Subgroup, field: &Field, seed: u64) -> Result<GroupContext> {
        let quotient = quotient_group(&g, &n)?;
        let n_group = Arc::new(n.as_group(&g));
        let q_group = Arc::new(quotient.group.clone());
        let kg = group_algebra(&g, field);
        let kn = group_algebra(&n_group, field);
        let kq = group_algebra(&q_group, field);
        let mut emb = Matrix::zeros(field, g.order(), n.order());
        for (i, &x) in n.elements().iter().enumerate() {
            emb.set(x, i, 1);
        }
        let mut proj = Matrix::zeros(field, q_group.order(), g.order());
        for (x, &c) in quotient.projection.iter().enumerate() {
            proj.set(c, x, 1);
        }
        let pair = SubalgebraPair::new(&kg, &kn, emb.clone())?;
        let gr_g = graded_algebra(&pair)?;
        let gr_n = graded_algebra(&SubalgebraPair::identity(&kn))?;
        let gr_emb = graded_embedding(&pair, &gr_n, &gr_g)?;
        Ok(GroupContext {
            field: field.clone(),
            seed,
            g,
            n,
            n_group,
            quotient,
            q_group,
            kg,
            kn,
            kq,
            emb,
            proj,
            pair,
            gr_g,
            gr_n,
            gr_emb,
            simples_g: OnceLock::new(),
            simples_n: OnceLock::new(),
            simples_q: OnceLock::new(),
            pims_g: OnceLock::new(),
            pims_n: OnceLock::new(),
            pims_q: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn g(&self) -> &Arc<FiniteGroup> {
        &self.g
    }

    pub fn n(&self) -> &Subgroup {
        &self.n
    }

    pub fn n_group(&self) -> &Arc<FiniteGroup> {
        &self.n_group
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    pub fn q_group(&self) -> &Arc<FiniteGroup> {
        &self.q_group
    }

    pub fn kg(&self) -> &Algebra {
        &self.kg
    }

    pub fn kn(&self) -> &Algebra {
        &self.kn
    }

    pub fn kq(&self) -> &Algebra {
        &self.kq
    }

    /// `kN -> kG`, columns indexed by the sorted elements of `N`.
    pub fn embedding(&self) -> &Matrix {
        &self.emb
    }

    /// `kG -> k[G/N]`.
    pub fn projection(&self) -> &Matrix {
        &self.proj
    }

    pub fn pair(&self) -> &SubalgebraPair {
        &self.pair
    }

    pub fn gr_g(&self) -> &GradedAlgebra {
        &self.gr_g
    }

    pub fn gr_n(&self) -> &GradedAlgebra {
        &self.gr_n
    }

    /// `gr kN -> gr kG`.
    pub fn gr_embedding(&self) -> &Matrix {
        &self.gr_emb
    }

    pub fn index(&self) -> usize {
        self.q_group.order()
    }

    /// Whether `p` does not divide `|N|`, so that `kN` is semisimple.
    pub fn is_degenerate(&self) -> bool {
        !(self.n.order() as u64).is_multiple_of(self.field.characteristic() as u64)
    }

    pub fn restrict(&self, m: &AModule) -> AModule {
        m.restrict_along(&self.kn, &self.emb)
    }

    pub fn inflate(&self, m: &AModule) -> AModule {
        m.restrict_along(&self.kg, &self.proj)
    }

    /// Coset representatives, indexed like the elements of `G/N`.
    pub fn transversal(&self) -> &[usize] {
        &self.quotient.reps
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.quotient.projection[x]
    }

    /// Writes `c ∈ kG` as `Σ_t t u_t` with `u_t ∈ kN`, one `u_t` per coset
    /// representative.
    pub fn decompose(&self, c: &[Elem]) -> Vec<Vec<Elem>> {
        let reps = self.transversal();
        let mut out = vec![vec![0; self.n.order()]; reps.len()];
        for (x, &cx) in c.iter().enumerate() {
            if cx == 0 {
                continue;
            }
            let t = self.coset_of(x);
            let u = self.g.mul(self.g.inv(reps[t]), x);
            out[t][self.n.position(u).expect("same coset")] = cx;
        }
        out
    }

    /// The `kN`-module `L` twisted by conjugation: `n` acts as
    /// `ρ_L(x^{-1} n x)`.
    pub fn twist(&self, l: &AModule, x: usize) -> AModule {
        let action = self
            .n
            .elements()
            .iter()
            .map(|&m| {
                let y = self.g.conj(self.g.inv(x), m);
                l.action(self.n.position(y).expect("normal")).clone()
            })
            .collect();
        AModule::trusted(&self.kn, l.dim(), action)
    }

    pub fn simples_g(&self) -> Result<&[AModule]> {
        cached(&self.simples_g, || simples(&self.kg, self.seed))
    }

    pub fn simples_n(&self) -> Result<&[AModule]> {
        cached(&self.simples_n, || simples(&self.kn, self.seed))
    }

    pub fn simples_q(&self) -> Result<&[AModule]> {
        cached(&self.simples_q, || simples(&self.kq, self.seed))
    }

    pub fn pims_g(&self) -> Result<&[Pim]> {
        cached(&self.pims_g, || pims(&self.kg, self.seed))
    }

    pub fn pims_n(&self) -> Result<&[Pim]> {
        cached(&self.pims_n, || pims(&self.kn, self.seed))
    }

    pub fn pims_q(&self) -> Result<&[Pim]> {
        cached(&self.pims_q, || pims(&self.kq, self.seed))
    }

    /// Projective cover of a simple `kG`-module.
    pub fn cover_g(&self, s: &AModule) -> Result<&Pim> {
        find_cover(self.pims_g()?, s)
    }

    pub fn cover_n(&self, s: &AModule) -> Result<&Pim> {
        find_cover(self.pims_n()?, s)
    }

    pub fn cover_q(&self, s: &AModule) -> Result<&Pim> {
        find_cover(self.pims_q()?, s)
    }
}

fn cached<T, F>(cell: &OnceLock<Result<Vec<T>>>, f: F) -> Result<&[T]>
where
    F: FnOnce() -> Result<Vec<T>>,
{
    match cell.get_or_init(f) {
        Ok(v) => Ok(v),
        Err(e) => Err(e.clone()),
    }
}

fn find_cover<'a>(pims: &'a [Pim], s: &AModule) -> Result<&'a Pim> {
    for p in pims {
        if p.simple.dim() == s.dim() && !crate::rep::hom::hom_space(&p.simple, s)?.is_empty() {
            return Ok(p);
        }
    }
    Err(Error::BadSelector("module is not a simple of this algebra".into()))
}
