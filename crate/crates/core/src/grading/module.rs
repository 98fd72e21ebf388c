//! Graded modules over associated graded algebras.

use crate::algebra::{Filtration, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Elem, Matrix, Subspace};
use crate::rep::AModule;

/// A module over `gr B` whose basis vectors carry grades, with a note on the
/// construction that produced it.
#[derive(Clone, Debug)]
pub struct GradedModule {
    algebra: GradedAlgebra,
    module: AModule,
    grades: Vec<usize>,
    note: String,
}

impl GradedModule {
    /// Checks that the action is over `gr.algebra()` and that a grade-`m`
    /// basis element maps grade `n` into grade `m + n`.
    pub fn new(gr: &GradedAlgebra, module: AModule, grades: Vec<usize>, note: &str) -> Result<GradedModule> {
        if !module.algebra().same(gr.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        if grades.len() != module.dim() {
            return Err(Error::DimensionMismatch("one grade per basis vector".into()));
        }
        let gm = GradedModule {
            algebra: gr.clone(),
            module,
            grades,
            note: note.to_string(),
        };
        gm.check_grading()?;
        Ok(gm)
    }

    fn check_grading(&self) -> Result<()> {
        for (i, m) in self.module.actions().iter().enumerate() {
            let a = self.algebra.grade(i);
            for c in 0..m.cols() {
                for r in 0..m.rows() {
                    if m.get(r, c) != 0 && self.grades[r] != self.grades[c] + a {
                        return Err(Error::ModuleAxioms(format!(
                            "basis element {} of grade {a} does not map grade {} to grade {}",
                            self.algebra.algebra().label(i),
                            self.grades[c],
                            self.grades[c] + a
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn graded_algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn module(&self) -> &AModule {
        &self.module
    }

    pub fn grades(&self) -> &[usize] {
        &self.grades
    }

    pub fn note(&self) -> &str {
        &self.note
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Dimensions of grades `0..=max`, trailing zeros trimmed.
    pub fn layer_dims(&self) -> Vec<usize> {
        let top = self.grades.iter().copied().max().map_or(0, |g| g + 1);
        let mut dims = vec![0; top];
        for &g in &self.grades {
            dims[g] += 1;
        }
        dims
    }

    /// Basis indices of grade `n`.
    pub fn layer_indices(&self, n: usize) -> Vec<usize> {
        (0..self.grades.len()).filter(|&i| self.grades[i] == n).collect()
    }

    /// Same grading, with the action changed by `P^{-1} ρ P` for a
    /// grade-preserving `P`.
    pub fn transport(&self, p: &Matrix, note: &str) -> Result<GradedModule> {
        GradedModule::new(&self.algebra, self.module.transport(p)?, self.grades.clone(), note)
    }

    /// Pull back along a grade-preserving algebra map `small -> gr B` given
    /// by its matrix.
    pub fn restrict(&self, small: &GradedAlgebra, map: &Matrix, note: &str) -> Result<GradedModule> {
        let m = self.module.restrict_along(small.algebra(), map);
        GradedModule::new(small, m, self.grades.clone(), note)
    }

    /// Direct sum with the grades concatenated.
    pub fn power(&self, n: usize) -> GradedModule {
        let module = self.module.power(n);
        let grades = (0..n).flat_map(|_| self.grades.iter().copied()).collect();
        GradedModule {
            algebra: self.algebra.clone(),
            module,
            grades,
            note: format!("{} (x{n})", self.note),
        }
    }
}

/// `M ⊇ JM ⊇ J^2 M ⊇ ... ⊇ 0` for the ideal `J` whose powers define `gr`.
pub fn module_filtration(gr: &GradedAlgebra, m: &AModule) -> Result<Filtration> {
    if !m.algebra().same(gr.source()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.field();
    let d = m.dim();
    let j = gr.filtration().space(1);
    let acts: Vec<Matrix> = j.basis().iter().map(|x| m.act(x)).collect();
    let mut spaces = vec![Subspace::full(f, d)];
    loop {
        let last = spaces.last().unwrap();
        if last.is_zero() {
            break;
        }
        let mut next = Subspace::zero(f, d);
        for a in &acts {
            for v in last.basis() {
                next.insert(&a.mul_vec(v));
            }
        }
        if next.dim() == last.dim() {
            return Err(Error::ModuleAxioms("the ideal does not act nilpotently".into()));
        }
        spaces.push(next);
    }
    Filtration::new(spaces)
}

/// `gr M = ⊕ J^n M / J^{n+1} M` with the induced action of `gr B`. The layer
/// bases follow the same echelon conventions as the algebra layers.
pub fn gr_module(gr: &GradedAlgebra, m: &AModule) -> Result<GradedModule> {
    let filt = module_filtration(gr, m)?;
    let (grm, _) = gr_module_with_filtration(gr, m, filt)?;
    Ok(grm)
}

pub(crate) fn gr_module_with_filtration(
    gr: &GradedAlgebra,
    m: &AModule,
    filt: Filtration,
) -> Result<(GradedModule, Filtration)> {
    let f = m.field();
    let d = m.dim();
    let grades = filt.grades();
    let lifts: Vec<Vec<Elem>> = (0..d).map(|i| filt.basis().col(i)).collect();
    let alg = gr.algebra();
    let mut action = Vec::with_capacity(alg.dim());
    for i in 0..alg.dim() {
        let a = gr.grade(i);
        let x = m.act(&gr.lift(i));
        let cols: Vec<Vec<Elem>> = lifts
            .iter()
            .zip(&grades)
            .map(|(y, &n)| filt.class_of(a + n, &x.mul_vec(y)))
            .collect();
        action.push(Matrix::from_cols(f, d, &cols));
    }
    let module = AModule::new(alg, action)?;
    let gm = GradedModule::new(gr, module, grades, "radical layers of the ideal filtration")?;
    Ok((gm, filt))
}

/// Per-grade pieces `(V ∩ J^n M) / (V ∩ J^{n+1} M)` inside the layers of
/// `gr M`, for an arbitrary subspace `V`.
#[derive(Clone, Debug)]
pub struct GradedSubquotient {
    pub parent: GradedModule,
    /// Piece of grade `n`, as a subspace of the whole graded carrier.
    pub pieces: Vec<Subspace>,
    /// The sum of the pieces.
    pub total: Subspace,
    /// Whether the total is stable under `gr B`.
    pub stable: bool,
    /// Whether each piece is stable under the grade-0 subalgebra.
    pub pieces_grade_zero_stable: bool,
}

impl GradedSubquotient {
    pub fn piece_dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|s| s.dim()).collect()
    }
}

pub fn gr_sharp(gr: &GradedAlgebra, m: &AModule, v: &Subspace) -> Result<GradedSubquotient> {
    if v.ambient() != m.dim() {
        return Err(Error::DimensionMismatch("subspace of a different space".into()));
    }
    let filt = module_filtration(gr, m)?;
    let (parent, filt) = gr_module_with_filtration(gr, m, filt)?;
    let f = m.field();
    let d = m.dim();
    let mut pieces = Vec::with_capacity(filt.layers());
    let mut total = Subspace::zero(f, d);
    for n in 0..filt.layers() {
        let inter = v.intersection(filt.space(n));
        let mut piece = Subspace::zero(f, d);
        for w in inter.basis() {
            let c = filt.class_of(n, w);
            piece.insert(&c);
        }
        total = total.sum(&piece);
        pieces.push(piece);
    }
    let gens = parent.module().generator_matrices();
    let stable = gens.iter().all(|g| total.is_stable_under(g));
    let alg = gr.algebra();
    let zero: Vec<Matrix> = (0..alg.dim())
        .filter(|&i| gr.grade(i) == 0)
        .map(|i| parent.module().action(i).clone())
        .collect();
    let pieces_grade_zero_stable = pieces.iter().all(|p| zero.iter().all(|z| p.is_stable_under(z)));
    Ok(GradedSubquotient {
        parent,
        pieces,
        total,
        stable,
        pieces_grade_zero_stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{graded_algebra, SubalgebraPair};
    use crate::catalog::fixture;
    use crate::rep::structure::{radical_filtration, socle_space};

    #[test]
    fn regular_module_is_the_graded_algebra() {
        let ctx = fixture("S3:A3", 3);
        let reg = AModule::regular(ctx.kg());
        let g = gr_module(ctx.gr_g(), &reg).unwrap();
        assert_eq!(g.layer_dims(), vec![2, 2, 2]);
        let grreg = AModule::regular(ctx.gr_g().algebra());
        assert_eq!(g.module().actions(), grreg.actions());
    }

    #[test]
    fn semisimple_subalgebra_gives_one_layer() {
        let ctx = fixture("S3:A3", 2);
        let reg = AModule::regular(ctx.kg());
        let g = gr_module(ctx.gr_g(), &reg).unwrap();
        assert_eq!(g.layer_dims(), vec![6]);
    }

    #[test]
    fn restriction_recovers_the_small_radical_series() {
        let ctx = fixture("S4:V4", 2);
        let reg = AModule::regular(ctx.kg());
        let g = gr_module(ctx.gr_g(), &reg).unwrap();
        let small = g.restrict(ctx.gr_n(), ctx.gr_embedding(), "restricted").unwrap();
        let dims: Vec<usize> = radical_filtration(&ctx.restrict(&reg))
            .windows(2)
            .map(|w| w[0].dim() - w[1].dim())
            .collect();
        assert_eq!(small.layer_dims(), dims);
    }

    #[test]
    fn sharp_of_whole_zero_and_socle() {
        let ctx = fixture("S3:A3", 3);
        let p = ctx.cover_g(&AModule::trivial(ctx.kg()).unwrap()).unwrap().projective.clone();
        let f = ctx.field();
        let whole = gr_sharp(ctx.gr_g(), &p, &Subspace::full(f, 3)).unwrap();
        assert!(whole.stable);
        assert_eq!(whole.piece_dims(), vec![1, 1, 1]);
        let zero = gr_sharp(ctx.gr_g(), &p, &Subspace::zero(f, 3)).unwrap();
        assert!(zero.stable);
        assert_eq!(zero.total.dim(), 0);
        let soc = gr_sharp(ctx.gr_g(), &p, &socle_space(&p)).unwrap();
        assert!(soc.stable);
        assert_eq!(soc.piece_dims(), vec![0, 0, 1]);
    }

    #[test]
    fn pair_over_itself() {
        let ctx = fixture("C4:C2", 2);
        let pair = SubalgebraPair::identity(ctx.kg());
        let gr = graded_algebra(&pair).unwrap();
        let g = gr_module(&gr, &AModule::regular(ctx.kg())).unwrap();
        assert_eq!(g.layer_dims(), vec![1, 1, 1, 1]);
    }
}
