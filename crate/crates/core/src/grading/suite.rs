//! Running the checks over all choices of `L` and `S` for one instance.

use serde::Serialize;

use super::report::{Claim, InstanceInfo, Selector, VerificationReport};
use super::verify::{verify_composition_factors, verify_graded_factorization};
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::groups::extend_irreducible_to_g;
use crate::rep::AModule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Which {
    Factorization,
    Factors,
    All,
}

impl Which {
    fn factorization(self) -> bool {
        matches!(self, Which::Factorization | Which::All)
    }

    fn factors(self) -> bool {
        matches!(self, Which::Factors | Which::All)
    }
}

#[derive(Clone, Debug)]
pub struct InstanceRequest {
    /// `(dim, index)` among the simples of `kN`; all of them when absent.
    pub l: Option<(usize, usize)>,
    /// `(dim, index)` among the simples of `k[G/N]`; all when absent.
    pub s: Option<(usize, usize)>,
    pub which: Which,
    pub seed: u64,
}

/// The simple of dimension `dim` at position `index` among those of that
/// dimension.
pub fn select(simples: &[AModule], dim: usize, index: usize) -> Result<&AModule> {
    simples
        .iter()
        .filter(|s| s.dim() == dim)
        .nth(index)
        .ok_or_else(|| Error::BadSelector(format!("no simple module {dim}:{index}")))
}

fn chosen(simples: &[AModule], sel: Option<(usize, usize)>) -> Result<Vec<AModule>> {
    match sel {
        Some((d, i)) => Ok(vec![select(simples, d, i)?.clone()]),
        None => Ok(simples.to_vec()),
    }
}

/// One report per requested check and choice of `L` (and `S` for the
/// factorization). An `L` that does not extend to `G` yields a report whose
/// only claim is not applicable.
pub fn run_instance(ctx: &GroupContext, req: &InstanceRequest) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let ls = chosen(ctx.simples_n()?, req.l)?;
    let ss = chosen(ctx.simples_q()?, req.s)?;
    for ln in &ls {
        let l = match extend_irreducible_to_g(ctx.kg(), ctx.n(), ln) {
            Ok(l) => l,
            Err(e @ (Error::NotStable { .. } | Error::ExtensionObstructed { .. })) => {
                let mut info = InstanceInfo::of(ctx);
                info.l = Selector::of(ctx.simples_n()?, ln);
                let mut r = VerificationReport::new("extension", info, req.seed);
                r.claims.push(Claim::not_applicable("extends_to_g", e.to_string()));
                out.push(r);
                continue;
            }
            Err(e) => return Err(e),
        };
        if req.which.factorization() {
            for s in &ss {
                out.push(verify_graded_factorization(ctx, &l, s, req.seed)?);
            }
        }
        if req.which.factors() {
            out.push(verify_composition_factors(ctx, &l, req.seed)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::fixture;
    use crate::grading::report::Outcome;

    #[test]
    fn non_stable_characters_are_not_applicable() {
        let ctx = fixture("S3:A3", 2);
        let req = InstanceRequest {
            l: None,
            s: None,
            which: Which::All,
            seed: 0,
        };
        let reports = run_instance(&ctx, &req).unwrap();
        let na = reports.iter().filter(|r| r.outcome() == Outcome::NotApplicable).count();
        // the two nontrivial characters of A3 over GF(4) are swapped by S3
        assert_eq!(na, 2);
        assert!(reports
            .iter()
            .all(|r| matches!(r.outcome(), Outcome::Pass | Outcome::NotApplicable)));
    }

    #[test]
    fn selectors_resolve() {
        let ctx = fixture("S3:A3", 3);
        let req = InstanceRequest {
            l: Some((1, 0)),
            s: Some((1, 1)),
            which: Which::Factorization,
            seed: 0,
        };
        let reports = run_instance(&ctx, &req).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].instance.s.as_ref().unwrap().index, 1);
        assert!(matches!(
            select(ctx.simples_q().unwrap(), 2, 0),
            Err(Error::BadSelector(_))
        ));
    }
}
