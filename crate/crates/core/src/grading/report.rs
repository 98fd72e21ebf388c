//! Verification reports.

use serde::Serialize;

use crate::context::GroupContext;
use crate::rep::{AModule, CompositionMultiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Undecided,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub name: String,
    pub outcome: Outcome,
    /// Present whenever the outcome is a pass.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub detail: String,
}

impl Claim {
    pub fn pass(name: &str, witness: String, detail: impl Into<String>) -> Claim {
        Claim {
            name: name.to_string(),
            outcome: Outcome::Pass,
            witness: Some(witness),
            detail: detail.into(),
        }
    }

    pub fn fail(name: &str, detail: impl Into<String>) -> Claim {
        Claim {
            name: name.to_string(),
            outcome: Outcome::Fail,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn undecided(name: &str, detail: impl Into<String>) -> Claim {
        Claim {
            name: name.to_string(),
            outcome: Outcome::Undecided,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn not_applicable(name: &str, detail: impl Into<String>) -> Claim {
        Claim {
            name: name.to_string(),
            outcome: Outcome::NotApplicable,
            witness: None,
            detail: detail.into(),
        }
    }

    /// Pass with the witness when `ok`, fail otherwise.
    pub fn check(name: &str, ok: bool, witness: String, detail: impl Into<String>) -> Claim {
        if ok {
            Claim::pass(name, witness, detail)
        } else {
            Claim::fail(name, detail)
        }
    }
}

/// A module chosen by `(dim, index)` among the simples of its algebra.
#[derive(Clone, Debug, Serialize)]
pub struct Selector {
    pub dim: usize,
    pub index: usize,
    pub hash: String,
}

impl Selector {
    /// `index` counts simples of the same dimension, in canonical order.
    pub fn of(simples: &[AModule], m: &AModule) -> Option<Selector> {
        let pos = simples.iter().position(|s| s.actions() == m.actions())?;
        let index = simples[..pos].iter().filter(|s| s.dim() == m.dim()).count();
        Some(Selector {
            dim: m.dim(),
            index,
            hash: m.hash_hex(),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceInfo {
    pub group: String,
    pub subgroup: String,
    pub group_order: usize,
    pub subgroup_order: usize,
    pub p: u32,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<Selector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Selector>,
    /// `p ∤ |N|`.
    pub degenerate: bool,
}

impl InstanceInfo {
    pub fn of(ctx: &GroupContext) -> InstanceInfo {
        InstanceInfo {
            group: ctx.g().name().to_string(),
            subgroup: ctx.n().name().to_string(),
            group_order: ctx.g().order(),
            subgroup_order: ctx.n().order(),
            p: ctx.field().characteristic(),
            k: ctx.field().degree(),
            l: None,
            s: None,
            degenerate: ctx.is_degenerate(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LayerTable {
    pub name: String,
    pub dims: Vec<usize>,
}

/// `(label, dim, multiplicity)` triples.
#[derive(Clone, Debug, Serialize)]
pub struct MultisetTable {
    pub name: String,
    pub factors: Vec<(String, usize, usize)>,
}

/// `"k"` for the trivial module, otherwise `dim{d}#{i}` with `i` the
/// position among simples of that dimension; `?` if not found.
pub fn simple_label(simples: &[AModule], m: &AModule) -> String {
    if m.is_trivial() {
        return "k".to_string();
    }
    match Selector::of(simples, m) {
        Some(s) => format!("dim{}#{}", s.dim, s.index),
        None => {
            let pos = simples
                .iter()
                .position(|s| s.dim() == m.dim() && crate::rep::hom_space(s, m).is_ok_and(|h| !h.is_empty()));
            match pos {
                Some(p) => {
                    let index = simples[..p].iter().filter(|s| s.dim() == m.dim()).count();
                    format!("dim{}#{}", m.dim(), index)
                }
                None => format!("dim{}#?", m.dim()),
            }
        }
    }
}

pub fn multiset_table(name: &str, simples: &[AModule], ms: &CompositionMultiset) -> MultisetTable {
    let mut factors: Vec<(String, usize, usize)> = ms
        .factors()
        .iter()
        .map(|(s, n)| (simple_label(simples, s), s.dim(), *n))
        .collect();
    factors.sort();
    MultisetTable {
        name: name.to_string(),
        factors,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub kind: String,
    pub instance: InstanceInfo,
    pub claims: Vec<Claim>,
    pub layers: Vec<LayerTable>,
    pub multisets: Vec<MultisetTable>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy: Option<String>,
    pub notes: Vec<String>,
    /// Milliseconds; only filled in when timing is requested, so that
    /// reports are otherwise byte-identical across runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(kind: &str, instance: InstanceInfo, seed: u64) -> VerificationReport {
        VerificationReport {
            kind: kind.to_string(),
            instance,
            claims: Vec::new(),
            layers: Vec::new(),
            multisets: Vec::new(),
            seed,
            strategy: None,
            notes: Vec::new(),
            wall_time_ms: None,
        }
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    pub fn layer(&self, name: &str) -> Option<&[usize]> {
        self.layers.iter().find(|l| l.name == name).map(|l| l.dims.as_slice())
    }

    pub fn multiset(&self, name: &str) -> Option<&MultisetTable> {
        self.multisets.iter().find(|m| m.name == name)
    }

    pub fn push_layers(&mut self, name: &str, dims: Vec<usize>) {
        self.layers.push(LayerTable {
            name: name.to_string(),
            dims,
        });
    }

    /// Fail beats undecided beats pass; a report with nothing but
    /// not-applicable claims is not applicable.
    pub fn outcome(&self) -> Outcome {
        let has = |o| self.claims.iter().any(|c| c.outcome == o);
        if has(Outcome::Fail) {
            Outcome::Fail
        } else if has(Outcome::Undecided) {
            Outcome::Undecided
        } else if has(Outcome::Pass) {
            Outcome::Pass
        } else {
            Outcome::NotApplicable
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
