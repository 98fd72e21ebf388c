//! Bundled groups with a normal subgroup.

use std::sync::Arc;

use serde::Serialize;

use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Perm, Subgroup};
use crate::linalg::Field;
use crate::rep::check_splitting;

type Cycles = &'static [&'static [usize]];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub group: &'static str,
    pub subgroup: &'static str,
    pub degree: usize,
    pub group_gens: &'static [Cycles],
    pub subgroup_gens: &'static [Cycles],
    pub primes: &'static [u64],
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogListing {
    pub name: String,
    pub group_order: usize,
    pub subgroup_order: usize,
    pub primes: Vec<u64>,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "S3:A3",
        group: "S3",
        subgroup: "A3",
        degree: 3,
        group_gens: &[&[&[1, 2]], &[&[1, 2, 3]]],
        subgroup_gens: &[&[&[1, 2, 3]]],
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "C4:C2",
        group: "C4",
        subgroup: "C2",
        degree: 4,
        group_gens: &[&[&[1, 2, 3, 4]]],
        subgroup_gens: &[&[&[1, 3], &[2, 4]]],
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "D4:C2xC2",
        group: "D4",
        subgroup: "C2xC2",
        degree: 4,
        group_gens: &[&[&[1, 2, 3, 4]], &[&[1, 3]]],
        subgroup_gens: &[&[&[1, 3]], &[&[2, 4]]],
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "D4:C4",
        group: "D4",
        subgroup: "C4",
        degree: 4,
        group_gens: &[&[&[1, 2, 3, 4]], &[&[1, 3]]],
        subgroup_gens: &[&[&[1, 2, 3, 4]]],
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "S4:V4",
        group: "S4",
        subgroup: "V4",
        degree: 4,
        group_gens: &[&[&[1, 2]], &[&[1, 2, 3, 4]]],
        subgroup_gens: &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]],
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "A4:V4",
        group: "A4",
        subgroup: "V4",
        degree: 4,
        group_gens: &[&[&[1, 2, 3]], &[&[2, 3, 4]]],
        subgroup_gens: &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]],
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "Q8:Z",
        group: "Q8",
        subgroup: "Z",
        degree: 8,
        group_gens: &[&[&[1, 3, 2, 4], &[5, 7, 6, 8]], &[&[1, 5, 2, 6], &[3, 8, 4, 7]]],
        subgroup_gens: &[&[&[1, 2], &[3, 4], &[5, 6], &[7, 8]]],
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "S3xC3:C3xC3",
        group: "S3xC3",
        subgroup: "C3xC3",
        degree: 6,
        group_gens: &[&[&[1, 2]], &[&[1, 2, 3]], &[&[4, 5, 6]]],
        subgroup_gens: &[&[&[1, 2, 3]], &[&[4, 5, 6]]],
        primes: &[2, 3],
    },
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

fn perms(degree: usize, gens: &[Cycles]) -> Result<Vec<Perm>> {
    gens.iter()
        .map(|c| {
            let cycles: Vec<Vec<usize>> = c.iter().map(|x| x.to_vec()).collect();
            Perm::from_cycles(degree, &cycles)
        })
        .collect()
}

impl CatalogEntry {
    pub fn build(&self) -> Result<(Arc<FiniteGroup>, Subgroup)> {
        let g = Arc::new(FiniteGroup::from_permutations(self.group, &perms(self.degree, self.group_gens)?)?);
        let gens = perms(self.degree, self.subgroup_gens)?
            .iter()
            .map(|p| {
                g.index_of(p)
                    .ok_or_else(|| Error::NotSubgroup(format!("{p} is not in {}", self.group)))
            })
            .collect::<Result<Vec<usize>>>()?;
        let n = Subgroup::generated(&g, self.subgroup, &gens);
        Ok((g, n))
    }

    pub fn group_order(&self) -> usize {
        self.build().map(|(g, _)| g.order()).unwrap_or(0)
    }

    pub fn listing(&self) -> CatalogListing {
        let (g, n) = self.build().expect("bundled entries are valid");
        CatalogListing {
            name: self.name.to_string(),
            group_order: g.order(),
            subgroup_order: n.order(),
            primes: self.primes.to_vec(),
        }
    }

    pub fn context(&self, p: u64, k: u32, seed: u64) -> Result<GroupContext> {
        let (g, n) = self.build()?;
        GroupContext::new(g, n, &Field::new(p, k)?, seed)
    }
}

/// Fails with the suggested extension degree unless `kG`, `kN` and
/// `k[G/N]` are all split over the context field.
pub fn check_context_splitting(ctx: &GroupContext) -> Result<()> {
    check_splitting(ctx.simples_g()?)?;
    check_splitting(ctx.simples_n()?)?;
    check_splitting(ctx.simples_q()?)
}

/// The least extension degree `k` over GF(p) splitting all three algebras.
pub fn splitting_context(g: &Arc<FiniteGroup>, n: &Subgroup, p: u64, seed: u64) -> Result<GroupContext> {
    let mut k = 1;
    loop {
        let ctx = GroupContext::new(g.clone(), n.clone(), &Field::new(p, k)?, seed)?;
        match check_context_splitting(&ctx) {
            Ok(()) => return Ok(ctx),
            Err(Error::NonSplitting { suggested_degree }) if suggested_degree > k => k = suggested_degree,
            Err(e) => return Err(e),
        }
    }
}

/// A catalog instance over its least splitting field, with seed 0.
///
/// Panics if the name is unknown; intended for tests and examples.
pub fn fixture(name: &str, p: u64) -> GroupContext {
    let (g, n) = entry(name).and_then(|e| e.build()).expect("catalog entry");
    splitting_context(&g, &n, p, 0).expect("catalog instance")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::is_normal;

    #[test]
    fn entries_build_with_expected_orders() {
        let orders: Vec<(usize, usize)> = entries()
            .iter()
            .map(|e| {
                let (g, n) = e.build().unwrap();
                assert!(is_normal(&g, &n).unwrap());
                (g.order(), n.order())
            })
            .collect();
        assert_eq!(
            orders,
            vec![(6, 3), (4, 2), (8, 4), (8, 4), (24, 4), (12, 4), (8, 2), (18, 9)]
        );
    }

    #[test]
    fn splitting_degrees() {
        let cases = [
            ("S3:A3", 2, 2),
            ("S3:A3", 3, 1),
            ("C4:C2", 3, 2),
            ("D4:C4", 3, 2),
            ("A4:V4", 2, 2),
            ("S3xC3:C3xC3", 2, 2),
            ("S4:V4", 2, 1),
            ("Q8:Z", 3, 1),
        ];
        for (name, p, k) in cases {
            assert_eq!(fixture(name, p).field().degree(), k, "{name} at {p}");
        }
    }
}
