use std::collections::{HashMap, VecDeque};

use super::perm::Perm;
use crate::error::{Error, Result};

/// Default cap on the order of an enumerated group.
pub const DEFAULT_GROUP_CAP: usize = 5000;

/// A fully enumerated finite group. Element `0` is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    labels: Vec<String>,
    perms: Option<Vec<Perm>>,
}

impl FiniteGroup {
    pub fn from_permutations(name: &str, gens: &[Perm]) -> Result<FiniteGroup> {
        Self::from_permutations_capped(name, gens, DEFAULT_GROUP_CAP)
    }

    /// Breadth-first closure; elements are numbered in discovery order.
    pub fn from_permutations_capped(name: &str, gens: &[Perm], cap: usize) -> Result<FiniteGroup> {
        let n = gens.first().map_or(0, |g| g.degree());
        if let Some(g) = gens.iter().find(|g| g.degree() != n) {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} has degree {} but expected {n}",
                g.degree()
            )));
        }
        let mut elements = vec![Perm::identity(n)];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let h = elements[i].compose(g);
                if !index.contains_key(&h) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        let order = elements.len();
        let mut mul = vec![0u32; order * order];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mul[i * order + j] = index[&a.compose(b)] as u32;
            }
        }
        let inv = elements.iter().map(|a| index[&a.inverse()] as u32).collect();
        let mut generators: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        generators.retain(|&g| g != 0);
        generators.dedup();
        let labels = elements.iter().map(|p| p.to_string()).collect();
        let group = FiniteGroup {
            name: name.to_string(),
            order,
            mul,
            inv,
            generators,
            labels,
            perms: Some(elements),
        };
        group.check_identity_and_inverses()?;
        Ok(group)
    }

    /// Group from a multiplication table; axioms are verified (associativity
    /// exhaustively up to order 200).
    pub fn from_table(
        name: &str,
        order: usize,
        mul: Vec<u32>,
        generators: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<FiniteGroup> {
        if mul.len() != order * order || labels.len() != order {
            return Err(Error::GroupAxioms("table shape".into()));
        }
        if mul.iter().any(|&x| x as usize >= order) {
            return Err(Error::GroupAxioms("table not closed".into()));
        }
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            if let Some(b) = (0..order).find(|&b| mul[a * order + b] == 0) {
                inv[a] = b as u32;
            }
        }
        if inv.contains(&u32::MAX) {
            return Err(Error::GroupAxioms("missing inverse".into()));
        }
        let group = FiniteGroup {
            name: name.to_string(),
            order,
            mul,
            inv,
            generators,
            labels,
            perms: None,
        };
        group.check_identity_and_inverses()?;
        if order <= 200 {
            for a in 0..order {
                for b in 0..order {
                    let ab = group.mul(a, b);
                    for c in 0..order {
                        if group.mul(ab, c) != group.mul(a, group.mul(b, c)) {
                            return Err(Error::GroupAxioms(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(group)
    }

    fn check_identity_and_inverses(&self) -> Result<()> {
        for a in 0..self.order {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::GroupAxioms(format!("identity fails at {a}")));
            }
            let b = self.inv(a);
            if self.mul(a, b) != 0 || self.mul(b, a) != 0 {
                return Err(Error::GroupAxioms(format!("inverse fails at {a}")));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g h g^{-1}`.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn perm(&self, a: usize) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p[a])
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.perms.as_ref()?.iter().position(|q| q == p)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Every element as a word in the generators: `(element, predecessor,
    /// generator)` in breadth-first order starting from the identity.
    pub fn spanning_tree(&self) -> Vec<(usize, usize, usize)> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            for &s in &self.generators {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push((y, x, s));
                    queue.push_back(y);
                }
            }
        }
        out
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order as u64;
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }
}

/// A subgroup, as a sorted list of element indices of its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    name: String,
    parent_order: usize,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    /// Closure of the given elements of `g`.
    pub fn generated(g: &FiniteGroup, name: &str, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; g.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = g.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let elements = (0..g.order()).filter(|&i| seen[i]).collect();
        let mut generators: Vec<usize> = gens.iter().copied().filter(|&s| s != 0).collect();
        generators.sort_unstable();
        generators.dedup();
        Subgroup {
            name: name.to_string(),
            parent_order: g.order(),
            elements,
            generators,
        }
    }

    /// Validates that the listed elements form a subgroup.
    pub fn from_elements(g: &FiniteGroup, name: &str, elements: &[usize]) -> Result<Subgroup> {
        let mut els = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        if els.first() != Some(&0) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        if els.iter().any(|&x| x >= g.order()) {
            return Err(Error::NotSubgroup("element out of range".into()));
        }
        for &a in &els {
            if els.binary_search(&g.inv(a)).is_err() {
                return Err(Error::NotSubgroup("not closed under inverses".into()));
            }
            for &b in &els {
                if els.binary_search(&g.mul(a, b)).is_err() {
                    return Err(Error::NotSubgroup("not closed under multiplication".into()));
                }
            }
        }
        let generators = els[1..].to_vec();
        Ok(Subgroup {
            name: name.to_string(),
            parent_order: g.order(),
            elements: els,
            generators,
        })
    }

    pub fn trivial(g: &FiniteGroup) -> Subgroup {
        Subgroup::generated(g, "1", &[])
    }

    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup::generated(g, g.name(), g.generators())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Position of a parent element in the sorted element list.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn index_in(&self, g: &FiniteGroup) -> usize {
        g.order() / self.order()
    }

    /// The subgroup as a group in its own right; element `i` is
    /// `self.elements()[i]`.
    pub fn as_group(&self, g: &FiniteGroup) -> FiniteGroup {
        assert_eq!(self.parent_order, g.order());
        let n = self.order();
        let mut mul = vec![0u32; n * n];
        for (i, &a) in self.elements.iter().enumerate() {
            for (j, &b) in self.elements.iter().enumerate() {
                mul[i * n + j] = self.position(g.mul(a, b)).expect("closed") as u32;
            }
        }
        let inv = self
            .elements
            .iter()
            .map(|&a| self.position(g.inv(a)).unwrap() as u32)
            .collect();
        let generators = self
            .generators
            .iter()
            .map(|&s| self.position(s).unwrap())
            .collect();
        FiniteGroup {
            name: self.name.clone(),
            order: n,
            mul,
            inv,
            generators,
            labels: self.elements.iter().map(|&a| g.label(a).to_string()).collect(),
            perms: g
                .perms
                .as_ref()
                .map(|p| self.elements.iter().map(|&a| p[a].clone()).collect()),
        }
    }
}

/// True iff `g N g^{-1} = N` for every generator `g` of `G`.
pub fn is_normal(g: &FiniteGroup, n: &Subgroup) -> Result<bool> {
    if n.parent_order != g.order() {
        return Err(Error::NotSubgroup("subgroup of a different group".into()));
    }
    Subgroup::from_elements(g, n.name(), n.elements())?;
    Ok(g
        .generators()
        .iter()
        .all(|&s| n.elements().iter().all(|&x| n.contains(g.conj(s, x)))))
}

/// `G/N` with its projection; coset `i` has representative `reps[i]`, the
/// least element index in the coset.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
    pub reps: Vec<usize>,
}

pub fn quotient_group(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let mut projection = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for a in 0..g.order() {
        if projection[a] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(a);
        for &x in n.elements() {
            projection[g.mul(a, x)] = c;
        }
    }
    let m = reps.len();
    let mut mul = vec![0u32; m * m];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * m + j] = projection[g.mul(a, b)] as u32;
        }
    }
    let mut generators: Vec<usize> = g
        .generators()
        .iter()
        .map(|&s| projection[s])
        .filter(|&c| c != 0)
        .collect();
    generators.sort_unstable();
    generators.dedup();
    let labels = reps
        .iter()
        .map(|&r| format!("{}{}", g.label(r), n.name()))
        .collect();
    let name = format!("{}/{}", g.name(), n.name());
    let group = FiniteGroup::from_table(&name, m, mul, generators, labels)?;
    for a in 0..g.order() {
        for b in 0..g.order() {
            if projection[g.mul(a, b)] != group.mul(projection[a], projection[b]) {
                return Err(Error::GroupAxioms("projection is not a homomorphism".into()));
            }
        }
    }
    Ok(Quotient {
        group,
        projection,
        reps,
    })
}
