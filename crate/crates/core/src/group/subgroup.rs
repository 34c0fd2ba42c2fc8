use std::collections::HashSet;

use super::{Elem, FiniteGroup, GroupError, GroupHom};

/// A subgroup of some parent [`FiniteGroup`], stored as a sorted member list.
///
/// The parent is not borrowed; operations take it explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<Elem>,
}

impl Subgroup {
    /// Wraps a member list after checking the subgroup axioms in `parent`.
    pub fn new(parent: &FiniteGroup, mut members: Vec<Elem>) -> Result<Self, GroupError> {
        members.sort_unstable();
        members.dedup();
        let mut inside = vec![false; parent.order()];
        for &m in &members {
            if m >= parent.order() {
                return Err(GroupError::NotASubgroup);
            }
            inside[m] = true;
        }
        let closed = inside[0]
            && members
                .iter()
                .all(|&a| inside[parent.inv(a)] && members.iter().all(|&b| inside[parent.mul(a, b)]));
        if !closed {
            return Err(GroupError::NotASubgroup);
        }
        Ok(Subgroup { members })
    }

    pub fn generated_by(parent: &FiniteGroup, gens: &[Elem]) -> Self {
        Subgroup {
            members: parent.closure(gens),
        }
    }

    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn whole(parent: &FiniteGroup) -> Self {
        Subgroup {
            members: parent.elements().collect(),
        }
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn indicator(&self, parent: &FiniteGroup) -> Vec<bool> {
        let mut inside = vec![false; parent.order()];
        for &m in &self.members {
            inside[m] = true;
        }
        inside
    }

    pub fn is_normal(&self, parent: &FiniteGroup) -> bool {
        let inside = self.indicator(parent);
        parent
            .elements()
            .all(|g| self.members.iter().all(|&n| inside[parent.conj(g, n)]))
    }

    pub fn is_abelian(&self, parent: &FiniteGroup) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| parent.mul(a, b) == parent.mul(b, a)))
    }

    /// The subgroup as a standalone group, plus the embedding: standalone
    /// element `i` is parent element `members[i]`.
    pub fn to_group(&self, parent: &FiniteGroup, label: impl Into<String>) -> (FiniteGroup, GroupHom) {
        let n = self.members.len();
        let position = |x: Elem| self.members.binary_search(&x).expect("closed subgroup");
        let mut mul = vec![0; n * n];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                mul[i * n + j] = position(parent.mul(a, b));
            }
        }
        let group = FiniteGroup::from_trusted(label.into(), n, mul);
        (group, GroupHom::from_images(self.members.clone()))
    }
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let members = g
        .elements()
        .filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    Subgroup { members }
}

/// Elements commuting with every member of `h`.
pub fn centralizer(g: &FiniteGroup, h: &[Elem]) -> Subgroup {
    let members = g
        .elements()
        .filter(|&z| h.iter().all(|&x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    Subgroup { members }
}

/// The set of all commutators `[x, y]`, sorted.
pub fn commutator_set(g: &FiniteGroup) -> Vec<Elem> {
    let mut seen = vec![false; g.order()];
    for x in g.elements() {
        for y in g.elements() {
            seen[g.commutator(x, y)] = true;
        }
    }
    (0..g.order()).filter(|&c| seen[c]).collect()
}

pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    Subgroup::generated_by(g, &commutator_set(g))
}

/// A quotient `G/N` together with the canonical projection and the section
/// choosing the smallest element index in every coset.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: GroupHom,
    pub section: Vec<Elem>,
}

/// Cosets are numbered by their smallest element, so the coset of the
/// identity is 0.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient, GroupError> {
    if !n.is_normal(g) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut section = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = section.len();
        section.push(x);
        for &m in n.members() {
            coset_of[g.mul(x, m)] = id;
        }
    }
    let k = section.len();
    let mut mul = vec![0; k * k];
    for a in 0..k {
        for b in 0..k {
            mul[a * k + b] = coset_of[g.mul(section[a], section[b])];
        }
    }
    let group = FiniteGroup::from_trusted(format!("{}/N{}", g.label(), n.order()), k, mul);
    Ok(Quotient {
        group,
        projection: GroupHom::from_images(coset_of),
        section,
    })
}

/// All abelian subgroups (or the maximal ones), ordered by `(size, members)`.
///
/// Breadth-first: each abelian subgroup is extended by every element of its
/// centralizer lying outside it. An abelian subgroup is maximal exactly when
/// it equals its own centralizer.
pub fn abelian_subgroups(g: &FiniteGroup, maximal_only: bool) -> Vec<Subgroup> {
    let mut found: HashSet<Vec<Elem>> = HashSet::new();
    let mut queue = vec![vec![0]];
    found.insert(vec![0]);
    let mut i = 0;
    let mut maximal = Vec::new();
    while i < queue.len() {
        let h = queue[i].clone();
        i += 1;
        let c = centralizer(g, &h);
        if c.order() == h.len() {
            maximal.push(h.clone());
        }
        for &x in c.members() {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(x);
            let bigger = g.closure(&gens);
            if found.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
    }
    let mut out: Vec<Vec<Elem>> = if maximal_only {
        maximal
    } else {
        found.into_iter().collect()
    };
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.into_iter().map(|members| Subgroup { members }).collect()
}
