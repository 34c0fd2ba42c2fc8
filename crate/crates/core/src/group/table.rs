use std::collections::{BTreeMap, HashSet};
use std::fmt;

use super::GroupError;

/// Index of an element inside a [`FiniteGroup`]. Index 0 is always the identity.
pub type Elem = usize;

/// A finite group stored as a full Cayley table.
///
/// Elements are the dense indices `0..order`, with `0` the identity. All
/// constructors validate the group axioms, so every value of this type is a
/// genuine group.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    element_names: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    pub fn trivial() -> Self {
        FiniteGroup {
            label: "1".to_string(),
            order: 1,
            mul: vec![0],
            inv: vec![0],
            element_names: None,
        }
    }

    /// Builds a group from a multiplication function on `0..order`.
    ///
    /// The identity does not have to be element 0; if it is elsewhere the
    /// elements are relabelled so that it becomes 0 (keeping the relative
    /// order of the others).
    pub fn from_fn<F>(label: impl Into<String>, order: usize, f: F) -> Result<Self, GroupError>
    where
        F: Fn(usize, usize) -> usize,
    {
        let mut rows = Vec::with_capacity(order);
        for a in 0..order {
            rows.push((0..order).map(|b| f(a, b)).collect::<Vec<_>>());
        }
        Self::from_table(label, &rows)
    }

    pub fn from_table(label: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let label = label.into();
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::EmptyTable);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotSquare {
                    row: i,
                    len: row.len(),
                    order,
                });
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= order) {
                return Err(GroupError::EntryOutOfRange {
                    row: i,
                    value: bad,
                    order,
                });
            }
        }
        check_latin(rows)?;

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;

        // Move the identity to index 0.
        let mut relabel: Vec<usize> = (0..order).collect();
        if identity != 0 {
            relabel.remove(identity);
            relabel.insert(0, identity);
        }
        let mut pos = vec![0; order];
        for (new, &old) in relabel.iter().enumerate() {
            pos[old] = new;
        }
        let mut mul = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                mul[a * order + b] = pos[rows[relabel[a]][relabel[b]]];
            }
        }
        Self::from_raw(label, order, mul, None)
    }

    /// Validated construction from a flat, already identity-first table.
    pub(crate) fn from_raw(
        label: String,
        order: usize,
        mul: Vec<Elem>,
        element_names: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        debug_assert_eq!(mul.len(), order * order);
        for x in 0..order {
            if mul[x] != x || mul[x * order] != x {
                return Err(GroupError::NoIdentity);
            }
        }
        let mut inv = vec![usize::MAX; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v == 0).ok_or(GroupError::NotLatin)?;
            if mul[y * order + x] != 0 {
                return Err(GroupError::NoInverse(x));
            }
            inv[x] = y;
        }
        let group = FiniteGroup {
            label,
            order,
            mul,
            inv,
            element_names,
        };
        if !group.is_associative_light() {
            return Err(GroupError::NotAssociative);
        }
        Ok(group)
    }

    /// Builds without re-validating. Only for tables produced by code that
    /// already guarantees the axioms (products, quotients, relabelings).
    pub(crate) fn from_trusted(label: String, order: usize, mul: Vec<Elem>) -> Self {
        let mut inv = vec![0; order];
        for x in 0..order {
            inv[x] = (0..order).find(|&y| mul[x * order + y] == 0).expect("latin row");
        }
        FiniteGroup {
            label,
            order,
            mul,
            inv,
            element_names: None,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_element_names(mut self, names: Vec<String>) -> Result<Self, GroupError> {
        if names.len() != self.order {
            return Err(GroupError::NameCount {
                names: names.len(),
                order: self.order,
            });
        }
        self.element_names = Some(names);
        Ok(self)
    }

    pub fn element_names(&self) -> Option<&[String]> {
        self.element_names.as_deref()
    }

    pub fn element_name(&self, x: Elem) -> String {
        match &self.element_names {
            Some(names) => names[x].clone(),
            None => format!("g{x}"),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// Row `a` of the Cayley table.
    pub fn row(&self, a: Elem) -> &[Elem] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    pub fn table_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.order).map(|a| self.row(a).to_vec()).collect()
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Conjugate of `y` by `x`, written `^x y = x y x⁻¹`.
    #[inline]
    pub fn conj(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(x, y), self.inv(x))
    }

    /// Commutator `[x, y] = x y x⁻¹ y⁻¹`.
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|a| self.element_order(a)).collect()
    }

    /// Multiset of element orders as `order -> count`.
    pub fn order_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for k in self.element_orders() {
            *census.entry(k).or_insert(0) += 1;
        }
        census
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Full triple-loop associativity check.
    pub fn is_associative_exhaustive(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    /// Light's associativity test: it is enough that every element of a
    /// generating set associates with all pairs.
    pub fn is_associative_light(&self) -> bool {
        let n = self.order;
        let gens = self.magma_generators();
        gens.iter().all(|&g| {
            (0..n).all(|a| {
                let ag = self.mul(a, g);
                (0..n).all(|b| self.mul(ag, b) == self.mul(a, self.mul(g, b)))
            })
        })
    }

    /// Elements that generate the table under multiplication alone.
    fn magma_generators(&self) -> Vec<Elem> {
        let n = self.order;
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut members = vec![0];
        let mut gens = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            gens.push(g);
            seen[g] = true;
            members.push(g);
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for &h in &gens {
                    for y in [self.mul(x, h), self.mul(h, x)] {
                        if !seen[y] {
                            seen[y] = true;
                            members.push(y);
                        }
                    }
                }
                i += 1;
            }
        }
        gens
    }

    /// Full axiom check: Latin square, identity, inverses, associativity.
    pub fn validate(&self) -> Result<(), GroupError> {
        check_latin(&self.table_rows())?;
        for x in self.elements() {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(GroupError::NoIdentity);
            }
            let y = self.inv(x);
            if self.mul(x, y) != 0 || self.mul(y, x) != 0 {
                return Err(GroupError::NoInverse(x));
            }
        }
        if !self.is_associative_light() {
            return Err(GroupError::NotAssociative);
        }
        Ok(())
    }

    /// Renames elements: old element `x` becomes `perm[x]`. `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[Elem]) -> FiniteGroup {
        assert_eq!(perm.len(), self.order);
        assert_eq!(perm[0], 0, "identity must stay at index 0");
        let n = self.order;
        let mut inverse = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = perm[self.mul(inverse[a], inverse[b])];
            }
        }
        let mut g = FiniteGroup::from_trusted(self.label.clone(), n, mul);
        if let Some(names) = &self.element_names {
            g.element_names = Some((0..n).map(|x| names[inverse[x]].clone()).collect());
        }
        g
    }

    /// Direct product; the pair `(a, b)` gets index `a * |H| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n1, n2) = (self.order, other.order);
        let n = n1 * n2;
        let mut mul = vec![0; n * n];
        for x in 0..n {
            let (a1, a2) = (x / n2, x % n2);
            for y in 0..n {
                let (b1, b2) = (y / n2, y % n2);
                mul[x * n + y] = self.mul(a1, b1) * n2 + other.mul(a2, b2);
            }
        }
        let label = format!("{} x {}", self.label, other.label);
        FiniteGroup::from_trusted(label, n, mul)
    }

    /// Smallest subgroup containing `gens`, as a sorted member list.
    pub fn closure(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// Greedy small generating sequence: repeatedly adds the element that
    /// enlarges the generated subgroup the most (ties broken by index).
    pub fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut current = self.closure(&[]);
        while current.len() < self.order {
            let in_current: HashSet<Elem> = current.iter().copied().collect();
            let mut best: Option<(usize, Elem, Vec<Elem>)> = None;
            for g in self.elements().filter(|g| !in_current.contains(g)) {
                let mut trial = gens.clone();
                trial.push(g);
                let span = self.closure(&trial);
                if best.as_ref().is_none_or(|(size, _, _)| span.len() > *size) {
                    best = Some((span.len(), g, span));
                    if best.as_ref().unwrap().0 == self.order {
                        break;
                    }
                }
            }
            let (_, g, span) = best.expect("proper subgroup has an outside element");
            gens.push(g);
            current = span;
        }
        gens
    }
}

fn check_latin(rows: &[Vec<usize>]) -> Result<(), GroupError> {
    let n = rows.len();
    let mut seen = vec![usize::MAX; n];
    for (i, row) in rows.iter().enumerate() {
        for &v in row {
            if seen[v] == i {
                return Err(GroupError::NotLatin);
            }
            seen[v] = i;
        }
    }
    let mut seen = vec![usize::MAX; n];
    for j in 0..n {
        for row in rows {
            let v = row[j];
            if seen[v] == j {
                return Err(GroupError::NotLatin);
            }
            seen[v] = j;
        }
    }
    Ok(())
}
