use super::{Elem, FiniteGroup, Subgroup};

/// A map between two groups given by its full image table.
///
/// Source and target are not stored; checks take them explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    images: Vec<Elem>,
}

impl GroupHom {
    pub fn from_images(images: Vec<Elem>) -> Self {
        GroupHom { images }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom {
            images: g.elements().collect(),
        }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        GroupHom {
            images: vec![0; g.order()],
        }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        self.images.len() == source.order()
            && self.images.iter().all(|&y| y < target.order())
            && source.elements().all(|a| {
                source
                    .elements()
                    .all(|b| self.images[source.mul(a, b)] == target.mul(self.images[a], self.images[b]))
            })
    }

    pub fn is_bijective(&self, target_order: usize) -> bool {
        if self.images.len() != target_order {
            return false;
        }
        let mut seen = vec![false; target_order];
        self.images
            .iter()
            .all(|&y| y < target_order && !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_isomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        self.is_bijective(target.order()) && self.is_homomorphism(source, target)
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &GroupHom) -> GroupHom {
        GroupHom {
            images: self.images.iter().map(|&y| after.images[y]).collect(),
        }
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> GroupHom {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        GroupHom { images: inv }
    }

    pub fn kernel(&self, source: &FiniteGroup) -> Subgroup {
        let members = source.elements().filter(|&x| self.images[x] == 0).collect();
        Subgroup::new(source, members).expect("kernel of a homomorphism")
    }

    /// Sorted, deduplicated image set.
    pub fn image_set(&self) -> Vec<Elem> {
        let mut img = self.images.clone();
        img.sort_unstable();
        img.dedup();
        img
    }
}

/// Extends an assignment on generators to a homomorphism, if one exists.
///
/// Walks the right Cayley graph of `source` from the identity and checks
/// `h(x g) = h(x) h(g)` on every edge; those edge conditions are exactly what
/// makes the extension a well-defined homomorphism. Returns `None` when the
/// generators do not generate `source` or an edge condition fails.
pub fn extend_from_generators(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[Elem],
    gen_images: &[Elem],
) -> Option<GroupHom> {
    debug_assert_eq!(gens.len(), gen_images.len());
    let mut images = vec![usize::MAX; source.order()];
    images[0] = 0;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&g, &img) in gens.iter().zip(gen_images) {
            let y = source.mul(x, g);
            let want = target.mul(images[x], img);
            if images[y] == usize::MAX {
                images[y] = want;
                queue.push(y);
            } else if images[y] != want {
                return None;
            }
        }
    }
    if queue.len() != source.order() {
        return None;
    }
    Some(GroupHom { images })
}
