use std::ops::ControlFlow;

use super::{Elem, FiniteGroup, GroupHom};

/// First isomorphism `g1 -> g2` in lexicographic search order, if any.
pub fn find_isomorphism(g1: &FiniteGroup, g2: &FiniteGroup) -> Option<GroupHom> {
    let mut found = None;
    for_each_isomorphism(g1, g2, |h| {
        found = Some(h.clone());
        ControlFlow::Break(())
    });
    found
}

/// Calls `visit` on every isomorphism `g1 -> g2`, in lexicographic order of
/// the images of a greedy generating sequence of `g1`, until it breaks.
///
/// Candidate images are pruned by element order, and every partial
/// assignment is checked by extending it over the subgroup generated so far.
pub fn for_each_isomorphism<F>(g1: &FiniteGroup, g2: &FiniteGroup, mut visit: F)
where
    F: FnMut(&GroupHom) -> ControlFlow<()>,
{
    if g1.order() != g2.order() || g1.order_census() != g2.order_census() {
        return;
    }
    let gens = g1.greedy_generators();
    let orders1: Vec<usize> = gens.iter().map(|&g| g1.element_order(g)).collect();
    let orders2 = g2.element_orders();
    let mut search = Search {
        g1,
        g2,
        gens: &gens,
        orders1: &orders1,
        orders2: &orders2,
        chosen: Vec::with_capacity(gens.len()),
    };
    let _ = search.descend(&mut visit);
}

struct Search<'a> {
    g1: &'a FiniteGroup,
    g2: &'a FiniteGroup,
    gens: &'a [Elem],
    orders1: &'a [usize],
    orders2: &'a [usize],
    chosen: Vec<Elem>,
}

impl Search<'_> {
    fn descend<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&GroupHom) -> ControlFlow<()>,
    {
        let depth = self.chosen.len();
        if depth == self.gens.len() {
            let map = self.partial_map(depth).expect("checked at previous depth");
            let hom = GroupHom::from_images(map);
            if hom.is_bijective(self.g2.order()) {
                return visit(&hom);
            }
            return ControlFlow::Continue(());
        }
        for cand in self.g2.elements() {
            if self.orders2[cand] != self.orders1[depth] || self.chosen.contains(&cand) {
                continue;
            }
            self.chosen.push(cand);
            if self.partial_map(depth + 1).is_some() {
                self.descend(visit)?;
            }
            self.chosen.pop();
        }
        ControlFlow::Continue(())
    }

    /// Extends the first `k` generator images over the subgroup they generate,
    /// requiring consistency and injectivity. Returns a full-length table with
    /// `usize::MAX` outside that subgroup.
    fn partial_map(&self, k: usize) -> Option<Vec<Elem>> {
        let (g1, g2) = (self.g1, self.g2);
        let mut map = vec![usize::MAX; g1.order()];
        let mut used = vec![false; g2.order()];
        map[0] = 0;
        used[0] = true;
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for j in 0..k {
                let y = g1.mul(x, self.gens[j]);
                let want = g2.mul(map[x], self.chosen[j]);
                if map[y] == usize::MAX {
                    if used[want] {
                        return None;
                    }
                    used[want] = true;
                    map[y] = want;
                    queue.push(y);
                } else if map[y] != want {
                    return None;
                }
            }
        }
        Some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::from_fn("C", n, |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn self_isomorphism_exists() {
        let g = cyclic(6).direct_product(&cyclic(2));
        let h = find_isomorphism(&g, &g).unwrap();
        assert!(h.is_isomorphism(&g, &g));
    }

    #[test]
    fn order_obstruction() {
        let v4 = cyclic(2).direct_product(&cyclic(2));
        assert!(find_isomorphism(&cyclic(4), &v4).is_none());
    }

    #[test]
    fn automorphism_count_of_v4() {
        let v4 = cyclic(2).direct_product(&cyclic(2));
        let mut count = 0;
        for_each_isomorphism(&v4, &v4, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 6);
    }

    #[test]
    fn cyclic_product_recognized() {
        let a = cyclic(2).direct_product(&cyclic(3));
        let h = find_isomorphism(&a, &cyclic(6)).unwrap();
        assert!(h.is_isomorphism(&a, &cyclic(6)));
    }
}
