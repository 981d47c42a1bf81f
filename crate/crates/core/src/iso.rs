//! Group isomorphism by backtracking over images of a generating set.
//!
//! A partial assignment of generator images is extended breadth-first to the
//! subgroup those generators span, checking `phi(x g) = phi(x) phi(g)` on every
//! edge of the Cayley graph and injectivity as it goes. A consistent labelling
//! of the whole Cayley graph is an isomorphism.

use std::collections::BTreeMap;

use crate::group::{Element, Group};

/// Returns an isomorphism `g -> h` as an image table, if one exists.
pub fn find_isomorphism(g: &Group, h: &Group) -> Option<Vec<Element>> {
    if g.order() != h.order() || g.order_profile() != h.order_profile() {
        return None;
    }
    if g.is_abelian() != h.is_abelian() {
        return None;
    }
    let n = g.order();
    if n == 1 {
        return Some(vec![Element::IDENTITY]);
    }

    let profile = g.order_profile();
    let mut gens = g.small_generating_set();
    // Rarest element order first; those have the fewest candidate images.
    gens.sort_by_key(|&x| {
        let o = g.element_order(x);
        (profile[&o], o, x)
    });
    gens = irredundant(g, gens);

    let mut candidates_by_order: BTreeMap<u32, Vec<Element>> = BTreeMap::new();
    for y in h.elements() {
        candidates_by_order.entry(h.element_order(y)).or_default().push(y);
    }

    let mut search = Search {
        g,
        h,
        gens: &gens,
        phi: vec![None; n],
        used: vec![false; n],
        trail: Vec::new(),
        covered: Vec::new(),
    };
    search.phi[0] = Some(Element::IDENTITY);
    search.used[0] = true;
    search.covered.push(0);

    if search.extend(0, &candidates_by_order) {
        Some(search.phi.iter().map(|p| p.unwrap()).collect())
    } else {
        None
    }
}

pub fn are_isomorphic(g: &Group, h: &Group) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Drops generators already in the span of the earlier ones.
fn irredundant(g: &Group, gens: Vec<Element>) -> Vec<Element> {
    let mut kept: Vec<Element> = Vec::new();
    let mut span = g.closure_set(&kept);
    for x in gens {
        if !span.contains(x.index()) {
            kept.push(x);
            span = g.closure_set(&kept);
        }
    }
    kept
}

struct Search<'a> {
    g: &'a Group,
    h: &'a Group,
    gens: &'a [Element],
    phi: Vec<Option<Element>>,
    used: Vec<bool>,
    /// Elements assigned since the search began, for undo.
    trail: Vec<usize>,
    /// Elements of the span of the generators fixed so far, BFS order.
    covered: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, candidates: &BTreeMap<u32, Vec<Element>>) -> bool {
        if depth == self.gens.len() {
            return self.covered.len() == self.g.order();
        }
        let x = self.gens[depth];
        let want = self.g.element_order(x);
        for &y in &candidates[&want] {
            if self.used[y.index()] {
                continue;
            }
            let trail_mark = self.trail.len();
            let covered_mark = self.covered.len();
            if self.assign_and_close(depth, y) && self.extend(depth + 1, candidates) {
                return true;
            }
            for &z in &self.trail[trail_mark..] {
                let img = self.phi[z].take().unwrap();
                self.used[img.index()] = false;
            }
            self.trail.truncate(trail_mark);
            self.covered.truncate(covered_mark);
        }
        false
    }

    fn set(&mut self, x: usize, y: Element) -> bool {
        match self.phi[x] {
            Some(existing) => existing == y,
            None => {
                if self.used[y.index()] {
                    return false;
                }
                self.phi[x] = Some(y);
                self.used[y.index()] = true;
                self.trail.push(x);
                true
            }
        }
    }

    /// Maps generator `depth` to `y` and propagates through the span of
    /// generators `0..=depth`. Returns false on any inconsistency.
    fn assign_and_close(&mut self, depth: usize, y: Element) -> bool {
        let gx = self.gens[depth];
        if !self.set(gx.index(), y) {
            return false;
        }
        let active = &self.gens[..=depth];
        // The previously covered span is already closed under the older
        // generators, so it only needs checking against the new one. Elements
        // discovered now are checked against every active generator.
        let old_len = self.covered.len();
        let mut queue: Vec<usize> = std::mem::take(&mut self.covered);
        let mut in_queue = vec![false; self.g.order()];
        for &c in &queue {
            in_queue[c] = true;
        }
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            let fx = self.phi[x].unwrap();
            let gens: &[Element] = if i < old_len {
                std::slice::from_ref(&active[depth])
            } else {
                active
            };
            for &s in gens {
                let xs = self.g.mul(Element::new(x), s).index();
                let img = self.h.mul(fx, self.phi[s.index()].unwrap());
                if !self.set(xs, img) {
                    self.covered = queue;
                    return false;
                }
                if !in_queue[xs] {
                    in_queue[xs] = true;
                    queue.push(xs);
                }
            }
            i += 1;
        }
        self.covered = queue;
        true
    }
}
