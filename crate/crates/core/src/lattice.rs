//! Complete subgroup lattices.
//!
//! Every subgroup is generated by its cyclic subgroups, so the set of all
//! subgroups is the closure of the cyclic subgroups under pairwise joins.
//! Subgroups are identified by their member bitsets.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElementSet;
use crate::group::{Element, Group};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("element set addresses {got} elements but the group has order {order}")]
    NotContained { got: usize, order: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
}

/// A subgroup of some parent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: ElementSet,
    generators: Vec<Element>,
    normal: Option<bool>,
}

impl Subgroup {
    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.contains(x.index())
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter().map(Element::new)
    }

    /// A generating set; not necessarily minimal.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Cached normality, present for subgroups taken from a lattice.
    pub fn is_normal_cached(&self) -> Option<bool> {
        self.normal
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// Smallest subgroup containing `seed`.
pub fn closure(g: &Group, seed: &[Element]) -> Subgroup {
    let gens: Vec<Element> = seed.iter().copied().filter(|e| e.index() != 0).collect();
    Subgroup {
        members: g.closure_set(&gens),
        generators: gens,
        normal: None,
    }
}

/// Checks that `members` is a subgroup of `g` and wraps it.
pub fn subgroup_from_members(g: &Group, members: ElementSet) -> Result<Subgroup, LatticeError> {
    if members.capacity() != g.order() {
        return Err(LatticeError::NotContained {
            got: members.capacity(),
            order: g.order(),
        });
    }
    if !members.contains(0) {
        return Err(LatticeError::NotASubgroup);
    }
    for a in members.iter() {
        for b in members.iter() {
            if !members.contains(g.mul(Element::new(a), Element::new(b)).index()) {
                return Err(LatticeError::NotASubgroup);
            }
        }
    }
    let generators = members.iter().skip(1).map(Element::new).collect();
    Ok(Subgroup {
        members,
        generators,
        normal: None,
    })
}

pub fn is_normal(g: &Group, h: &Subgroup) -> Result<bool, LatticeError> {
    if h.members.capacity() != g.order() {
        return Err(LatticeError::NotContained {
            got: h.members.capacity(),
            order: g.order(),
        });
    }
    Ok(normal_unchecked(g, &h.members))
}

fn normal_unchecked(g: &Group, members: &ElementSet) -> bool {
    g.generators().iter().all(|&s| {
        members
            .iter()
            .all(|x| members.contains(g.conjugate(Element::new(x), s).index()))
    })
}

/// All subgroups of a group in canonical order: by order, then by the
/// ascending member list.
#[derive(Clone, Debug)]
pub struct SubgroupLattice<'g> {
    group: &'g Group,
    subgroups: Vec<Subgroup>,
}

pub fn all_subgroups(g: &Group) -> SubgroupLattice<'_> {
    let n = g.order();
    let mut subgroups: Vec<Subgroup> = Vec::new();
    let mut index: HashMap<ElementSet, usize> = HashMap::new();

    let mut cyclic_seen = ElementSet::empty(n);
    for x in g.elements() {
        if cyclic_seen.contains(x.index()) {
            continue;
        }
        let c = closure(g, &[x]);
        // Generators of the same cyclic subgroup give the same set; mark them.
        for y in c.members.iter() {
            if g.element_order(Element::new(y)) == g.element_order(x) {
                cyclic_seen.insert(y);
            }
        }
        if !index.contains_key(&c.members) {
            index.insert(c.members.clone(), subgroups.len());
            subgroups.push(c);
        }
    }

    // Join fixpoint: each subgroup, once discovered, is joined with every
    // earlier one exactly once.
    let mut k = 0;
    while k < subgroups.len() {
        for j in 0..k {
            let (a, b) = (&subgroups[k], &subgroups[j]);
            if a.members.is_subset(&b.members) || b.members.is_subset(&a.members) {
                continue;
            }
            let joined = join(g, a, b);
            if !index.contains_key(&joined.members) {
                index.insert(joined.members.clone(), subgroups.len());
                subgroups.push(joined);
            }
        }
        k += 1;
    }

    for s in &mut subgroups {
        s.normal = Some(normal_unchecked(g, &s.members));
    }
    subgroups.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members.cmp(&b.members))
    });
    SubgroupLattice {
        group: g,
        subgroups,
    }
}

pub fn count_subgroups(g: &Group) -> usize {
    all_subgroups(g).count()
}

fn join(g: &Group, a: &Subgroup, b: &Subgroup) -> Subgroup {
    // Grow from `a`'s members, multiplying by generators of both sides.
    let mut gens = a.generators.clone();
    for &x in &b.generators {
        if !a.members.contains(x.index()) && !gens.contains(&x) {
            gens.push(x);
        }
    }
    let mut members = a.members.clone();
    let mut list: Vec<usize> = members.iter().collect();
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for s in &gens {
            let y = g.mul(Element::new(x), *s).index();
            if members.insert(y) {
                list.push(y);
            }
        }
        i += 1;
    }
    Subgroup {
        members,
        generators: gens,
        normal: None,
    }
}

#[derive(Serialize)]
struct JsonSubgroup {
    order: usize,
    members: Vec<usize>,
    normal: bool,
}

#[derive(Serialize)]
struct JsonLattice<'a> {
    group: &'a str,
    order: usize,
    subgroups: Vec<JsonSubgroup>,
}

impl<'g> SubgroupLattice<'g> {
    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn count(&self) -> usize {
        self.subgroups.len()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn of_order(&self, order: usize) -> impl Iterator<Item = &Subgroup> {
        self.subgroups.iter().filter(move |s| s.order() == order)
    }

    pub fn position(&self, members: &ElementSet) -> Option<usize> {
        self.subgroups
            .binary_search_by(|s| {
                s.order()
                    .cmp(&members.len())
                    .then_with(|| s.members.cmp(members))
            })
            .ok()
    }

    /// Pairs `(i, j)` with subgroup `i` maximal in subgroup `j`.
    pub fn covering_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (j, big) in self.subgroups.iter().enumerate() {
            let below: Vec<usize> = (0..j)
                .filter(|&i| {
                    let s = &self.subgroups[i];
                    s.order() < big.order()
                        && big.order() % s.order() == 0
                        && s.members.is_subset(&big.members)
                })
                .collect();
            for &i in &below {
                let small = &self.subgroups[i];
                let maximal = below.iter().all(|&m| {
                    let mid = &self.subgroups[m];
                    m == i || mid.order() <= small.order() || !small.members.is_subset(&mid.members)
                });
                if maximal {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Graphviz digraph with one node per subgroup and an edge per covering
    /// relation, pointing from the smaller subgroup to the larger.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.group.label().replace('"', "'"));
        let _ = writeln!(out, "  rankdir=BT;");
        for (i, s) in self.subgroups.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"order={}\"];", s.order());
        }
        for (i, j) in self.covering_edges() {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let doc = JsonLattice {
            group: self.group.label(),
            order: self.group.order(),
            subgroups: self
                .subgroups
                .iter()
                .map(|s| JsonSubgroup {
                    order: s.order(),
                    members: s.members.iter().collect(),
                    normal: s.normal.unwrap_or(false),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("lattice serializes")
    }
}

pub fn dot_export(lat: &SubgroupLattice<'_>) -> String {
    lat.to_dot()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Group {
        Group::semidirect_cyclic(3, 2, 2).unwrap()
    }

    fn a4() -> Group {
        Group::alternating(4).unwrap()
    }

    /// Conjugation by every element, independent of the generator shortcut.
    fn normal_by_all_elements(g: &Group, h: &Subgroup) -> bool {
        g.elements()
            .all(|s| h.elements().all(|x| h.contains(g.conjugate(x, s))))
    }

    #[test]
    fn closure_cases() {
        let g = a4();
        assert_eq!(closure(&g, &[]).order(), 1);
        assert_eq!(closure(&g, g.generators()).order(), 12);
        for x in g.elements().filter(|&x| g.element_order(x) == 3) {
            assert_eq!(closure(&g, &[x]).order(), 3);
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_subgroups(&s3()), 6);
        assert_eq!(count_subgroups(&Group::abelian(&[2, 2]).unwrap()), 5);
        assert_eq!(count_subgroups(&Group::quaternion(8).unwrap()), 6);
        assert_eq!(count_subgroups(&Group::trivial()), 1);
        assert_eq!(count_subgroups(&Group::abelian(&[3, 9]).unwrap()), 10);
        assert_eq!(count_subgroups(&Group::semidirect_cyclic(3, 16, 2).unwrap()), 12);
    }

    #[test]
    fn normality() {
        let g = s3();
        let lat = all_subgroups(&g);
        let whole = lat.subgroups().last().unwrap();
        assert!(is_normal(&g, whole).unwrap());
        for h in lat.of_order(2) {
            assert!(!is_normal(&g, h).unwrap());
            assert!(!normal_by_all_elements(&g, h));
        }
        let a = a4();
        let lat = all_subgroups(&a);
        let v4: Vec<_> = lat.of_order(4).collect();
        assert_eq!(v4.len(), 1);
        assert!(is_normal(&a, v4[0]).unwrap());
        assert!(normal_by_all_elements(&a, v4[0]));
        for h in lat.subgroups() {
            assert_eq!(h.is_normal_cached(), Some(normal_by_all_elements(&a, h)));
        }
        let foreign = closure(&Group::cyclic(5).unwrap(), &[Element::new(1)]);
        assert_eq!(
            is_normal(&a, &foreign),
            Err(LatticeError::NotContained { got: 5, order: 12 })
        );
    }

    #[test]
    fn dot_shapes() {
        let triv = Group::trivial();
        let dot = all_subgroups(&triv).to_dot();
        assert_eq!(dot.matches("[label=").count(), 1);
        assert_eq!(dot.matches("->").count(), 0);
        let c7 = Group::cyclic(7).unwrap();
        let dot = all_subgroups(&c7).to_dot();
        assert_eq!(dot.matches("[label=").count(), 2);
        assert_eq!(dot.matches("->").count(), 1);
        let g = s3();
        let lat = all_subgroups(&g);
        assert_eq!(lat.covering_edges().len(), 8);
        let dot = dot_export(&lat);
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("n0 [label=\"order=1\"];"));
    }

    #[test]
    fn canonical_order_and_lookup() {
        let g = Group::dihedral(12).unwrap();
        let lat = all_subgroups(&g);
        for w in lat.subgroups().windows(2) {
            assert!((w[0].order(), w[0].members()) < (w[1].order(), w[1].members()));
        }
        for (i, s) in lat.subgroups().iter().enumerate() {
            assert_eq!(lat.position(s.members()), Some(i));
        }
    }

    #[test]
    fn member_validation() {
        let g = Group::cyclic(6).unwrap();
        let ok = ElementSet::from_indices(6, [0, 2, 4]);
        assert_eq!(subgroup_from_members(&g, ok).unwrap().order(), 3);
        let bad = ElementSet::from_indices(6, [0, 1]);
        assert_eq!(subgroup_from_members(&g, bad), Err(LatticeError::NotASubgroup));
    }
}
