//! Similarity of groups and enumeration of similarity classes by subgroup
//! count.
//!
//! Two groups are similar when their tilde parts are isomorphic and the
//! multisets of exponents of their stripped cyclic central Sylow factors
//! agree. A cyclic factor of order `p^k` coprime to the rest multiplies the
//! subgroup count by `k + 1`, so a class `(T, [n_1, ..., n_c])` has
//! `count(T) * prod(n_i + 1)` subgroups.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{prime_divisors, primes_avoiding};
use crate::group::Group;
use crate::iso::are_isomorphic;
use crate::lattice::count_subgroups;
use crate::structure::{decompose, is_tilde_fixed, StructureError};

/// Largest subgroup count the inventory is complete for.
pub const MAX_SUBGROUPS: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimilarityError {
    #[error("inventory group {0} has a cyclic central Sylow subgroup")]
    NotTildeFixed(String),
    #[error("inventory group {name} has {count} subgroups, more than {max}")]
    TooManySubgroups { name: String, count: usize, max: usize },
    #[error("subgroup count {0} outside 1..={MAX_SUBGROUPS}")]
    OutOfRange(usize),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Cheap isomorphism invariants. Equal keys are necessary for isomorphism,
/// not sufficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IsoKey {
    pub order: usize,
    pub order_profile: Vec<(u32, usize)>,
    pub subgroup_count: usize,
    pub nonabelian: bool,
}

impl IsoKey {
    pub fn of(g: &Group) -> Self {
        IsoKey {
            order: g.order(),
            order_profile: g.order_profile().into_iter().collect(),
            subgroup_count: count_subgroups(g),
            nonabelian: !g.is_abelian(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimilaritySignature {
    pub tilde: Group,
    pub tilde_key: IsoKey,
    /// Sorted exponents of the stripped factors.
    pub exponents: Vec<u32>,
}

/// Keys first; the isomorphism search runs only when they collide.
impl PartialEq for SimilaritySignature {
    fn eq(&self, other: &Self) -> bool {
        self.exponents == other.exponents
            && self.tilde_key == other.tilde_key
            && are_isomorphic(&self.tilde, &other.tilde)
    }
}

impl Eq for SimilaritySignature {}

pub fn signature(g: &Group) -> Result<SimilaritySignature, SimilarityError> {
    let d = decompose(g)?;
    Ok(SimilaritySignature {
        tilde_key: IsoKey::of(&d.tilde),
        exponents: d.exponents(),
        tilde: d.tilde,
    })
}

pub fn similar(g: &Group, h: &Group) -> Result<bool, SimilarityError> {
    Ok(signature(g)? == signature(h)?)
}

#[derive(Clone, Debug)]
pub struct InventoryGroup {
    pub name: String,
    pub group: Group,
    pub subgroup_count: usize,
}

/// Groups with no cyclic central Sylow subgroup and at most
/// [`MAX_SUBGROUPS`] subgroups, ordered by (subgroup count, order, name).
#[derive(Clone, Debug, Default)]
pub struct Inventory {
    groups: Vec<InventoryGroup>,
}

impl Inventory {
    pub fn new(groups: Vec<(String, Group)>) -> Result<Self, SimilarityError> {
        let mut out = Vec::with_capacity(groups.len());
        for (name, group) in groups {
            if !is_tilde_fixed(&group) {
                return Err(SimilarityError::NotTildeFixed(name));
            }
            let count = count_subgroups(&group);
            if count > MAX_SUBGROUPS {
                return Err(SimilarityError::TooManySubgroups {
                    name,
                    count,
                    max: MAX_SUBGROUPS,
                });
            }
            out.push(InventoryGroup {
                name,
                group,
                subgroup_count: count,
            });
        }
        out.sort_by(|a, b| {
            (a.subgroup_count, a.group.order(), &a.name).cmp(&(
                b.subgroup_count,
                b.group.order(),
                &b.name,
            ))
        });
        Ok(Inventory { groups: out })
    }

    pub fn groups(&self) -> &[InventoryGroup] {
        &self.groups
    }

    pub fn with_count(&self, n: usize) -> impl Iterator<Item = &InventoryGroup> {
        self.groups.iter().filter(move |g| g.subgroup_count == n)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassDescriptor {
    pub tilde_name: String,
    pub tilde_order: usize,
    pub tilde_subgroups: usize,
    pub exponents: Vec<u32>,
    pub subgroup_count: usize,
    /// Name with placeholder primes, e.g. `S3 x C_p`.
    pub display_name: String,
    /// Group spec with the smallest primes not dividing the tilde order,
    /// e.g. `S3 x C5`.
    pub representative: String,
    #[serde(skip)]
    pub tilde_rep: Group,
}

impl ClassDescriptor {
    /// Order of [`Self::representative`].
    pub fn representative_order(&self) -> u128 {
        self.cyclic_orders()
            .iter()
            .fold(self.tilde_order as u128, |acc, &n| acc.saturating_mul(n))
    }

    /// Orders of the cyclic factors in the representative.
    pub fn cyclic_orders(&self) -> Vec<u128> {
        let avoid = prime_divisors(self.tilde_order as u64);
        self.exponents
            .iter()
            .zip(primes_avoiding(&avoid))
            .map(|(&e, p)| (p as u128).pow(e))
            .collect()
    }
}

pub fn class_count(desc: &ClassDescriptor) -> usize {
    desc.tilde_subgroups * desc.exponents.iter().map(|&e| e as usize + 1).product::<usize>()
}

const PLACEHOLDERS: [&str; 8] = ["p", "q", "r", "s", "t", "u", "v", "w"];

fn describe(tilde_name: &str, tilde: &Group, exponents: &[u32]) -> (String, String) {
    let trivial = tilde.order() == 1;
    let mut display = Vec::new();
    let mut concrete = Vec::new();
    if !trivial || exponents.is_empty() {
        display.push(tilde_name.to_string());
        concrete.push(tilde_name.to_string());
    }
    let avoid = prime_divisors(tilde.order() as u64);
    for ((&e, letter), prime) in exponents
        .iter()
        .zip(PLACEHOLDERS.iter())
        .zip(primes_avoiding(&avoid))
    {
        display.push(if e == 1 {
            format!("C_{letter}")
        } else {
            format!("C_{letter}^{e}")
        });
        concrete.push(format!("C{}", (prime as u128).pow(e)));
    }
    (display.join(" x "), concrete.join(" x "))
}

/// Multisets of integers `>= 2` (as nondecreasing lists) whose product is `n`.
fn factorizations(n: usize, min: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for f in min..=n {
        if n % f == 0 {
            for mut rest in factorizations(n / f, f) {
                rest.insert(0, f);
                out.push(rest);
            }
        }
    }
    out
}

/// All similarity classes with exactly `n` subgroups.
pub fn enumerate_classes(n: usize, inventory: &Inventory) -> Result<Vec<ClassDescriptor>, SimilarityError> {
    if !(1..=MAX_SUBGROUPS).contains(&n) {
        return Err(SimilarityError::OutOfRange(n));
    }
    let mut out = Vec::new();
    for (pos, t) in inventory.groups.iter().enumerate() {
        if n % t.subgroup_count != 0 {
            continue;
        }
        for factors in factorizations(n / t.subgroup_count, 2) {
            let exponents: Vec<u32> = factors.iter().map(|&f| f as u32 - 1).collect();
            let (display_name, representative) = describe(&t.name, &t.group, &exponents);
            out.push((
                pos,
                ClassDescriptor {
                    tilde_name: t.name.clone(),
                    tilde_order: t.group.order(),
                    tilde_subgroups: t.subgroup_count,
                    subgroup_count: n,
                    exponents,
                    display_name,
                    representative,
                    tilde_rep: t.group.clone(),
                },
            ));
        }
    }
    out.sort_by(|(pa, a), (pb, b)| {
        (a.tilde_order, *pa, a.exponents.len(), &a.exponents).cmp(&(
            b.tilde_order,
            *pb,
            b.exponents.len(),
            &b.exponents,
        ))
    });
    Ok(out.into_iter().map(|(_, d)| d).collect())
}

/// Number of inventory groups with `n` subgroups, for `n = 1..=12`.
pub fn tilde_sequence(inventory: &Inventory) -> Vec<usize> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for g in &inventory.groups {
        *counts.entry(g.subgroup_count).or_default() += 1;
    }
    (1..=MAX_SUBGROUPS)
        .map(|n| counts.get(&n).copied().unwrap_or(0))
        .collect()
}

/// Number of similarity classes with `n` subgroups, for `n = 1..=12`.
pub fn class_sequence(inventory: &Inventory) -> Result<Vec<usize>, SimilarityError> {
    (1..=MAX_SUBGROUPS)
        .map(|n| enumerate_classes(n, inventory).map(|c| c.len()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(spec: &str) -> Group {
        crate::parse::build_spec(spec).unwrap()
    }

    fn tiny_inventory() -> Inventory {
        Inventory::new(vec![
            ("C1".into(), Group::trivial()),
            ("S3".into(), g("S3")),
            ("Q8".into(), g("Q8")),
        ])
        .unwrap()
    }

    #[test]
    fn signatures() {
        let a = signature(&g("C6")).unwrap();
        let b = signature(&g("C35")).unwrap();
        assert_eq!(a.exponents, vec![1, 1]);
        assert_eq!(a, b);
        let q = signature(&g("Q8")).unwrap();
        assert!(q.exponents.is_empty());
        let q3 = signature(&g("Q8 x C3")).unwrap();
        assert_eq!(q3.exponents, vec![1]);
        assert_eq!(q3.tilde_key, q.tilde_key);
    }

    #[test]
    fn similarity_examples() {
        let s3 = g("S3");
        assert!(similar(&s3, &s3).unwrap());
        assert!(similar(&g("C6"), &g("C10")).unwrap());
        assert!(!similar(&s3, &g("C6")).unwrap());
        // same exponent multiset, different tilde
        assert!(!similar(&g("S3 x C5"), &g("Q8 x C3")).unwrap());
        // exponent multisets differ
        assert!(!similar(&g("C12"), &g("C18 x C5")).unwrap());
        assert!(similar(&g("C12"), &g("C18")).unwrap());
    }

    #[test]
    fn class_counts() {
        let mk = |name: &str, tilde: Group, subs, exps: Vec<u32>| ClassDescriptor {
            tilde_name: name.into(),
            tilde_order: tilde.order(),
            tilde_subgroups: subs,
            exponents: exps,
            subgroup_count: 0,
            display_name: String::new(),
            representative: String::new(),
            tilde_rep: tilde,
        };
        assert_eq!(class_count(&mk("C1", Group::trivial(), 1, vec![1, 1])), 4);
        assert_eq!(class_count(&mk("S3", g("S3"), 6, vec![])), 6);
        assert_eq!(class_count(&mk("Q8", g("Q8"), 6, vec![1])), 12);
    }

    #[test]
    fn factorization_multisets() {
        assert_eq!(factorizations(1, 2), vec![Vec::<usize>::new()]);
        assert_eq!(factorizations(12, 2), vec![vec![2, 2, 3], vec![2, 6], vec![3, 4], vec![12]]);
        assert_eq!(factorizations(7, 2), vec![vec![7]]);
    }

    #[test]
    fn class_names() {
        let inv = tiny_inventory();
        let seven = enumerate_classes(7, &inv).unwrap();
        assert_eq!(seven.len(), 1);
        assert_eq!(seven[0].display_name, "C_p^6");
        assert_eq!(seven[0].representative, "C64");
        let one = enumerate_classes(1, &inv).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].representative, "C1");
        let twelve = enumerate_classes(12, &inv).unwrap();
        let names: Vec<&str> = twelve.iter().map(|c| c.representative.as_str()).collect();
        assert_eq!(names, vec!["C2048", "C2 x C243", "C4 x C27", "C2 x C3 x C25", "S3 x C5", "Q8 x C3"]);
        let placeholders: Vec<&str> = twelve.iter().map(|c| c.display_name.as_str()).collect();
        assert_eq!(placeholders[3], "C_p x C_q x C_r^2");
        assert_eq!(placeholders[4], "S3 x C_p");
        for c in &twelve {
            assert_eq!(class_count(c), 12);
        }
        assert_eq!(twelve[0].representative_order(), 2048);
        assert_eq!(enumerate_classes(13, &inv).unwrap_err(), SimilarityError::OutOfRange(13));
    }

    #[test]
    fn inventory_preconditions() {
        assert_eq!(
            Inventory::new(vec![("C5".into(), g("C5"))]).unwrap_err(),
            SimilarityError::NotTildeFixed("C5".into())
        );
        assert!(matches!(
            Inventory::new(vec![("D12".into(), g("D12"))]),
            Err(SimilarityError::TooManySubgroups { count: 16, .. })
        ));
    }
}
