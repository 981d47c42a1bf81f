//! Catalog of small groups as permutation generators, and the census of
//! subgroup counts over it.
//!
//! File format, one group per line:
//!
//! ```text
//! <order> <index> <name> <degree>; <gen>; <gen>; ...
//! ```
//!
//! Each `<gen>` is a permutation of `0..degree` in disjoint cycle notation,
//! e.g. `(0 1 2)(3 4)`, with `()` for the identity. Blank lines and lines
//! starting with `#` are ignored. Fields are separated by ASCII whitespace;
//! `<name>` is a single token.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::group::{Group, GroupError};
use crate::iso::are_isomorphic;
use crate::lattice::count_subgroups;
use crate::parse::build_spec;
use crate::perm::{Perm, PermError};
use crate::similarity::{Inventory, IsoKey, SimilarityError, MAX_SUBGROUPS};
use crate::structure::is_tilde_fixed;

const EMBEDDED: &str = include_str!("../data/catalog.txt");

/// Number of isomorphism types of groups of each order the catalogs cover.
pub const GROUPS_OF_ORDER: &[(usize, usize)] = &[
    (1, 1), (2, 1), (3, 1), (4, 2), (5, 1), (6, 2), (7, 1), (8, 5), (9, 2), (10, 2),
    (11, 1), (12, 5), (13, 1), (14, 2), (15, 1), (16, 14), (17, 1), (18, 5), (19, 1),
    (20, 5), (21, 2), (22, 2), (23, 1), (24, 15), (25, 2), (26, 2), (27, 5), (32, 51),
    (81, 15),
];

/// Orders present in the embedded catalog.
pub fn embedded_orders() -> impl Iterator<Item = usize> {
    (1..=24).chain(std::iter::once(27))
}

pub fn known_group_count(order: usize) -> Option<usize> {
    GROUPS_OF_ORDER
        .iter()
        .find(|&&(n, _)| n == order)
        .map(|&(_, c)| c)
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("entry {entry}: {reason}")]
    Integrity { entry: String, reason: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Inventory(#[from] SimilarityError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub order: usize,
    /// Position within its order, starting at 1.
    pub index: usize,
    pub name: String,
    pub degree: usize,
    #[serde(serialize_with = "serialize_perms")]
    pub generators: Vec<Perm>,
}

fn serialize_perms<S: serde::Serializer>(perms: &[Perm], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(perms.iter().map(|p| p.to_string()))
}

impl CatalogEntry {
    pub fn group(&self) -> Result<Group, GroupError> {
        Group::from_permutations(self.degree, &self.generators)
            .map(|g| g.with_label(self.name.clone()))
    }

    pub fn id(&self) -> String {
        format!("{}#{} {}", self.order, self.index, self.name)
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.order, self.index, self.name, self.degree)?;
        for g in &self.generators {
            write!(f, "; {g}")?;
        }
        Ok(())
    }
}

fn parse_line(line: &str, lineno: usize) -> Result<CatalogEntry, CatalogError> {
    let err = |message: String| CatalogError::Parse { line: lineno, message };
    let mut parts = line.split(';');
    let header = parts.next().unwrap_or_default();
    let fields: Vec<&str> = header.split_ascii_whitespace().collect();
    let [order, index, name, degree] = fields[..] else {
        return Err(err(format!(
            "expected `<order> <index> <name> <degree>`, found {} fields",
            fields.len()
        )));
    };
    let num = |field: &str, what: &str| {
        field
            .parse::<usize>()
            .map_err(|_| err(format!("{what} {field:?} is not a non-negative integer")))
    };
    let order = num(order, "order")?;
    let index = num(index, "index")?;
    let degree = num(degree, "degree")?;
    if order == 0 || degree == 0 {
        return Err(err("order and degree must be positive".into()));
    }
    let generators = parts
        .map(|g| {
            Perm::parse(degree, g).map_err(|e: PermError| err(format!("generator {:?}: {e}", g.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if generators.is_empty() {
        return Err(err("at least one generator is required (use `()` for the identity)".into()));
    }
    Ok(CatalogEntry {
        order,
        index,
        name: name.to_string(),
        degree,
        generators,
    })
}

/// Parses catalog text without checking the groups.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_line(l, i + 1))
        .collect()
}

/// Checks every entry generates a group of its declared order, that
/// `(order, index)` pairs are unique, and that entries of equal order are
/// pairwise non-isomorphic. Returns the constructed groups.
pub fn validate(entries: &[CatalogEntry]) -> Result<Vec<Group>, CatalogError> {
    let mut seen = BTreeSet::new();
    let mut groups = Vec::with_capacity(entries.len());
    for e in entries {
        if !seen.insert((e.order, e.index)) {
            return Err(CatalogError::Integrity {
                entry: e.id(),
                reason: "duplicate (order, index)".into(),
            });
        }
        let g = e.group().map_err(|err| CatalogError::Integrity {
            entry: e.id(),
            reason: err.to_string(),
        })?;
        if g.order() != e.order {
            return Err(CatalogError::Integrity {
                entry: e.id(),
                reason: format!("generators close to {} elements, declared {}", g.order(), e.order),
            });
        }
        groups.push(g);
    }

    let mut buckets: BTreeMap<IsoKey, Vec<usize>> = BTreeMap::new();
    for (i, g) in groups.iter().enumerate() {
        buckets.entry(IsoKey::of(g)).or_default().push(i);
    }
    for members in buckets.values() {
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[..k] {
                if are_isomorphic(&groups[i], &groups[j]) {
                    return Err(CatalogError::Integrity {
                        entry: entries[i].id(),
                        reason: format!("isomorphic to {}", entries[j].id()),
                    });
                }
            }
        }
    }
    Ok(groups)
}

/// Catalog entries with their validated groups.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub groups: Vec<Group>,
}

impl Catalog {
    pub fn from_text(text: &str) -> Result<Self, CatalogError> {
        let entries = parse_catalog(text)?;
        let groups = validate(&entries)?;
        Ok(Catalog { entries, groups })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CatalogEntry, &Group)> {
        self.entries.iter().zip(self.groups.iter())
    }

    pub fn of_order(&self, order: usize) -> impl Iterator<Item = (&CatalogEntry, &Group)> {
        self.iter().filter(move |(e, _)| e.order == order)
    }

    /// Orders whose entry count differs from the known number of groups.
    pub fn incomplete_orders(&self) -> Vec<(usize, usize, Option<usize>)> {
        let mut per_order: BTreeMap<usize, usize> = BTreeMap::new();
        for e in &self.entries {
            *per_order.entry(e.order).or_default() += 1;
        }
        per_order
            .into_iter()
            .filter_map(|(n, c)| {
                let known = known_group_count(n);
                (known != Some(c)).then_some((n, c, known))
            })
            .collect()
    }
}

fn embedded_catalog() -> Result<Catalog, CatalogError> {
    let cat = Catalog::from_text(EMBEDDED)?;
    for n in embedded_orders() {
        let have = cat.entries.iter().filter(|e| e.order == n).count();
        let want = known_group_count(n).expect("known");
        if have != want {
            return Err(CatalogError::Integrity {
                entry: format!("order {n}"),
                reason: format!("{have} entries, expected {want}"),
            });
        }
    }
    if let Some(e) = cat.entries.iter().find(|e| !embedded_orders().any(|n| n == e.order)) {
        return Err(CatalogError::Integrity {
            entry: e.id(),
            reason: "order outside the embedded range".into(),
        });
    }
    Ok(cat)
}

/// Every group of order 1..=24 and 27, validated once per process.
pub fn load_embedded_catalog() -> Result<&'static Catalog, CatalogError> {
    static CATALOG: OnceLock<Result<Catalog, String>> = OnceLock::new();
    CATALOG
        .get_or_init(|| embedded_catalog().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|msg| CatalogError::Integrity {
            entry: "embedded catalog".into(),
            reason: msg.clone(),
        })
}

pub fn load_embedded() -> Result<Vec<CatalogEntry>, CatalogError> {
    load_embedded_catalog().map(|c| c.entries.clone())
}

pub fn load_file_catalog(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Catalog::from_text(&text)
}

pub fn load_file(path: impl AsRef<Path>) -> Result<Vec<CatalogEntry>, CatalogError> {
    load_file_catalog(path).map(|c| c.entries)
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub entry: CatalogEntry,
    pub subgroup_count: usize,
    pub tilde_fixed: bool,
}

pub fn census_catalog(catalog: &Catalog) -> Vec<CensusRow> {
    let mut rows: Vec<CensusRow> = catalog
        .iter()
        .map(|(e, g)| CensusRow {
            entry: e.clone(),
            subgroup_count: count_subgroups(g),
            tilde_fixed: is_tilde_fixed(g),
        })
        .collect();
    rows.sort_by_key(|r| (r.entry.order, r.entry.index));
    rows
}

pub fn census(entries: &[CatalogEntry]) -> Result<Vec<CensusRow>, CatalogError> {
    let groups = validate(entries)?;
    Ok(census_catalog(&Catalog {
        entries: entries.to_vec(),
        groups,
    }))
}

/// One row of the table of groups with no cyclic central Sylow subgroup and
/// at most twelve subgroups.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedGroup {
    pub subgroups: usize,
    pub spec: &'static str,
}

const fn row(subgroups: usize, spec: &'static str) -> ExpectedGroup {
    ExpectedGroup { subgroups, spec }
}

pub const TILDE_FIXED_TABLE: &[ExpectedGroup] = &[
    row(1, "C1"),
    row(5, "C2xC2"),
    row(6, "C3xC3"),
    row(6, "S3"),
    row(6, "Q8"),
    row(8, "C2xC4"),
    row(8, "C5xC5"),
    row(8, "D10"),
    row(8, "C4:C3[2]"),
    row(10, "C3xC9"),
    row(10, "C7xC7"),
    row(10, "D14"),
    row(10, "A4"),
    row(10, "C3:C7[2]"),
    row(10, "C4:C5[4]"),
    row(10, "C8:C3[2]"),
    row(10, "E27"),
    row(11, "C2xC8"),
    row(11, "Q16"),
    row(11, "M16"),
    row(12, "C4:C7[6]"),
    row(12, "C9:C7[2]"),
    row(12, "C8:C5[4]"),
    row(12, "C16:C3[2]"),
];

/// Non-abelian `p`-groups with no cyclic central Sylow subgroup and at most
/// twelve subgroups, as listed separately from [`TILDE_FIXED_TABLE`]. `D8`
/// is in this list but not in the table.
pub const NONABELIAN_P_GROUPS: &[ExpectedGroup] = &[
    row(10, "D8"),
    row(6, "Q8"),
    row(11, "Q16"),
    row(11, "M16"),
    row(10, "E27"),
];

/// Result of matching census rows against [`TILDE_FIXED_TABLE`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct CensusComparison {
    /// Expected groups with no isomorphic census row.
    pub missing: Vec<String>,
    /// Census rows with no expected counterpart.
    pub unexpected: Vec<String>,
    /// `(spec, expected count, census count)` where both exist but differ.
    pub count_mismatches: Vec<(String, usize, usize)>,
    pub matched: Vec<(String, String)>,
    /// Unexpected rows that do appear, with the same count, in
    /// [`NONABELIAN_P_GROUPS`]: `(census id, spec)`.
    pub in_p_group_list: Vec<(String, String)>,
}

impl CensusComparison {
    pub fn is_exact(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty() && self.count_mismatches.is_empty()
    }
}

/// Census rows that are tilde-fixed with at most twelve subgroups.
pub fn small_tilde_fixed(rows: &[CensusRow]) -> impl Iterator<Item = &CensusRow> {
    rows.iter()
        .filter(|r| r.tilde_fixed && r.subgroup_count <= MAX_SUBGROUPS)
}

/// Compares the tilde-fixed census rows with at most twelve subgroups against
/// the expected table restricted to the orders in `orders`.
pub fn compare_census(
    rows: &[CensusRow],
    catalog: &Catalog,
    orders: &BTreeSet<usize>,
) -> Result<CensusComparison, CatalogError> {
    let mut cmp = CensusComparison::default();
    let mut candidates: Vec<&CensusRow> = small_tilde_fixed(rows)
        .filter(|r| orders.contains(&r.entry.order))
        .collect();
    for want in TILDE_FIXED_TABLE {
        let g = build_spec(want.spec).map_err(|e| CatalogError::Integrity {
            entry: want.spec.into(),
            reason: e.to_string(),
        })?;
        if !orders.contains(&g.order()) {
            continue;
        }
        let found = candidates.iter().position(|r| {
            let (_, cg) = catalog
                .iter()
                .find(|(e, _)| e.order == r.entry.order && e.index == r.entry.index)
                .expect("census rows come from the catalog");
            are_isomorphic(cg, &g)
        });
        match found {
            Some(i) => {
                let r = candidates.remove(i);
                if r.subgroup_count != want.subgroups {
                    cmp.count_mismatches.push((
                        want.spec.into(),
                        want.subgroups,
                        r.subgroup_count,
                    ));
                }
                cmp.matched.push((want.spec.into(), r.entry.id()));
            }
            None => {
                // It may exist in the catalog with a different count.
                let row = rows.iter().find(|r| {
                    r.entry.order == g.order()
                        && catalog
                            .iter()
                            .find(|(e, _)| e.index == r.entry.index && e.order == r.entry.order)
                            .is_some_and(|(_, cg)| are_isomorphic(cg, &g))
                });
                match row {
                    Some(r) => cmp.count_mismatches.push((
                        want.spec.into(),
                        want.subgroups,
                        r.subgroup_count,
                    )),
                    None => cmp.missing.push(want.spec.into()),
                }
            }
        }
    }
    cmp.unexpected = candidates.iter().map(|r| r.entry.id()).collect();
    for r in &candidates {
        let (_, cg) = catalog
            .iter()
            .find(|(e, _)| e.order == r.entry.order && e.index == r.entry.index)
            .expect("census rows come from the catalog");
        for listed in NONABELIAN_P_GROUPS {
            let Ok(g) = build_spec(listed.spec) else { continue };
            if listed.subgroups == r.subgroup_count && are_isomorphic(cg, &g) {
                cmp.in_p_group_list.push((r.entry.id(), listed.spec.into()));
            }
        }
    }
    Ok(cmp)
}

/// Specs of table groups whose orders lie outside the embedded catalog; they
/// are constructed directly.
pub fn out_of_catalog_groups() -> Vec<ExpectedGroup> {
    TILDE_FIXED_TABLE
        .iter()
        .copied()
        .filter(|e| {
            let order = build_spec(e.spec).map(|g| g.order()).unwrap_or(0);
            !embedded_orders().any(|n| n == order)
        })
        .collect()
}

/// The tilde-fixed groups with at most twelve subgroups: every such group
/// found by the embedded census, plus the table groups beyond the catalog's
/// orders, each constructed and re-checked.
pub fn verified_inventory() -> Result<Inventory, CatalogError> {
    let catalog = load_embedded_catalog()?;
    let rows = census_catalog(catalog);
    let mut groups: Vec<(String, Group)> = Vec::new();
    for r in small_tilde_fixed(&rows) {
        let (_, g) = catalog
            .iter()
            .find(|(e, _)| e.order == r.entry.order && e.index == r.entry.index)
            .expect("row from catalog");
        groups.push((r.entry.name.clone(), g.clone()));
    }
    for extra in out_of_catalog_groups() {
        let g = build_spec(extra.spec).map_err(|e| CatalogError::Integrity {
            entry: extra.spec.into(),
            reason: e.to_string(),
        })?;
        groups.push((extra.spec.to_string(), g));
    }
    Ok(Inventory::new(groups)?)
}

/// A catalog group whose order has exactly two prime divisors and which has at
/// most six subgroups.
#[derive(Clone, Debug, Serialize)]
pub struct TwoPrimeSmallRow {
    pub entry: String,
    pub subgroup_count: usize,
    /// `C_p x C_q`, `C_p x C_q^2` or `S3` when the group is one of these.
    pub shape: Option<&'static str>,
}

fn two_prime_shape(g: &Group, s3: &Group) -> Option<&'static str> {
    let n = g.order() as u64;
    let f = crate::arith::factorize(n);
    let cyclic = g.element_orders().iter().any(|&o| o as u64 == n);
    let mut exps: Vec<u32> = f.iter().map(|&(_, e)| e).collect();
    exps.sort_unstable();
    match (cyclic, exps.as_slice()) {
        (true, [1, 1]) => Some("C_p x C_q"),
        (true, [1, 2]) => Some("C_p x C_q^2"),
        _ if are_isomorphic(g, s3) => Some("S3"),
        _ => None,
    }
}

/// Every catalog group of two-prime order with at most six subgroups, with
/// its recognised shape.
pub fn two_prime_small_groups(catalog: &Catalog) -> Vec<TwoPrimeSmallRow> {
    let s3 = Group::symmetric(3).expect("S3");
    catalog
        .iter()
        .filter(|(e, _)| crate::arith::prime_divisors(e.order as u64).len() == 2)
        .filter_map(|(e, g)| {
            let count = count_subgroups(g);
            (count <= 6).then(|| TwoPrimeSmallRow {
                entry: e.id(),
                subgroup_count: count,
                shape: two_prime_shape(g, &s3),
            })
        })
        .collect()
}
