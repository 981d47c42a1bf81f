//! Concrete finite groups stored as full multiplication tables.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::arith::{gcd, pow_mod};
use crate::bitset::ElementSet;
use crate::perm::{Perm, PermError};

/// Largest order accepted by the general constructors.
pub const MAX_ORDER: usize = 512;

/// Largest order accepted by [`Group::abelian`]. Tables above [`MAX_ORDER`]
/// skip the cubic associativity scan; their structure is inherited from the
/// cyclic factors.
pub const MAX_ABELIAN_ORDER: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order {order} exceeds the size cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("multiplier {k} does not define an action of C{actor} on C{base}")]
    InvalidMultiplier { base: usize, actor: usize, k: usize },
    #[error(transparent)]
    Permutation(#[from] PermError),
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),
    #[error("element subset is not closed under multiplication")]
    NotClosed,
}

/// An element of a group, identified by its row in the multiplication table.
/// Index 0 is always the identity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(u16);

impl Element {
    pub const IDENTITY: Element = Element(0);

    pub fn new(index: usize) -> Self {
        Element(index as u16)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite group given by its Cayley table.
#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    element_orders: Vec<u32>,
    generators: Vec<Element>,
    label: String,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

/// The two sporadic groups named directly by the classification.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    /// Extraspecial group of order 27 and exponent 9.
    E27,
    /// Modular group of order 16, `<a, b | a^2, b^8, b^a = b^5>`.
    M16,
}

/// Abstract syntax for a group construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Argument is the group order.
    Dihedral(usize),
    /// Argument is the group order.
    Quaternion(usize),
    /// Argument is the degree.
    Alternating(usize),
    /// Argument is the degree.
    Symmetric(usize),
    Named(NamedGroup),
    /// `C_actor` acting on `C_base` by `x -> x^multiplier`.
    Semidirect {
        actor: usize,
        base: usize,
        multiplier: usize,
    },
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group, GroupError> {
        match *self {
            GroupSpec::Cyclic(n) => Group::cyclic(n),
            GroupSpec::Dihedral(n) => Group::dihedral(n),
            GroupSpec::Quaternion(n) => Group::quaternion(n),
            GroupSpec::Alternating(n) => Group::alternating(n),
            GroupSpec::Symmetric(n) => Group::symmetric(n),
            GroupSpec::Named(which) => Ok(Group::named(which)),
            GroupSpec::Semidirect {
                actor,
                base,
                multiplier,
            } => Group::semidirect_cyclic(base, actor, multiplier),
            GroupSpec::Product(ref factors) => {
                let mut iter = factors.iter();
                let mut acc = match iter.next() {
                    Some(first) => first.build()?,
                    None => return Ok(Group::trivial()),
                };
                for f in iter {
                    acc = Group::direct_product(&acc, &f.build()?)?;
                }
                Ok(acc)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Quaternion(n) => write!(f, "Q{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Named(NamedGroup::E27) => f.write_str("E27"),
            GroupSpec::Named(NamedGroup::M16) => f.write_str("M16"),
            GroupSpec::Semidirect {
                actor,
                base,
                multiplier,
            } => write!(f, "C{actor}:C{base}[{multiplier}]"),
            GroupSpec::Product(factors) => {
                for (i, g) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

fn check_cap(order: usize, cap: usize) -> Result<(), GroupError> {
    if order > cap {
        Err(GroupError::TooLarge { order, cap })
    } else {
        Ok(())
    }
}

impl Group {
    /// Validates a raw table and derives element orders and inverses.
    ///
    /// The table is row-major, `table[a * order + b] = a * b`.
    pub fn from_table(
        table: Vec<u16>,
        generators: Vec<Element>,
        label: impl Into<String>,
    ) -> Result<Self, GroupError> {
        let order = (table.len() as f64).sqrt().round() as usize;
        if order == 0 || order * order != table.len() {
            return Err(GroupError::MalformedTable("table is not square".into()));
        }
        check_cap(order, MAX_ORDER)?;
        Self::build(order, table, generators, label.into(), true)
    }

    fn build(
        order: usize,
        table: Vec<u16>,
        generators: Vec<Element>,
        label: String,
        check_associativity: bool,
    ) -> Result<Self, GroupError> {
        let at = |a: usize, b: usize| table[a * order + b] as usize;

        for x in 0..order {
            if at(0, x) != x || at(x, 0) != x {
                return Err(GroupError::MalformedTable(format!(
                    "index 0 is not a two-sided identity at {x}"
                )));
            }
        }
        // Latin square: every row and column is a permutation.
        let mut seen = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                let v = at(a, b);
                if v >= order || seen[v] == a {
                    return Err(GroupError::MalformedTable(format!("row {a} repeats {v}")));
                }
                seen[v] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..order {
            for a in 0..order {
                let v = at(a, b);
                if seen[v] == b {
                    return Err(GroupError::MalformedTable(format!("column {b} repeats {v}")));
                }
                seen[v] = b;
            }
        }
        if check_associativity && order <= MAX_ORDER {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    let row_b = &table[b * order..(b + 1) * order];
                    let row_ab = &table[ab * order..(ab + 1) * order];
                    for c in 0..order {
                        if row_ab[c] as usize != at(a, row_b[c] as usize) {
                            return Err(GroupError::MalformedTable(format!(
                                "not associative at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }

        let mut inverses = vec![0u16; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverses[a] = row.iter().position(|&v| v == 0).unwrap() as u16;
        }
        let mut element_orders = vec![0u32; order];
        for a in 0..order {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = at(x, a);
                k += 1;
            }
            element_orders[a] = k;
        }

        let mut group = Group {
            order,
            table,
            inverses,
            element_orders,
            generators: Vec::new(),
            label,
        };
        let generators = if generators.is_empty() && order > 1 {
            group.small_generating_set()
        } else {
            generators
        };
        if let Some(bad) = generators.iter().find(|g| g.index() >= order) {
            return Err(GroupError::MalformedTable(format!(
                "generator {} out of range",
                bad.index()
            )));
        }
        if group.closure_len(&generators) != order {
            return Err(GroupError::MalformedTable(
                "generators do not generate the group".into(),
            ));
        }
        group.generators = generators;
        Ok(group)
    }

    pub fn trivial() -> Self {
        Group::cyclic(1).expect("trivial group")
    }

    /// Cyclic group `Z_n`; element `i` is the `i`-th power of the generator.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter("cyclic order must be positive".into()));
        }
        check_cap(n, MAX_ORDER)?;
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u16))
            .collect();
        let gens = if n > 1 { vec![Element::new(1)] } else { vec![] };
        Self::build(n, table, gens, format!("C{n}"), true)
    }

    /// Abelian group `Z_{n_1} x ... x Z_{n_k}`, allowed up to [`MAX_ABELIAN_ORDER`].
    ///
    /// Elements are mixed-radix tuples, last factor fastest.
    pub fn abelian(factors: &[usize]) -> Result<Self, GroupError> {
        if factors.contains(&0) {
            return Err(GroupError::InvalidParameter("cyclic order must be positive".into()));
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
            .unwrap_or(usize::MAX);
        check_cap(order, MAX_ABELIAN_ORDER)?;
        let digits = |mut x: usize| {
            let mut d = vec![0usize; factors.len()];
            for (i, &n) in factors.iter().enumerate().rev() {
                d[i] = x % n;
                x /= n;
            }
            d
        };
        let coords: Vec<Vec<usize>> = (0..order).map(digits).collect();
        let mut table = Vec::with_capacity(order * order);
        for a in &coords {
            for b in &coords {
                let mut idx = 0;
                for (i, &n) in factors.iter().enumerate() {
                    idx = idx * n + (a[i] + b[i]) % n;
                }
                table.push(idx as u16);
            }
        }
        let mut gens = Vec::new();
        let mut stride = 1;
        for &n in factors.iter().rev() {
            if n > 1 {
                gens.push(Element::new(stride));
            }
            stride *= n;
        }
        gens.reverse();
        let label = if factors.is_empty() {
            "C1".to_string()
        } else {
            factors
                .iter()
                .map(|n| format!("C{n}"))
                .collect::<Vec<_>>()
                .join("x")
        };
        Self::build(order, table, gens, label, true)
    }

    /// Direct product; element `(x, y)` has index `x * |h| + y`.
    pub fn direct_product(g: &Group, h: &Group) -> Result<Self, GroupError> {
        let (m, n) = (g.order, h.order);
        let order = m * n;
        check_cap(order, MAX_ORDER)?;
        let mut table = Vec::with_capacity(order * order);
        for x1 in 0..m {
            for y1 in 0..n {
                for x2 in 0..m {
                    let x = g.mul_idx(x1, x2) * n;
                    for y2 in 0..n {
                        table.push((x + h.mul_idx(y1, y2)) as u16);
                    }
                }
            }
        }
        let gens = g
            .generators
            .iter()
            .map(|x| Element::new(x.index() * n))
            .chain(h.generators.iter().copied())
            .collect();
        Self::build(order, table, gens, format!("{}x{}", g.label, h.label), true)
    }

    /// `<a, b | a^base, b^actor, b a b^-1 = a^k>`; element `a^i b^j` has index `i + base * j`.
    pub fn semidirect_cyclic(base: usize, actor: usize, k: usize) -> Result<Self, GroupError> {
        if base == 0 || actor == 0 {
            return Err(GroupError::InvalidParameter("cyclic order must be positive".into()));
        }
        let (n, m) = (base as u64, actor as u64);
        if gcd(k as u64, n) != 1 || pow_mod(k as u64, m, n) != 1 % n {
            return Err(GroupError::InvalidMultiplier { base, actor, k });
        }
        let order = base
            .checked_mul(actor)
            .ok_or(GroupError::TooLarge { order: usize::MAX, cap: MAX_ORDER })?;
        check_cap(order, MAX_ORDER)?;
        // powers[j] = k^j mod n
        let powers: Vec<usize> = (0..actor)
            .map(|j| pow_mod(k as u64, j as u64, n) as usize)
            .collect();
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (i, j) = (x % base, x / base);
            for y in 0..order {
                let (s, t) = (y % base, y / base);
                let a = (i + s * powers[j]) % base;
                let b = (j + t) % actor;
                table.push((a + base * b) as u16);
            }
        }
        let mut gens = Vec::new();
        if base > 1 {
            gens.push(Element::new(1));
        }
        if actor > 1 {
            gens.push(Element::new(base));
        }
        Self::build(order, table, gens, format!("C{actor}:C{base}[{k}]"), true)
    }

    /// Dihedral group of order `n`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n < 4 || n % 2 != 0 {
            return Err(GroupError::InvalidParameter(format!(
                "dihedral order must be even and at least 4, got {n}"
            )));
        }
        check_cap(n, MAX_ORDER)?;
        let half = n / 2;
        Self::semidirect_cyclic(half, 2, half - 1).map(|g| g.with_label(format!("D{n}")))
    }

    /// Generalized quaternion group of order `n`, a power of two with `n >= 8`.
    ///
    /// Element `a^i x^e` has index `i + (n/2) e`, with `x^2 = a^(n/4)` and
    /// `x a x^-1 = a^-1`.
    pub fn quaternion(n: usize) -> Result<Self, GroupError> {
        if n < 8 || !n.is_power_of_two() {
            return Err(GroupError::InvalidParameter(format!(
                "quaternion order must be a power of two >= 8, got {n}"
            )));
        }
        check_cap(n, MAX_ORDER)?;
        let half = n / 2;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (i, e) = (x % half, x / half);
            for y in 0..n {
                let (j, f) = (y % half, y / half);
                let (mut a, mut b) = if e == 0 {
                    (i + j, f)
                } else {
                    (i + half - j, 1 + f)
                };
                if b == 2 {
                    a += n / 4;
                    b = 0;
                }
                table.push(((a % half) + half * b) as u16);
            }
        }
        let gens = vec![Element::new(1), Element::new(half)];
        Self::build(n, table, gens, format!("Q{n}"), true)
    }

    /// Alternating group on `degree` points.
    pub fn alternating(degree: usize) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidParameter("degree must be positive".into()));
        }
        let gens: Vec<Perm> = (2..degree)
            .map(|i| Perm::from_cycles(degree, &[vec![0, 1, i]]))
            .collect::<Result<_, _>>()?;
        Self::from_permutations(degree, &gens).map(|g| g.with_label(format!("A{degree}")))
    }

    /// Symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidParameter("degree must be positive".into()));
        }
        let mut gens = Vec::new();
        if degree > 1 {
            gens.push(Perm::from_cycles(degree, &[vec![0, 1]])?);
        }
        if degree > 2 {
            gens.push(Perm::from_cycles(degree, &[(0..degree).collect()])?);
        }
        Self::from_permutations(degree, &gens).map(|g| g.with_label(format!("S{degree}")))
    }

    pub fn named(which: NamedGroup) -> Self {
        let built = match which {
            NamedGroup::M16 => Self::semidirect_cyclic(8, 2, 5).map(|g| g.with_label("M16")),
            NamedGroup::E27 => Self::semidirect_cyclic(9, 3, 4).map(|g| g.with_label("E27")),
        };
        built.expect("named groups are valid")
    }

    /// Closure of a set of permutations, elements in breadth-first order from
    /// the identity. Products compose left to right.
    pub fn from_permutations(degree: usize, gens: &[Perm]) -> Result<Self, GroupError> {
        if let Some(bad) = gens.iter().find(|p| p.degree() != degree) {
            return Err(GroupError::InvalidParameter(format!(
                "permutation of degree {} in a group of degree {degree}",
                bad.degree()
            )));
        }
        let mut elements = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = elements[x].then(g);
                if !index.contains_key(&y) {
                    if elements.len() == MAX_ORDER {
                        return Err(GroupError::TooLarge {
                            order: MAX_ORDER + 1,
                            cap: MAX_ORDER,
                        });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let order = elements.len();
        let mut table = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                table.push(index[&a.then(b)] as u16);
            }
        }
        let gen_elems: Vec<Element> = gens
            .iter()
            .map(|g| Element::new(index[g]))
            .filter(|e| e.index() != 0)
            .collect();
        Self::build(order, table, gen_elems, format!("Perm{degree}"), true)
    }

    /// The group induced on a subset of elements, re-indexed in ascending
    /// order of the parent's indices. Fails if the subset is not a subgroup.
    pub fn induced(&self, members: &ElementSet, label: impl Into<String>) -> Result<Self, GroupError> {
        let elems: Vec<usize> = members.iter().collect();
        if elems.first() != Some(&0) {
            return Err(GroupError::NotClosed);
        }
        let mut position = vec![usize::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            position[x] = i;
        }
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in &elems {
            for &b in &elems {
                let p = position[self.mul_idx(a, b)];
                if p == usize::MAX {
                    return Err(GroupError::NotClosed);
                }
                table.push(p as u16);
            }
        }
        Self::build(n, table, Vec::new(), label.into(), self.order <= MAX_ORDER)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.table[a.index() * self.order + b.index()])
    }

    #[inline]
    pub(crate) fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: Element) -> Element {
        Element(self.inverses[a.index()])
    }

    pub fn element_order(&self, a: Element) -> u32 {
        self.element_orders[a.index()]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.element_orders
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order).map(Element::new)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, &a)| {
            self.generators[i + 1..]
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    /// Multiset of element orders as `order -> count`.
    pub fn order_profile(&self) -> BTreeMap<u32, usize> {
        let mut profile = BTreeMap::new();
        for &o in &self.element_orders {
            *profile.entry(o).or_insert(0) += 1;
        }
        profile
    }

    pub fn exponent(&self) -> u64 {
        self.element_orders
            .iter()
            .fold(1u64, |acc, &o| acc / gcd(acc, o as u64) * o as u64)
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, x: Element, g: Element) -> Element {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    fn closure_len(&self, gens: &[Element]) -> usize {
        let mut seen = ElementSet::empty(self.order);
        seen.insert(0);
        let mut list = vec![0usize];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for g in gens {
                let y = self.mul_idx(x, g.index());
                if seen.insert(y) {
                    list.push(y);
                }
            }
            i += 1;
        }
        list.len()
    }

    /// Greedy generating set: repeatedly adds an element of largest order
    /// outside the subgroup generated so far.
    pub fn small_generating_set(&self) -> Vec<Element> {
        let mut by_order: Vec<usize> = (1..self.order).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.element_orders[x]), x));
        let mut gens: Vec<Element> = Vec::new();
        let mut covered = ElementSet::empty(self.order);
        covered.insert(0);
        for x in by_order {
            if covered.contains(x) {
                continue;
            }
            gens.push(Element::new(x));
            covered = self.closure_set(&gens);
            if covered.len() == self.order {
                break;
            }
        }
        gens
    }

    pub(crate) fn closure_set(&self, gens: &[Element]) -> ElementSet {
        let mut seen = ElementSet::empty(self.order);
        seen.insert(0);
        let mut list = vec![0usize];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for g in gens {
                let y = self.mul_idx(x, g.index());
                if seen.insert(y) {
                    list.push(y);
                }
            }
            i += 1;
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisor_count(n: usize) -> usize {
        (1..=n).filter(|d| n % d == 0).count()
    }

    #[test]
    fn cyclic_element_orders() {
        let g = Group::cyclic(12).unwrap();
        for x in g.elements() {
            let i = x.index() as u64;
            assert_eq!(g.element_order(x) as u64, 12 / gcd(12, i));
        }
        assert_eq!(divisor_count(12), 6);
        assert!(matches!(Group::cyclic(0), Err(GroupError::InvalidParameter(_))));
    }

    #[test]
    fn size_caps() {
        assert_eq!(
            Group::cyclic(513).unwrap_err(),
            GroupError::TooLarge { order: 513, cap: 512 }
        );
        let c32 = Group::cyclic(32).unwrap();
        assert!(matches!(
            Group::direct_product(&c32, &c32),
            Err(GroupError::TooLarge { order: 1024, .. })
        ));
        assert_eq!(Group::abelian(&[25, 25]).unwrap().order(), 625);
        assert!(Group::abelian(&[64, 128]).is_err());
    }

    #[test]
    fn semidirect_rejects_bad_multipliers() {
        // 2 has order 4 mod 5, so C2 cannot act by it.
        assert_eq!(
            Group::semidirect_cyclic(5, 2, 2).unwrap_err(),
            GroupError::InvalidMultiplier { base: 5, actor: 2, k: 2 }
        );
        // not a unit
        assert!(matches!(
            Group::semidirect_cyclic(4, 2, 2),
            Err(GroupError::InvalidMultiplier { .. })
        ));
        // a valid multiplier but an oversized group is a different error
        assert!(matches!(
            Group::semidirect_cyclic(257, 2, 256),
            Err(GroupError::TooLarge { .. })
        ));
    }

    #[test]
    fn dihedral_and_quaternion_shapes() {
        let d8 = Group::dihedral(8).unwrap();
        assert_eq!(d8.order(), 8);
        assert!(!d8.is_abelian());
        assert_eq!(d8.order_profile(), BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
        let q8 = Group::quaternion(8).unwrap();
        assert_eq!(q8.order_profile(), BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        for n in [8, 16, 32, 64, 128, 256, 512] {
            let q = Group::quaternion(n).unwrap();
            assert_eq!(q.element_orders().iter().filter(|&&o| o == 2).count(), 1);
        }
        assert!(Group::quaternion(12).is_err());
        assert!(Group::dihedral(7).is_err());
        assert!(Group::dihedral(2).is_err());
    }

    #[test]
    fn named_groups() {
        let e27 = Group::named(NamedGroup::E27);
        assert_eq!(e27.order(), 27);
        assert_eq!(e27.exponent(), 9);
        assert!(!e27.is_abelian());
        assert!(e27.elements().skip(1).all(|x| matches!(e27.element_order(x), 3 | 9)));
        let m16 = Group::named(NamedGroup::M16);
        assert_eq!(m16.order(), 16);
        assert!(!m16.is_abelian());
    }

    #[test]
    fn permutation_closures() {
        let a4 = Group::from_permutations(
            4,
            &[
                Perm::parse(4, "(0 1 2)").unwrap(),
                Perm::parse(4, "(0 1)(2 3)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a4.order(), 12);
        let triv = Group::from_permutations(3, &[Perm::identity(3)]).unwrap();
        assert_eq!(triv.order(), 1);
        let s3 = Group::from_permutations(
            3,
            &[Perm::parse(3, "(0 1)").unwrap(), Perm::parse(3, "(0 1 2)").unwrap()],
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert!(matches!(Group::symmetric(6), Err(GroupError::TooLarge { .. })));
        assert_eq!(Group::alternating(6).unwrap().order(), 360);
        assert_eq!(Group::symmetric(1).unwrap().order(), 1);
    }

    #[test]
    fn rejects_broken_tables() {
        // Z3 with a swapped entry in one row.
        let bad = vec![0, 1, 2, 1, 2, 0, 2, 1, 0];
        assert!(matches!(
            Group::from_table(bad, vec![], "bad"),
            Err(GroupError::MalformedTable(_))
        ));
        // Latin square with identity but not associative (order 5 loop).
        let loop5: Vec<u16> = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(matches!(
            Group::from_table(loop5, vec![], "loop"),
            Err(GroupError::MalformedTable(m)) if m.contains("associative")
        ));
    }

    #[test]
    fn induced_subgroup_reindexes() {
        let z12 = Group::cyclic(12).unwrap();
        let evens = ElementSet::from_indices(12, (0..12).step_by(2));
        let h = z12.induced(&evens, "2Z12").unwrap();
        assert_eq!(h.order(), 6);
        let odd_and_id = ElementSet::from_indices(12, [0, 1]);
        assert_eq!(z12.induced(&odd_and_id, "x").unwrap_err(), GroupError::NotClosed);
    }

    #[test]
    fn spec_display() {
        let spec = GroupSpec::Product(vec![
            GroupSpec::Cyclic(2),
            GroupSpec::Semidirect { actor: 4, base: 3, multiplier: 2 },
        ]);
        assert_eq!(spec.to_string(), "C2xC4:C3[2]");
        assert_eq!(spec.build().unwrap().order(), 24);
    }
}
