//! Sylow subgroups, the center, and removal of cyclic central Sylow factors.
//!
//! A Sylow subgroup that is cyclic and central splits off as a direct factor.
//! Stripping all of them leaves the subgroup of elements whose orders avoid
//! those primes, which is where the group's subgroup count is constrained.

use thiserror::Error;

use crate::arith::{factorize, gcd, p_part};
use crate::bitset::ElementSet;
use crate::group::{Element, Group, GroupError};
use crate::lattice::{all_subgroups, subgroup_from_members, Subgroup, SubgroupLattice};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("{p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },
    #[error("complement of the cyclic central Sylow factors is not a subgroup: {0}")]
    Complement(#[from] GroupError),
}

#[derive(Clone, Debug)]
pub struct SylowInfo {
    pub prime: u64,
    pub order: u64,
    pub exponent: u32,
    /// Number of Sylow subgroups for this prime.
    pub count: usize,
    pub is_cyclic: bool,
    pub is_central: bool,
    pub representative: Subgroup,
}

pub fn sylow(g: &Group, p: u64) -> Result<SylowInfo, StructureError> {
    let lat = all_subgroups(g);
    sylow_in(&lat, p)
}

/// Sylow data read off an existing lattice.
pub fn sylow_in(lat: &SubgroupLattice<'_>, p: u64) -> Result<SylowInfo, StructureError> {
    let g = lat.group();
    let (order, exponent) = p_part(g.order() as u64, p);
    if exponent == 0 {
        return Err(StructureError::PrimeDoesNotDivide { p, order: g.order() });
    }
    let mut sylows = lat.of_order(order as usize);
    let representative = sylows.next().expect("Sylow subgroups exist").clone();
    let count = 1 + sylows.count();
    let is_cyclic = representative
        .elements()
        .any(|x| g.element_order(x) as u64 == order);
    let z = center(g);
    let is_central = representative.is_subgroup_of(&z);
    Ok(SylowInfo {
        prime: p,
        order,
        exponent,
        count,
        is_cyclic,
        is_central,
        representative,
    })
}

pub fn center(g: &Group) -> Subgroup {
    let mut members = ElementSet::empty(g.order());
    for x in g.elements() {
        if g.generators().iter().all(|&s| g.mul(x, s) == g.mul(s, x)) {
            members.insert(x.index());
        }
    }
    subgroup_from_members(g, members).expect("the center is a subgroup")
}

/// `G = P_1 x ... x P_c x tilde`, with each `P_i` a cyclic central Sylow
/// subgroup of order `p_i^{n_i}`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// `(p_i, n_i)` in ascending prime order.
    pub stripped: Vec<(u64, u32)>,
    pub tilde: Group,
    pub original_order: usize,
}

impl Decomposition {
    pub fn exponents(&self) -> Vec<u32> {
        let mut e: Vec<u32> = self.stripped.iter().map(|&(_, n)| n).collect();
        e.sort_unstable();
        e
    }
}

/// Primes whose Sylow subgroup is cyclic and central, with their exponents.
///
/// The Sylow `p`-subgroup is central exactly when the center contains the
/// full `p`-part of the order, and then it is that part of the center; it is
/// cyclic when some central element has the full `p`-power order.
pub fn cyclic_central_primes(g: &Group) -> Vec<(u64, u32)> {
    let z = center(g);
    let mut out = Vec::new();
    for (p, e) in factorize(g.order() as u64) {
        let full = p.pow(e);
        let central_p: Vec<Element> = z
            .elements()
            .filter(|&x| p_part(g.element_order(x) as u64, p).0 == g.element_order(x) as u64)
            .collect();
        if central_p.len() as u64 == full
            && central_p.iter().any(|&x| g.element_order(x) as u64 == full)
        {
            out.push((p, e));
        }
    }
    out
}

pub fn decompose(g: &Group) -> Result<Decomposition, StructureError> {
    let stripped = cyclic_central_primes(g);
    let pi: u64 = stripped.iter().map(|&(p, _)| p).product();
    let members = ElementSet::from_indices(
        g.order(),
        g.elements()
            .filter(|&x| gcd(g.element_order(x) as u64, pi) == 1)
            .map(|x| x.index()),
    );
    let tilde = g.induced(&members, format!("~{}", g.label()))?;
    Ok(Decomposition {
        stripped,
        tilde,
        original_order: g.order(),
    })
}

/// True when the group has no cyclic central Sylow subgroup.
pub fn is_tilde_fixed(g: &Group) -> bool {
    cyclic_central_primes(g).is_empty()
}
