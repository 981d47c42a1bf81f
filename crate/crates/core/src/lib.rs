//! Subgroup lattices, Sylow structure and similarity classes of small finite
//! groups, together with a verified census of groups with few subgroups.

pub mod arith;
pub mod bitset;
pub mod catalog;
pub mod cli;
pub mod formulas;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod parse;
pub mod perm;
pub mod similarity;
pub mod structure;

pub use bitset::ElementSet;
pub use group::{Element, Group, GroupError, GroupSpec, NamedGroup};
pub use iso::are_isomorphic;
pub use lattice::{all_subgroups, closure, count_subgroups, is_normal, Subgroup, SubgroupLattice};
pub use perm::Perm;
