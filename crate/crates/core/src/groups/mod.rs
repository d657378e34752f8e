//! Finite groups as multiplication tables: constructors, the subgroup
//! lattice with its Möbius function, automorphism groups and the
//! symmetric-subset machinery used by the census engines.

mod automorphism;
mod connection;
mod lattice;
mod table;

pub use automorphism::{
    automorphisms, automorphisms_generic, automorphisms_with_limits, cyclic_automorphisms, dihedral_automorphisms,
    inner_automorphisms, Automorphism,
};
pub use connection::{generates, symmetric_blocks, ConnectionSet};
pub use lattice::{
    lattice_moebius, subgroup_lattice, subgroup_lattice_with_limits, subgroups, subgroups_with_limits, Subgroup,
};
pub use table::{Family, GroupTable};

use crate::bitset::ElementSet;

pub const DEFAULT_MAX_ORDER: usize = 256;
pub const DEFAULT_MAX_AUTOMORPHISMS: usize = 1_000_000;

/// Resource bounds for the exhaustive group algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_automorphisms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            max_automorphisms: DEFAULT_MAX_AUTOMORPHISMS,
        }
    }
}

/// The subgroup generated by `gens`.
pub fn closure(group: &GroupTable, gens: &[usize]) -> ElementSet {
    let mut set = ElementSet::new(group.order());
    set.insert(group.identity());
    let mut elems = vec![group.identity()];
    let mut cursor = 0;
    while cursor < elems.len() {
        let x = elems[cursor];
        for &g in gens {
            let y = group.mul(x, g);
            if set.insert(y) {
                elems.push(y);
            }
        }
        cursor += 1;
    }
    set
}
