use std::collections::VecDeque;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::groups::{closure, Automorphism, GroupTable};

/// A candidate connection set: identity-free and closed under inversion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectionSet {
    bits: ElementSet,
}

impl ConnectionSet {
    pub fn new(group: &GroupTable, bits: ElementSet) -> Result<Self> {
        if bits.capacity() != group.order() {
            return Err(Error::InvalidArgument("set capacity differs from group order".into()));
        }
        if bits.contains(group.identity()) {
            return Err(Error::InvalidArgument("connection set contains the identity".into()));
        }
        if let Some(g) = bits.iter().find(|&g| !bits.contains(group.inverse(g))) {
            return Err(Error::InvalidArgument(format!(
                "connection set contains {g} but not its inverse"
            )));
        }
        Ok(ConnectionSet { bits })
    }

    pub fn from_elements(group: &GroupTable, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        ConnectionSet::new(group, ElementSet::from_indices(group.order(), elements))
    }

    pub(crate) fn from_bits_unchecked(bits: ElementSet) -> Self {
        ConnectionSet { bits }
    }

    pub fn bits(&self) -> &ElementSet {
        &self.bits
    }

    pub fn degree(&self) -> usize {
        self.bits.len()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.bits.to_vec()
    }
}

/// `true` iff the subgroup generated by `omega` is the whole group.
pub fn generates(group: &GroupTable, omega: &ConnectionSet) -> bool {
    let gens = omega.elements();
    closure(group, &gens).len() == group.order()
}

/// Splits `set` into the minimal pieces closed under both `alpha` and
/// inversion. A subset of `set` is symmetric and `alpha`-fixed exactly when
/// it is a union of these blocks.
///
/// Blocks are sorted internally and ordered by their least element.
pub fn symmetric_blocks(group: &GroupTable, set: &ElementSet, alpha: &Automorphism) -> Result<Vec<Vec<usize>>> {
    if set.contains(group.identity()) {
        return Err(Error::InvalidArgument("block set must exclude the identity".into()));
    }
    if set.iter().any(|g| !set.contains(alpha.apply(g))) {
        return Err(Error::NotStable);
    }
    if set.iter().any(|g| !set.contains(group.inverse(g))) {
        return Err(Error::InvalidArgument(
            "block set must be closed under inversion".into(),
        ));
    }
    let mut seen = ElementSet::new(group.order());
    let mut blocks = Vec::new();
    for start in set.iter() {
        if seen.contains(start) {
            continue;
        }
        seen.insert(start);
        let mut block = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for y in [alpha.apply(x), group.inverse(x)] {
                if seen.insert(y) {
                    block.push(y);
                    queue.push_back(y);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    Ok(blocks)
}
