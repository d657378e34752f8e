//! Brute-force enumeration of symmetric subsets.
//!
//! A symmetric identity-free subset is a union of inversion blocks: pairs
//! `{g, g^-1}` and singleton involutions. Candidate sets are therefore
//! encoded as bitmasks over blocks, and generation is decided for every
//! mask at once by a depth-first walk that joins one block at a time.
//! Nothing here consults the subgroup lattice or its Möbius function.

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::groups::{closure, Automorphism, GroupTable};

pub const DEFAULT_MAX_BLOCKS: usize = 24;

/// The inversion blocks of `G \ {e}`, ordered by least element.
#[derive(Debug, Clone)]
pub struct InversionBlocks {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<Option<usize>>,
}

impl InversionBlocks {
    pub fn new(group: &GroupTable) -> Self {
        let mut block_of = vec![None; group.order()];
        let mut blocks = Vec::new();
        for g in group.non_identity() {
            if block_of[g].is_some() {
                continue;
            }
            let inv = group.inverse(g);
            let b = if inv == g { vec![g] } else { vec![g, inv] };
            for &x in &b {
                block_of[x] = Some(blocks.len());
            }
            blocks.push(b);
        }
        InversionBlocks { blocks, block_of }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, g: usize) -> Option<usize> {
        self.block_of[g]
    }

    /// Where `alpha` sends each block.
    pub fn permutation(&self, alpha: &Automorphism) -> Vec<usize> {
        self.blocks
            .iter()
            .map(|b| self.block_of[alpha.apply(b[0])].expect("automorphisms fix only the identity"))
            .collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn to_element_set(&self, capacity: usize, mask: u64) -> ElementSet {
        let mut s = ElementSet::new(capacity);
        for (i, b) in self.blocks.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for &g in b {
                    s.insert(g);
                }
            }
        }
        s
    }

    pub(crate) fn check_bound(&self, max_blocks: usize) -> Result<()> {
        if self.len() > max_blocks {
            return Err(Error::ResourceLimit {
                what: format!("inversion block count ({} blocks)", self.len()),
                limit: max_blocks as u64,
                actual: self.len() as u64,
            });
        }
        Ok(())
    }
}

/// One bit per block mask: is the union of those blocks a generating set?
pub struct GenerationTable {
    bits: Vec<u64>,
    nblocks: usize,
}

impl GenerationTable {
    pub fn build(group: &GroupTable, blocks: &InversionBlocks) -> Self {
        let nblocks = blocks.len();
        let total = 1usize << nblocks;
        let mut table = GenerationTable {
            bits: vec![0; total.div_ceil(64)],
            nblocks,
        };
        let reps: Vec<usize> = blocks.blocks().iter().map(|b| b[0]).collect();
        let mut joins = JoinCache::new(group);
        let start = joins.trivial();
        table.walk(&reps, &mut joins, 0, 0, start);
        table
    }

    fn walk(&mut self, reps: &[usize], joins: &mut JoinCache<'_>, depth: usize, mask: u64, sub: usize) {
        if joins.is_whole(sub) {
            // every completion of this prefix generates
            let free = self.nblocks - depth;
            for high in 0..(1u64 << free) {
                self.set(mask | high << depth);
            }
            return;
        }
        if depth == self.nblocks {
            return;
        }
        self.walk(reps, joins, depth + 1, mask, sub);
        let next = joins.join(sub, reps[depth]);
        self.walk(reps, joins, depth + 1, mask | 1 << depth, next);
    }

    fn set(&mut self, mask: u64) {
        self.bits[(mask / 64) as usize] |= 1 << (mask % 64);
    }

    #[inline]
    pub fn generates(&self, mask: u64) -> bool {
        self.bits[(mask / 64) as usize] >> (mask % 64) & 1 == 1
    }

    pub fn block_count(&self) -> usize {
        self.nblocks
    }
}

/// Memoized `⟨H, g⟩` over the subgroups met during the walk.
struct JoinCache<'g> {
    group: &'g GroupTable,
    subgroups: Vec<(ElementSet, Vec<usize>)>,
    index: std::collections::HashMap<ElementSet, usize>,
    table: Vec<Vec<u32>>,
}

impl<'g> JoinCache<'g> {
    fn new(group: &'g GroupTable) -> Self {
        JoinCache {
            group,
            subgroups: Vec::new(),
            index: Default::default(),
            table: Vec::new(),
        }
    }

    fn intern(&mut self, members: ElementSet, gens: Vec<usize>) -> usize {
        if let Some(&id) = self.index.get(&members) {
            return id;
        }
        let id = self.subgroups.len();
        self.index.insert(members.clone(), id);
        self.subgroups.push((members, gens));
        self.table.push(vec![u32::MAX; self.group.order()]);
        id
    }

    fn trivial(&mut self) -> usize {
        let e = closure(self.group, &[]);
        self.intern(e, Vec::new())
    }

    fn is_whole(&self, id: usize) -> bool {
        self.subgroups[id].0.len() == self.group.order()
    }

    fn join(&mut self, id: usize, g: usize) -> usize {
        let cached = self.table[id][g];
        if cached != u32::MAX {
            return cached as usize;
        }
        let result = if self.subgroups[id].0.contains(g) {
            id
        } else {
            let mut gens = self.subgroups[id].1.clone();
            gens.push(g);
            let members = closure(self.group, &gens);
            self.intern(members, gens)
        };
        self.table[id][g] = result as u32;
        result
    }
}

/// Total size of the blocks selected by `mask`.
#[inline]
pub fn mask_degree(sizes: &[usize], mask: u64) -> usize {
    let mut rest = mask;
    let mut d = 0;
    while rest != 0 {
        d += sizes[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    d
}

/// Image of a block mask under a block permutation.
#[inline]
pub fn permute_mask(perm: &[usize], mask: u64) -> u64 {
    let mut rest = mask;
    let mut out = 0;
    while rest != 0 {
        out |= 1 << perm[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{generates, ConnectionSet};

    #[test]
    fn blocks_of_small_groups() {
        let z6 = GroupTable::cyclic(6).unwrap();
        let b = InversionBlocks::new(&z6);
        assert_eq!(b.blocks(), &[vec![1, 5], vec![2, 4], vec![3]]);
        let d3 = GroupTable::dihedral(3).unwrap();
        assert_eq!(InversionBlocks::new(&d3).len(), 4);
        assert!(InversionBlocks::new(&GroupTable::cyclic(1).unwrap()).is_empty());
    }

    #[test]
    fn table_agrees_with_closure() {
        for g in [
            GroupTable::cyclic(12).unwrap(),
            GroupTable::dihedral(4).unwrap(),
            GroupTable::metacyclic(4, 2, 3, 2, "Q8").unwrap(),
        ] {
            let blocks = InversionBlocks::new(&g);
            let table = GenerationTable::build(&g, &blocks);
            for mask in 0..(1u64 << blocks.len()) {
                let omega = ConnectionSet::new(&g, blocks.to_element_set(g.order(), mask)).unwrap();
                assert_eq!(
                    table.generates(mask),
                    generates(&g, &omega),
                    "{} mask {mask:b}",
                    g.label()
                );
            }
        }
    }
}
