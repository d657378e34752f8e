//! Exhaustive ground truth: every generating connection set, grouped into
//! orbits under a list of automorphisms. No Burnside, no Möbius.

use std::collections::{HashSet, VecDeque};

use crate::enumerate::{mask_degree, permute_mask, GenerationTable, InversionBlocks, DEFAULT_MAX_BLOCKS};
use crate::error::{Error, Result};
use crate::groups::{generates, Automorphism, ConnectionSet, GroupTable};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub canonical_rep: ConnectionSet,
    pub orbit_size: u64,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrbitCensus {
    pub orbits: Vec<OrbitRecord>,
    pub total_sets: u64,
}

pub fn orbit_census(group: &GroupTable, autos: &[Automorphism]) -> Result<OrbitCensus> {
    orbit_census_with_bound(group, autos, DEFAULT_MAX_BLOCKS)
}

/// Orbits of the group generated by `autos` on the generating connection
/// sets of `group`, sorted by degree and then by representative.
pub fn orbit_census_with_bound(group: &GroupTable, autos: &[Automorphism], max_blocks: usize) -> Result<OrbitCensus> {
    let blocks = InversionBlocks::new(group);
    blocks.check_bound(max_blocks)?;
    if group.order() > 64 {
        return Err(Error::ResourceLimit {
            what: "group order for the oracle".into(),
            limit: 64,
            actual: group.order() as u64,
        });
    }
    if let Some(a) = autos.iter().find(|a| a.len() != group.order()) {
        return Err(Error::InvalidArgument(format!(
            "automorphism on {} points for a group of order {}",
            a.len(),
            group.order()
        )));
    }
    let table = GenerationTable::build(group, &blocks);
    let sizes = blocks.sizes();
    let elem_masks: Vec<u64> = blocks
        .blocks()
        .iter()
        .map(|b| b.iter().fold(0u64, |m, &g| m | 1 << g))
        .collect();
    let gens = generating_permutations(autos.iter().map(|a| blocks.permutation(a)).collect(), blocks.len());

    // Sets compare by bitstring b_0 b_1 ..., so reversing the element mask
    // gives a numeric key with the same order.
    let key = |mask: u64| -> u64 {
        let mut rest = mask;
        let mut elems = 0u64;
        while rest != 0 {
            elems |= elem_masks[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        elems.reverse_bits()
    };

    let total = 1u64 << blocks.len();
    let mut visited = vec![0u64; (total as usize).div_ceil(64)];
    let mut census = OrbitCensus::default();
    let mut queue = VecDeque::new();
    for start in 1..total {
        if visited[(start / 64) as usize] >> (start % 64) & 1 == 1 || !table.generates(start) {
            continue;
        }
        visited[(start / 64) as usize] |= 1 << (start % 64);
        queue.push_back(start);
        let mut size = 0u64;
        let mut best = start;
        let mut best_key = key(start);
        while let Some(m) = queue.pop_front() {
            size += 1;
            let k = key(m);
            if k < best_key {
                best_key = k;
                best = m;
            }
            for perm in &gens {
                let next = permute_mask(perm, m);
                let (w, b) = ((next / 64) as usize, next % 64);
                if visited[w] >> b & 1 == 0 {
                    visited[w] |= 1 << b;
                    queue.push_back(next);
                }
            }
        }
        census.total_sets += size;
        census.orbits.push(OrbitRecord {
            canonical_rep: ConnectionSet::from_bits_unchecked(blocks.to_element_set(group.order(), best)),
            orbit_size: size,
            degree: mask_degree(&sizes, best),
        });
    }
    census.orbits.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then_with(|| a.canonical_rep.cmp(&b.canonical_rep))
    });
    Ok(census)
}

/// A subset of `perms` generating the same permutation group.
fn generating_permutations(perms: Vec<Vec<usize>>, n: usize) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..n).collect();
    let mut span: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    for p in perms {
        if span.contains(&p) {
            continue;
        }
        chosen.push(p);
        let mut frontier: Vec<Vec<usize>> = span.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for g in &chosen {
                let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
                if span.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    chosen
}

pub fn psi_from_census(census: &OrbitCensus) -> IntPoly {
    IntPoly::from_terms(census.orbits.iter().map(|o| (o.degree, 1)))
}

/// Counts generating connection sets by testing every symmetric subset
/// with [`generates`], one closure per set.
pub fn count_generating_by_filtration(group: &GroupTable) -> Result<u64> {
    let blocks = InversionBlocks::new(group);
    blocks.check_bound(DEFAULT_MAX_BLOCKS)?;
    let mut count = 0;
    for mask in 1..(1u64 << blocks.len()) {
        let omega = ConnectionSet::from_bits_unchecked(blocks.to_element_set(group.order(), mask));
        if generates(group, &omega) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{automorphisms, inner_automorphisms};

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn cyclic_five() {
        let g = GroupTable::cyclic(5).unwrap();
        let c = orbit_census(&g, &automorphisms(&g).unwrap()).unwrap();
        let shape: Vec<(usize, u64)> = c.orbits.iter().map(|o| (o.degree, o.orbit_size)).collect();
        assert_eq!(shape, vec![(2, 2), (4, 1)]);
        assert_eq!(c.orbits[0].canonical_rep.elements(), vec![2, 3]);
        assert_eq!(psi_from_census(&c), p("x^2 + x^4"));

        let c = orbit_census(&g, &[Automorphism::identity(5)]).unwrap();
        assert_eq!(c.orbits.len(), 3);
        assert!(c.orbits.iter().all(|o| o.orbit_size == 1));
    }

    #[test]
    fn dihedral_three() {
        let g = GroupTable::dihedral(3).unwrap();
        let autos = automorphisms(&g).unwrap();
        let c = orbit_census(&g, &autos).unwrap();
        let degrees: Vec<usize> = c.orbits.iter().map(|o| o.degree).collect();
        assert_eq!(degrees, vec![2, 3, 3, 4, 5]);
        assert_eq!(c.total_sets, 11);
        assert_eq!(psi_from_census(&c), p("x^2 + 2x^3 + x^4 + x^5"));
        for o in &c.orbits {
            assert_eq!(autos.len() as u64 % o.orbit_size, 0);
        }
    }

    #[test]
    fn trivial_group_is_empty() {
        let g = GroupTable::cyclic(1).unwrap();
        let c = orbit_census(&g, &[Automorphism::identity(1)]).unwrap();
        assert!(c.orbits.is_empty());
        assert!(psi_from_census(&c).is_zero());
    }

    #[test]
    fn totals_agree_with_filtration() {
        for g in [GroupTable::cyclic(12).unwrap(), GroupTable::dihedral(5).unwrap()] {
            let c = orbit_census(&g, &inner_automorphisms(&g)).unwrap();
            assert_eq!(c.total_sets, count_generating_by_filtration(&g).unwrap());
        }
    }

    #[test]
    fn representative_is_least_in_orbit() {
        let g = GroupTable::cyclic(10).unwrap();
        let autos = automorphisms(&g).unwrap();
        for o in orbit_census(&g, &autos).unwrap().orbits {
            for a in &autos {
                let image = a.apply_set(o.canonical_rep.bits());
                assert!(o.canonical_rep.bits() <= &image);
            }
        }
    }

    #[test]
    fn block_bound_names_count() {
        let g = GroupTable::cyclic(60).unwrap();
        let err = orbit_census(&g, &[Automorphism::identity(60)]).unwrap_err();
        assert!(err.to_string().contains("30 blocks"), "{err}");
    }
}
