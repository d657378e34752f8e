use std::collections::HashMap;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::groups::{closure, GroupTable, Limits};

/// A subgroup with its value of the lattice Möbius function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: ElementSet,
    pub moebius: i64,
}

impl Subgroup {
    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }
}

pub fn subgroups(group: &GroupTable) -> Result<Vec<Subgroup>> {
    subgroups_with_limits(group, &Limits::default())
}

/// Every subgroup exactly once, ordered by size and then by member bitstring.
///
/// Seeds with the cyclic subgroups and repeatedly joins each known subgroup
/// with each cyclic subgroup it does not contain.
pub fn subgroups_with_limits(group: &GroupTable, limits: &Limits) -> Result<Vec<Subgroup>> {
    let n = group.order();
    if n > limits.max_order {
        return Err(Error::ResourceLimit {
            what: "group order for subgroup enumeration".into(),
            limit: limits.max_order as u64,
            actual: n as u64,
        });
    }
    let mut cyclic: Vec<(usize, ElementSet)> = Vec::new();
    let mut known: HashMap<ElementSet, ()> = HashMap::new();
    for g in group.elements() {
        let c = closure(group, &[g]);
        if known.insert(c.clone(), ()).is_none() {
            cyclic.push((g, c));
        }
    }
    let mut found: Vec<(ElementSet, Vec<usize>)> = cyclic.iter().map(|(g, c)| (c.clone(), vec![*g])).collect();
    let mut cursor = 0;
    while cursor < found.len() {
        let (members, gens) = found[cursor].clone();
        for (g, c) in &cyclic {
            if c.is_subset(&members) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(*g);
            let joined = closure(group, &next_gens);
            if !known.contains_key(&joined) {
                known.insert(joined.clone(), ());
                found.push((joined, next_gens));
            }
        }
        cursor += 1;
    }
    let mut subs: Vec<Subgroup> = found
        .into_iter()
        .map(|(members, _)| Subgroup { members, moebius: 0 })
        .collect();
    subs.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
    Ok(subs)
}

/// Fills in `μ` from the top down: `μ(G) = 1` and `Σ_{H ⊇ K} μ(H) = 0`
/// for every proper `K`.
pub fn lattice_moebius(group: &GroupTable, mut subs: Vec<Subgroup>) -> Vec<Subgroup> {
    let n = group.order();
    let mut idx: Vec<usize> = (0..subs.len()).collect();
    idx.sort_by_key(|&i| std::cmp::Reverse(subs[i].order()));
    let mut mu: Vec<Option<i64>> = vec![None; subs.len()];
    for (pos, &k) in idx.iter().enumerate() {
        if subs[k].order() == n {
            mu[k] = Some(1);
            continue;
        }
        let mut total = 0;
        for &h in &idx[..pos] {
            if subs[h].order() > subs[k].order() && subs[k].members.is_subset(&subs[h].members) {
                total += mu[h].expect("larger subgroups are processed first");
            }
        }
        mu[k] = Some(-total);
    }
    for (s, m) in subs.iter_mut().zip(mu) {
        s.moebius = m.expect("every subgroup visited");
    }
    subs
}

/// Subgroups with their Möbius values.
pub fn subgroup_lattice(group: &GroupTable) -> Result<Vec<Subgroup>> {
    Ok(lattice_moebius(group, subgroups(group)?))
}

pub fn subgroup_lattice_with_limits(group: &GroupTable, limits: &Limits) -> Result<Vec<Subgroup>> {
    Ok(lattice_moebius(group, subgroups_with_limits(group, limits)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::moebius_int;

    fn mu_by_order(subs: &[Subgroup]) -> Vec<(usize, i64)> {
        subs.iter().map(|s| (s.order(), s.moebius)).collect()
    }

    #[test]
    fn cyclic_twelve_lattice() {
        let g = GroupTable::cyclic(12).unwrap();
        let subs = subgroup_lattice(&g).unwrap();
        assert_eq!(
            mu_by_order(&subs),
            vec![(1, 0), (2, 1), (3, 0), (4, -1), (6, -1), (12, 1)]
        );
    }

    #[test]
    fn dihedral_three_lattice() {
        let g = GroupTable::dihedral(3).unwrap();
        let subs = subgroup_lattice(&g).unwrap();
        assert_eq!(subs.len(), 6);
        assert_eq!(
            mu_by_order(&subs),
            vec![(1, 3), (2, -1), (2, -1), (2, -1), (3, -1), (6, 1)]
        );
    }

    #[test]
    fn prime_and_trivial() {
        let subs = subgroup_lattice(&GroupTable::cyclic(7).unwrap()).unwrap();
        assert_eq!(mu_by_order(&subs), vec![(1, -1), (7, 1)]);
        let subs = subgroup_lattice(&GroupTable::cyclic(1).unwrap()).unwrap();
        assert_eq!(mu_by_order(&subs), vec![(1, 1)]);
    }

    #[test]
    fn cyclic_lattice_is_divisor_lattice() {
        for n in 1..=60u64 {
            let g = GroupTable::cyclic(n as usize).unwrap();
            let subs = subgroup_lattice(&g).unwrap();
            assert_eq!(subs.len(), crate::numtheory::divisors(n).unwrap().len());
            for s in &subs {
                let index = n / s.order() as u64;
                assert_eq!(s.moebius, moebius_int(index).unwrap(), "Z{n}, |K| = {}", s.order());
            }
        }
    }

    #[test]
    fn order_cap_is_enforced() {
        let g = GroupTable::cyclic(20).unwrap();
        let limits = Limits {
            max_order: 10,
            ..Limits::default()
        };
        assert!(subgroups_with_limits(&g, &limits).unwrap_err().is_resource());
    }
}
