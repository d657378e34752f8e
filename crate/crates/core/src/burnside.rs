//! Burnside averaging with fixed-set counts obtained by Möbius inversion
//! over the subgroup lattice.
//!
//! For an automorphism `α`, the symmetric `α`-fixed subsets of a subgroup
//! `K` are unions of blocks of `M \ {e}` under `⟨α, inversion⟩`, where `M`
//! is the largest `α`-invariant subset of `K`. Summing over the lattice
//! with Möbius weights keeps only the generating ones.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::bitset::ElementSet;
use crate::enumerate::{mask_degree, permute_mask, GenerationTable, InversionBlocks, DEFAULT_MAX_BLOCKS};
use crate::error::{Error, Result};
use crate::groups::{
    automorphisms_with_limits, inner_automorphisms, subgroup_lattice_with_limits, Automorphism, GroupTable, Limits,
    Subgroup,
};
use crate::poly::IntPoly;

/// The degree polynomial of the generating connection sets fixed by one
/// automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixPoly {
    pub automorphism: Automorphism,
    pub poly: IntPoly,
}

/// Whether the empty set is counted among the symmetric subsets of `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmptySet {
    Include,
    Exclude,
}

/// `∩_j α^j(K)`: the largest `α`-invariant subset of `K`.
pub fn invariant_core(members: &ElementSet, alpha: &Automorphism) -> ElementSet {
    let mut core = members.clone();
    loop {
        let mut next = alpha.apply_set(&core);
        next.intersect_with(&core);
        if next == core {
            return core;
        }
        core = next;
    }
}

/// Sizes of the `⟨α, inversion⟩`-blocks of `M \ {e}`, sorted ascending.
fn block_signature(group: &GroupTable, members: &ElementSet, alpha: &Automorphism) -> Vec<usize> {
    let core = invariant_core(members, alpha);
    let mut seen = ElementSet::new(group.order());
    seen.insert(group.identity());
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in core.iter() {
        if !seen.insert(start) {
            continue;
        }
        let mut size = 1;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for y in [alpha.apply(x), group.inverse(x)] {
                if seen.insert(y) {
                    size += 1;
                    queue.push_back(y);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

fn signature_poly(sizes: &[usize]) -> IntPoly {
    let mut p = IntPoly::one();
    for &s in sizes {
        p.mul_one_plus_x_pow(s);
    }
    p
}

/// Symmetric identity-free `α`-fixed subsets of `K`, empty set included.
pub fn sym_fixed_poly(group: &GroupTable, k: &Subgroup, alpha: &Automorphism) -> IntPoly {
    signature_poly(&block_signature(group, k.members(), alpha))
}

/// Collapses `Σ weight · Π(1 + x^s)` over signatures into one polynomial.
fn expand(weights: HashMap<Vec<usize>, i128>) -> IntPoly {
    let mut total = IntPoly::zero();
    for (sig, w) in weights {
        if w != 0 {
            total += &signature_poly(&sig).scale(&BigInt::from(w));
        }
    }
    total
}

fn drop_constant(p: IntPoly) -> IntPoly {
    IntPoly::from_terms(p.terms().filter(|(d, _)| *d > 0).map(|(d, c)| (d, c.clone())))
}

/// The Möbius-route engine for one group. The lattice is computed once.
pub struct Engine<'g> {
    group: &'g GroupTable,
    lattice: Vec<Subgroup>,
    limits: Limits,
}

impl<'g> Engine<'g> {
    pub fn new(group: &'g GroupTable) -> Result<Self> {
        Engine::with_limits(group, Limits::default())
    }

    pub fn with_limits(group: &'g GroupTable, limits: Limits) -> Result<Self> {
        let lattice = subgroup_lattice_with_limits(group, &limits)?;
        Ok(Engine { group, lattice, limits })
    }

    pub fn group(&self) -> &GroupTable {
        self.group
    }

    pub fn lattice(&self) -> &[Subgroup] {
        &self.lattice
    }

    fn accumulate(&self, alpha: &Automorphism, convention: EmptySet, weights: &mut HashMap<Vec<usize>, i128>) {
        for k in self.lattice.iter().filter(|k| k.moebius != 0) {
            let sig = block_signature(self.group, k.members(), alpha);
            *weights.entry(sig).or_insert(0) += k.moebius as i128;
            if convention == EmptySet::Exclude {
                *weights.entry(Vec::new()).or_insert(0) -= k.moebius as i128;
            }
        }
    }

    /// `Σ_K μ(K) S_α(K)` before the degree-0 term is discarded.
    pub fn raw_fix_sum(&self, alpha: &Automorphism, convention: EmptySet) -> IntPoly {
        let mut weights = HashMap::new();
        self.accumulate(alpha, convention, &mut weights);
        expand(weights)
    }

    /// Generating symmetric sets fixed by `alpha`, by degree.
    ///
    /// The lattice sum has constant term `Σ_K μ(K)`, which is `1` only for
    /// the trivial group, where the empty set generates. The empty set is
    /// never a connection set, so the constant term is dropped.
    pub fn fix_poly(&self, alpha: &Automorphism) -> IntPoly {
        drop_constant(self.raw_fix_sum(alpha, EmptySet::Include))
    }

    pub fn fix_polys(&self, autos: &[Automorphism]) -> Vec<FixPoly> {
        autos
            .par_iter()
            .map(|a| FixPoly {
                automorphism: a.clone(),
                poly: self.fix_poly(a),
            })
            .collect()
    }

    /// Exact Burnside average over `autos`, which must form a group.
    pub fn average(&self, autos: &[Automorphism], context: &str) -> Result<IntPoly> {
        if autos.is_empty() {
            return Err(Error::InvalidArgument("empty automorphism list".into()));
        }
        let weights = autos
            .par_iter()
            .fold(HashMap::new, |mut acc, a| {
                self.accumulate(a, EmptySet::Include, &mut acc);
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (sig, w) in b {
                    *a.entry(sig).or_insert(0) += w;
                }
                a
            });
        let total = drop_constant(expand(weights));
        let divisor = BigInt::from(autos.len());
        total.divide_exact_by_int(&divisor).map_err(|e| Error::NonIntegral {
            context: format!("{context} of {}", self.group.label()),
            detail: e.to_string(),
        })
    }

    pub fn psi_weak(&self) -> Result<IntPoly> {
        let autos = automorphisms_with_limits(self.group, &self.limits)?;
        self.average(&autos, "weak Burnside average")
    }

    pub fn psi_equiv(&self) -> Result<IntPoly> {
        let inner = inner_automorphisms(self.group);
        self.average(&inner, "Burnside average over inner automorphisms")
    }
}

pub fn fix_poly_moebius(group: &GroupTable, alpha: &Automorphism) -> Result<IntPoly> {
    Ok(Engine::new(group)?.fix_poly(alpha))
}

/// Enumerates the symmetric `α`-fixed subsets outright and tests each one
/// for generation. Fixed symmetric sets are exactly the unions of
/// `α`-cycles on inversion blocks, so only those unions are visited.
pub struct DirectEnumerator<'g> {
    group: &'g GroupTable,
    blocks: InversionBlocks,
    sizes: Vec<usize>,
    table: GenerationTable,
}

impl<'g> DirectEnumerator<'g> {
    pub fn new(group: &'g GroupTable) -> Result<Self> {
        DirectEnumerator::with_bound(group, DEFAULT_MAX_BLOCKS)
    }

    pub fn with_bound(group: &'g GroupTable, max_blocks: usize) -> Result<Self> {
        let blocks = InversionBlocks::new(group);
        blocks.check_bound(max_blocks)?;
        let table = GenerationTable::build(group, &blocks);
        let sizes = blocks.sizes();
        Ok(DirectEnumerator {
            group,
            blocks,
            sizes,
            table,
        })
    }

    pub fn fix_poly(&self, alpha: &Automorphism) -> Result<IntPoly> {
        if alpha.len() != self.group.order() {
            return Err(Error::InvalidArgument(
                "automorphism size differs from group order".into(),
            ));
        }
        let perm = self.blocks.permutation(alpha);
        let mut cycles: Vec<u64> = Vec::new();
        let mut covered = 0u64;
        for b in 0..perm.len() {
            if covered >> b & 1 == 1 {
                continue;
            }
            let mut cycle = 0u64;
            let mut x = b;
            while cycle >> x & 1 == 0 {
                cycle |= 1 << x;
                x = perm[x];
            }
            covered |= cycle;
            cycles.push(cycle);
        }
        let mut counts = vec![0u64; self.group.order()];
        for choice in 1u64..(1u64 << cycles.len()) {
            let mut mask = 0;
            let mut rest = choice;
            while rest != 0 {
                mask |= cycles[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            debug_assert_eq!(permute_mask(&perm, mask), mask);
            if self.table.generates(mask) {
                counts[mask_degree(&self.sizes, mask)] += 1;
            }
        }
        Ok(IntPoly::from_coeffs(counts))
    }
}

pub fn fix_poly_direct(group: &GroupTable, alpha: &Automorphism) -> Result<IntPoly> {
    DirectEnumerator::new(group)?.fix_poly(alpha)
}

pub fn psi_weak(group: &GroupTable) -> Result<IntPoly> {
    Engine::new(group)?.psi_weak()
}

pub fn psi_equiv(group: &GroupTable) -> Result<IntPoly> {
    Engine::new(group)?.psi_equiv()
}

pub fn count_weak(group: &GroupTable) -> Result<BigInt> {
    Ok(psi_weak(group)?.eval_at_one())
}

pub fn count_equiv(group: &GroupTable) -> Result<BigInt> {
    Ok(psi_equiv(group)?.eval_at_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{automorphisms, cyclic_automorphisms};

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn z(n: usize) -> GroupTable {
        GroupTable::cyclic(n).unwrap()
    }

    fn times(n: usize, m: usize) -> Automorphism {
        cyclic_automorphisms(n).into_iter().find(|a| a.apply(1) == m).unwrap()
    }

    #[test]
    fn sym_fixed_examples() {
        let g = z(5);
        let whole = Engine::new(&g).unwrap().lattice().last().unwrap().clone();
        assert_eq!(
            sym_fixed_poly(&g, &whole, &Automorphism::identity(5)),
            p("1 + 2x^2 + x^4")
        );
        assert_eq!(sym_fixed_poly(&g, &whole, &times(5, 2)), p("1 + x^4"));
    }

    #[test]
    fn odd_rotation_subgroup_in_dihedral() {
        let n = 6;
        let g = GroupTable::dihedral(n).unwrap();
        let engine = Engine::new(&g).unwrap();
        let z3 = engine
            .lattice()
            .iter()
            .find(|k| k.order() == 3 && k.contains(2))
            .unwrap();
        for a in automorphisms(&g).unwrap() {
            assert_eq!(sym_fixed_poly(&g, z3, &a), p("1 + x^2"));
        }
    }

    #[test]
    fn unstable_subgroup_restricts_to_core() {
        // the reflection subgroup {e, b} is moved by a -> a, b -> ba
        let g = GroupTable::dihedral(4).unwrap();
        let engine = Engine::new(&g).unwrap();
        let k = engine
            .lattice()
            .iter()
            .find(|k| k.order() == 2 && k.contains(4))
            .unwrap();
        let shift = automorphisms(&g)
            .unwrap()
            .into_iter()
            .find(|a| a.apply(1) == 1 && a.apply(4) == 5)
            .unwrap();
        assert_eq!(invariant_core(k.members(), &shift).len(), 1);
        assert_eq!(sym_fixed_poly(&g, k, &shift), IntPoly::one());
    }

    #[test]
    fn fix_poly_examples() {
        for (g, a, want) in [
            (z(4), Automorphism::identity(4), "x^2 + x^3"),
            (z(6), times(6, 5), "x^2 + 2x^3 + x^4 + x^5"),
            (z(5), times(5, 2), "x^4"),
            (z(2), Automorphism::identity(2), "x"),
        ] {
            assert_eq!(fix_poly_moebius(&g, &a).unwrap(), p(want));
            assert_eq!(fix_poly_direct(&g, &a).unwrap(), p(want));
        }
        let trivial = z(1);
        assert!(fix_poly_moebius(&trivial, &Automorphism::identity(1))
            .unwrap()
            .is_zero());
        assert!(fix_poly_direct(&trivial, &Automorphism::identity(1)).unwrap().is_zero());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_weak(&z(5)).unwrap(), p("x^2 + x^4"));
        assert_eq!(psi_equiv(&z(5)).unwrap(), p("2x^2 + x^4"));
        assert_eq!(psi_weak(&z(8)).unwrap(), p("x^2+x^3+2x^4+2x^5+x^6+x^7"));
        assert_eq!(count_weak(&z(12)).unwrap(), BigInt::from(38));
        assert_eq!(count_equiv(&z(12)).unwrap(), BigInt::from(54));
        assert_eq!(count_weak(&z(1)).unwrap(), BigInt::from(0));
    }

    #[test]
    fn dihedral_three_weak() {
        let d3 = GroupTable::dihedral(3).unwrap();
        assert_eq!(psi_weak(&d3).unwrap(), p("x^2 + 2x^3 + x^4 + x^5"));
    }

    #[test]
    fn empty_set_convention_is_irrelevant() {
        for g in [z(12), GroupTable::dihedral(5).unwrap()] {
            let engine = Engine::new(&g).unwrap();
            for a in automorphisms(&g).unwrap() {
                assert_eq!(
                    engine.raw_fix_sum(&a, EmptySet::Include),
                    engine.raw_fix_sum(&a, EmptySet::Exclude)
                );
            }
        }
    }

    #[test]
    fn direct_bound_is_enforced() {
        let g = z(60);
        assert!(DirectEnumerator::new(&g).err().unwrap().is_resource());
    }
}
