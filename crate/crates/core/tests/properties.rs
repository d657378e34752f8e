use std::collections::VecDeque;

use num_bigint::BigInt;
use proptest::prelude::*;

use cayley_census::bitset::ElementSet;
use cayley_census::burnside::{EmptySet, Engine};
use cayley_census::catalog::groups_up_to_16;
use cayley_census::closedform::psi_equiv_abelian;
use cayley_census::groups::{
    automorphisms, generates, inner_automorphisms, symmetric_blocks, ConnectionSet, GroupTable,
};
use cayley_census::numtheory::{divisors, euler_phi, gcd_lcm, moebius_int, Factorization};
use cayley_census::oracle::{count_generating_by_filtration, orbit_census, psi_from_census};
use cayley_census::IntPoly;

/// Small groups from every construction the crate offers.
fn small_group() -> impl Strategy<Value = GroupTable> {
    prop_oneof![
        (2usize..=30).prop_map(|n| GroupTable::cyclic(n).unwrap()),
        (2usize..=12).prop_map(|n| GroupTable::dihedral(n).unwrap()),
        (2usize..=6, 2usize..=6).prop_map(|(a, b)| {
            GroupTable::direct_product(&GroupTable::cyclic(a).unwrap(), &GroupTable::cyclic(b).unwrap())
        }),
        (1usize..42).prop_map(|i| groups_up_to_16().swap_remove(i)),
    ]
}

fn abelian_group() -> impl Strategy<Value = GroupTable> {
    prop_oneof![
        (2usize..=24).prop_map(|n| GroupTable::cyclic(n).unwrap()),
        (2usize..=5, 2usize..=5, 1usize..=2).prop_map(|(a, b, c)| {
            let ab = GroupTable::direct_product(&GroupTable::cyclic(a).unwrap(), &GroupTable::cyclic(b).unwrap());
            GroupTable::direct_product(&ab, &GroupTable::cyclic(c).unwrap())
        }),
    ]
}

/// Connectivity of the Cayley graph by breadth-first search from the identity.
fn connected(g: &GroupTable, omega: &[usize]) -> bool {
    let mut seen = vec![false; g.order()];
    seen[g.identity()] = true;
    let mut queue = VecDeque::from([g.identity()]);
    let mut reached = 1;
    while let Some(x) = queue.pop_front() {
        for &s in omega {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                queue.push_back(y);
            }
        }
    }
    reached == g.order()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn totient_and_moebius_sums(n in 1u64..=10_000) {
        let ds = divisors(n).unwrap();
        prop_assert_eq!(ds.iter().map(|&d| euler_phi(d).unwrap()).sum::<u64>(), n);
        let mu: i64 = ds.iter().map(|&d| moebius_int(d).unwrap()).sum();
        prop_assert_eq!(mu, (n == 1) as i64);
        prop_assert_eq!(ds.len() as u64, Factorization::of(n).unwrap().divisor_count());
    }

    #[test]
    fn gcd_times_lcm(a in 1u64..100_000, b in 1u64..100_000) {
        let (g, l) = gcd_lcm(a, b).unwrap();
        prop_assert_eq!(g * l, a * b);
    }

    #[test]
    fn equivalence_refines_weak_equivalence(g in small_group()) {
        let e = Engine::new(&g).unwrap();
        let weak = e.psi_weak().unwrap();
        let equiv = e.psi_equiv().unwrap();
        prop_assert!(equiv.dominates(&weak), "{}: {} vs {}", g.label(), equiv, weak);
    }

    #[test]
    fn census_support(g in small_group()) {
        let psi = Engine::new(&g).unwrap().psi_weak().unwrap();
        prop_assert!(psi.low_degree().unwrap_or(1) >= 1);
        prop_assert!(psi.degree().unwrap_or(0) < g.order());
        if g.order() > 2 {
            prop_assert_eq!(psi.coeff(1), BigInt::from(0));
        }
    }

    #[test]
    fn burnside_sums_are_divisible(g in small_group()) {
        let e = Engine::new(&g).unwrap();
        for autos in [automorphisms(&g).unwrap(), inner_automorphisms(&g)] {
            let mut total = IntPoly::zero();
            for f in e.fix_polys(&autos) {
                total += &f.poly;
            }
            prop_assert!(total.divide_exact_by_int(&BigInt::from(autos.len())).is_ok());
        }
    }

    #[test]
    fn empty_set_convention(g in small_group()) {
        let e = Engine::new(&g).unwrap();
        for a in automorphisms(&g).unwrap().iter().take(24) {
            prop_assert_eq!(e.raw_fix_sum(a, EmptySet::Include), e.raw_fix_sum(a, EmptySet::Exclude));
        }
    }

    #[test]
    fn abelian_equivalence_counts_every_set(g in abelian_group()) {
        let psi = Engine::new(&g).unwrap().psi_equiv().unwrap();
        prop_assert_eq!(&psi, &psi_equiv_abelian(&g).unwrap());
        let singletons = orbit_census(&g, &inner_automorphisms(&g)).unwrap();
        prop_assert!(singletons.orbits.iter().all(|o| o.orbit_size == 1));
        prop_assert_eq!(&psi, &psi_from_census(&singletons));
        prop_assert_eq!(psi.eval_at_one(), BigInt::from(count_generating_by_filtration(&g).unwrap()));
    }

    #[test]
    fn orbit_stabilizer_and_totals(g in small_group()) {
        let autos = automorphisms(&g).unwrap();
        let census = orbit_census(&g, &autos).unwrap();
        for o in &census.orbits {
            prop_assert_eq!(autos.len() as u64 % o.orbit_size, 0);
        }
        prop_assert_eq!(census.orbits.iter().map(|o| o.orbit_size).sum::<u64>(), census.total_sets);
        prop_assert_eq!(census.total_sets, count_generating_by_filtration(&g).unwrap());
        prop_assert_eq!(psi_from_census(&census), Engine::new(&g).unwrap().psi_weak().unwrap());
    }

    #[test]
    fn generation_is_connectivity(g in small_group(), seed in any::<u64>()) {
        let mut elems: Vec<usize> = g.non_identity().filter(|&x| seed >> (x % 64) & 1 == 1).collect();
        let inverses: Vec<usize> = elems.iter().map(|&x| g.inverse(x)).collect();
        elems.extend(inverses);
        elems.sort_unstable();
        elems.dedup();
        prop_assume!(!elems.is_empty());
        let omega = ConnectionSet::from_elements(&g, elems.iter().copied()).unwrap();
        prop_assert_eq!(generates(&g, &omega), connected(&g, &elems));
    }

    #[test]
    fn symmetric_blocks_partition(g in small_group(), pick in any::<prop::sample::Index>()) {
        let autos = automorphisms(&g).unwrap();
        let alpha = pick.get(&autos);
        let all = ElementSet::from_indices(g.order(), g.non_identity());
        let blocks = symmetric_blocks(&g, &all, alpha).unwrap();
        let mut covered: Vec<usize> = blocks.concat();
        covered.sort_unstable();
        prop_assert_eq!(covered, g.non_identity().collect::<Vec<_>>());
    }

    #[test]
    fn automorphism_counts(n in 3usize..=24) {
        let phi = euler_phi(n as u64).unwrap() as usize;
        prop_assert_eq!(automorphisms(&GroupTable::cyclic(n).unwrap()).unwrap().len(), phi);
        prop_assert_eq!(automorphisms(&GroupTable::dihedral(n).unwrap()).unwrap().len(), n * phi);
    }
}
