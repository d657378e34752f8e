//! Fixture groups: every group of order at most 16 up to isomorphism, and a
//! wider set up to order 64 for lattice checks.

use crate::groups::{Automorphism, GroupTable};

fn z(n: usize) -> GroupTable {
    GroupTable::cyclic(n).expect("positive order")
}

fn d(n: usize) -> GroupTable {
    GroupTable::dihedral(n).expect("positive index")
}

fn prod(parts: &[GroupTable], label: &str) -> GroupTable {
    let mut it = parts.iter();
    let first = it.next().expect("at least one factor").clone();
    it.fold(first, |acc, g| GroupTable::direct_product(&acc, g))
        .with_label(label)
}

fn meta(m: usize, k: usize, r: usize, t: usize, label: &str) -> GroupTable {
    GroupTable::metacyclic(m, k, r, t, label).expect("valid metacyclic parameters")
}

/// `(Z4 × Z2) ⋊ Z2` with the generator acting as `(i, j) ↦ f(i, j)`.
fn z4z2_by_z2(f: impl Fn(usize, usize) -> (usize, usize), label: &str) -> GroupTable {
    let base = GroupTable::direct_product(&z(4), &z(2));
    let image = (0..8)
        .map(|x| {
            let (i, j) = f(x / 2, x % 2);
            i * 2 + j
        })
        .collect();
    let phi = Automorphism::new(&base, image).expect("automorphism of Z4 x Z2");
    GroupTable::semidirect_cyclic(&base, &phi, 2, label).expect("valid semidirect product")
}

fn perm(gens: &[Vec<usize>], label: &str) -> GroupTable {
    GroupTable::permutation_group(gens, label).expect("permutation group")
}

fn alternating4() -> GroupTable {
    perm(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], "A4")
}

/// 2x2 matrices over `F_p`, row-major.
fn matrix_group(p: u8, gens: &[[u8; 4]], label: &str) -> GroupTable {
    let mul = |a: &[u8; 4], b: &[u8; 4]| -> [u8; 4] {
        let m = |x: u8, y: u8, u: u8, v: u8| ((x as u16 * y as u16 + u as u16 * v as u16) % p as u16) as u8;
        [
            m(a[0], b[0], a[1], b[2]),
            m(a[0], b[1], a[1], b[3]),
            m(a[2], b[0], a[3], b[2]),
            m(a[2], b[1], a[3], b[3]),
        ]
    };
    GroupTable::from_generators([1, 0, 0, 1], gens, mul, 256, label).expect("finite matrix group")
}

/// Upper unitriangular 3x3 matrices over `F_3`, stored as `(a, b, c)` for
/// `[[1, a, c], [0, 1, b], [0, 0, 1]]`.
fn heisenberg3() -> GroupTable {
    let mul = |x: &[u8; 3], y: &[u8; 3]| -> [u8; 3] {
        [(x[0] + y[0]) % 3, (x[1] + y[1]) % 3, (x[2] + y[2] + x[0] * y[1]) % 3]
    };
    GroupTable::from_generators([0, 0, 0], &[[1, 0, 0], [0, 1, 0]], mul, 64, "Heis3").expect("finite group")
}

/// One representative of each isomorphism class of groups of order 1 to 16.
pub fn groups_up_to_16() -> Vec<GroupTable> {
    let z2 = z(2);
    vec![
        z(1),
        z(2),
        z(3),
        z(4),
        prod(&[z2.clone(), z2.clone()], "Z2^2"),
        z(5),
        z(6),
        d(3),
        z(7),
        z(8),
        prod(&[z(4), z2.clone()], "Z4xZ2"),
        prod(&[z2.clone(), z2.clone(), z2.clone()], "Z2^3"),
        d(4),
        meta(4, 2, 3, 2, "Q8"),
        z(9),
        prod(&[z(3), z(3)], "Z3^2"),
        z(10),
        d(5),
        z(11),
        z(12),
        prod(&[z(6), z2.clone()], "Z6xZ2"),
        d(6),
        alternating4(),
        meta(3, 4, 2, 0, "Dic3"),
        z(13),
        z(14),
        d(7),
        z(15),
        z(16),
        prod(&[z(4), z(4)], "Z4^2"),
        prod(&[z(8), z2.clone()], "Z8xZ2"),
        prod(&[z(4), z2.clone(), z2.clone()], "Z4xZ2^2"),
        prod(&[z2.clone(), z2.clone(), z2.clone(), z2.clone()], "Z2^4"),
        meta(4, 4, 3, 0, "Z4:Z4"),
        meta(8, 2, 5, 0, "M16"),
        meta(8, 2, 3, 0, "SD16"),
        meta(8, 2, 7, 4, "Q16"),
        d(8),
        prod(&[z2.clone(), d(4)], "Z2xD4"),
        prod(&[z2.clone(), meta(4, 2, 3, 2, "Q8")], "Z2xQ8"),
        z4z2_by_z2(|i, j| (i, (i + j) % 2), "(Z4xZ2):Z2"),
        z4z2_by_z2(|i, j| ((i + 2 * j) % 4, j), "Pauli"),
    ]
}

/// Fixture groups up to order 64 used for lattice checks.
pub fn lattice_fixtures() -> Vec<GroupTable> {
    let mut out = groups_up_to_16();
    out.extend((17..=64).map(z));
    out.extend((9..=32).map(d));
    let z2 = z(2);
    out.push(prod(
        &[z2.clone(), z2.clone(), z2.clone(), z2.clone(), z2.clone()],
        "Z2^5",
    ));
    out.push(prod(&vec![z2.clone(); 6], "Z2^6"));
    out.push(prod(&[z(4), z(4), z(4)], "Z4^3"));
    out.push(prod(&[z(3), z(3), z(3)], "Z3^3"));
    out.push(heisenberg3());
    out.push(perm(&[vec![1, 2, 3, 0], vec![1, 0, 2, 3]], "S4"));
    out.push(matrix_group(3, &[[1, 1, 0, 1], [0, 2, 1, 0]], "SL(2,3)"));
    out.push(prod(&[alternating4(), z2.clone()], "A4xZ2"));
    out.push(prod(&[alternating4(), z(3)], "A4xZ3"));
    out.push(prod(&[d(3), d(3)], "D3xD3"));
    out.push(prod(&[meta(4, 2, 3, 2, "Q8"), z(4)], "Q8xZ4"));
    out.push(perm(&[vec![1, 2, 0, 3, 4], vec![0, 1, 3, 4, 2]], "A5"));
    out.push(meta(16, 2, 15, 8, "Q32"));
    out.push(meta(8, 8, 3, 0, "Z8:Z8"));
    out
}

/// Looks a fixture up by label.
pub fn by_label(label: &str) -> Option<GroupTable> {
    lattice_fixtures().into_iter().find(|g| g.label() == label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{automorphisms, subgroups};

    type Fingerprint = (usize, Vec<usize>, usize, usize, usize, usize);

    fn fingerprint(g: &GroupTable) -> Fingerprint {
        let n = g.order();
        let mut orders = vec![0; n + 1];
        for x in g.elements() {
            orders[g.element_order(x)] += 1;
        }
        let center = g
            .elements()
            .filter(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x)))
            .count();
        let squares = {
            let mut s: Vec<usize> = g.elements().map(|x| g.mul(x, x)).collect();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        (
            n,
            orders,
            center,
            subgroups(g).unwrap().len(),
            automorphisms(g).unwrap().len(),
            squares,
        )
    }

    #[test]
    fn small_groups_are_complete_and_distinct() {
        let groups = groups_up_to_16();
        assert_eq!(groups.len(), 42);
        let mut per_order = [0usize; 17];
        for g in &groups {
            per_order[g.order()] += 1;
        }
        assert_eq!(per_order[1..], [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14]);
        let prints: Vec<Fingerprint> = groups.iter().map(fingerprint).collect();
        for i in 0..prints.len() {
            for j in 0..i {
                assert_ne!(prints[i], prints[j], "{} vs {}", groups[i].label(), groups[j].label());
            }
        }
    }

    #[test]
    fn fixture_orders() {
        for (label, order) in [
            ("S4", 24),
            ("SL(2,3)", 24),
            ("A5", 60),
            ("Heis3", 27),
            ("Q32", 32),
            ("Z8:Z8", 64),
        ] {
            assert_eq!(by_label(label).unwrap().order(), order, "{label}");
        }
        assert!(lattice_fixtures().iter().all(|g| g.order() <= 64));
    }
}
