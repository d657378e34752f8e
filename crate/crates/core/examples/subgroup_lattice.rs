//! Subgroup lattices and their Möbius function.

use cayley_census::catalog::by_label;
use cayley_census::groups::{subgroup_lattice, GroupTable};
use cayley_census::Result;

fn show(g: &GroupTable) -> Result<()> {
    let lattice = subgroup_lattice(g)?;
    println!("{} has {} subgroups", g.label(), lattice.len());
    for k in lattice.iter().filter(|k| k.moebius != 0) {
        println!(
            "  order {:>3}  μ = {:>3}  {:?}",
            k.order(),
            k.moebius,
            k.members().iter().collect::<Vec<_>>()
        );
    }
    // Σ_{H ⊇ K} μ(H) is 1 at the whole group and 0 below it
    for k in &lattice {
        let s: i64 = lattice
            .iter()
            .filter(|h| k.members().iter().all(|x| h.contains(x)))
            .map(|h| h.moebius)
            .sum();
        assert_eq!(s, (k.order() == g.order()) as i64);
    }
    Ok(())
}

fn main() -> Result<()> {
    show(&GroupTable::cyclic(12)?)?;
    show(&GroupTable::dihedral(4)?)?;
    for label in ["Q8", "A4", "Z2^3"] {
        show(&by_label(label).expect("fixture"))?;
    }
    let a5 = by_label("A5").expect("fixture");
    let lattice = subgroup_lattice(&a5)?;
    println!("A5: {} subgroups, μ(trivial) = {}", lattice.len(), lattice[0].moebius);
    Ok(())
}
