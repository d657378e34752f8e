//! Listing every orbit of connection sets by brute force.

use cayley_census::groups::{automorphisms, inner_automorphisms, GroupTable};
use cayley_census::oracle::{count_generating_by_filtration, orbit_census, psi_from_census};
use cayley_census::Result;

fn main() -> Result<()> {
    let g = GroupTable::dihedral(3)?;
    let census = orbit_census(&g, &automorphisms(&g)?)?;
    println!(
        "D3 under Aut: {} orbits of {} sets",
        census.orbits.len(),
        census.total_sets
    );
    for o in &census.orbits {
        println!(
            "  degree {}  size {}  rep {:?}",
            o.degree,
            o.orbit_size,
            o.canonical_rep.elements()
        );
    }
    println!("Ψ = {}", psi_from_census(&census));

    let z10 = GroupTable::cyclic(10)?;
    for (name, autos) in [("Aut", automorphisms(&z10)?), ("Inn", inner_automorphisms(&z10))] {
        let c = orbit_census(&z10, &autos)?;
        println!("Z10 under {name}: {}", psi_from_census(&c));
    }
    println!(
        "Z10 generating sets by filtration: {}",
        count_generating_by_filtration(&z10)?
    );

    match orbit_census(&GroupTable::cyclic(60)?, &automorphisms(&GroupTable::cyclic(60)?)?) {
        Ok(_) => println!("Z60 enumerated"),
        Err(e) => println!("Z60: {e}"),
    }
    Ok(())
}
