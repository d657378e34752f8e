//! Counting Cayley graphs with the Burnside engine.

use cayley_census::burnside::{count_equiv, count_weak, fix_poly_direct, Engine};
use cayley_census::catalog::groups_up_to_16;
use cayley_census::groups::{automorphisms, GroupTable};
use cayley_census::Result;

fn main() -> Result<()> {
    let g = GroupTable::cyclic(12)?;
    let engine = Engine::new(&g)?;
    println!("Z12 weak:  {}", engine.psi_weak()?);
    println!("Z12 equiv: {}", engine.psi_equiv()?);

    println!("\nfixed sets per automorphism of Z12:");
    let autos = automorphisms(&g)?;
    for f in engine.fix_polys(&autos) {
        let direct = fix_poly_direct(&g, &f.automorphism)?;
        println!(
            "  1 ↦ {:>2}: {}  (direct route agrees: {})",
            f.automorphism.apply(1),
            f.poly,
            direct == f.poly
        );
    }

    println!("\nclass counts for the small groups:");
    for g in groups_up_to_16().iter().filter(|g| g.order() >= 2) {
        println!(
            "  {:<12} weak {:>5}  equiv {:>5}",
            g.label(),
            count_weak(g)?,
            count_equiv(g)?
        );
    }

    // the engine reaches well past the enumeration bound
    let big = GroupTable::cyclic(180)?;
    println!("\nZ180 has {} weak classes", count_weak(&big)?);
    Ok(())
}
