//! Building groups and their automorphisms.

use cayley_census::catalog::groups_up_to_16;
use cayley_census::groups::{automorphisms, generates, inner_automorphisms, ConnectionSet, GroupTable};
use cayley_census::Result;

fn main() -> Result<()> {
    let z12 = GroupTable::cyclic(12)?;
    let d5 = GroupTable::dihedral(5)?;
    let klein = GroupTable::direct_product(&GroupTable::cyclic(2)?, &GroupTable::cyclic(2)?);

    for g in [&z12, &d5, &klein] {
        println!(
            "{:>8}: order {:>2}, |Aut| = {:>3}, |Inn| = {:>2}, abelian {}",
            g.label(),
            g.order(),
            automorphisms(g)?.len(),
            inner_automorphisms(g).len(),
            g.is_abelian()
        );
    }

    // x ↦ 5x on Z12
    let five = &automorphisms(&z12)?[1];
    println!("second automorphism of Z12 maps 1 to {}", five.apply(1));

    let omega = ConnectionSet::from_elements(&z12, [2, 10])?;
    println!("{{2, 10}} generates Z12: {}", generates(&z12, &omega));
    let omega = ConnectionSet::from_elements(&z12, [1, 11])?;
    println!("{{1, 11}} generates Z12: {}", generates(&z12, &omega));

    // a table file round-trips through the plain text format
    let text = d5.to_table_text();
    let back = GroupTable::parse_table_text(&text, "D5 from text")?;
    println!(
        "table text has {} lines; reparsed order {}",
        text.lines().count(),
        back.order()
    );

    println!("\nevery group of order ≤ 16:");
    for g in groups_up_to_16().iter().filter(|g| g.order() > 1) {
        println!(
            "  {:<12} order {:>2}  |Aut| {:>4}",
            g.label(),
            g.order(),
            automorphisms(g)?.len()
        );
    }
    Ok(())
}
