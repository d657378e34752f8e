//! Closed-form census polynomials checked against the engine.

use cayley_census::burnside::{psi_equiv, psi_weak};
use cayley_census::closedform::{
    count_equiv_dihedral, psi_equiv_cyclic, psi_equiv_dihedral, psi_weak_cyclic_2m, psi_weak_cyclic_2pm,
    psi_weak_cyclic_4p, psi_weak_cyclic_pm, psi_weak_cyclic_squarefree, psi_weak_dihedral_p, FormulaVariant,
    SquareFreeSpec,
};
use cayley_census::groups::GroupTable;
use cayley_census::{IntPoly, Result};

fn compare(name: &str, formula: IntPoly, engine: IntPoly) {
    let mark = if formula == engine { "ok" } else { "DIFFERS" };
    println!("{name:<24} {mark:<8} {formula}");
}

fn main() -> Result<()> {
    let z = |n| GroupTable::cyclic(n);
    let v = FormulaVariant::Corrected;

    compare("equiv Z18", psi_equiv_cyclic(18)?, psi_equiv(&z(18)?)?);
    compare("weak Z16", psi_weak_cyclic_2m(4)?, psi_weak(&z(16)?)?);
    compare("weak Z27", psi_weak_cyclic_pm(3, 3)?, psi_weak(&z(27)?)?);
    compare("weak Z50", psi_weak_cyclic_2pm(5, 2)?, psi_weak(&z(50)?)?);
    compare("weak Z28", psi_weak_cyclic_4p(7)?, psi_weak(&z(28)?)?);
    let spec = SquareFreeSpec::new(vec![3, 5, 7], false)?;
    compare("weak Z105", psi_weak_cyclic_squarefree(&spec, v)?, psi_weak(&z(105)?)?);

    for n in 3..=6 {
        let d = GroupTable::dihedral(n)?;
        compare(&format!("equiv D{n}"), psi_equiv_dihedral(n as u64, v)?, psi_equiv(&d)?);
        println!(
            "{:<24} {}",
            format!("  classes of D{n}"),
            count_equiv_dihedral(n as u64, v)?
        );
    }
    compare(
        "weak D7",
        psi_weak_dihedral_p(7, v)?,
        psi_weak(&GroupTable::dihedral(7)?)?,
    );

    println!("\nformulas exactly as printed:");
    let d4 = GroupTable::dihedral(4)?;
    compare(
        "equiv D4 literal",
        psi_equiv_dihedral(4, FormulaVariant::Literal)?,
        psi_equiv(&d4)?,
    );
    let six = SquareFreeSpec::new(vec![3], true)?;
    compare(
        "weak Z6 literal",
        psi_weak_cyclic_squarefree(&six, FormulaVariant::Literal)?,
        psi_weak(&z(6)?)?,
    );
    match psi_weak_dihedral_p(3, FormulaVariant::Literal) {
        Ok(p) => println!("weak D3 literal          {p}"),
        Err(e) => println!("weak D3 literal          {e}"),
    }
    Ok(())
}
