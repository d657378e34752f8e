//! Verification suites: reproduce the published tables, cross-check the
//! engine against the oracle, and check every closed form against the
//! engine.

use std::fmt;

use rayon::prelude::*;

use crate::burnside::Engine;
use crate::catalog::groups_up_to_16;
use crate::closedform::{
    count_equiv_dihedral, psi_equiv_abelian, psi_equiv_cyclic, psi_equiv_dihedral, psi_weak_cyclic_2m,
    psi_weak_cyclic_2pm, psi_weak_cyclic_4p, psi_weak_cyclic_pm, psi_weak_cyclic_squarefree, psi_weak_dihedral_p,
    psi_weak_z2p, psi_weak_zp, FormulaVariant, SquareFreeSpec,
};
use crate::error::{Error, Result};
use crate::groups::{automorphisms, inner_automorphisms, Family, GroupTable};
use crate::oracle::{orbit_census, psi_from_census};
use crate::poly::IntPoly;
use crate::report::{reference_table, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Tables,
    Crossmethod,
    Closedforms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// The published value disagrees while independent methods agree.
    Discrepancy,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Discrepancy => "DISCREPANCY(paper)",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub item: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.item)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn find(&self, item: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.item == item)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(
            f,
            "{} passed, {} discrepancies, {} failed, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Discrepancy),
            self.count(Status::Fail),
            self.count(Status::Skip)
        )
    }
}

fn check(item: impl Into<String>, status: Status, detail: impl Into<String>) -> Check {
    Check {
        item: item.into(),
        status,
        detail: detail.into(),
    }
}

fn mismatch(left_name: &str, left: &IntPoly, right_name: &str, right: &IntPoly) -> String {
    format!(
        "{left_name} {left} vs {right_name} {right}, difference {}",
        left - right
    )
}

pub fn run_suite(suite: Suite, max_n: usize) -> Result<VerifyReport> {
    match suite {
        Suite::Tables => tables(max_n),
        Suite::Crossmethod => crossmethod(max_n),
        Suite::Closedforms => closedforms(max_n),
    }
}

fn engine_psi(group: &GroupTable, relation: Relation) -> Result<IntPoly> {
    let engine = Engine::new(group)?;
    match relation {
        Relation::Weak => engine.psi_weak(),
        Relation::Equiv => engine.psi_equiv(),
    }
}

fn oracle_psi(group: &GroupTable, relation: Relation) -> Result<IntPoly> {
    let autos = match relation {
        Relation::Weak => automorphisms(group)?,
        Relation::Equiv => inner_automorphisms(group),
    };
    Ok(psi_from_census(&orbit_census(group, &autos)?))
}

/// Compares the engine on `Z_n` with the published rows for `n ≤ max_n`.
/// A published row that disagrees is a discrepancy when the oracle sides
/// with the engine and a failure otherwise.
pub fn tables(max_n: usize) -> Result<VerifyReport> {
    let mut jobs = Vec::new();
    for relation in [Relation::Equiv, Relation::Weak] {
        for row in reference_table(relation).into_iter().filter(|r| r.n <= max_n) {
            jobs.push((relation, row));
        }
    }
    let checks = jobs
        .into_par_iter()
        .map(|(relation, row)| -> Result<Check> {
            let g = GroupTable::cyclic(row.n)?;
            let item = format!("tables {relation} n={}", row.n);
            let engine = engine_psi(&g, relation)?;
            if engine == row.poly && engine.eval_at_one() == row.count {
                return Ok(check(item, Status::Pass, ""));
            }
            let oracle = oracle_psi(&g, relation)?;
            if oracle != engine {
                return Ok(check(
                    item,
                    Status::Fail,
                    mismatch("engine", &engine, "oracle", &oracle),
                ));
            }
            let mut detail = format!(
                "published {} (count {}) vs computed {} (count {}), difference {}",
                row.printed,
                row.count,
                engine,
                engine.eval_at_one(),
                &engine - &row.poly
            );
            if !row.notes.is_empty() {
                detail.push_str(&format!("; note: {}", row.notes));
            }
            Ok(check(item, Status::Discrepancy, detail))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport { checks })
}

/// Engine against oracle for both relations on every cyclic and dihedral
/// group of order at most `max_n` and every catalog group of order at most
/// `min(max_n, 16)`.
pub fn crossmethod(max_n: usize) -> Result<VerifyReport> {
    let mut groups: Vec<GroupTable> = Vec::new();
    for n in 2..=max_n {
        groups.push(GroupTable::cyclic(n)?);
    }
    for n in 2..=max_n / 2 {
        groups.push(GroupTable::dihedral(n)?);
    }
    groups.extend(
        groups_up_to_16()
            .into_iter()
            .filter(|g| g.order() >= 2 && g.order() <= max_n && g.family() == Family::Other),
    );
    let jobs: Vec<(GroupTable, Relation)> = groups
        .into_iter()
        .flat_map(|g| [(g.clone(), Relation::Weak), (g, Relation::Equiv)])
        .collect();
    let checks = jobs
        .into_par_iter()
        .map(|(g, relation)| -> Result<Check> {
            let item = format!("crossmethod {} {relation}", g.label());
            let engine = engine_psi(&g, relation)?;
            match oracle_psi(&g, relation) {
                Ok(oracle) if oracle == engine => Ok(check(item, Status::Pass, engine.to_string())),
                Ok(oracle) => Ok(check(
                    item,
                    Status::Fail,
                    mismatch("engine", &engine, "oracle", &oracle),
                )),
                Err(e) if e.is_resource() => Ok(check(item, Status::Skip, e.to_string())),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport { checks })
}

type Formula = Box<dyn Fn(FormulaVariant) -> Result<IntPoly> + Send + Sync>;

struct ClosedCase {
    name: String,
    group: GroupTable,
    relation: Relation,
    formula: Formula,
}

fn case(
    name: impl Into<String>,
    group: GroupTable,
    relation: Relation,
    formula: impl Fn(FormulaVariant) -> Result<IntPoly> + Send + Sync + 'static,
) -> ClosedCase {
    ClosedCase {
        name: name.into(),
        group,
        relation,
        formula: Box::new(formula),
    }
}

/// The closed-form cases on their tested domains, restricted to group
/// order at most `max_n`.
fn closed_cases(max_n: usize) -> Result<Vec<ClosedCase>> {
    let z = |n: u64| GroupTable::cyclic(n as usize);
    let mut cases = Vec::new();
    for n in 2..=max_n.min(64) as u64 {
        cases.push(case(format!("equiv_cyclic({n})"), z(n)?, Relation::Equiv, move |_| {
            psi_equiv_cyclic(n)
        }));
    }
    for g in groups_up_to_16()
        .into_iter()
        .filter(|g| g.is_abelian() && g.order() >= 2)
    {
        let g2 = g.clone();
        cases.push(case(
            format!("equiv_abelian({})", g.label()),
            g,
            Relation::Equiv,
            move |_| psi_equiv_abelian(&g2),
        ));
    }
    for n in 3..=10u64 {
        cases.push(case(
            format!("equiv_dihedral({n})"),
            GroupTable::dihedral(n as usize)?,
            Relation::Equiv,
            move |v| psi_equiv_dihedral(n, v),
        ));
    }
    for m in 2..=5u32 {
        cases.push(case(
            format!("weak_cyclic_2m({m})"),
            z(1 << m)?,
            Relation::Weak,
            move |_| psi_weak_cyclic_2m(m),
        ));
    }
    for (p, m) in [(3u64, 1u32), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2)] {
        cases.push(case(
            format!("weak_cyclic_pm({p},{m})"),
            z(p.pow(m))?,
            Relation::Weak,
            move |_| psi_weak_cyclic_pm(p, m),
        ));
    }
    for (p, m) in [
        (3u64, 1u32),
        (3, 2),
        (3, 3),
        (5, 1),
        (5, 2),
        (7, 1),
        (11, 1),
        (13, 1),
        (17, 1),
        (19, 1),
        (23, 1),
        (29, 1),
    ] {
        cases.push(case(
            format!("weak_cyclic_2pm({p},{m})"),
            z(2 * p.pow(m))?,
            Relation::Weak,
            move |_| psi_weak_cyclic_2pm(p, m),
        ));
    }
    for p in [3u64, 5, 7] {
        cases.push(case(
            format!("weak_cyclic_4p({p})"),
            z(4 * p)?,
            Relation::Weak,
            move |_| psi_weak_cyclic_4p(p),
        ));
    }
    let squarefree: [(&[u64], bool); 10] = [
        (&[3, 5], false),
        (&[3, 7], false),
        (&[3, 11], false),
        (&[5, 7], false),
        (&[3, 5, 7], false),
        (&[3], true),
        (&[5], true),
        (&[7], true),
        (&[3, 5], true),
        (&[3, 7], true),
    ];
    for (primes, two) in squarefree {
        let spec = SquareFreeSpec::new(primes.to_vec(), two)?;
        let n = spec.order();
        cases.push(case(
            format!("weak_cyclic_squarefree({n})"),
            z(n)?,
            Relation::Weak,
            move |v| psi_weak_cyclic_squarefree(&spec, v),
        ));
    }
    for p in [3u64, 5, 7, 11, 13] {
        cases.push(case(format!("weak_zp({p})"), z(p)?, Relation::Weak, move |_| {
            psi_weak_zp(p)
        }));
        cases.push(case(format!("weak_z2p({p})"), z(2 * p)?, Relation::Weak, move |_| {
            psi_weak_z2p(p)
        }));
    }
    for p in [3u64, 5, 7] {
        cases.push(case(
            format!("weak_dihedral_p({p})"),
            GroupTable::dihedral(p as usize)?,
            Relation::Weak,
            move |v| psi_weak_dihedral_p(p, v),
        ));
    }
    cases.retain(|c| c.group.order() <= max_n);
    Ok(cases)
}

/// Corrected forms must equal the engine; literal forms that differ are
/// listed as discrepancies.
pub fn closedforms(max_n: usize) -> Result<VerifyReport> {
    let cases = closed_cases(max_n)?;
    let mut checks: Vec<Check> = cases
        .par_iter()
        .map(|c| -> Result<Vec<Check>> {
            let engine = engine_psi(&c.group, c.relation)?;
            let mut out = Vec::new();
            let item = format!("closedforms {}", c.name);
            match (c.formula)(FormulaVariant::Corrected) {
                Ok(p) if p == engine => out.push(check(item.clone(), Status::Pass, "")),
                Ok(p) => out.push(check(
                    item.clone(),
                    Status::Fail,
                    mismatch("formula", &p, "engine", &engine),
                )),
                Err(e) => out.push(check(item.clone(), Status::Fail, e.to_string())),
            }
            let literal = (c.formula)(FormulaVariant::Literal);
            let corrected = (c.formula)(FormulaVariant::Corrected).ok();
            match literal {
                Ok(p) if p == engine => {}
                Ok(p) if Some(&p) == corrected.as_ref() => {}
                Ok(p) => out.push(check(
                    format!("{item} literal"),
                    Status::Discrepancy,
                    mismatch("as printed", &p, "engine", &engine),
                )),
                Err(e @ Error::NonIntegral { .. }) => out.push(check(
                    format!("{item} literal"),
                    Status::Discrepancy,
                    format!("as printed the average is not integral ({e})"),
                )),
                Err(e) => return Err(e),
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    for n in (3..=10u64).filter(|&n| 2 * n as usize <= max_n) {
        let engine = engine_psi(&GroupTable::dihedral(n as usize)?, Relation::Equiv)?.eval_at_one();
        let value = count_equiv_dihedral(n, FormulaVariant::Corrected)?;
        let item = format!("closedforms count_equiv_dihedral({n})");
        if value == engine {
            checks.push(check(item, Status::Pass, format!("{value}")));
        } else {
            checks.push(check(item, Status::Fail, format!("formula {value} vs engine {engine}")));
        }
    }
    if max_n >= 6 {
        checks.push(check(
            "closedforms count_equiv_dihedral printed corollary",
            Status::Discrepancy,
            "the printed final count uses gcd(2km/n, m) with k unbound; counts are taken as the dihedral polynomial evaluated at 1",
        ));
    }
    Ok(VerifyReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables_pass() {
        let r = tables(13).unwrap();
        assert_eq!(r.count(Status::Pass), 24);
        assert!(!r.failed());
    }

    #[test]
    fn crossmethod_small() {
        let r = crossmethod(12).unwrap();
        assert!(!r.failed(), "{r}");
        assert_eq!(r.count(Status::Skip), 0);
    }

    #[test]
    fn closedforms_small() {
        let r = closedforms(12).unwrap();
        assert!(!r.failed(), "{r}");
        let d4 = r.find("closedforms equiv_dihedral(4) literal").unwrap();
        assert_eq!(d4.status, Status::Discrepancy);
        let d3 = r.find("closedforms weak_dihedral_p(3) literal").unwrap();
        assert_eq!(d3.status, Status::Discrepancy);
    }
}
