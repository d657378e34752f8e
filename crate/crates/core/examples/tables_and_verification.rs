//! Regenerating the circulant tables and running the verification suites.

use cayley_census::closedform::FormulaVariant;
use cayley_census::report::{compute, reference_table, CensusReport, GroupSpec, Method, Relation};
use cayley_census::verify::{run_suite, Status, Suite};
use cayley_census::Result;

fn main() -> Result<()> {
    for relation in [Relation::Weak, Relation::Equiv] {
        println!("relation {relation}, n ≤ 12:");
        for row in reference_table(relation).iter().filter(|r| r.n <= 12) {
            let spec = GroupSpec::Cyclic(row.n);
            let g = spec.build()?;
            let poly = compute(Some(&spec), &g, relation, Method::Burnside, FormulaVariant::Corrected)?;
            let report = CensusReport::new(&g, relation, Method::Burnside, poly);
            let flag = if report.poly == row.poly {
                ""
            } else {
                "  <- differs from published row"
            };
            println!("  {}{flag}", report.table_text());
        }
    }

    for suite in [Suite::Tables, Suite::Crossmethod, Suite::Closedforms] {
        let report = run_suite(suite, 20)?;
        println!(
            "\n{suite:?}: {} pass, {} discrepancies, {} failures",
            report.count(Status::Pass),
            report.count(Status::Discrepancy),
            report.count(Status::Fail)
        );
        for c in report.checks.iter().filter(|c| c.status != Status::Pass) {
            println!("  {c}");
        }
    }
    Ok(())
}
