//! Group specifications, method dispatch and report rendering shared by the
//! command-line front end and the verification suites.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::burnside::Engine;
use crate::closedform::{
    psi_equiv_abelian, psi_equiv_cyclic, psi_equiv_dihedral, psi_weak_cyclic_2m, psi_weak_cyclic_2pm,
    psi_weak_cyclic_4p, psi_weak_cyclic_pm, psi_weak_cyclic_squarefree, psi_weak_dihedral_p, FormulaVariant,
    SquareFreeSpec,
};
use crate::error::{Error, Result};
use crate::groups::{automorphisms, inner_automorphisms, GroupTable};
use crate::numtheory::{is_prime, Factorization};
use crate::oracle::{orbit_census, psi_from_census};
use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Relation {
    Weak,
    Equiv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Method {
    Burnside,
    Closed,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Weak => "weak",
            Relation::Equiv => "equiv",
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Burnside => "burnside",
            Method::Closed => "closed",
            Method::Oracle => "oracle",
        })
    }
}

/// A textual group description: `zn:12`, `dn:5`, `product:zn:4,zn:5` or
/// `table-file:PATH`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Product(Vec<GroupSpec>),
    TableFile(PathBuf),
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("group spec `{s}` lacks a family prefix")))?;
        let index = |what: &str| -> Result<usize> {
            rest.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{what} needs a nonnegative integer, got `{rest}`")))
        };
        match family {
            "zn" => Ok(GroupSpec::Cyclic(index("zn")?)),
            "dn" => Ok(GroupSpec::Dihedral(index("dn")?)),
            "product" => {
                let factors = rest
                    .split(',')
                    .map(|f| match f.parse()? {
                        GroupSpec::Product(_) => Err(Error::Parse("nested products are not supported".into())),
                        spec => Ok(spec),
                    })
                    .collect::<Result<Vec<_>>>()?;
                if factors.len() < 2 {
                    return Err(Error::Parse("a product needs at least two factors".into()));
                }
                Ok(GroupSpec::Product(factors))
            }
            "table-file" if !rest.is_empty() => Ok(GroupSpec::TableFile(PathBuf::from(rest))),
            _ => Err(Error::Parse(format!("unknown group family in `{s}`"))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "zn:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dn:{n}"),
            GroupSpec::Product(parts) => {
                let inner: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "product:{}", inner.join(","))
            }
            GroupSpec::TableFile(p) => write!(f, "table-file:{}", p.display()),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<GroupTable> {
        match self {
            GroupSpec::Cyclic(n) => GroupTable::cyclic(*n),
            GroupSpec::Dihedral(n) => GroupTable::dihedral(*n),
            GroupSpec::Product(parts) => {
                let tables = parts.iter().map(GroupSpec::build).collect::<Result<Vec<_>>>()?;
                let label = tables
                    .iter()
                    .map(|t| t.label().to_string())
                    .collect::<Vec<_>>()
                    .join("x");
                let mut it = tables.into_iter();
                let first = it.next().expect("at least two factors");
                Ok(it
                    .fold(first, |acc, t| GroupTable::direct_product(&acc, &t))
                    .with_label(label))
            }
            GroupSpec::TableFile(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let label = path
                    .file_stem()
                    .map_or("table".into(), |s| s.to_string_lossy().into_owned());
                GroupTable::parse_table_text(&text, label)
            }
        }
    }
}

/// Computes the census polynomial of `group` with the chosen method.
/// `spec` is consulted only to pick a closed form.
pub fn compute(
    spec: Option<&GroupSpec>,
    group: &GroupTable,
    relation: Relation,
    method: Method,
    variant: FormulaVariant,
) -> Result<IntPoly> {
    match method {
        Method::Burnside => {
            let engine = Engine::new(group)?;
            match relation {
                Relation::Weak => engine.psi_weak(),
                Relation::Equiv => engine.psi_equiv(),
            }
        }
        Method::Oracle => {
            let autos = match relation {
                Relation::Weak => automorphisms(group)?,
                Relation::Equiv => inner_automorphisms(group),
            };
            Ok(psi_from_census(&orbit_census(group, &autos)?))
        }
        Method::Closed => closed_form(spec, group, relation, variant),
    }
}

fn closed_form(
    spec: Option<&GroupSpec>,
    group: &GroupTable,
    relation: Relation,
    variant: FormulaVariant,
) -> Result<IntPoly> {
    let unsupported = || {
        Error::Unsupported(format!(
            "no closed form for {} under {relation} equivalence",
            spec.map_or_else(|| group.label().to_string(), ToString::to_string)
        ))
    };
    match (relation, spec) {
        (Relation::Equiv, Some(GroupSpec::Cyclic(n))) => psi_equiv_cyclic(*n as u64),
        (Relation::Equiv, Some(GroupSpec::Dihedral(n))) if *n >= 3 => psi_equiv_dihedral(*n as u64, variant),
        (Relation::Equiv, _) if group.is_abelian() => psi_equiv_abelian(group),
        (Relation::Weak, Some(GroupSpec::Cyclic(n))) => weak_cyclic(*n as u64, variant).ok_or_else(unsupported)?,
        (Relation::Weak, Some(GroupSpec::Dihedral(p))) if *p > 2 && is_prime(*p as u64) => {
            psi_weak_dihedral_p(*p as u64, variant)
        }
        _ => Err(unsupported()),
    }
}

/// The closed form covering `Z_n`, if any.
fn weak_cyclic(n: u64, variant: FormulaVariant) -> Option<Result<IntPoly>> {
    if n == 2 {
        // Aut(Z_2) is trivial
        return Some(psi_equiv_cyclic(2));
    }
    let f = Factorization::of(n).ok()?;
    let factors = f.factors();
    let odd: Vec<(u64, u32)> = factors.iter().copied().filter(|&(p, _)| p != 2).collect();
    let two = factors.iter().find(|&&(p, _)| p == 2).map_or(0, |&(_, e)| e);
    match (two, odd.as_slice()) {
        (e, []) if e >= 2 => Some(psi_weak_cyclic_2m(e)),
        (0, [(p, m)]) => Some(psi_weak_cyclic_pm(*p, *m)),
        (1, [(p, m)]) => Some(psi_weak_cyclic_2pm(*p, *m)),
        (2, [(p, 1)]) => Some(psi_weak_cyclic_4p(*p)),
        (0 | 1, primes) if primes.iter().all(|&(_, e)| e == 1) => {
            let spec = SquareFreeSpec::new(primes.iter().map(|&(p, _)| p).collect(), two == 1);
            Some(spec.and_then(|s| psi_weak_cyclic_squarefree(&s, variant)))
        }
        _ => None,
    }
}

/// One computed census, ready for rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub group: String,
    #[serde(skip)]
    pub order: usize,
    pub relation: String,
    pub method: String,
    pub poly: IntPoly,
    #[serde(serialize_with = "as_decimal")]
    pub count: BigInt,
    pub verdict: Option<String>,
}

fn as_decimal<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub const CSV_HEADER: &str = "n,label,relation,method,polynomial,count,verdict";

impl CensusReport {
    pub fn new(group: &GroupTable, relation: Relation, method: Method, poly: IntPoly) -> Self {
        CensusReport {
            group: group.label().to_string(),
            order: group.order(),
            relation: relation.to_string(),
            method: method.to_string(),
            count: poly.eval_at_one(),
            poly,
            verdict: None,
        }
    }

    pub fn with_verdict(mut self, verdict: impl Into<String>) -> Self {
        self.verdict = Some(verdict.into());
        self
    }

    /// `<poly> (N classes)`.
    pub fn text(&self) -> String {
        format!("{} ({} classes)", self.poly, self.count)
    }

    /// `n, poly, count`, the layout of the published tables.
    pub fn table_text(&self) -> String {
        format!("{}, {}, {}", self.order, self.poly, self.count)
    }

    pub fn csv_row(&self) -> String {
        let verdict = self.verdict.as_deref().unwrap_or("");
        format!(
            "{},{},{},{},{},{},{}",
            self.order,
            csv_field(&self.group),
            self.relation,
            self.method,
            self.poly,
            self.count,
            csv_field(verdict)
        )
    }

    pub fn json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A row of the published census tables for cyclic groups of order 2 to 20.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceRow {
    pub n: usize,
    pub printed: String,
    pub poly: IntPoly,
    pub count: BigInt,
    pub notes: String,
}

const EQUIV_TABLE: &str = include_str!("../fixtures/circulant_equiv.csv");
const WEAK_TABLE: &str = include_str!("../fixtures/circulant_weak.csv");

pub fn reference_table(relation: Relation) -> Vec<ReferenceRow> {
    let text = match relation {
        Relation::Equiv => EQUIV_TABLE,
        Relation::Weak => WEAK_TABLE,
    };
    parse_reference(text).expect("shipped fixture parses")
}

pub fn parse_reference(text: &str) -> Result<Vec<ReferenceRow>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.splitn(4, ',').collect();
        if fields.len() < 3 {
            return Err(Error::Parse(format!(
                "fixture line {}: expected n,polynomial,count,notes",
                i + 1
            )));
        }
        let n = fields[0]
            .parse()
            .map_err(|_| Error::Parse(format!("fixture line {}: bad n", i + 1)))?;
        let count = fields[2]
            .parse()
            .map_err(|_| Error::Parse(format!("fixture line {}: bad count", i + 1)))?;
        rows.push(ReferenceRow {
            n,
            printed: fields[1].to_string(),
            poly: fields[1].parse()?,
            count,
            notes: fields.get(3).unwrap_or(&"").to_string(),
        });
    }
    Ok(rows)
}
