//! Closed-form census polynomials for cyclic, dihedral and square-free
//! families.
//!
//! Each formula is a weighted sum of products of `(1 + x^k)^e` followed by
//! an exact division. Where a printed formula disagrees with the engine, the
//! [`FormulaVariant::Literal`] form reproduces it as printed and
//! [`FormulaVariant::Corrected`] gives the true counts.

mod cyclic;
mod dihedral;
mod squarefree;

pub use cyclic::{
    alpha_exponent, psi_equiv_abelian, psi_equiv_cyclic, psi_weak_cyclic_2m, psi_weak_cyclic_2pm, psi_weak_cyclic_4p,
    psi_weak_cyclic_pm, psi_weak_z2p, psi_weak_zp,
};
pub use dihedral::{count_equiv_dihedral, psi_equiv_dihedral, psi_weak_dihedral_p};
pub use squarefree::{psi_weak_cyclic_squarefree, SquareFreeSpec};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::numtheory::is_prime;
use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FormulaVariant {
    #[default]
    Corrected,
    Literal,
}

/// `(1 + x^k)^e`.
pub(crate) fn bx(k: u64, e: u64) -> IntPoly {
    let mut p = IntPoly::one();
    for _ in 0..e {
        p.mul_one_plus_x_pow(k as usize);
    }
    p
}

pub(crate) fn c(v: i64) -> BigInt {
    BigInt::from(v)
}

pub(crate) fn x() -> IntPoly {
    IntPoly::x_pow(1)
}

pub(crate) fn one_plus_x() -> IntPoly {
    IntPoly::one_plus_x_pow(1)
}

pub(crate) fn divide(total: IntPoly, by: u64, formula: &str) -> Result<IntPoly> {
    total
        .divide_exact_by_int(&BigInt::from(by))
        .map_err(|e| Error::NonIntegral {
            context: formula.to_string(),
            detail: e.to_string(),
        })
}

pub(crate) fn require_odd_prime(p: u64, op: &str) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{op}: {p} is not an odd prime")));
    }
    Ok(())
}
