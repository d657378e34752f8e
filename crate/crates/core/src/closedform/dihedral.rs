use num_bigint::BigInt;

use super::{bx, c, divide, one_plus_x, require_odd_prime, x, FormulaVariant};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, euler_phi, gcd, moebius_int};
use crate::poly::IntPoly;

/// Fixed symmetric subsets of the rotation subgroup `Z_m`, minus the empty
/// set: `(1+x^2)^γ (1+x)^[m even] - 1`.
fn rotation_part(m: u64) -> IntPoly {
    &bx(2, (m - 1) / 2) * &bx(1, m.is_multiple_of(2) as u64)
}

/// `F_α` for the inner automorphism `α_k: a ↦ a, b ↦ b a^{2k}` on `D_m(ℓ)`.
fn f_alpha(n: u64, m: u64, k: u64) -> IntPoly {
    let r = rotation_part(m);
    let fixed = if (2 * k).is_multiple_of(n / m) {
        let g = gcd(2 * k * m / n, m);
        &r * &bx(m / g, g)
    } else {
        r
    };
    &fixed - &IntPoly::one()
}

/// `F_β` for `β_k: a ↦ a^{-1}, b ↦ b a^{2k}` on `D_m(ℓ)`.
fn f_beta(n: u64, m: u64, k: u64, l: u64, variant: FormulaVariant) -> IntPoly {
    let r = rotation_part(m);
    let q = n / m;
    let diff = 2 * k as i64 - 2 * l as i64;
    if diff.rem_euclid(q as i64) != 0 {
        return &r - &IntPoly::one();
    }
    let fixed = match variant {
        FormulaVariant::Literal => {
            let gamma = (m - 1) / 2;
            let even = m.is_multiple_of(2) as u64;
            &(&r * &bx(2, gamma)) * &bx(1, 1 + even)
        }
        FormulaVariant::Corrected => {
            // β_k moves the reflection b a^{ℓ + s q} to b a^{2k - ℓ - s q};
            // s is fixed iff 2s ≡ t (mod m)
            let t = (diff / q as i64).rem_euclid(m as i64) as u64;
            let f = (0..m).filter(|s| (2 * s) % m == t).count() as u64;
            &(&r * &bx(1, f)) * &bx(2, (m - f) / 2)
        }
    };
    &fixed - &IntPoly::one()
}

/// Equivalence census of the dihedral group of order `2n`.
pub fn psi_equiv_dihedral(n: u64, variant: FormulaVariant) -> Result<IntPoly> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "dihedral index must be at least 3, got {n}"
        )));
    }
    let mut total = IntPoly::zero();
    for m in divisors(n)? {
        let q = n / m;
        let mu = moebius_int(q)?;
        if mu == 0 {
            continue;
        }
        let mut inner = (&rotation_part(m) - &IntPoly::one()).scale(&c(-2 * q as i64 * mu * n as i64));
        for k in 1..=n {
            for l in 1..=q {
                let term = &f_alpha(n, m, k) + &f_beta(n, m, k, l, variant);
                inner += &term.scale(&c(mu));
            }
        }
        total += &inner;
    }
    divide(total, 2 * n, "dihedral equivalence formula")
}

/// Number of equivalence classes for the dihedral group of order `2n`,
/// by evaluating [`psi_equiv_dihedral`] at 1.
pub fn count_equiv_dihedral(n: u64, variant: FormulaVariant) -> Result<BigInt> {
    Ok(psi_equiv_dihedral(n, variant)?.eval_at_one())
}

/// Weak census of the dihedral group of order `2p` for an odd prime `p`.
pub fn psi_weak_dihedral_p(p: u64, variant: FormulaVariant) -> Result<IntPoly> {
    require_odd_prime(p, "psi_weak_dihedral_p")?;
    let h = (p - 1) / 2;
    let one = IntPoly::one();
    let mut total =
        &(&bx(2, h) * &(&(&bx(1, p) + &IntPoly::monomial(p - 1, p as usize)) - &one)) - &x().scale(&c(p as i64));
    let bracket = |d: u64| -> IntPoly {
        let g = gcd(d, h);
        let inner = &(&bx((p - 1) / d, d) * &one_plus_x()) - &one;
        &(&bx((p - 1) / g, g) * &inner) - &x()
    };
    match variant {
        FormulaVariant::Literal => {
            let w = euler_phi(h)? as i64;
            for d in divisors(h)? {
                total += &bracket(d).scale(&c(w));
            }
        }
        FormulaVariant::Corrected => {
            for d in divisors(p - 1)?.into_iter().filter(|&d| d < p - 1) {
                let w = p as i64 * euler_phi((p - 1) / d)? as i64;
                total += &bracket(d).scale(&c(w));
            }
        }
    }
    divide(total, p * (p - 1), "dihedral D_p weak formula")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::{psi_equiv, psi_weak};
    use crate::groups::GroupTable;

    #[test]
    fn corrected_dihedral_matches_engine() {
        for n in 3..=10u64 {
            let engine = psi_equiv(&GroupTable::dihedral(n as usize).unwrap()).unwrap();
            assert_eq!(
                psi_equiv_dihedral(n, FormulaVariant::Corrected).unwrap(),
                engine,
                "n = {n}"
            );
            assert_eq!(
                count_equiv_dihedral(n, FormulaVariant::Corrected).unwrap(),
                engine.eval_at_one()
            );
        }
    }

    #[test]
    fn corrected_dp_matches_engine() {
        for p in [3u64, 5, 7] {
            let engine = psi_weak(&GroupTable::dihedral(p as usize).unwrap()).unwrap();
            assert_eq!(
                psi_weak_dihedral_p(p, FormulaVariant::Corrected).unwrap(),
                engine,
                "p = {p}"
            );
        }
        assert_eq!(
            psi_weak_dihedral_p(3, FormulaVariant::Corrected).unwrap(),
            "x^2+2x^3+x^4+x^5".parse().unwrap()
        );
    }

    #[test]
    fn literal_dp_is_not_integral_at_three() {
        let err = psi_weak_dihedral_p(3, FormulaVariant::Literal).unwrap_err();
        assert!(err.is_internal(), "{err}");
    }
}
