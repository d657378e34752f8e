use super::{bx, c, divide, one_plus_x, require_odd_prime, x};
use crate::error::{Error, Result};
use crate::groups::{subgroup_lattice, GroupTable};
use crate::numtheory::{divisors, euler_phi, gcd, lcm, moebius_int};
use crate::poly::IntPoly;

/// Equivalence census of an abelian group from its subgroup lattice and
/// involution counts.
pub fn psi_equiv_abelian(group: &GroupTable) -> Result<IntPoly> {
    if !group.is_abelian() {
        return Err(Error::InvalidArgument(format!("{} is not abelian", group.label())));
    }
    let mut total = IntPoly::zero();
    for k in subgroup_lattice(group)? {
        if k.moebius == 0 {
            continue;
        }
        let inv = k.members().iter().filter(|&g| group.is_involution(g)).count() as u64;
        let pairs = (k.order() as u64 - inv - 1) / 2;
        let term = &(&bx(2, pairs) * &bx(1, inv)) - &IntPoly::one();
        total += &term.scale(&c(k.moebius));
    }
    Ok(total)
}

/// `Σ_{d|n} μ(n/d) ((1+x^2)^⌊(d-1)/2⌋ (1+x)^[d even] - 1)`.
pub fn psi_equiv_cyclic(n: u64) -> Result<IntPoly> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "cyclic order must be at least 2, got {n}"
        )));
    }
    let mut total = IntPoly::zero();
    for d in divisors(n)? {
        let mu = moebius_int(n / d)?;
        if mu != 0 {
            let term = &(&bx(2, (d - 1) / 2) * &bx(1, (d % 2 == 0) as u64)) - &IntPoly::one();
            total += &term.scale(&c(mu));
        }
    }
    Ok(total)
}

/// Weak census of `Z_{2^m}`.
pub fn psi_weak_cyclic_2m(m: u32) -> Result<IntPoly> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("exponent must be at least 2, got {m}")));
    }
    if m > 20 {
        return Err(Error::InvalidArgument(format!("exponent {m} is too large")));
    }
    let m = m as u64;
    let mut total = IntPoly::zero();
    for t in 0..=m - 2 {
        let mut term = &(&bx(1 << (t + 1), 1 << (m - t - 2)) - &IntPoly::one()) * &one_plus_x();
        for s in t + 1..=m - 2 {
            term = &term * &bx(2, 1 << (m - s - 2));
        }
        for s in 1..=t {
            term = &term * &bx(1 << (t - s + 1), 1 << (m - t - 2));
        }
        total += &term.scale(&c(euler_phi(1 << t)? as i64));
    }
    divide(total, 1 << (m - 2), "2^m weak formula")
}

/// `Π_{k=1}^{m-1} (1 + x^{N_k/g_k})^{g_k}` with `N_k = φ(p^{m-k})` and
/// `g_k = (d, N_k/2)`, raised to `power`.
fn level_product(p: u64, m: u32, d: u64, power: u64) -> Result<IntPoly> {
    let mut q = IntPoly::one();
    for k in 1..m {
        let nk = euler_phi(p.pow(m - k))?;
        let g = gcd(d, nk / 2);
        q = &q * &bx(nk / g, power * g);
    }
    Ok(q)
}

fn check_prime_power(p: u64, m: u32, op: &str) -> Result<u64> {
    require_odd_prime(p, op)?;
    if m == 0 {
        return Err(Error::InvalidArgument(format!("{op}: exponent must be at least 1")));
    }
    p.checked_pow(m)
        .filter(|&n| n <= 1 << 20)
        .ok_or_else(|| Error::InvalidArgument(format!("{op}: {p}^{m} is too large")))
}

/// Weak census of `Z_{p^m}` for an odd prime `p`.
pub fn psi_weak_cyclic_pm(p: u64, m: u32) -> Result<IntPoly> {
    let n = check_prime_power(p, m, "psi_weak_cyclic_pm")?;
    let big_n = euler_phi(n)?;
    let h = big_n / 2;
    let mut total = IntPoly::zero();
    for d in divisors(h)? {
        let term = &(&bx(big_n / d, d) - &IntPoly::one()) * &level_product(p, m, d, 1)?;
        total += &term.scale(&c(euler_phi(h / d)? as i64));
    }
    divide(total, h, "p^m weak formula")
}

/// Weak census of `Z_{2p^m}` for an odd prime `p`.
pub fn psi_weak_cyclic_2pm(p: u64, m: u32) -> Result<IntPoly> {
    let n = check_prime_power(p, m, "psi_weak_cyclic_2pm")?;
    let big_n = euler_phi(n)?;
    let h = big_n / 2;
    let one = IntPoly::one();
    let mut total = IntPoly::zero();
    for d in divisors(h)? {
        let p0 = bx(big_n / d, d);
        let q = level_product(p, m, d, 1)?;
        let q2 = level_product(p, m, d, 2)?;
        let head = &(&(&(&p0 - &one) * &p0) * &q2) * &one_plus_x();
        let tail = &(&(&p0 - &one) * &(&(&q * &one_plus_x()) - &one)) * &q;
        total += &(&head + &tail).scale(&c(euler_phi(h / d)? as i64));
    }
    divide(total, h, "2p^m weak formula")
}

/// Weak census of `Z_{4p}` for an odd prime `p`.
pub fn psi_weak_cyclic_4p(p: u64) -> Result<IntPoly> {
    require_odd_prime(p, "psi_weak_cyclic_4p")?;
    let h = (p - 1) / 2;
    let pair = &bx(2, 1) * &one_plus_x();
    let mut total = IntPoly::zero();
    for d in divisors(p - 1)? {
        let beta = gcd(d, h);
        let shifted = gcd(h + d, p - 1);
        let a = bx((p - 1) / beta, 2 * beta);
        let outer = &bx((2 * p - 2) / d, d) + &bx((2 * p - 2) / shifted, shifted);
        let mut term = &(&outer * &a) * &pair;
        term -= &(&a * &one_plus_x()).scale(&c(2));
        term -= &pair.scale(&c(2));
        term += &one_plus_x().scale(&c(2));
        total += &term.scale(&c(euler_phi((p - 1) / d)? as i64));
    }
    divide(total, 2 * p - 2, "4p weak formula")
}

/// Orbit length exponent for the action of an automorphism of type
/// `(d_1, ..., d_l)` on the elements of full order in `Z_{p_1 ... p_l}`,
/// modulo inversion.
pub fn alpha_exponent(ds: &[u64], primes: &[u64]) -> Result<u64> {
    if ds.is_empty() || ds.len() != primes.len() {
        return Err(Error::InvalidArgument(
            "alpha_exponent needs one divisor per prime and at least one prime".into(),
        ));
    }
    for (&d, &p) in ds.iter().zip(primes) {
        require_odd_prime(p, "alpha_exponent")?;
        if d == 0 || (p - 1) % d != 0 {
            return Err(Error::InvalidArgument(format!("{d} does not divide {p} - 1")));
        }
    }
    if ds.len() == 1 {
        let (d, p) = (ds[0], primes[0]);
        return Ok((p - 1) / gcd(d, (p - 1) / 2));
    }
    let base = ds.iter().zip(primes).fold(1, |acc, (&d, &p)| lcm(acc, (p - 1) / d));
    let all_divide = ds.iter().zip(primes).all(|(&d, &p)| ((p - 1) / 2) % d == 0);
    let period = primes.iter().fold(1, |acc, &p| lcm(acc, p - 1));
    let common_c = all_divide
        && (0..period).any(|cc| {
            ds.iter()
                .zip(primes)
                .all(|(&d, &p)| (cc * d) % (p - 1) == ((p - 1) / 2))
        });
    Ok(if common_c { base } else { 2 * base })
}

/// Weak census of `Z_p`.
pub fn psi_weak_zp(p: u64) -> Result<IntPoly> {
    require_odd_prime(p, "psi_weak_zp")?;
    let h = (p - 1) / 2;
    let mut total = IntPoly::zero();
    for d in divisors(h)? {
        let term = &bx((p - 1) / d, d) - &IntPoly::one();
        total += &term.scale(&c(euler_phi(h / d)? as i64));
    }
    divide(total, h, "Z_p weak formula")
}

/// Weak census of `Z_{2p}`.
pub fn psi_weak_z2p(p: u64) -> Result<IntPoly> {
    require_odd_prime(p, "psi_weak_z2p")?;
    let h = (p - 1) / 2;
    let mut total = IntPoly::zero();
    for d in divisors(h)? {
        let f = bx((p - 1) / d, d);
        let term = &f * &(&(&f * &one_plus_x()) - &IntPoly::one());
        total += &term.scale(&c(euler_phi(h / d)? as i64));
    }
    Ok(&divide(total, h, "Z_2p weak formula")? - &x())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn abelian_examples() {
        let z9 = GroupTable::cyclic(9).unwrap();
        assert_eq!(psi_equiv_abelian(&z9).unwrap(), p("3x^2+6x^4+4x^6+x^8"));
        let z2 = GroupTable::cyclic(2).unwrap();
        let klein = GroupTable::direct_product(&z2, &z2);
        assert_eq!(psi_equiv_abelian(&klein).unwrap(), p("3x^2+x^3"));
        assert_eq!(psi_equiv_abelian(&z2).unwrap(), p("x"));
        assert!(psi_equiv_abelian(&GroupTable::dihedral(3).unwrap()).is_err());
    }

    #[test]
    fn cyclic_equiv_examples() {
        assert_eq!(psi_equiv_cyclic(4).unwrap(), p("x^2+x^3"));
        // the x^2 coefficient of Z_15 counts the pairs {g, -g} of units: φ(15)/2 = 4
        assert_eq!(
            psi_equiv_cyclic(15).unwrap(),
            p("4x^2+20x^4+35x^6+35x^8+21x^10+7x^12+x^14")
        );
        assert_eq!(psi_equiv_cyclic(2).unwrap(), p("x"));
        assert!(psi_equiv_cyclic(1).is_err());
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(psi_weak_cyclic_2m(2).unwrap(), p("x^2+x^3"));
        assert_eq!(psi_weak_cyclic_2m(3).unwrap(), p("x^2+x^3+2x^4+2x^5+x^6+x^7"));
        assert_eq!(psi_weak_cyclic_pm(3, 2).unwrap(), p("x^2+2x^4+2x^6+x^8"));
        assert_eq!(psi_weak_cyclic_pm(5, 1).unwrap(), p("x^2+x^4"));
        assert_eq!(psi_weak_cyclic_pm(3, 1).unwrap(), p("x^2"));
        assert_eq!(psi_weak_cyclic_2pm(3, 1).unwrap(), p("x^2+2x^3+x^4+x^5"));
        assert!(psi_weak_cyclic_pm(2, 3).is_err());
        assert!(psi_weak_cyclic_2pm(2, 1).is_err());
    }

    #[test]
    fn alpha_exponent_examples() {
        assert_eq!(alpha_exponent(&[2], &[5]).unwrap(), 2);
        assert_eq!(alpha_exponent(&[1, 1], &[3, 5]).unwrap(), 8);
        assert_eq!(alpha_exponent(&[2, 4], &[5, 13]).unwrap(), 12);
        assert!(alpha_exponent(&[3], &[5]).is_err());
    }

    #[test]
    fn prime_examples() {
        assert_eq!(psi_weak_zp(7).unwrap(), p("x^2+x^4+x^6"));
        assert_eq!(psi_weak_zp(3).unwrap(), p("x^2"));
        assert_eq!(
            psi_weak_z2p(7).unwrap(),
            p("x^2+2x^3+4x^4+5x^5+7x^6+8x^7+5x^8+5x^9+2x^10+2x^11+x^12+x^13")
        );
        assert!(psi_weak_zp(2).is_err());
    }
}
