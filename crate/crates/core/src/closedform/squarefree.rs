use super::{alpha_exponent, bx, c, divide, one_plus_x, require_odd_prime, x, FormulaVariant};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, euler_phi};
use crate::poly::IntPoly;

/// `n = p_1 ... p_l` or `n = 2 p_1 ... p_l` with distinct odd primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreeSpec {
    odd_primes: Vec<u64>,
    include_factor_two: bool,
}

impl SquareFreeSpec {
    pub fn new(odd_primes: Vec<u64>, include_factor_two: bool) -> Result<Self> {
        if odd_primes.is_empty() {
            return Err(Error::InvalidArgument("at least one odd prime is required".into()));
        }
        if odd_primes.len() > 6 {
            return Err(Error::InvalidArgument("at most six odd primes are supported".into()));
        }
        for &p in &odd_primes {
            require_odd_prime(p, "SquareFreeSpec")?;
        }
        if odd_primes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("odd primes must be strictly increasing".into()));
        }
        Ok(SquareFreeSpec {
            odd_primes,
            include_factor_two,
        })
    }

    pub fn odd_primes(&self) -> &[u64] {
        &self.odd_primes
    }

    pub fn include_factor_two(&self) -> bool {
        self.include_factor_two
    }

    pub fn order(&self) -> u64 {
        let odd: u64 = self.odd_primes.iter().product();
        if self.include_factor_two {
            2 * odd
        } else {
            odd
        }
    }
}

/// `f(d_T) = (1 + x^α)^{Π_{i∈T}(p_i - 1)/α}` for the indices in `subset`.
fn f_term(ds: &[u64], primes: &[u64], subset: u32) -> Result<IntPoly> {
    let idx: Vec<usize> = (0..primes.len()).filter(|i| subset >> i & 1 == 1).collect();
    let sub_ds: Vec<u64> = idx.iter().map(|&i| ds[i]).collect();
    let sub_ps: Vec<u64> = idx.iter().map(|&i| primes[i]).collect();
    let a = alpha_exponent(&sub_ds, &sub_ps)?;
    let size: u64 = sub_ps.iter().map(|p| p - 1).product();
    Ok(bx(a, size / a))
}

/// `F` over the primes left in `remaining`: the product of `f` over every
/// nonempty subset of `remaining`. Empty `remaining` gives 1.
fn big_f(ds: &[u64], primes: &[u64], remaining: u32) -> Result<IntPoly> {
    let mut out = IntPoly::one();
    let mut t = remaining;
    while t != 0 {
        out = &out * &f_term(ds, primes, t)?;
        t = (t - 1) & remaining;
    }
    Ok(out)
}

/// Weak census of a cyclic group of square-free order.
pub fn psi_weak_cyclic_squarefree(spec: &SquareFreeSpec, variant: FormulaVariant) -> Result<IntPoly> {
    let primes = spec.odd_primes();
    let l = primes.len();
    let full = (1u32 << l) - 1;
    let per_prime: Vec<Vec<u64>> = primes.iter().map(|&p| divisors(p - 1)).collect::<Result<_>>()?;
    let phi_n: u64 = primes.iter().map(|p| p - 1).product();

    let mut total = IntPoly::zero();
    let mut ds = vec![0u64; l];
    let mut choice = vec![0usize; l];
    loop {
        for i in 0..l {
            ds[i] = per_prime[i][choice[i]];
        }
        let mut weight = 1i64;
        for i in 0..l {
            weight *= euler_phi((primes[i] - 1) / ds[i])? as i64;
        }
        let mut bracket = IntPoly::zero();
        for removed in 0..=full {
            let k = removed.count_ones();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let f = big_f(&ds, primes, full & !removed)?;
            let term = if spec.include_factor_two() {
                if k as usize == l {
                    continue;
                }
                &(&(&f * &f) * &one_plus_x()) - &f
            } else {
                f
            };
            bracket += &term.scale(&c(sign));
        }
        if spec.include_factor_two() {
            let sign = if l.is_multiple_of(2) { 1 } else { -1 };
            let tail = match variant {
                FormulaVariant::Literal => one_plus_x(),
                FormulaVariant::Corrected => x(),
            };
            bracket += &tail.scale(&c(sign));
        }
        total += &bracket.scale(&c(weight));

        let mut i = 0;
        while i < l {
            choice[i] += 1;
            if choice[i] < per_prime[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == l {
            break;
        }
    }
    divide(total, phi_n, "square-free weak formula")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::{psi_weak_z2p, psi_weak_zp};

    #[test]
    fn spec_validation() {
        assert!(SquareFreeSpec::new(vec![], false).is_err());
        assert!(SquareFreeSpec::new(vec![5, 3], false).is_err());
        assert!(SquareFreeSpec::new(vec![3, 9], false).is_err());
        assert!(SquareFreeSpec::new(vec![2, 3], false).is_err());
        assert_eq!(SquareFreeSpec::new(vec![3, 5], true).unwrap().order(), 30);
    }

    #[test]
    fn single_prime_specializes() {
        for p in [3u64, 5, 7, 11, 13] {
            let odd = SquareFreeSpec::new(vec![p], false).unwrap();
            let even = SquareFreeSpec::new(vec![p], true).unwrap();
            assert_eq!(
                psi_weak_cyclic_squarefree(&odd, FormulaVariant::Corrected).unwrap(),
                psi_weak_zp(p).unwrap()
            );
            assert_eq!(
                psi_weak_cyclic_squarefree(&even, FormulaVariant::Corrected).unwrap(),
                psi_weak_z2p(p).unwrap()
            );
        }
    }

    #[test]
    fn literal_even_tail_adds_a_constant() {
        let spec = SquareFreeSpec::new(vec![3], true).unwrap();
        let lit = psi_weak_cyclic_squarefree(&spec, FormulaVariant::Literal).unwrap();
        let fixed = psi_weak_cyclic_squarefree(&spec, FormulaVariant::Corrected).unwrap();
        assert_eq!(&lit - &fixed, IntPoly::constant(-1));
    }

    #[test]
    fn fifteen() {
        let spec = SquareFreeSpec::new(vec![3, 5], false).unwrap();
        assert_eq!(
            psi_weak_cyclic_squarefree(&spec, FormulaVariant::Corrected).unwrap(),
            "x^2+6x^4+11x^6+11x^8+7x^10+3x^12+x^14".parse().unwrap()
        );
    }
}
