//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! `IntPoly` stores coefficients in ascending degree order. The
//! representation is canonical: the coefficient vector is empty for the zero
//! polynomial and its last entry is nonzero otherwise.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::monomial(c, 0)
    }

    /// `c * x^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPoly { coeffs }
    }

    pub fn x_pow(degree: usize) -> Self {
        IntPoly::monomial(1, degree)
    }

    /// `1 + x^k`; for `k = 0` this is the constant 2.
    pub fn one_plus_x_pow(k: usize) -> Self {
        IntPoly::one() + IntPoly::x_pow(k)
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = IntPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs; repeated
    /// degrees are summed.
    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, T)>,
        T: Into<BigInt>,
    {
        let mut p = IntPoly::zero();
        for (d, c) in terms {
            p += &IntPoly::monomial(c, d);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms as `(degree, coefficient)` in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.terms().next().map(|(d, _)| d)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        let mut p = IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        };
        p.normalize();
        p
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplies in place by `1 + x^k`.
    pub fn mul_one_plus_x_pow(&mut self, k: usize) {
        if self.is_zero() {
            return;
        }
        if k == 0 {
            for c in &mut self.coeffs {
                *c *= 2;
            }
            return;
        }
        let old_len = self.coeffs.len();
        self.coeffs.resize(old_len + k, BigInt::zero());
        for i in (0..old_len).rev() {
            let c = self.coeffs[i].clone();
            self.coeffs[i + k] += c;
        }
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Sum of coefficients, i.e. the value at 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficientwise exact division by a positive integer.
    pub fn divide_exact_by_int(&self, c: &BigInt) -> Result<IntPoly> {
        if !c.is_positive() {
            return Err(Error::InvalidArgument(format!("divisor must be positive, got {c}")));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (degree, a) in self.coeffs.iter().enumerate() {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    degree,
                    divisor: c.to_string(),
                });
            }
            out.push(q);
        }
        Ok(IntPoly { coeffs: out })
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// `true` when every coefficient of `self` is at least the matching
    /// coefficient of `other`.
    pub fn dominates(&self, other: &IntPoly) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|d| self.coeff(d) >= other.coeff(d))
    }
}

impl fmt::Display for IntPoly {
    /// Ascending degree, `c x^k` written as `cx^k`, unit coefficients elided,
    /// `x^1` written as `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let unit = mag.is_one();
            match d {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{d}")?,
                _ => write!(f, "{mag}x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Parses the text format produced by `Display`. Whitespace and `*` are
    /// ignored; repeated degrees are summed.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = |msg: &str| Error::Parse(format!("{msg} in polynomial {s:?}"));
        let mut terms = Vec::new();
        let mut rest = cleaned.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let negative = match rest.as_bytes()[0] {
                b'+' => {
                    rest = &rest[1..];
                    false
                }
                b'-' => {
                    rest = &rest[1..];
                    true
                }
                _ if first => false,
                _ => return Err(bad("expected '+' or '-'")),
            };
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let (coef_txt, degree) = match term.find('x') {
                None => (term, 0usize),
                Some(i) => {
                    let tail = &term[i + 1..];
                    let degree = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .ok_or_else(|| bad("expected '^' after x"))?
                            .parse::<usize>()
                            .map_err(|_| bad("bad exponent"))?
                    };
                    (&term[..i], degree)
                }
            };
            let mut coef = if coef_txt.is_empty() {
                BigInt::one()
            } else {
                coef_txt.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?
            };
            if negative {
                coef = -coef;
            }
            terms.push((degree, coef));
        }
        Ok(IntPoly::from_terms(terms))
    }
}

impl Serialize for IntPoly {
    /// JSON array of `[degree, "coefficient"]` pairs, nonzero terms only.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(usize, String)> = self.terms().map(|(d, c)| (d, c.to_string())).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(usize, String)>::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (d, c) in pairs {
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            terms.push((d, c));
        }
        Ok(IntPoly::from_terms(terms))
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(mut self, rhs: IntPoly) -> IntPoly {
        self += &rhs;
        self
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(mut self, rhs: IntPoly) -> IntPoly {
        self -= &rhs;
        self
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(mut self) -> IntPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p("1+x") * &p("1+x^2"), p("1+x+x^2+x^3"));
        assert_eq!(p("1+x^2").pow(2), p("1+2x^2+x^4"));
        assert!((p("x^2").scale(&BigInt::from(-1)) + p("x^2")).is_zero());
        assert_eq!(p("3x+x^5").pow(0), IntPoly::one());
    }

    #[test]
    fn evaluation_examples() {
        let one = BigInt::one();
        assert_eq!(p("x^2+x^4").eval_int(&one), BigInt::from(2));
        assert_eq!(IntPoly::zero().eval_int(&one), BigInt::zero());
        let table1_n12 = p("2x^2+2x^3+9x^4+9x^5+10x^6+10x^7+5x^8+5x^9+x^10+x^11");
        assert_eq!(table1_n12.eval_int(&one), BigInt::from(54));
        assert_eq!(p("1+2x+3x^2").eval_int(&BigInt::from(-2)), BigInt::from(9));
    }

    #[test]
    fn exact_division() {
        let four = BigInt::from(4);
        assert_eq!(p("4x^2+4x^4").divide_exact_by_int(&four).unwrap(), p("x^2+x^4"));
        let q = p("3x+7x^9");
        assert_eq!(q.divide_exact_by_int(&BigInt::one()).unwrap(), q);
        assert_eq!(
            p("2x^3").divide_exact_by_int(&four),
            Err(Error::NotDivisible {
                degree: 3,
                divisor: "4".into()
            })
        );
        assert!(q.divide_exact_by_int(&BigInt::zero()).is_err());
    }

    #[test]
    fn text_format() {
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::x_pow(1).to_string(), "x");
        assert_eq!(p("6x^4 + x^2 + x^3").to_string(), "x^2+x^3+6x^4");
        assert_eq!(p("-x^2+3-2x").to_string(), "3-2x-x^2");
        assert_eq!(p("52x^6+56x^6").to_string(), "108x^6");
        assert!("x^".parse::<IntPoly>().is_err());
        assert!("".parse::<IntPoly>().is_err());
        assert!("2y".parse::<IntPoly>().is_err());
    }

    #[test]
    fn json_format_uses_string_coefficients() {
        let q = p("x^2+123456789012345678901234567890x^5");
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"[[2,"1"],[5,"123456789012345678901234567890"]]"#);
        let back: IntPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn binomial_multiplication_matches_general_product() {
        let mut a = p("1+3x+x^4");
        a.mul_one_plus_x_pow(3);
        assert_eq!(a, &p("1+3x+x^4") * &IntPoly::one_plus_x_pow(3));
        let mut b = p("x+x^2");
        b.mul_one_plus_x_pow(0);
        assert_eq!(b, p("2x+2x^2"));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-20i64..20, 0..6).prop_map(IntPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn evaluation_is_a_ring_map(a in small_poly(), b in small_poly(), t in -5i64..5) {
            let t = BigInt::from(t);
            prop_assert_eq!((&a * &b).eval_int(&t), a.eval_int(&t) * b.eval_int(&t));
            prop_assert_eq!((&a + &b).eval_int(&t), a.eval_int(&t) + b.eval_int(&t));
        }

        #[test]
        fn text_round_trip(a in small_poly()) {
            prop_assert_eq!(a.to_string().parse::<IntPoly>().unwrap(), a);
        }
    }
}
