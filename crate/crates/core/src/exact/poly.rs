//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial with `BigInt` coefficients, stored in ascending degree order.
///
/// Invariant: the coefficient vector is non-empty and its last entry is
/// nonzero unless the polynomial is zero (represented as a single `0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: vec![BigInt::zero()] }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial::constant(BigInt::from(1))
    }

    pub fn constant(c: BigInt) -> IntPolynomial {
        IntPolynomial { coeffs: vec![c] }
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> IntPolynomial {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Index of the last nonzero coefficient; 0 for constants (including 0).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("non-empty by invariant")
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `c * x^k * self`.
    pub fn mul_monomial(&self, c: &BigInt, k: usize) -> IntPolynomial {
        if c.is_zero() || self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + k];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i + k] = a * c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.degree() == 0 {
            return IntPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * BigInt::from(i))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Greatest common divisor of the coefficients (non-negative; 0 for the
    /// zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Same polynomial divided by its content; sign is preserved.
    pub fn primitive_part(&self) -> IntPolynomial {
        let g = self.content();
        if g.is_zero() || g == BigInt::from(1) {
            return self.clone();
        }
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact division: returns `q` with `self = q * other`, or an error if the
    /// division is not exact over the rationals-with-integer-result.
    pub fn divide_exact(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        if other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        if self.degree() < other.degree() {
            return Err(Error::InvalidArgument("inexact polynomial division".into()));
        }
        let mut rem: Vec<BigRational> =
            self.coeffs.iter().map(|c| BigRational::from(c.clone())).collect();
        let dlead = BigRational::from(other.leading().clone());
        let dq = self.degree() - other.degree();
        let mut quot = vec![BigRational::zero(); dq + 1];
        for k in (0..=dq).rev() {
            let c = &rem[k + other.degree()] / &dlead;
            if !c.is_zero() {
                for (i, b) in other.coeffs.iter().enumerate() {
                    let sub = &c * BigRational::from(b.clone());
                    rem[k + i] -= sub;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidArgument("inexact polynomial division".into()));
        }
        let mut out = Vec::with_capacity(quot.len());
        for c in quot {
            if !c.is_integer() {
                return Err(Error::InvalidArgument(
                    "polynomial quotient is not integral".into(),
                ));
            }
            out.push(c.to_integer());
        }
        Ok(IntPolynomial::from_coeffs(out))
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Horner evaluation after lossy conversion of coefficients to `f64`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Sign of the value at a rational point, computed without divisions via
    /// the homogeneous form `sum c_i p^i q^(d-i)`.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let p = x.numer();
        let q = x.denom();
        let d = self.degree();
        let mut qpow = Vec::with_capacity(d + 1);
        qpow.push(BigInt::from(1));
        for i in 1..=d {
            let next = &qpow[i - 1] * q;
            qpow.push(next);
        }
        let mut acc = BigInt::zero();
        for i in (0..=d).rev() {
            acc = acc * p + &self.coeffs[i] * &qpow[d - i];
        }
        sign_of(&acc)
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let mut v = BigInt::zero();
            if i < self.coeffs.len() {
                v += &self.coeffs[i];
            }
            if i < rhs.coeffs.len() {
                v += &rhs.coeffs[i];
            }
            *c = v;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
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
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..=self.degree()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag == BigInt::from(1);
            match k {
                0 => write!(f, "{mag}")?,
                1 => {
                    if unit {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{mag}x")?;
                    }
                }
                _ => {
                    if unit {
                        write!(f, "x^{k}")?;
                    } else {
                        write!(f, "{mag}x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// Serialized as an array of decimal strings, ascending degree, so arbitrary
// precision coefficients survive JSON round-trips.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

struct CoeffVisitor;

impl<'de> Visitor<'de> for CoeffVisitor {
    type Value = IntPolynomial;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "an array of decimal integer strings")
    }

    fn visit_seq<A: SeqAccess<'de>>(
        self,
        mut seq: A,
    ) -> std::result::Result<IntPolynomial, A::Error> {
        let mut coeffs = Vec::new();
        while let Some(s) = seq.next_element::<String>()? {
            let c = s
                .parse::<BigInt>()
                .map_err(|_| serde::de::Error::custom(format!("bad coefficient `{s}`")))?;
            coeffs.push(c);
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<IntPolynomial, D::Error> {
        deserializer.deserialize_seq(CoeffVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64_coeffs(cs)
    }

    #[test]
    fn normalization_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert_eq!(p(&[0, 0]).degree(), 0);
        assert!(p(&[0]).is_zero());
        assert_eq!(IntPolynomial::zero().degree(), 0);
    }

    #[test]
    fn arithmetic_matches_hand_expansion() {
        // (x + 1)(x - 1) = x^2 - 1
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &b, p(&[2]));
        assert_eq!((&a * &b).derivative(), p(&[0, 2]));
    }

    #[test]
    fn exact_division_recovers_factors() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[1, 1]);
        assert_eq!(a.divide_exact(&b).unwrap(), p(&[-1, 1]));
        assert!(p(&[1, 1, 1]).divide_exact(&b).is_err());
    }

    #[test]
    fn evaluation_and_signs() {
        let q = p(&[8, 13, -2, -8, 0, 1]); // x^5 - 8x^3 - 2x^2 + 13x + 8
        assert_eq!(q.eval_bigint(&BigInt::from(0)), BigInt::from(8));
        assert_eq!(q.eval_bigint(&BigInt::from(2)), BigInt::from(-6));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(q.sign_at(&half), 1);
        assert_eq!(q.sign_at(&BigRational::from(BigInt::from(2))), -1);
        assert_eq!(p(&[-4, 0, 1]).sign_at(&BigRational::from(BigInt::from(2))), 0);
        assert!((q.eval_f64(1.5) - (7.59375 - 27.0 - 4.5 + 19.5 + 8.0)).abs() < 1e-12);
    }

    #[test]
    fn content_and_primitive_part() {
        let q = p(&[6, -9, 12]);
        assert_eq!(q.content(), BigInt::from(3));
        assert_eq!(q.primitive_part(), p(&[2, -3, 4]));
        let neg = p(&[-6, -9]);
        assert_eq!(neg.primitive_part(), p(&[-2, -3]));
    }

    #[test]
    fn display_is_conventional() {
        assert_eq!(p(&[8, 13, -2, -8, 0, 1]).to_string(), "x^5 - 8x^3 - 2x^2 + 13x + 8");
        assert_eq!(p(&[0]).to_string(), "0");
        assert_eq!(p(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(p(&[2]).to_string(), "2");
    }

    #[test]
    fn serde_round_trip_preserves_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let q = IntPolynomial::from_coeffs(vec![BigInt::from(-1), big.clone()]);
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, format!("[\"-1\",\"{big}\"]"));
        let back: IntPolynomial = serde_json::from_str(&js).unwrap();
        assert_eq!(back, q);
    }
}
