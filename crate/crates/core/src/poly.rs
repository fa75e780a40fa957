//! Dense univariate polynomials with exact `BigInt` coefficients.
//!
//! Coefficient vectors are kept canonical (no trailing zero), so structural
//! equality is mathematical equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A polynomial in one variable over the integers, stored densely by
/// ascending degree. The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPolynomial { coeffs }
    }

    /// Builds from an ascending-degree coefficient vector, stripping
    /// trailing zeros to restore the canonical form.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The canonical ascending-degree coefficient slice.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Horner evaluation at an exact integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `d`, returning `None` unless the
    /// division is exact on all of them.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero scalar");
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntPolynomial { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = IntPolynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(Neg::neg).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        // a product of canonical nonzero polynomials has a nonzero leading term
        IntPolynomial { coeffs: out }
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if i == 1 {
                write!(f, "*x")?;
            } else if i > 1 {
                write!(f, "*x^{i}")?;
            }
        }
        Ok(())
    }
}

/// Lazily extended cache of the powers of a fixed base polynomial.
pub struct PolyPowers {
    base: IntPolynomial,
    powers: Vec<IntPolynomial>,
}

impl PolyPowers {
    pub fn new(base: IntPolynomial) -> Self {
        PolyPowers {
            base,
            powers: vec![IntPolynomial::one()],
        }
    }

    /// `base^k`, computing and caching any missing intermediate powers.
    pub fn get(&mut self, k: usize) -> &IntPolynomial {
        while self.powers.len() <= k {
            let next = self.powers.last().expect("cache is never empty") * &self.base;
            self.powers.push(next);
        }
        &self.powers[k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn canonical_form() {
        assert!(poly(&[]).is_zero());
        assert!(poly(&[0, 0, 0]).is_zero());
        assert_eq!(poly(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(IntPolynomial::monomial(BigInt::zero(), 5), IntPolynomial::zero());
        assert_eq!(IntPolynomial::monomial(BigInt::from(3), 2), poly(&[0, 0, 3]));
    }

    #[test]
    fn ring_operations() {
        let a = poly(&[1, 2, 3]);
        let b = poly(&[-1, 0, 0, 4]);
        assert_eq!(&a + &b, poly(&[0, 2, 3, 4]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(&a * &b, poly(&[-1, -2, -3, 4, 8, 12]));
        assert_eq!(-&a, poly(&[-1, -2, -3]));
        // cancellation in the sum must restore canonical form
        assert_eq!((&poly(&[1, 1]) + &poly(&[1, -1])).degree(), Some(0));
    }

    #[test]
    fn evaluation() {
        let p = poly(&[5, -3, 2]); // 2x^2 - 3x + 5
        assert_eq!(p.eval(&BigInt::from(0)), BigInt::from(5));
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::from(14));
        assert_eq!(p.eval(&BigInt::from(-2)), BigInt::from(19));
        assert_eq!(IntPolynomial::zero().eval(&BigInt::from(9)), BigInt::from(0));
    }

    #[test]
    fn scalar_operations() {
        let p = poly(&[2, 4, 6]);
        assert_eq!(p.mul_scalar(&BigInt::from(3)), poly(&[6, 12, 18]));
        assert_eq!(p.mul_scalar(&BigInt::zero()), IntPolynomial::zero());
        assert_eq!(p.div_exact_scalar(&BigInt::from(2)), Some(poly(&[1, 2, 3])));
        assert_eq!(p.div_exact_scalar(&BigInt::from(4)), None);
        assert_eq!(
            IntPolynomial::zero().div_exact_scalar(&BigInt::from(7)),
            Some(IntPolynomial::zero())
        );
    }

    #[test]
    fn powers() {
        let x_plus_1 = poly(&[1, 1]);
        assert_eq!(x_plus_1.pow(0), IntPolynomial::one());
        assert_eq!(x_plus_1.pow(2), poly(&[1, 2, 1]));
        assert_eq!(x_plus_1.pow(4), poly(&[1, 4, 6, 4, 1]));

        let mut cache = PolyPowers::new(poly(&[0, 1, 1])); // x^2 + x
        assert_eq!(cache.get(0), &IntPolynomial::one());
        assert_eq!(cache.get(2), &poly(&[0, 0, 1, 2, 1]));
        assert_eq!(cache.get(1), &poly(&[0, 1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[1, -2, 3]).to_string(), "3*x^2 - 2*x + 1");
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[0, 1]).to_string(), "1*x");
    }
}
