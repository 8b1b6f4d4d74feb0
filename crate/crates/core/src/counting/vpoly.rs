//! Polynomials in `v` with nonnegative big-integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

/// Arbitrary-precision nonnegative integer.
pub type BigNat = BigUint;

/// `c0 + c1 v + c2 v^2 + ...`, without trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VPoly {
    coeffs: Vec<BigNat>,
}

impl VPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigNat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        VPoly { coeffs }
    }

    pub fn constant(c: impl Into<BigNat>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The monomial `v`.
    pub fn v() -> Self {
        Self::from_coeffs(vec![BigNat::zero(), BigNat::one()])
    }

    pub fn coeffs(&self) -> &[BigNat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigNat {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + BigRational::from_integer(c.clone().into());
        }
        acc
    }

    pub fn eval_nat(&self, v: &BigNat) -> BigNat {
        let mut acc = BigNat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    pub fn scale(&self, k: &BigNat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigNat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        VPoly { coeffs }
    }
}

impl Zero for VPoly {
    fn zero() -> Self {
        VPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for VPoly {
    fn one() -> Self {
        Self::constant(1u32)
    }
}

impl AddAssign<&VPoly> for VPoly {
    fn add_assign(&mut self, rhs: &VPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigNat::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl Add for VPoly {
    type Output = VPoly;

    fn add(mut self, rhs: VPoly) -> VPoly {
        self += &rhs;
        self
    }
}

impl Mul for VPoly {
    type Output = VPoly;

    fn mul(self, rhs: VPoly) -> VPoly {
        &self * &rhs
    }
}

impl Mul for &VPoly {
    type Output = VPoly;

    fn mul(self, rhs: &VPoly) -> VPoly {
        if self.is_zero() || rhs.is_zero() {
            return VPoly::zero();
        }
        let mut out = vec![BigNat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        VPoly::from_coeffs(out)
    }
}

impl fmt::Display for VPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*v")?,
                _ => write!(f, "{c}*v^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for VPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let p = VPoly::constant(24u32) + VPoly::v();
        assert_eq!(p.to_string(), "24 + 1*v");
        let sq = &p * &p;
        assert_eq!(sq.coeffs(), &[576u32.into(), 48u32.into(), 1u32.into()]);
        assert_eq!(sq.eval_nat(&1u32.into()), 625u32.into());
        assert_eq!(VPoly::zero().degree(), None);
        assert_eq!(VPoly::v().shift(2).degree(), Some(3));
    }
}
