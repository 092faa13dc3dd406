use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::arith::{format_rational, Rational, Ring};

/// Polynomial in the deformation parameter `h` with rational coefficients.
/// `coeffs[i]` multiplies `h^i`; trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct HPoly {
    coeffs: Vec<Rational>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The parameter `h` itself.
    pub fn h() -> Self {
        Self::monomial(1, Rational::one())
    }

    /// `c · h^power`.
    pub fn monomial(power: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        HPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power of `h` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplication by `h^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        HPoly { coeffs }
    }

    /// Division by `h^k`, if exact.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(HPoly { coeffs: self.coeffs.iter().skip(k).cloned().collect() })
    }

    /// Value at a rational `h`.
    pub fn eval(&self, h: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * h + c)
    }
}

impl From<Rational> for HPoly {
    fn from(c: Rational) -> Self {
        HPoly::constant(c)
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "{}*h", format_rational(c))?,
                _ => write!(f, "{}*h^{i}", format_rational(c))?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&HPoly> for HPoly {
    fn add_assign(&mut self, rhs: &HPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&HPoly> for HPoly {
    fn sub_assign(&mut self, rhs: &HPoly) {
        *self += &-rhs;
    }
}

impl Add<&HPoly> for &HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&HPoly> for &HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&HPoly> for &HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        if self.is_zero() || rhs.is_zero() {
            return HPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        HPoly::from_coeffs(coeffs)
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for HPoly {
    type Output = HPoly;
    fn add(mut self, rhs: HPoly) -> HPoly {
        self += &rhs;
        self
    }
}

impl Sub for HPoly {
    type Output = HPoly;
    fn sub(mut self, rhs: HPoly) -> HPoly {
        self -= &rhs;
        self
    }
}

impl Mul for HPoly {
    type Output = HPoly;
    fn mul(self, rhs: HPoly) -> HPoly {
        &self * &rhs
    }
}

impl Neg for HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        -&self
    }
}

impl Ring for HPoly {
    fn zero_like(&self) -> Self {
        HPoly::zero()
    }
    fn one_like(&self) -> Self {
        HPoly::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use alloc::format;

    #[test]
    fn arithmetic() {
        let a = HPoly::from_coeffs(vec![int(1), int(2)]);
        let b = HPoly::from_coeffs(vec![int(-1), int(0), rat(1, 2)]);
        let p = &a * &b;
        assert_eq!(p, HPoly::from_coeffs(vec![int(-1), int(-2), rat(1, 2), int(1)]));
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(p.eval(&int(2)), a.eval(&int(2)) * b.eval(&int(2)));
        assert_eq!(a.shift(2).unshift(2), Some(a.clone()));
        assert_eq!(a.unshift(1), None);
        assert_eq!(HPoly::h().valuation(), Some(1));
        assert_eq!(format!("{}", a), "1/1 + 2/1*h");
    }
}
