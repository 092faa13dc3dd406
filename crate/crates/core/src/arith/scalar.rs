use core::fmt::Debug;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{rational_to_f64, Rational};

/// Commutative ring elements usable as matrix entries.
///
/// Zero and one are produced from an existing element so that context-carrying
/// types such as [`super::MultiPoly`] can participate.
pub trait Ring:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
}

/// Ordered fields: exact rationals and (approximately) `f64`.
pub trait Field: Ring + Div<Output = Self> {
    fn from_rational(r: &Rational) -> Self;
    fn from_i64(v: i64) -> Self;
    /// Size used to choose pivots. Never used to decide whether an entry is zero.
    fn magnitude(&self) -> f64;
    fn is_positive(&self) -> bool;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl Field for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn from_i64(v: i64) -> Self {
        super::rational::int(v)
    }
    fn magnitude(&self) -> f64 {
        let m = rational_to_f64(self).abs();
        if m == 0.0 && !self.is_zero() {
            f64::MIN_POSITIVE
        } else {
            m
        }
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
}

impl Ring for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn one_like(&self) -> Self {
        1.0
    }
    fn is_zero_elem(&self) -> bool {
        *self == 0.0
    }
}

impl Field for f64 {
    fn from_rational(r: &Rational) -> Self {
        rational_to_f64(r)
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn magnitude(&self) -> f64 {
        num_traits::Float::abs(*self)
    }
    fn is_positive(&self) -> bool {
        *self > 0.0
    }
}
