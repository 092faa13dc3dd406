use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Canonical `"p/q"` form. The denominator is always written, so `3` becomes `"3/1"`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"-0.125"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Input(format!("not a rational: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let digits = fp.len() as u32;
        if !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let whole: BigInt = if ip.is_empty() || ip == "-" || ip == "+" {
            BigInt::zero()
        } else {
            ip.parse().map_err(|_| bad())?
        };
        let frac: BigInt = if fp.is_empty() { BigInt::zero() } else { fp.parse().map_err(|_| bad())? };
        let scale = num_traits::pow(BigInt::from(10), digits as usize);
        let mag = whole.abs() * &scale + frac;
        let num = if neg { -mag } else { mag };
        return Ok(Rational::new(num, scale));
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    // Large operands: shift both down to keep the quotient representable.
    let bits = r.numer().bits().max(r.denom().bits());
    let shift = bits.saturating_sub(900);
    let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::INFINITY);
    n / d
}

/// Exact value of a finite double.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

#[allow(dead_code)]
pub(crate) fn is_one(r: &Rational) -> bool {
    r.is_one()
}
