//! Arbitrary-precision real numbers with a decimal-digit precision contract.
//!
//! `HighPrecReal` wraps a binary big-float and carries a decimal precision
//! parameter `D` (digits). Every operation rounds to a working precision of
//! `D + GUARD_DIGITS` decimal digits, so the per-operation relative error is
//! far below the contractual `10^(1-D)`. Comparisons at the contractual
//! tolerance `10^(8-D)` go through [`HighPrecReal::approx_eq`].

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Minimum decimal precision accepted by the kernel.
pub const MIN_DIGITS: u32 = 15;

/// Default decimal precision used when none is configured.
pub const DEFAULT_DIGITS: u32 = 50;

/// Extra decimal digits carried internally beyond the requested precision.
const GUARD_DIGITS: u32 = 10;

const LOG2_10: f64 = 3.321928094887362;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Binary working precision (bits) for `digits` decimal digits.
fn bits_for(digits: u32) -> usize {
    (((digits + GUARD_DIGITS) as f64) * LOG2_10).ceil() as usize + 4
}

/// A real number carrying its decimal precision.
#[derive(Clone, Debug)]
pub struct HighPrecReal {
    value: BigFloat,
    digits: u32,
}

impl HighPrecReal {
    fn wrap(value: BigFloat, digits: u32) -> Self {
        Self { value, digits }
    }

    /// Decimal precision parameter D.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    fn bits(&self) -> usize {
        bits_for(self.digits)
    }

    pub fn zero(digits: u32) -> Self {
        Self::from_u64(0, digits)
    }

    pub fn one(digits: u32) -> Self {
        Self::from_u64(1, digits)
    }

    pub fn from_u64(n: u64, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(BigFloat::from_u64(n, bits_for(digits)), digits)
    }

    pub fn from_i64(n: i64, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(BigFloat::from_i64(n, bits_for(digits)), digits)
    }

    pub fn from_f64(x: f64, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(BigFloat::from_f64(x, bits_for(digits)), digits)
    }

    /// Exact conversion of a big integer, then rounding to working precision.
    pub fn from_bigint(n: &BigInt, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        let p = bits_for(digits);
        let (sign, limbs) = n.to_u64_digits();
        // Build at full integer width so the fold is exact, then round once.
        let pw = (64 * limbs.len().max(1) + 8).max(p);
        let two64 = BigFloat::from_u64(u64::MAX, pw).add(&BigFloat::from_u64(1, pw), pw, RM);
        let mut acc = BigFloat::from_u64(0, pw);
        for limb in limbs.iter().rev() {
            acc = acc.mul(&two64, pw, RM);
            acc = acc.add(&BigFloat::from_u64(*limb, pw), pw, RM);
        }
        if sign == Sign::Minus {
            acc = acc.neg();
        }
        Self::wrap(round_to(acc, p), digits)
    }

    pub fn from_rational(q: &BigRational, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        let p = bits_for(digits);
        let num = Self::from_bigint(q.numer(), digits + 20);
        let den = Self::from_bigint(q.denom(), digits + 20);
        Self::wrap(num.value.div(&den.value, p, RM), digits)
    }

    /// Parse a decimal literal (scientific notation accepted).
    pub fn parse_dec(s: &str, digits: u32) -> Result<Self> {
        let digits = digits.max(MIN_DIGITS);
        let p = bits_for(digits);
        let v = with_consts(|cc| BigFloat::parse(s, Radix::Dec, p, RM, cc));
        if v.is_nan() {
            return Err(Error::Parse(format!("not a decimal number: {s:?}")));
        }
        Ok(Self::wrap(v, digits))
    }

    /// Re-round to a different decimal precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(round_to(self.value.clone(), bits_for(digits)), digits)
    }

    pub fn is_nan(&self) -> bool {
        self.value.is_nan()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative() && !self.value.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.value.is_positive() && !self.value.is_zero()
    }

    /// Base-2 exponent of the value: |x| ∈ [2^(e-1), 2^e). Zero reports `None`.
    pub fn exponent_base2(&self) -> Option<i64> {
        if self.value.is_zero() || self.value.is_nan() || self.value.is_inf() {
            None
        } else {
            self.value.exponent().map(|e| e as i64)
        }
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.digits)
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.value.reciprocal(self.bits(), RM), self.digits)
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::Domain("sqrt of negative value".into()));
        }
        Ok(Self::wrap(self.value.sqrt(self.bits(), RM), self.digits))
    }

    pub fn exp(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.value.exp(p, RM, cc)), self.digits)
    }

    pub fn ln(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::Domain("ln of non-positive value".into()));
        }
        let p = self.bits();
        Ok(Self::wrap(with_consts(|cc| self.value.ln(p, RM, cc)), self.digits))
    }

    pub fn sin(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.value.sin(p, RM, cc)), self.digits)
    }

    pub fn sinh(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.value.sinh(p, RM, cc)), self.digits)
    }

    pub fn cosh(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.value.cosh(p, RM, cc)), self.digits)
    }

    /// Integer power; negative exponents go through the reciprocal.
    pub fn powi(&self, n: i64) -> Self {
        let p = self.bits();
        if n < 0 {
            let pos = self.value.powi((-n) as usize, p, RM);
            Self::wrap(pos.reciprocal(p, RM), self.digits)
        } else {
            Self::wrap(self.value.powi(n as usize, p, RM), self.digits)
        }
    }

    /// Real power `self^t` for positive base, via exp(t ln self).
    pub fn pow_real(&self, t: &Self) -> Result<Self> {
        Ok((t * &self.ln()?).exp())
    }

    /// `ln(1 + self)` without cancellation for small |self|.
    pub fn ln_1p(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero(self.digits));
        }
        let p = self.bits();
        let boost = match self.exponent_base2() {
            Some(e) if e < 0 => (-e) as usize + 8,
            _ => 8,
        };
        let pw = p + boost;
        let one = BigFloat::from_u64(1, pw);
        let shifted = one.add(&self.value, pw, RM);
        if !shifted.is_positive() || shifted.is_zero() {
            return Err(Error::Domain("ln_1p of value <= -1".into()));
        }
        let v = with_consts(|cc| shifted.ln(pw, RM, cc));
        Ok(Self::wrap(round_to(v, p), self.digits))
    }

    /// `1 - exp(self)` without cancellation for small |self|.
    pub fn one_minus_exp(&self) -> Self {
        if self.is_zero() {
            return Self::zero(self.digits);
        }
        let p = self.bits();
        let boost = match self.exponent_base2() {
            Some(e) if e < 0 => (-e) as usize + 8,
            _ => 8,
        };
        let pw = p + boost;
        let e = with_consts(|cc| self.value.exp(pw, RM, cc));
        let v = BigFloat::from_u64(1, pw).sub(&e, pw, RM);
        Self::wrap(round_to(v, p), self.digits)
    }

    pub fn pi(digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(with_consts(|cc| cc.pi(bits_for(digits), RM)), digits)
    }

    pub fn ln2(digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(with_consts(|cc| cc.ln_2(bits_for(digits), RM)), digits)
    }

    /// Deterministic comparison at the contractual tolerance `10^(8-D)`.
    pub fn approx_eq(&self, other: &Self) -> bool {
        let digits = self.digits.min(other.digits);
        let tol = Self::pow10(8 - digits as i64, digits);
        (self - other).abs() <= tol
    }

    /// Exact power of ten at the given precision.
    pub fn pow10(exp: i64, digits: u32) -> Self {
        Self::from_u64(10, digits).powi(exp)
    }

    /// Nearest integer (ties away from zero are fine for our uses).
    pub fn round_i64(&self) -> i64 {
        let f = self.to_f64();
        f.round() as i64
    }

    /// Lossy conversion for display and Monte Carlo cross-checks.
    pub fn to_f64(&self) -> f64 {
        if self.value.is_nan() {
            return f64::NAN;
        }
        if self.value.is_inf() {
            return if self.value.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
        // Out-of-range binary exponents would not survive the string round
        // trip; clamp them explicitly.
        if let Some(e) = self.exponent_base2() {
            if e > 1030 {
                return if self.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
            }
            if e < -1070 {
                return 0.0;
            }
        }
        format!("{}", self.value).parse::<f64>().unwrap_or(f64::NAN)
    }

    /// Full-precision decimal rendering (deterministic for a given D).
    pub fn to_dec_string(&self) -> String {
        format!("{}", self.value)
    }

    pub fn max(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }
}

fn round_to(v: BigFloat, p: usize) -> BigFloat {
    // add of zero at target precision forces the rounding
    v.add(&BigFloat::from_u64(0, p), p, RM)
}

impl fmt::Display for HighPrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl PartialEq for HighPrecReal {
    fn eq(&self, other: &Self) -> bool {
        self.value.partial_cmp(&other.value) == Some(Ordering::Equal)
    }
}

impl PartialOrd for HighPrecReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $bf_method:ident) => {
        impl $trait<&HighPrecReal> for &HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: &HighPrecReal) -> HighPrecReal {
                let digits = self.digits.max(rhs.digits);
                let p = bits_for(digits);
                HighPrecReal::wrap(self.value.$bf_method(&rhs.value, p, RM), digits)
            }
        }
        impl $trait<HighPrecReal> for HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: HighPrecReal) -> HighPrecReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&HighPrecReal> for HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: &HighPrecReal) -> HighPrecReal {
                (&self).$method(rhs)
            }
        }
        impl $trait<HighPrecReal> for &HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: HighPrecReal) -> HighPrecReal {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl Neg for &HighPrecReal {
    type Output = HighPrecReal;
    fn neg(self) -> HighPrecReal {
        HighPrecReal::wrap(self.value.clone().neg(), self.digits)
    }
}

impl Neg for HighPrecReal {
    type Output = HighPrecReal;
    fn neg(self) -> HighPrecReal {
        let d = self.digits;
        HighPrecReal::wrap(self.value.neg(), d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_round_trip() {
        let d = 40;
        let a = HighPrecReal::from_u64(7, d);
        let b = HighPrecReal::from_u64(3, d);
        let c = &(&a / &b) * &b;
        assert!((&c - &a).abs() < HighPrecReal::pow10(-45, d));
    }

    #[test]
    fn rational_conversion_matches_division() {
        let d = 45;
        let q = BigRational::new(BigInt::from(-355), BigInt::from(113));
        let r = HighPrecReal::from_rational(&q, d);
        let direct = HighPrecReal::from_i64(-355, d) / HighPrecReal::from_u64(113, d);
        assert!((&r - &direct).abs() < HighPrecReal::pow10(-50, d));
    }

    #[test]
    fn bigint_conversion_exact() {
        let d = 60;
        let n: BigInt = BigInt::parse_bytes(b"123456789012345678901234567890123456789", 10).unwrap();
        let r = HighPrecReal::from_bigint(&n, d);
        let s = r.to_dec_string();
        assert!(s.starts_with("1.23456789012345678901234567890123456789"));
    }

    #[test]
    fn ln_1p_small_argument_accuracy() {
        let d = 40;
        // ln(1+x) for x = 1e-30: series x - x^2/2 dominates
        let x = HighPrecReal::pow10(-30, d);
        let v = x.ln_1p().unwrap();
        let expected = &x - &(&(&x * &x) / &HighPrecReal::from_u64(2, d));
        assert!((&v - &expected).abs() < HighPrecReal::pow10(-75, d));
    }

    #[test]
    fn one_minus_exp_small_argument_accuracy() {
        let d = 40;
        // 1 - e^g ≈ -g - g^2/2 for small g
        let g = -HighPrecReal::pow10(-25, d);
        let v = g.one_minus_exp();
        let expected = &(-&g) - &(&(&g * &g) / &HighPrecReal::from_u64(2, d));
        assert!((&v - &expected).abs() < HighPrecReal::pow10(-70, d));
    }

    #[test]
    fn pi_value() {
        let d = 50;
        let pi = HighPrecReal::pi(d);
        let known = HighPrecReal::parse_dec(
            "3.14159265358979323846264338327950288419716939937510582",
            d,
        )
        .unwrap();
        assert!((&pi - &known).abs() < HighPrecReal::pow10(-52, d));
    }

    #[test]
    fn approx_eq_tolerance() {
        let d = 20;
        let a = HighPrecReal::one(d);
        let b = &a + &HighPrecReal::pow10(-13, d); // below 10^(8-20) = 1e-12
        assert!(a.approx_eq(&b));
        let c = &a + &HighPrecReal::pow10(-11, d);
        assert!(!a.approx_eq(&c));
    }

    #[test]
    fn to_f64_round_trip() {
        let d = 30;
        let x = HighPrecReal::from_f64(0.1953125, d);
        assert_eq!(x.to_f64(), 0.1953125);
        assert_eq!(HighPrecReal::zero(d).to_f64(), 0.0);
    }
}
