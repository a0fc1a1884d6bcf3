//! Digit lengths and the interval semigroup `U_b`.
//!
//! An interval `I_b(start, len)` is the integer range `[b^start, b^(start+len))`,
//! i.e. the union of the digit classes with exponents `start..start+len`.
//! Intervals multiply by adding both coordinates, except in base 2 where
//! `I_2(0, 1) = {1}` acts as the identity.

use std::fmt;
use std::ops::Range;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Digit-length index of a positive integer: `floor(log_b x)`.
pub type Exponent = u64;

/// Radix used for digit counting. Always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base(u32);

impl Base {
    pub const BINARY: Base = Base(2);
    pub const DECIMAL: Base = Base(10);

    pub fn new(b: u32) -> Result<Self> {
        if b < 2 {
            return Err(Error::InvalidBase(b.into()));
        }
        Ok(Base(b))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_binary(self) -> bool {
        self.0 == 2
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The run of exponents `start..start+len`, standing for `I_b(start, len)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitInterval {
    start: Exponent,
    len: Exponent,
}

impl DigitInterval {
    /// The interval `I_2(0, 1) = {1}`, identity of `U_2`.
    pub const UNIT: DigitInterval = DigitInterval { start: 0, len: 1 };

    pub fn new(start: Exponent, len: Exponent) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyInterval);
        }
        start.checked_add(len).ok_or(Error::ExponentOverflow)?;
        Ok(DigitInterval { start, len })
    }

    /// A single digit class.
    pub fn class(exponent: Exponent) -> Result<Self> {
        Self::new(exponent, 1)
    }

    pub fn start(&self) -> Exponent {
        self.start
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> Exponent {
        self.len
    }

    /// First exponent past the run. Cannot overflow, checked in [`DigitInterval::new`].
    pub fn end(&self) -> Exponent {
        self.start + self.len
    }

    pub fn exponents(&self) -> Range<Exponent> {
        self.start..self.end()
    }

    pub fn contains_exponent(&self, e: Exponent) -> bool {
        self.exponents().contains(&e)
    }

    fn is_unit(&self) -> bool {
        *self == Self::UNIT
    }
}

/// Returns the unique `j` with `b^j <= x < b^(j+1)`.
///
/// Exact for integers of any size: `x` is divided by the repeated squares
/// `b, b^2, b^4, ...` from the largest one that fits downwards.
pub fn digit_length(x: &BigUint, base: Base) -> Result<Exponent> {
    if x.is_zero() {
        return Err(Error::NonPositive);
    }
    let mut squares = Vec::new();
    let mut p = BigUint::from(base.get());
    while &p <= x {
        let next = &p * &p;
        squares.push(p);
        p = next;
    }
    // Invariant: after handling squares[i], rest < b^(2^i).
    let mut rest = x.clone();
    let mut exponent: Exponent = 0;
    for (i, square) in squares.iter().enumerate().rev() {
        if &rest >= square {
            rest /= square;
            exponent += 1 << i;
        }
    }
    Ok(exponent)
}

/// The operation of `U_b`.
pub fn interval_product(a: DigitInterval, b: DigitInterval, base: Base) -> Result<DigitInterval> {
    if base.is_binary() {
        if a.is_unit() {
            return Ok(b);
        }
        if b.is_unit() {
            return Ok(a);
        }
    }
    let start = a
        .start
        .checked_add(b.start)
        .ok_or(Error::ExponentOverflow)?;
    let len = a.len.checked_add(b.len).ok_or(Error::ExponentOverflow)?;
    DigitInterval::new(start, len)
}

/// `q`-fold product of `a` with itself, in closed form.
pub fn interval_power(a: DigitInterval, q: u64, base: Base) -> Result<DigitInterval> {
    if q == 0 {
        return Err(Error::ZeroPower);
    }
    if base.is_binary() && a.is_unit() {
        return Ok(a);
    }
    let start = a.start.checked_mul(q).ok_or(Error::ExponentOverflow)?;
    let len = a.len.checked_mul(q).ok_or(Error::ExponentOverflow)?;
    DigitInterval::new(start, len)
}

pub fn interval_contains(a: DigitInterval, x: &BigUint, base: Base) -> Result<bool> {
    Ok(a.contains_exponent(digit_length(x, base)?))
}
