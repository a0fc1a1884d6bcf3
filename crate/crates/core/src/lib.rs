//! Smallest multiplicative subsemigroups of the positive integers that are
//! closed with respect to the number of base-`b` digits.
//!
//! A set of positive integers is *digit-closed* in base `b` when, together
//! with any `x`, it contains every integer with as many base-`b` digits as
//! `x`. Such a set is a union of digit classes `[b^e, b^(e+1))`, so it is
//! described by the exponents `e` it contains. [`closure::smallest_dc_semigroup`]
//! builds the smallest digit-closed multiplicative semigroup containing a
//! finite set, and [`oracle`] holds two brute-force closures that check it.
//!
//! ```
//! use digitclosed_core::{closure, interval::Base};
//! use num_bigint::BigUint;
//!
//! let base = Base::new(10).unwrap();
//! let xs = [BigUint::from(1235u32), BigUint::from(54321u32)];
//! let g = closure::smallest_dc_semigroup(&xs, base).unwrap();
//! assert_eq!(g.tail(), Some(6));
//! assert!(!g.member(&BigUint::from(123456u32)).unwrap());
//! ```

pub mod cli;
pub mod closure;
pub mod error;
pub mod interval;
pub mod oracle;
pub mod semigroup;

pub use error::{Error, Result};
pub use interval::{Base, DigitInterval, Exponent};
pub use semigroup::DcSemigroup;
