//! Brute-force closures used to check the construction below a bound.
//!
//! [`index_closure`] works on exponents, combining `p` and `q` into `p + q`
//! and `p + q + 1` (the digit lengths a product of a `p`-class and a
//! `q`-class element can take). [`integer_closure`] relies on nothing but
//! the definition: it multiplies actual integers and completes digit classes.

use crate::closure::ExponentSet;
use crate::error::{Error, Result};
use crate::interval::{digit_length, Base, Exponent};
use crate::semigroup::DcSemigroup;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Largest bound accepted by [`index_closure`]; work is quadratic in it.
pub const MAX_INDEX_BOUND: Exponent = 100_000;
/// Largest bound accepted by [`integer_closure`].
pub const MAX_INTEGER_BOUND: Exponent = 12;

/// An exponent set known exactly below `bound` and unspecified above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedExponentSet {
    pub present: ExponentSet,
    pub bound: Exponent,
}

impl TruncatedExponentSet {
    /// Restriction to a smaller bound.
    pub fn truncate(&self, bound: Exponent) -> TruncatedExponentSet {
        let bound = bound.min(self.bound);
        TruncatedExponentSet {
            present: self.present.below(bound),
            bound,
        }
    }
}

/// Least fixpoint of the exponent rule, truncated at `bound`.
pub fn index_closure(
    exponents: &ExponentSet,
    base: Base,
    bound: Exponent,
) -> Result<TruncatedExponentSet> {
    if let Some(max) = exponents.max() {
        if max >= bound {
            return Err(Error::BoundTooSmall { bound, max });
        }
    }
    if bound > MAX_INDEX_BOUND {
        return Err(Error::ResourceLimit(format!(
            "index closure bound {bound} exceeds {MAX_INDEX_BOUND}"
        )));
    }
    let n = bound as usize;
    let mut present = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut worklist: Vec<usize> = Vec::new();
    for e in exponents.iter() {
        present[e as usize] = true;
        worklist.push(e as usize);
    }

    while let Some(p) = worklist.pop() {
        members.push(p);
        // pairs (p, q) with q already popped, p itself included
        let mut fresh = Vec::new();
        for &q in &members {
            if base.is_binary() && (p == 0 || q == 0) {
                continue;
            }
            for s in [p + q, p + q + 1] {
                if s < n && !present[s] {
                    present[s] = true;
                    fresh.push(s);
                }
            }
        }
        worklist.extend(fresh);
    }

    let present = (0..n)
        .filter(|&e| present[e])
        .map(|e| e as Exponent)
        .collect();
    Ok(TruncatedExponentSet { present, bound })
}

/// Closure of `xs` under multiplication and digit-class completion, computed
/// over the integers below `b^bound`.
///
/// Restricted to bases 2 and 3 with `bound <= 12`.
pub fn integer_closure(
    xs: &[BigUint],
    base: Base,
    bound: Exponent,
) -> Result<TruncatedExponentSet> {
    let b = u64::from(base.get());
    if b > 3 || bound > MAX_INTEGER_BOUND {
        return Err(Error::ResourceLimit(format!(
            "integer closure needs base 2 or 3 and bound <= {MAX_INTEGER_BOUND}, got base {b}, bound {bound}"
        )));
    }
    let n = bound as usize;
    // powers[e] = b^e for e in 0..=bound
    let powers: Vec<u64> = std::iter::successors(Some(1u64), |p| Some(p * b))
        .take(n + 1)
        .collect();
    let limit = powers[n];
    let class_of = |x: u64| powers.iter().rposition(|&p| p <= x).unwrap();

    let mut present = vec![false; n];
    let mut worklist = Vec::new();
    for x in xs {
        let max = digit_length(x, base)?;
        let Some(x) = x.to_u64().filter(|&x| x < limit) else {
            return Err(Error::BoundTooSmall { bound, max });
        };
        let e = class_of(x);
        if !present[e] {
            present[e] = true;
            worklist.push(e);
        }
    }

    // Once a class is completed, S is a union of full classes, so each pair
    // of classes needs to be multiplied out once.
    let mut members: Vec<usize> = Vec::new();
    while let Some(e) = worklist.pop() {
        members.push(e);
        let mut fresh = Vec::new();
        for &f in &members {
            for hit in class_product_exponents(&powers, e, f) {
                if !present[hit] {
                    present[hit] = true;
                    fresh.push(hit);
                }
            }
        }
        worklist.extend(fresh);
    }

    let present = (0..n)
        .filter(|&e| present[e])
        .map(|e| e as Exponent)
        .collect();
    Ok(TruncatedExponentSet { present, bound })
}

/// Exponents of all products `u * v < b^bound` with `u` in class `e` and `v`
/// in class `f`, by direct enumeration.
fn class_product_exponents(powers: &[u64], e: usize, f: usize) -> Vec<usize> {
    let n = powers.len() - 1;
    let limit = powers[n];
    let mut hit = vec![false; n];
    for u in powers[e]..powers[e + 1] {
        let mut v = powers[f];
        let mut prod = u * v;
        if prod >= limit {
            break;
        }
        let mut class = powers.iter().rposition(|&p| p <= prod).unwrap();
        while v < powers[f + 1] && prod < limit {
            while prod >= powers[class + 1] {
                class += 1;
            }
            hit[class] = true;
            v += 1;
            prod += u;
        }
    }
    (0..n).filter(|&c| hit[c]).collect()
}

/// Outcome of checking a semigroup against an oracle result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub bound: Exponent,
    /// Exponents below `bound` on which the two sides disagree.
    pub differing: Vec<Exponent>,
}

impl Comparison {
    pub fn matches(&self) -> bool {
        self.differing.is_empty()
    }
}

pub fn compare(g: &DcSemigroup, reference: &TruncatedExponentSet) -> Comparison {
    let ours = g.exponents_upto(reference.bound);
    Comparison {
        bound: reference.bound,
        differing: ours.symmetric_difference(&reference.present),
    }
}
