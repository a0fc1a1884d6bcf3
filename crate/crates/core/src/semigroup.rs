//! Canonical form of a digit-closed set: sorted, pairwise separated exponent
//! runs followed by an optional infinite tail `[b^t, +inf)`.

use std::fmt;

use num_bigint::BigUint;

use crate::closure::ExponentSet;
use crate::error::{Error, Result};
use crate::interval::{digit_length, Base, DigitInterval, Exponent};

/// A digit-closed set in canonical form.
///
/// Invariants, established by [`DcSemigroup::normalize`]:
/// runs are sorted and `run.end() < next.start()`; with a tail `t`, every
/// run has `run.end() < t`. Two values are equal iff they denote the same set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DcSemigroup {
    base: Base,
    runs: Vec<DigitInterval>,
    tail: Option<Exponent>,
}

impl DcSemigroup {
    pub fn empty(base: Base) -> Self {
        DcSemigroup {
            base,
            runs: Vec::new(),
            tail: None,
        }
    }

    /// Every positive integer, `[b^0, +inf)`.
    pub fn all_positive(base: Base) -> Self {
        DcSemigroup {
            base,
            runs: Vec::new(),
            tail: Some(0),
        }
    }

    /// Builds the canonical form of `intervals ∪ [b^tail, +inf)`.
    ///
    /// Overlapping or adjacent runs merge; every run reaching the tail is
    /// absorbed into it.
    pub fn normalize(
        base: Base,
        intervals: impl IntoIterator<Item = DigitInterval>,
        tail: Option<Exponent>,
    ) -> Result<Self> {
        let mut sorted: Vec<DigitInterval> = intervals.into_iter().collect();
        sorted.sort_unstable();

        let mut runs: Vec<DigitInterval> = Vec::with_capacity(sorted.len());
        for iv in sorted {
            match runs.last_mut() {
                Some(last) if iv.start() <= last.end() => {
                    if iv.end() > last.end() {
                        *last = DigitInterval::new(last.start(), iv.end() - last.start())?;
                    }
                }
                _ => runs.push(iv),
            }
        }

        let mut tail = tail;
        if let Some(mut t) = tail {
            while let Some(last) = runs.last() {
                if last.end() < t {
                    break;
                }
                t = t.min(last.start());
                runs.pop();
            }
            tail = Some(t);
        }
        Ok(DcSemigroup { base, runs, tail })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn runs(&self) -> &[DigitInterval] {
        &self.runs
    }

    pub fn tail(&self) -> Option<Exponent> {
        self.tail
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty() && self.tail.is_none()
    }

    pub fn is_all_positive(&self) -> bool {
        self.tail == Some(0)
    }

    pub fn contains_exponent(&self, e: Exponent) -> bool {
        if self.tail.is_some_and(|t| e >= t) {
            return true;
        }
        // runs are sorted: find the last run starting at or before e
        let idx = self.runs.partition_point(|r| r.start() <= e);
        idx > 0 && self.runs[idx - 1].contains_exponent(e)
    }

    pub fn member(&self, x: &BigUint) -> Result<bool> {
        Ok(self.contains_exponent(digit_length(x, self.base)?))
    }

    /// Structural equality; errors when the bases differ.
    pub fn equals(&self, other: &DcSemigroup) -> Result<bool> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(self.base.get(), other.base.get()));
        }
        Ok(self.runs == other.runs && self.tail == other.tail)
    }

    /// Exponents `e < bound` whose digit class lies in the set.
    pub fn exponents_upto(&self, bound: Exponent) -> ExponentSet {
        let mut out: ExponentSet = self
            .runs
            .iter()
            .flat_map(|r| r.exponents())
            .take_while(|&e| e < bound)
            .collect();
        if let Some(t) = self.tail {
            out.extend(t..bound);
        }
        out
    }

    /// Renders in `I_b(start,len)` notation, joined by `sep`.
    pub fn render(&self, sep: &str) -> String {
        if self.is_all_positive() {
            return "N*".to_string();
        }
        if self.is_empty() {
            return "{}".to_string();
        }
        let b = self.base;
        let mut parts: Vec<String> = self
            .runs
            .iter()
            .map(|r| format!("I_{b}({},{})", r.start(), r.len()))
            .collect();
        if let Some(t) = self.tail {
            parts.push(format!("I_{b}({t},+inf)"));
        }
        parts.join(sep)
    }
}

impl fmt::Display for DcSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(" ∪ "))
    }
}
