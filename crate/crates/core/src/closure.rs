//! Construction of the smallest digit-closed semigroup containing a finite set.
//!
//! Only the exponent set `J = { floor(log_b x) : x in X }` matters. Three
//! cases, by the smallest exponent `j0`:
//!
//! 1. `j0 > 0`. With `l0` the length of the maximal run starting at `j0` and
//!    `d = ceil(j0 / l0)`, every class from `t = d * j0` on is generated.
//!    Below `t` the semigroup is the union of all products of fewer than `d`
//!    runs of `J` (repetition allowed).
//! 2. `j0 = 0`, base 2. The class of exponent 0 is `{1}`, a neutral element:
//!    solve case 1 for `J \ {0}` and add `{1}`.
//! 3. `j0 = 0`, base above 2. Every positive integer is generated.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::interval::{digit_length, interval_product, Base, DigitInterval, Exponent};
use crate::semigroup::DcSemigroup;

/// Upper limit on `d`; the number of run multisets grows like `C(n + d, d)`.
pub const MAX_PRODUCT_DEPTH: u64 = 10_000;

/// A finite set of exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ExponentSet(BTreeSet<Exponent>);

impl ExponentSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, e: Exponent) -> bool {
        self.0.contains(&e)
    }

    pub fn insert(&mut self, e: Exponent) -> bool {
        self.0.insert(e)
    }

    pub fn min(&self) -> Option<Exponent> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<Exponent> {
        self.0.last().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Exponent> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &ExponentSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Elements present in exactly one of the two sets.
    pub fn symmetric_difference(&self, other: &ExponentSet) -> Vec<Exponent> {
        self.0.symmetric_difference(&other.0).copied().collect()
    }

    /// Elements strictly below `bound`.
    pub fn below(&self, bound: Exponent) -> ExponentSet {
        ExponentSet(self.0.range(..bound).copied().collect())
    }
}

impl FromIterator<Exponent> for ExponentSet {
    fn from_iter<I: IntoIterator<Item = Exponent>>(iter: I) -> Self {
        ExponentSet(iter.into_iter().collect())
    }
}

impl Extend<Exponent> for ExponentSet {
    fn extend<I: IntoIterator<Item = Exponent>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

/// Maximal runs of consecutive exponents, in increasing order and separated
/// by at least one missing exponent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunDecomposition(Vec<DigitInterval>);

impl RunDecomposition {
    pub fn runs(&self) -> &[DigitInterval] {
        &self.0
    }

    pub fn first(&self) -> Option<DigitInterval> {
        self.0.first().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// What a run `I_b(j, l)` inside a semigroup forces about its tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailResult {
    /// `I_b(t, +inf)` is contained in the semigroup.
    TailAt(Exponent),
    AllPositiveIntegers,
    /// The run is `I_2(0, 1) = {1}`, which generates nothing new.
    NoTail,
}

/// Which branch of the construction produced a semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// No generators.
    Empty,
    /// Smallest exponent positive.
    Offset { d: u64, t: Exponent },
    /// Base 2 with `1` among the generators; `inner` is the offset case for
    /// the remaining exponents, if any.
    BinaryUnit { inner: Option<(u64, Exponent)> },
    /// Base above 2 with a one-digit generator.
    AllPositive,
}

/// Result of [`construct`], with the exponent set and the branch taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub exponents: ExponentSet,
    pub case: Case,
    pub semigroup: DcSemigroup,
}

pub fn exponent_set<'a>(
    xs: impl IntoIterator<Item = &'a BigUint>,
    base: Base,
) -> Result<ExponentSet> {
    xs.into_iter().map(|x| digit_length(x, base)).collect()
}

pub fn decompose_runs(exponents: &ExponentSet) -> RunDecomposition {
    let mut runs: Vec<DigitInterval> = Vec::new();
    let mut iter = exponents.iter();
    let Some(mut start) = iter.next() else {
        return RunDecomposition::default();
    };
    let mut prev = start;
    for e in iter {
        if e != prev + 1 {
            runs.push(run(start, prev));
            start = e;
        }
        prev = e;
    }
    runs.push(run(start, prev));
    RunDecomposition(runs)
}

fn run(first: Exponent, last: Exponent) -> DigitInterval {
    // last < u64::MAX whenever a run of length last - first + 1 fits
    DigitInterval::new(first, last - first + 1).expect("run within exponent range")
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a / b + u64::from(!a.is_multiple_of(b))
}

/// Tail forced by `I_b(j, l)` being in the semigroup, with `d = ceil(j / l)`.
pub fn tail_start(j: Exponent, l: u64, base: Base) -> Result<TailResult> {
    if l == 0 {
        return Err(Error::EmptyInterval);
    }
    let d = ceil_div(j, l);
    if d >= 1 {
        return d
            .checked_mul(j)
            .map(TailResult::TailAt)
            .ok_or(Error::ExponentOverflow);
    }
    if !base.is_binary() || l >= 2 {
        Ok(TailResult::AllPositiveIntegers)
    } else {
        Ok(TailResult::NoTail)
    }
}

/// Products of every multiset of `runs` with `1 <= size < d`, deduplicated
/// and sorted.
///
/// Level `e` is built from level `e - 1` by multiplying with each run, which
/// covers every multiset of size `e` without listing orderings twice.
pub fn enumerate_multiset_products(
    runs: &RunDecomposition,
    d: u64,
    base: Base,
) -> Result<Vec<DigitInterval>> {
    if d > MAX_PRODUCT_DEPTH {
        return Err(Error::ResourceLimit(format!(
            "product depth {d} exceeds {MAX_PRODUCT_DEPTH}"
        )));
    }
    let mut all: BTreeSet<DigitInterval> = BTreeSet::new();
    if d < 2 || runs.is_empty() {
        return Ok(Vec::new());
    }
    let mut level: BTreeSet<DigitInterval> = runs.runs().iter().copied().collect();
    all.extend(level.iter().copied());
    for _ in 2..d {
        let mut next = BTreeSet::new();
        for p in &level {
            for r in runs.runs() {
                next.insert(interval_product(*p, *r, base)?);
            }
        }
        all.extend(next.iter().copied());
        level = next;
    }
    Ok(all.into_iter().collect())
}

/// Smallest digit-closed semigroup containing `xs`. Empty input gives the
/// empty set.
pub fn smallest_dc_semigroup<'a>(
    xs: impl IntoIterator<Item = &'a BigUint>,
    base: Base,
) -> Result<DcSemigroup> {
    construct(xs, base).map(|c| c.semigroup)
}

pub fn construct<'a>(
    xs: impl IntoIterator<Item = &'a BigUint>,
    base: Base,
) -> Result<Construction> {
    construct_from_exponents(exponent_set(xs, base)?, base)
}

/// Same as [`construct`] for generators given by their exponents.
pub fn construct_from_exponents(exponents: ExponentSet, base: Base) -> Result<Construction> {
    let Some(j0) = exponents.min() else {
        return Ok(Construction {
            exponents,
            case: Case::Empty,
            semigroup: DcSemigroup::empty(base),
        });
    };

    let (case, semigroup) = if j0 > 0 {
        let (d, t, semigroup) = offset_case(&exponents, base)?;
        (Case::Offset { d, t }, semigroup)
    } else if !base.is_binary() {
        (Case::AllPositive, DcSemigroup::all_positive(base))
    } else {
        let rest: ExponentSet = exponents.iter().filter(|&e| e > 0).collect();
        if rest.is_empty() {
            let unit = DcSemigroup::normalize(base, [DigitInterval::UNIT], None)?;
            (Case::BinaryUnit { inner: None }, unit)
        } else {
            let (d, t, inner) = offset_case(&rest, base)?;
            let runs = inner.runs().iter().copied().chain([DigitInterval::UNIT]);
            let semigroup = DcSemigroup::normalize(base, runs, inner.tail())?;
            (
                Case::BinaryUnit {
                    inner: Some((d, t)),
                },
                semigroup,
            )
        }
    };
    Ok(Construction {
        exponents,
        case,
        semigroup,
    })
}

/// Case 1: requires `min(exponents) > 0`. Returns `(d, t, semigroup)`.
fn offset_case(exponents: &ExponentSet, base: Base) -> Result<(u64, Exponent, DcSemigroup)> {
    let first = decompose_runs(exponents)
        .first()
        .expect("non-empty exponent set");
    let (j0, l0) = (first.start(), first.len());
    debug_assert!(j0 > 0);
    let d = ceil_div(j0, l0);
    let t = match tail_start(j0, l0, base)? {
        TailResult::TailAt(t) => t,
        other => unreachable!("positive start always yields a tail, got {other:?}"),
    };
    if d == 1 {
        return Ok((d, t, DcSemigroup::normalize(base, [], Some(t))?));
    }
    let runs = decompose_runs(&exponents.below(t));
    let products = enumerate_multiset_products(&runs, d, base)?;
    Ok((d, t, DcSemigroup::normalize(base, products, Some(t))?))
}
