//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or exceeds its time budget.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use digitclosed_core::closure::{exponent_set, smallest_dc_semigroup, ExponentSet};
use digitclosed_core::interval::{digit_length, interval_product, Base, DigitInterval, Exponent};
use digitclosed_core::oracle::{compare, index_closure, integer_closure};
use digitclosed_core::DcSemigroup;
use itertools::Itertools;
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

fn base(b: u32) -> Base {
    Base::new(b).unwrap()
}

fn iv(start: Exponent, len: Exponent) -> DigitInterval {
    DigitInterval::new(start, len).unwrap()
}

fn pow(b: u32, e: Exponent) -> BigUint {
    BigUint::from(b).pow(e as u32)
}

fn canonical(b: u32, runs: &[(Exponent, Exponent)], tail: Option<Exponent>) -> DcSemigroup {
    DcSemigroup::normalize(base(b), runs.iter().map(|&(s, l)| iv(s, l)), tail).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Closure of {1235, 54321} in base 10.
fn decimal_example() -> Outcome {
    let xs = [BigUint::from(1235u32), BigUint::from(54321u32)];
    let g = smallest_dc_semigroup(&xs, base(10)).map_err(|e| e.to_string())?;
    let expected = canonical(10, &[(3, 2)], Some(6));
    ensure(g == expected, || format!("got {g}, expected {expected}"))?;
    ensure(!g.member(&BigUint::from(123_456u32)).unwrap(), || {
        "six-digit number present".into()
    })?;

    // Same exponent set {3, 4} in base 3, closed over actual integers.
    let small = [pow(3, 3), pow(3, 4)];
    let closed = integer_closure(&small, base(3), 10).map_err(|e| e.to_string())?;
    ensure(!closed.present.contains(5), || {
        "integer closure contains exponent 5".into()
    })?;
    let g3 = smallest_dc_semigroup(&small, base(3)).unwrap();
    ensure(compare(&g3, &closed).matches(), || {
        "base-3 construction disagrees".into()
    })?;

    // The printed (3,5) reading differs from the closure exactly at exponent 5.
    let printed = canonical(10, &[(3, 5)], Some(6));
    let reference = index_closure(&[3, 4].into_iter().collect(), base(10), 20).unwrap();
    let diff = compare(&printed, &reference).differing;
    ensure(diff == vec![5], || {
        format!("printed form differs at {diff:?}")
    })?;
    Ok(format!("{g}; exponent 5 absent"))
}

/// Every base 2..=16, several generator sets with exponents {3, 4}.
fn remark_uniformity() -> Outcome {
    let mut checked = 0;
    for b in 2..=16u32 {
        let expected = canonical(b, &[(3, 2)], Some(6));
        let one = BigUint::from(1u32);
        let families = [
            vec![pow(b, 3), pow(b, 4)],
            vec![pow(b, 4) - &one, pow(b, 5) - &one],
            vec![
                pow(b, 3) + &one,
                pow(b, 4),
                pow(b, 4) + pow(b, 3),
                pow(b, 5) - &one,
            ],
        ];
        for xs in families {
            let j = exponent_set(&xs, base(b)).unwrap();
            ensure(j == [3, 4].into_iter().collect(), || {
                format!("b={b}: J = {j:?}")
            })?;
            let g = smallest_dc_semigroup(&xs, base(b)).unwrap();
            ensure(g == expected, || format!("b={b}: got {g}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} generator sets over bases 2..=16"))
}

/// Cases with a one-digit generator.
fn small_cases() -> Outcome {
    let one = smallest_dc_semigroup(&[BigUint::from(1u32)], base(2)).unwrap();
    ensure(one == canonical(2, &[(0, 1)], None), || {
        format!("({{1}}, 2) gave {one}")
    })?;
    let all = smallest_dc_semigroup(&[BigUint::from(1u32), BigUint::from(2u32)], base(2)).unwrap();
    ensure(all.is_all_positive(), || format!("({{1,2}}, 2) gave {all}"))?;
    let mut n = 2;
    for b in 3..=16u32 {
        for x in 1..b {
            let g = smallest_dc_semigroup(&[BigUint::from(x)], base(b)).unwrap();
            ensure(g.is_all_positive(), || format!("({{{x}}}, {b}) gave {g}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} cases"))
}

/// 127 exponent sets per base against the index oracle, bound 60.
fn exhaustive_index_sweep() -> Outcome {
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for b in [2u32, 3, 4, 5, 10] {
        for mask in 1u32..128 {
            let j: ExponentSet = (0..7).filter(|e| mask >> e & 1 == 1).collect();
            let xs: Vec<BigUint> = j.iter().map(|e| pow(b, e)).collect();
            let g = smallest_dc_semigroup(&xs, base(b)).unwrap();
            let reference = index_closure(&j, base(b), 60).unwrap();
            let cmp = compare(&g, &reference);
            if !cmp.matches() {
                mismatches.push((b, mask, cmp.differing));
            }
            cases += 1;
        }
    }
    ensure(cases == 635, || format!("{cases} cases"))?;
    ensure(mismatches.is_empty(), || {
        format!("mismatches: {mismatches:?}")
    })?;
    Ok(format!("{cases} cases, 0 mismatches"))
}

/// Integer closure, index closure and construction on small generator sets.
fn integer_cross_check() -> Outcome {
    let mut cases = 0;
    for b in [2u32, 3] {
        let candidates: BTreeSet<BigUint> = (0..=4)
            .flat_map(|j| [pow(b, j), pow(b, j) + 1u32])
            .collect();
        for size in 1..=3 {
            for xs in candidates.iter().cloned().combinations(size) {
                let ints = integer_closure(&xs, base(b), 10).map_err(|e| e.to_string())?;
                let j = exponent_set(&xs, base(b)).unwrap();
                let idx = index_closure(&j, base(b), 10).unwrap();
                let g = smallest_dc_semigroup(&xs, base(b)).unwrap();
                ensure(ints == idx, || {
                    format!(
                        "b={b}, X={xs:?}: integer {:?} vs index {:?}",
                        ints.present, idx.present
                    )
                })?;
                ensure(compare(&g, &idx).matches(), || {
                    format!("b={b}, X={xs:?}: construction {g}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} generator sets, 0 mismatches"))
}

/// Largest operand enumerated element by element.
const COVERAGE_CAP: u128 = 1_000_000;

/// Exponents of all products a·c, a in [b^i, b^(i+k)), c in [b^j, b^(j+l)).
///
/// Walks every a of the smaller interval; for each candidate exponent e it
/// takes the least c with a·c >= b^e and checks a·c < b^(e+1).
fn achieved_exponents(b: u128, (i, k): (u32, u32), (j, l): (u32, u32)) -> Option<BTreeSet<u32>> {
    let (mut lo_a, mut hi_a) = (b.pow(i), b.pow(i + k));
    let (mut lo_c, mut hi_c) = (b.pow(j), b.pow(j + l));
    if hi_a - lo_a > hi_c - lo_c {
        std::mem::swap(&mut lo_a, &mut lo_c);
        std::mem::swap(&mut hi_a, &mut hi_c);
    }
    if hi_a - lo_a > COVERAGE_CAP {
        return None;
    }
    let top = i + k + j + l + 1;
    let powers: Vec<u128> = (0..=top).map(|e| b.pow(e)).collect();
    let exp_of = |x: u128| powers.iter().rposition(|&p| p <= x).unwrap() as u32;
    let mut hit = BTreeSet::new();
    for a in lo_a..hi_a {
        let first = exp_of(a * lo_c);
        let last = exp_of(a * (hi_c - 1));
        for e in first..=last {
            let c = lo_c.max(powers[e as usize].div_ceil(a));
            if c < hi_c && a * c < powers[e as usize + 1] {
                hit.insert(e);
            }
        }
    }
    Some(hit)
}

fn product_coverage() -> Outcome {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut check = |b: u32, (i, k): (u32, u32), (j, l): (u32, u32), expected: BTreeSet<u32>| {
        match achieved_exponents(b.into(), (i, k), (j, l)) {
            None => {
                skipped.push((b, i, k, j, l));
                Ok(())
            }
            Some(hit) => {
                checked += 1;
                ensure(hit == expected, || {
                    format!("b={b} I({i},{k})·I({j},{l}): got {hit:?}, expected {expected:?}")
                })
            }
        }
    };
    for b in 3..=10u32 {
        for (i, j) in (0..=4).cartesian_product(0..=4) {
            for (k, l) in (1..=3).cartesian_product(1..=3) {
                let p = interval_product(iv(i.into(), k.into()), iv(j.into(), l.into()), base(b))
                    .unwrap();
                let expected = p.exponents().map(|e| e as u32).collect();
                check(b, (i, k), (j, l), expected)?;
            }
        }
    }
    for (i, j) in (0..=5).cartesian_product(0..=5) {
        for (k, l) in (1..=3).cartesian_product(1..=3) {
            if i + k < 2 || j + l < 2 {
                continue;
            }
            let expected = (i + j..i + j + k + l).collect();
            check(2, (i, k), (j, l), expected)?;
        }
    }
    for j in 0..=5 {
        for l in 1..=3 {
            let expected: BTreeSet<u32> = (j..j + l).collect();
            check(2, (0, 1), (j, l), expected.clone())?;
            check(2, (j, l), (0, 1), expected)?;
        }
    }
    Ok(format!(
        "{checked} cells exact, {} skipped (both operands above {COVERAGE_CAP} elements): {skipped:?}",
        skipped.len()
    ))
}

fn algebraic_laws() -> Outcome {
    let mut triples = 0;
    for b in 2..=12u32 {
        let base = base(b);
        let ivs: Vec<DigitInterval> = (0..=8)
            .cartesian_product(1..=4)
            .map(|(s, l)| iv(s, l))
            .collect();
        let mul = |x, y| interval_product(x, y, base).unwrap();
        for &x in &ivs {
            for &y in &ivs {
                ensure(mul(x, y) == mul(y, x), || {
                    format!("b={b}: {x:?}·{y:?} not commutative")
                })?;
                for &z in &ivs {
                    ensure(mul(mul(x, y), z) == mul(x, mul(y, z)), || {
                        format!("b={b}: ({x:?},{y:?},{z:?}) not associative")
                    })?;
                    triples += 1;
                }
            }
        }
    }
    let mut boundaries = 0;
    for b in 2..=16u32 {
        for k in 0..=30u64 {
            let p = pow(b, k);
            let next = pow(b, k + 1);
            ensure(digit_length(&p, base(b)).unwrap() == k, || {
                format!("b^{k}, b={b}")
            })?;
            if &p + 1u32 < next {
                ensure(digit_length(&(&p + 1u32), base(b)).unwrap() == k, || {
                    format!("b^{k}+1, b={b}")
                })?;
            }
            ensure(digit_length(&(&next - 1u32), base(b)).unwrap() == k, || {
                format!("b^{}-1, b={b}", k + 1)
            })?;
            if k >= 1 {
                ensure(
                    digit_length(&(&p - 1u32), base(b)).unwrap() == k - 1,
                    || format!("b^{k}-1, b={b}"),
                )?;
            }
            boundaries += 1;
        }
    }
    Ok(format!("{triples} triples, {boundaries} power boundaries"))
}

/// Random canonical sets, split into overlapping fragments and renormalized.
fn canonical_form() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let b = base(10);
    for case in 0..10_000 {
        let bound: Exponent = 40;
        let present: BTreeSet<Exponent> = (0..bound).filter(|_| rng.gen_bool(0.4)).collect();
        let tail = rng.gen_bool(0.5).then(|| rng.gen_range(0..bound));

        let expected: BTreeSet<Exponent> = match tail {
            Some(t) => present.iter().copied().chain(t..bound).collect(),
            None => present.clone(),
        };

        let mut fragments = Vec::new();
        for &e in &present {
            // class e, sometimes widened to a fragment staying inside the set
            let mut len = 1;
            while rng.gen_bool(0.3) && expected.contains(&(e + len)) {
                len += 1;
            }
            fragments.push(iv(e, len));
        }
        if let Some(t) = tail {
            for _ in 0..rng.gen_range(0..3) {
                fragments.push(iv(rng.gen_range(t..bound + 5), rng.gen_range(1..6)));
            }
        }
        let direct = DcSemigroup::normalize(b, present.iter().map(|&e| iv(e, 1)), tail).unwrap();
        // shuffle
        for i in (1..fragments.len()).rev() {
            fragments.swap(i, rng.gen_range(0..=i));
        }
        let split = DcSemigroup::normalize(b, fragments, tail).unwrap();
        ensure(split == direct, || {
            format!("case {case}: {split} vs {direct}")
        })?;
        let again = DcSemigroup::normalize(b, split.runs().iter().copied(), split.tail()).unwrap();
        ensure(again == split, || format!("case {case}: not idempotent"))?;
        let got: BTreeSet<Exponent> = split.exponents_upto(bound).iter().collect();
        ensure(got == expected, || format!("case {case}: set changed"))?;
    }
    Ok("10000 random cases".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 example {1235, 54321} in base 10", decimal_example, 1),
        (
            "2 exponents {3,4} uniform over bases 2..=16",
            remark_uniformity,
            1,
        ),
        ("3 one-digit generator cases", small_cases, 1),
        (
            "4 exhaustive index-oracle equivalence",
            exhaustive_index_sweep,
            30,
        ),
        ("5 integer-closure cross-check", integer_cross_check, 60),
        ("6 product coverage", product_coverage, 120),
        (
            "7 algebraic laws and digit-length boundaries",
            algebraic_laws,
            5,
        ),
        ("8 canonical form under random splitting", canonical_form, 5),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let started = Instant::now();
        let outcome = check();
        let elapsed = started.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(budget) => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget}s"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
