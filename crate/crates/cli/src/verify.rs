//! The `verify` subcommand: re-runs every library invariant as a named check
//! and reports one line per check. All comparisons are exact; a failure
//! prints the violated invariant together with witness values.
//!
//! `--max-n` bounds the sequence and counting checks, `--order` the matrix
//! checks. The closed-form partition sums are exponential in n and stay
//! capped at their documented practical limits regardless of the knobs.
//! Randomized inputs come from fixed-seed generators, so a given invocation
//! is fully deterministic.

use std::io::{self, Write};

use partex::oracle::{brute_partition_count, dense_exp, dense_expand, dense_mul};
use partex::partitions::{enumerate_partitions, partition_sum_inverse, partition_sum_transform};
use partex::sequences::{
    divisor_sum, partition_count, seed_from_flavor, seed_from_transform, transform_from_seed,
};
use partex::toeplitz::{band_mul, seed_matrix, toeplitz_exp, toeplitz_log};
use partex::{
    BandMatrix, BigInt, DivisorFlavor, One, Rational, SeedSequence, TransformedSequence, Zero,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct VerifyOptions {
    pub max_n: usize,
    pub order: usize,
}

type CheckFn = fn(&VerifyOptions) -> Result<(), String>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("seed/transform round trip", check_round_trip),
    ("partition counts are integral", check_integrality),
    ("partition recurrence (all divisors)", check_recurrence_all),
    (
        "partition recurrence (restricted divisors)",
        check_recurrence_restricted,
    ),
    (
        "not-div-2 flavor equals the odd flavor",
        check_flavor_consistency,
    ),
    ("partition counts never decrease", check_monotonicity),
    (
        "matrix exponential matches the transform recurrence",
        check_exp_matches_transform,
    ),
    ("band product matches the dense product", check_band_product),
    (
        "powers of a strict band vanish below their distance",
        check_nilpotency,
    ),
    (
        "exponential and logarithm invert each other",
        check_exp_log_inverse,
    ),
    (
        "exponential is constant along diagonals",
        check_constant_diagonals,
    ),
    (
        "closed-form partition sum matches the transform",
        check_partition_sum_transform,
    ),
    (
        "closed-form partition sum satisfies the recurrence",
        check_partition_sum_recurrence,
    ),
    (
        "inverse closed form recovers the seed",
        check_partition_sum_inverse,
    ),
    (
        "enumeration counts match the tables",
        check_enumeration_counts,
    ),
    (
        "ordered compositions count r!/(product of multiplicity!)",
        check_composition_multiplicities,
    ),
    (
        "brute-force counting agrees with the recurrence",
        check_oracle_counting,
    ),
    (
        "dense and band exponentials agree",
        check_oracle_exponential,
    ),
];

/// Run every check, print one line each, return whether all passed.
pub fn run(options: &VerifyOptions, out: &mut dyn Write) -> io::Result<bool> {
    let mut failures = 0usize;
    for (name, check) in CHECKS {
        match check(options) {
            Ok(()) => writeln!(out, "ok   {name}")?,
            Err(witness) => {
                failures += 1;
                writeln!(out, "FAIL {name}: {witness}")?;
            }
        }
    }
    if failures == 0 {
        writeln!(
            out,
            "verify: {} checks passed (max-n {}, order {})",
            CHECKS.len(),
            options.max_n,
            options.order
        )?;
        Ok(true)
    } else {
        writeln!(
            out,
            "verify: {failures} of {} checks failed (max-n {}, order {})",
            CHECKS.len(),
            options.max_n,
            options.order
        )?;
        Ok(false)
    }
}

const SIX_FLAVORS: [DivisorFlavor; 6] = [
    DivisorFlavor::All,
    DivisorFlavor::Odd,
    DivisorFlavor::NotDiv(2),
    DivisorFlavor::NotDiv(3),
    DivisorFlavor::NotDiv(5),
    DivisorFlavor::NotDiv(7),
];

fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xbad5eed ^ stream)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(
        BigInt::from(rng.random_range(-9i64..=9)),
        BigInt::from(rng.random_range(1i64..=6)),
    )
}

fn random_seed(rng: &mut ChaCha8Rng, len: usize) -> SeedSequence {
    let mut terms = vec![Rational::zero()];
    for _ in 1..len {
        terms.push(random_rational(rng));
    }
    SeedSequence::new(terms).expect("starts with zero")
}

fn random_transformed(rng: &mut ChaCha8Rng, len: usize) -> TransformedSequence {
    let mut terms = vec![Rational::one()];
    for _ in 1..len {
        terms.push(if rng.random_range(0..4) == 0 {
            Rational::zero()
        } else {
            random_rational(rng)
        });
    }
    TransformedSequence::new(terms).expect("starts with one")
}

fn random_strict_band(rng: &mut ChaCha8Rng, order: usize) -> BandMatrix {
    let mut band = vec![Rational::zero()];
    for _ in 1..order {
        band.push(random_rational(rng));
    }
    BandMatrix::new(band).expect("non-empty")
}

fn first_difference(a: &[Rational], b: &[Rational]) -> Option<usize> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()));
    }
    (0..a.len()).find(|&i| a[i] != b[i])
}

// --- sequence checks -------------------------------------------------------

fn check_round_trip(options: &VerifyOptions) -> Result<(), String> {
    let mut seeds: Vec<(String, SeedSequence)> = SIX_FLAVORS
        .iter()
        .map(|&f| (format!("flavor {f}"), seed_from_flavor(options.max_n, f)))
        .collect();
    let mut rng = rng(1);
    for sample in 0..20 {
        let len = rng.random_range(1..=options.max_n.max(1) + 1);
        seeds.push((format!("random #{sample}"), random_seed(&mut rng, len)));
    }
    for (label, seed) in &seeds {
        let back = seed_from_transform(&transform_from_seed(seed));
        if let Some(i) = first_difference(back.terms(), seed.terms()) {
            return Err(format!(
                "{label}: index {i} came back as {} instead of {}",
                back.terms()[i],
                seed.terms()[i]
            ));
        }
    }
    Ok(())
}

fn check_integrality(options: &VerifyOptions) -> Result<(), String> {
    for flavor in SIX_FLAVORS {
        partition_count(options.max_n, flavor).map_err(|err| format!("flavor {flavor}: {err}"))?;
    }
    Ok(())
}

fn recurrence_holds(flavor: DivisorFlavor, max_n: usize) -> Result<(), String> {
    let p = partition_count(max_n, flavor).map_err(|err| err.to_string())?;
    for n in 1..=max_n {
        let mut rhs = BigInt::zero();
        for h in 1..=n {
            rhs += divisor_sum(h as u64, flavor).map_err(|err| err.to_string())? * &p[n - h];
        }
        let lhs = BigInt::from(n) * &p[n];
        if lhs != rhs {
            return Err(format!(
                "flavor {flavor}, n = {n}: n*p(n) = {lhs} but the divisor sum gives {rhs}"
            ));
        }
    }
    Ok(())
}

fn check_recurrence_all(options: &VerifyOptions) -> Result<(), String> {
    recurrence_holds(DivisorFlavor::All, options.max_n)
}

fn check_recurrence_restricted(options: &VerifyOptions) -> Result<(), String> {
    for flavor in [
        DivisorFlavor::Odd,
        DivisorFlavor::NotDiv(2),
        DivisorFlavor::NotDiv(3),
        DivisorFlavor::NotDiv(5),
        DivisorFlavor::NotDiv(7),
    ] {
        recurrence_holds(flavor, options.max_n)?;
    }
    Ok(())
}

fn check_flavor_consistency(options: &VerifyOptions) -> Result<(), String> {
    for n in 1..=options.max_n.max(1) as u64 {
        let via_not_div = divisor_sum(n, DivisorFlavor::NotDiv(2)).map_err(|e| e.to_string())?;
        let via_odd = divisor_sum(n, DivisorFlavor::Odd).map_err(|e| e.to_string())?;
        if via_not_div != via_odd {
            return Err(format!(
                "n = {n}: not-div 2 gives {via_not_div}, odd gives {via_odd}"
            ));
        }
    }
    Ok(())
}

fn check_monotonicity(options: &VerifyOptions) -> Result<(), String> {
    for flavor in SIX_FLAVORS {
        let p = partition_count(options.max_n, flavor).map_err(|err| err.to_string())?;
        for n in 2..p.len() {
            if p[n] < p[n - 1] {
                return Err(format!(
                    "flavor {flavor}: p({n}) = {} < p({}) = {}",
                    p[n],
                    n - 1,
                    p[n - 1]
                ));
            }
        }
    }
    Ok(())
}

// --- matrix checks ---------------------------------------------------------

/// Test-only hook: setting PARTEX_INJECT_FAULT=band-mul corrupts the band
/// products used below, so the failure path of `verify` stays exercised end
/// to end.
fn hooked_band_mul(a: &BandMatrix, b: &BandMatrix) -> partex::Result<BandMatrix> {
    let product = band_mul(a, b)?;
    let faulty = std::env::var("PARTEX_INJECT_FAULT").is_ok_and(|v| v == "band-mul");
    if !faulty || product.order() < 2 {
        return Ok(product);
    }
    let mut band = product.into_band();
    let last = band.last_mut().expect("order checked above");
    *last += Rational::one();
    BandMatrix::new(band)
}

/// The exponential series evaluated through [`hooked_band_mul`]: running term
/// times S, divided by r, summed. Identical to the library path unless the
/// fault hook is active.
fn exp_by_band_products(matrix: &BandMatrix) -> partex::Result<BandMatrix> {
    let order = matrix.order();
    let mut acc = BandMatrix::identity(order)?;
    let mut term = BandMatrix::identity(order)?;
    for r in 1..order {
        term = hooked_band_mul(&term, matrix)?;
        let divisor = BigInt::from(r);
        let band: Vec<Rational> = term
            .band()
            .iter()
            .map(|value| value.clone() / divisor.clone())
            .collect();
        term = BandMatrix::new(band)?;
        let summed: Vec<Rational> = acc
            .band()
            .iter()
            .zip(term.band())
            .map(|(a, b)| a + b)
            .collect();
        acc = BandMatrix::new(summed)?;
    }
    Ok(acc)
}

fn check_exp_matches_transform(options: &VerifyOptions) -> Result<(), String> {
    let order = options.order.max(1);
    let mut seeds: Vec<(String, SeedSequence)> = [
        DivisorFlavor::All,
        DivisorFlavor::Odd,
        DivisorFlavor::NotDiv(3),
    ]
    .iter()
    .map(|&f| (format!("flavor {f}"), seed_from_flavor(order - 1, f)))
    .collect();
    let mut rng = rng(7);
    for sample in 0..5 {
        seeds.push((format!("random #{sample}"), random_seed(&mut rng, order)));
    }
    for (label, seed) in &seeds {
        let matrix = seed_matrix(seed, order).map_err(|err| err.to_string())?;
        let expected = transform_from_seed(seed);
        let expected = &expected.terms()[..order];

        let direct = toeplitz_exp(&matrix).map_err(|err| err.to_string())?;
        if let Some(i) = first_difference(direct.band(), expected) {
            return Err(format!(
                "{label}: exp band index {i} is {}, the recurrence gives {}",
                direct.band()[i],
                expected[i]
            ));
        }

        let series = exp_by_band_products(&matrix).map_err(|err| err.to_string())?;
        if let Some(i) = first_difference(series.band(), expected) {
            return Err(format!(
                "{label}: series band index {i} is {}, the recurrence gives {}",
                series.band()[i],
                expected[i]
            ));
        }
    }
    Ok(())
}

fn check_band_product(options: &VerifyOptions) -> Result<(), String> {
    let mut rng = rng(8);
    for _ in 0..8 {
        let order = rng.random_range(1..=options.order.max(1));
        let len = order;
        let a = BandMatrix::new((0..len).map(|_| random_rational(&mut rng)).collect())
            .expect("non-empty");
        let b = BandMatrix::new((0..len).map(|_| random_rational(&mut rng)).collect())
            .expect("non-empty");
        let fast = dense_expand(&band_mul(&a, &b).map_err(|err| err.to_string())?);
        let slow =
            dense_mul(&dense_expand(&a), &dense_expand(&b)).map_err(|err| err.to_string())?;
        if fast != slow {
            return Err(format!("order {order}: band and dense products differ"));
        }
    }
    Ok(())
}

fn check_nilpotency(options: &VerifyOptions) -> Result<(), String> {
    let mut rng = rng(9);
    for order in 1..=options.order.min(10) {
        let s = random_strict_band(&mut rng, order);
        let mut power = BandMatrix::identity(order).expect("positive order");
        for r in 1..=order {
            power = band_mul(&power, &s).map_err(|err| err.to_string())?;
            let dense = dense_expand(&power);
            for (i, row) in dense.iter().enumerate() {
                for (j, value) in row.iter().enumerate() {
                    if j < i + r && !value.is_zero() {
                        return Err(format!(
                            "order {order}, power {r}: entry ({i}, {j}) is {value}, not 0"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_exp_log_inverse(options: &VerifyOptions) -> Result<(), String> {
    let mut rng = rng(10);
    let order = options.order.max(1);
    for sample in 0..8 {
        let s = random_strict_band(&mut rng, order);
        let back = toeplitz_log(&toeplitz_exp(&s).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        if back != s {
            return Err(format!("random strict band #{sample}: log(exp(S)) != S"));
        }

        let t = random_transformed(&mut rng, order);
        let m = BandMatrix::new(t.terms().to_vec()).expect("non-empty");
        let forth = toeplitz_exp(&toeplitz_log(&m).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        if forth != m {
            return Err(format!("random unit band #{sample}: exp(log(T)) != T"));
        }
    }
    Ok(())
}

fn check_constant_diagonals(options: &VerifyOptions) -> Result<(), String> {
    let mut rng = rng(11);
    let order = options.order.max(1);
    let s = random_strict_band(&mut rng, order);
    let dense = dense_expand(&toeplitz_exp(&s).map_err(|e| e.to_string())?);
    for distance in 0..order {
        for i in 1..order - distance {
            if dense[i][i + distance] != dense[0][distance] {
                return Err(format!(
                    "distance {distance}: entry ({i}, {}) is {}, entry (0, {distance}) is {}",
                    i + distance,
                    dense[i][i + distance],
                    dense[0][distance]
                ));
            }
        }
    }
    Ok(())
}

// --- closed-form partition sum checks --------------------------------------

/// The closed forms enumerate every partition of n, so they stay capped at
/// their documented practical limit no matter what --max-n says.
const CLOSED_FORM_CAP: usize = 25;
const ENUMERATION_CAP: usize = 30;
const COMPOSITION_CAP: u64 = 12;

fn closed_form_seeds(options: &VerifyOptions, stream: u64) -> Vec<(String, SeedSequence)> {
    let n_max = options.max_n.min(CLOSED_FORM_CAP);
    let mut seeds: Vec<(String, SeedSequence)> = [
        DivisorFlavor::All,
        DivisorFlavor::Odd,
        DivisorFlavor::NotDiv(3),
    ]
    .iter()
    .map(|&f| (format!("flavor {f}"), seed_from_flavor(n_max, f)))
    .collect();
    let mut rng = rng(stream);
    for sample in 0..3 {
        seeds.push((
            format!("random #{sample}"),
            random_seed(&mut rng, n_max + 1),
        ));
    }
    seeds
}

fn check_partition_sum_transform(options: &VerifyOptions) -> Result<(), String> {
    for (label, seed) in closed_form_seeds(options, 12) {
        let t = transform_from_seed(&seed);
        for n in 1..seed.terms().len() {
            let direct = partition_sum_transform(&seed, n).map_err(|e| e.to_string())?;
            if direct != t.terms()[n] {
                return Err(format!(
                    "{label}, n = {n}: partition sum gives {direct}, recurrence gives {}",
                    t.terms()[n]
                ));
            }
        }
    }
    Ok(())
}

fn check_partition_sum_recurrence(options: &VerifyOptions) -> Result<(), String> {
    for (label, seed) in closed_form_seeds(options, 13) {
        let s = seed.terms();
        let mut tau = vec![Rational::one()];
        for n in 1..s.len() {
            tau.push(partition_sum_transform(&seed, n).map_err(|e| e.to_string())?);
        }
        for big_n in 1..s.len() {
            let mut acc = Rational::zero();
            for (n, tau_n) in tau.iter().enumerate().take(big_n) {
                acc += &s[big_n - n] * tau_n;
            }
            let rhs = acc / BigInt::from(big_n);
            if tau[big_n] != rhs {
                return Err(format!(
                    "{label}, N = {big_n}: closed form gives {}, recurrence gives {rhs}",
                    tau[big_n]
                ));
            }
        }
    }
    Ok(())
}

fn check_partition_sum_inverse(options: &VerifyOptions) -> Result<(), String> {
    let n_max = options.max_n.min(CLOSED_FORM_CAP);
    let mut transforms: Vec<(String, TransformedSequence)> = SIX_FLAVORS
        .iter()
        .map(|&f| {
            let counts = partition_count(n_max, f).expect("divisor seeds stay integral");
            (
                format!("flavor {f}"),
                TransformedSequence::new(counts.into_iter().map(Rational::from_integer).collect())
                    .expect("starts with one"),
            )
        })
        .collect();
    let mut rng = rng(14);
    for sample in 0..3 {
        transforms.push((
            format!("random #{sample}"),
            random_transformed(&mut rng, n_max + 1),
        ));
    }
    for (label, t) in &transforms {
        let seed = seed_from_transform(t);
        for n in 1..t.terms().len() {
            let scaled = partition_sum_inverse(t, n).map_err(|e| e.to_string())? * BigInt::from(n);
            if scaled != seed.terms()[n] {
                return Err(format!(
                    "{label}, n = {n}: n * inverse sum gives {scaled}, inversion gives {}",
                    seed.terms()[n]
                ));
            }
        }
    }
    Ok(())
}

fn check_enumeration_counts(options: &VerifyOptions) -> Result<(), String> {
    let n_max = options.max_n.min(ENUMERATION_CAP);
    for flavor in [
        DivisorFlavor::All,
        DivisorFlavor::Odd,
        DivisorFlavor::NotDiv(3),
    ] {
        let table = partition_count(n_max, flavor).map_err(|e| e.to_string())?;
        for (n, expected) in table.iter().enumerate().skip(1) {
            let listed = enumerate_partitions(n as u64, None, flavor).len();
            if &BigInt::from(listed) != expected {
                return Err(format!(
                    "flavor {flavor}, n = {n}: enumeration lists {listed}, table says {expected}"
                ));
            }
        }
    }
    // splitting by summand count partitions the full set
    let table = partition_count(n_max, DivisorFlavor::All).map_err(|e| e.to_string())?;
    for (n, expected) in table.iter().enumerate().skip(1) {
        let mut by_summands = 0usize;
        for r in 1..=n as u64 {
            by_summands += enumerate_partitions(n as u64, Some(r), DivisorFlavor::All).len();
        }
        if &BigInt::from(by_summands) != expected {
            return Err(format!(
                "n = {n}: summand-count classes total {by_summands}, table says {expected}"
            ));
        }
    }
    Ok(())
}

fn factorial(k: u64) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=k {
        out *= i;
    }
    out
}

fn check_composition_multiplicities(options: &VerifyOptions) -> Result<(), String> {
    fn compositions(n: u64, acc: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
        if n == 0 {
            visit(acc);
            return;
        }
        for first in 1..=n {
            acc.push(first);
            compositions(n - first, acc, visit);
            acc.pop();
        }
    }

    let n_max = (options.max_n as u64).min(COMPOSITION_CAP);
    for n in 1..=n_max {
        let mut counts: std::collections::HashMap<Vec<u64>, u64> = Default::default();
        let mut acc = Vec::new();
        compositions(n, &mut acc, &mut |composition| {
            let mut key = composition.to_vec();
            key.sort_unstable_by(|a, b| b.cmp(a));
            *counts.entry(key).or_insert(0) += 1;
        });
        let partitions = enumerate_partitions(n, None, DivisorFlavor::All);
        if counts.len() != partitions.len() {
            return Err(format!(
                "n = {n}: {} distinct composition shapes but {} partitions",
                counts.len(),
                partitions.len()
            ));
        }
        for partition in partitions {
            let mut expected = factorial(partition.summands());
            for &(_, multiplicity) in partition.parts() {
                expected /= factorial(multiplicity);
            }
            let seen = BigInt::from(counts[&partition.expanded()]);
            if seen != expected {
                return Err(format!(
                    "n = {n}, partition {partition}: {seen} orderings, expected {expected}"
                ));
            }
        }
    }
    Ok(())
}

// --- oracle checks ----------------------------------------------------------

fn check_oracle_counting(options: &VerifyOptions) -> Result<(), String> {
    let flavors = [
        DivisorFlavor::All,
        DivisorFlavor::Odd,
        DivisorFlavor::NotDiv(2),
        DivisorFlavor::NotDiv(3),
        DivisorFlavor::NotDiv(4),
        DivisorFlavor::NotDiv(5),
        DivisorFlavor::NotDiv(6),
        DivisorFlavor::NotDiv(7),
    ];
    for flavor in flavors {
        let table = partition_count(options.max_n, flavor).map_err(|e| e.to_string())?;
        for (n, expected) in table.iter().enumerate() {
            let brute = brute_partition_count(n as u64, flavor);
            if &brute != expected {
                return Err(format!(
                    "flavor {flavor}, n = {n}: brute force counts {brute}, table says {expected}"
                ));
            }
        }
    }
    Ok(())
}

fn check_oracle_exponential(options: &VerifyOptions) -> Result<(), String> {
    let mut rng = rng(18);
    for _ in 0..6 {
        let order = rng.random_range(1..=options.order.max(1));
        let s = random_strict_band(&mut rng, order);
        let fast = dense_expand(&toeplitz_exp(&s).map_err(|e| e.to_string())?);
        let slow = dense_exp(&dense_expand(&s)).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("order {order}: band and dense exponentials differ"));
        }
    }
    Ok(())
}
