//! Acceptance suite for the library: every criterion is exact (tolerance
//! zero), and each test prints one PASS line on success. Randomized inputs
//! come from a fixed-seed generator so the suite is deterministic.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use partex::oracle::{brute_partition_count, dense_exp, dense_expand};
use partex::partitions::{enumerate_partitions, partition_sum_inverse, partition_sum_transform};
use partex::sequences::{
    divisor_sum, partition_count, seed_from_flavor, seed_from_transform, transform_from_seed,
};
use partex::toeplitz::{seed_matrix, toeplitz_exp, toeplitz_log};
use partex::{BandMatrix, DivisorFlavor, Rational, SeedSequence, TransformedSequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FLAVOR_TRIO: [DivisorFlavor; 3] = [
    DivisorFlavor::All,
    DivisorFlavor::Odd,
    DivisorFlavor::NotDiv(3),
];

fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + stream)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(
        BigInt::from(rng.random_range(-9i64..=9)),
        BigInt::from(rng.random_range(1i64..=6)),
    )
}

/// Random seed sequence with the given number of terms (index 0 included).
fn random_seed(rng: &mut ChaCha8Rng, len: usize) -> SeedSequence {
    let mut terms = vec![Rational::zero()];
    for _ in 1..len {
        terms.push(random_rational(rng));
    }
    SeedSequence::new(terms).unwrap()
}

/// Random transformed sequence; zero terms are deliberately possible.
fn random_transformed(rng: &mut ChaCha8Rng, len: usize) -> TransformedSequence {
    let mut terms = vec![Rational::one()];
    for _ in 1..len {
        terms.push(if rng.random_range(0..4) == 0 {
            Rational::zero()
        } else {
            random_rational(rng)
        });
    }
    TransformedSequence::new(terms).unwrap()
}

fn random_strict_band(rng: &mut ChaCha8Rng, order: usize) -> BandMatrix {
    let mut band = vec![Rational::zero()];
    for _ in 1..order {
        band.push(random_rational(rng));
    }
    BandMatrix::new(band).unwrap()
}

fn int_terms(values: &[i64]) -> Vec<Rational> {
    values
        .iter()
        .map(|&v| Rational::from_integer(v.into()))
        .collect()
}

#[test]
fn criterion_1_divisor_seed_exponential_reproduces_the_partition_band() {
    let delta = seed_matrix(&seed_from_flavor(6, DivisorFlavor::All), 7).unwrap();
    let expected_band: Vec<Rational> = [(0, 1), (1, 1), (3, 2), (4, 3), (7, 4), (6, 5), (2, 1)]
        .iter()
        .map(|&(n, d)| Rational::new(n.into(), d.into()))
        .collect();
    assert_eq!(delta.band(), expected_band);

    let exp = toeplitz_exp(&delta).unwrap();
    assert_eq!(exp.band(), int_terms(&[1, 1, 2, 3, 5, 7, 11]));

    let via_dense = dense_exp(&dense_expand(&delta)).unwrap();
    assert_eq!(dense_expand(&exp), via_dense);

    println!(
        "acceptance criterion 1 (divisor-seed exponential reproduces the partition band): PASS"
    );
}

#[test]
fn criterion_2_odd_divisor_tables() {
    let partition_table = [
        1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64,
    ]
    .map(BigInt::from);
    assert_eq!(
        partition_count(20, DivisorFlavor::Odd).unwrap(),
        partition_table
    );

    let divisor_table = [
        1, 1, 4, 1, 6, 4, 8, 1, 13, 6, 12, 4, 14, 8, 24, 1, 18, 13, 20, 6,
    ]
    .map(BigInt::from);
    for (k, expected) in (1u64..=20).zip(divisor_table) {
        assert_eq!(
            divisor_sum(k, DivisorFlavor::Odd).unwrap(),
            expected,
            "k = {k}"
        );
    }

    println!("acceptance criterion 2 (odd-divisor tables): PASS");
}

#[test]
fn criterion_3_matrix_exponential_equals_the_recurrence_transform() {
    let mut rng = rng(3);
    let check = |seed: &SeedSequence| {
        let order = seed.terms().len();
        let exp = toeplitz_exp(&seed_matrix(seed, order).unwrap()).unwrap();
        let t = transform_from_seed(seed);
        assert_eq!(exp.band(), t.terms());
    };
    for _ in 0..200 {
        let len = rng.random_range(1..=30);
        check(&random_seed(&mut rng, len));
    }
    for flavor in FLAVOR_TRIO {
        check(&seed_from_flavor(49, flavor));
    }

    println!("acceptance criterion 3 (matrix exponential equals the recurrence transform): PASS");
}

#[test]
fn criterion_4_closed_form_partition_sum_equals_the_transform() {
    let mut rng = rng(4);
    let mut seeds: Vec<SeedSequence> = FLAVOR_TRIO
        .iter()
        .map(|&flavor| seed_from_flavor(25, flavor))
        .collect();
    for _ in 0..50 {
        seeds.push(random_seed(&mut rng, 26));
    }
    for seed in &seeds {
        let t = transform_from_seed(seed);
        for n in 1..=25 {
            assert_eq!(
                partition_sum_transform(seed, n).unwrap(),
                t.terms()[n],
                "n = {n}"
            );
        }
    }

    // the closed-form values satisfy the defining recurrence on their own
    for seed in seeds.iter().take(8) {
        let s = seed.terms();
        let mut tau = vec![Rational::one()];
        for n in 1..=25 {
            tau.push(partition_sum_transform(seed, n).unwrap());
        }
        for big_n in 1..=25usize {
            let mut acc = Rational::zero();
            for (n, tau_n) in tau.iter().enumerate().take(big_n) {
                acc += &s[big_n - n] * tau_n;
            }
            assert_eq!(tau[big_n], acc / BigInt::from(big_n), "N = {big_n}");
        }
    }

    println!("acceptance criterion 4 (closed-form partition sum equals the transform): PASS");
}

#[test]
fn criterion_5_inverse_closed_form_and_logarithm() {
    let mut rng = rng(5);
    let mut transforms: Vec<TransformedSequence> = [
        DivisorFlavor::All,
        DivisorFlavor::Odd,
        DivisorFlavor::NotDiv(2),
        DivisorFlavor::NotDiv(3),
        DivisorFlavor::NotDiv(5),
        DivisorFlavor::NotDiv(7),
    ]
    .iter()
    .map(|&flavor| {
        let counts = partition_count(25, flavor).unwrap();
        TransformedSequence::new(counts.into_iter().map(Rational::from_integer).collect()).unwrap()
    })
    .collect();
    for _ in 0..50 {
        transforms.push(random_transformed(&mut rng, 26));
    }
    for t in &transforms {
        let s = seed_from_transform(t);
        for n in 1..=25 {
            assert_eq!(
                partition_sum_inverse(t, n).unwrap() * BigInt::from(n),
                s.terms()[n],
                "n = {n}"
            );
        }
    }

    for _ in 0..30 {
        let order = rng.random_range(1..=30);
        let s = random_strict_band(&mut rng, order);
        assert_eq!(toeplitz_log(&toeplitz_exp(&s).unwrap()).unwrap(), s);
    }

    println!("acceptance criterion 5 (inverse closed form and logarithm): PASS");
}

#[test]
fn criterion_6_oracle_equivalence() {
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
        let table = partition_count(40, flavor).unwrap();
        for (n, expected) in table.iter().enumerate() {
            assert_eq!(
                &brute_partition_count(n as u64, flavor),
                expected,
                "flavor {flavor}, n = {n}"
            );
        }
    }

    let mut rng = rng(6);
    for _ in 0..20 {
        let order = rng.random_range(1..=12);
        let s = random_strict_band(&mut rng, order);
        let fast = dense_expand(&toeplitz_exp(&s).unwrap());
        let slow = dense_exp(&dense_expand(&s)).unwrap();
        assert_eq!(fast, slow, "order {order}");
    }

    println!("acceptance criterion 6 (oracle equivalence): PASS");
}

#[test]
fn criterion_7_weighted_recurrence_identities() {
    let flavors = [
        DivisorFlavor::Odd,
        DivisorFlavor::NotDiv(2),
        DivisorFlavor::NotDiv(3),
        DivisorFlavor::NotDiv(5),
        DivisorFlavor::NotDiv(7),
    ];
    for flavor in flavors {
        let p = partition_count(200, flavor).unwrap();
        for n in 1..=200usize {
            let mut rhs = BigInt::zero();
            for h in 1..=n {
                rhs += divisor_sum(h as u64, flavor).unwrap() * &p[n - h];
            }
            assert_eq!(BigInt::from(n) * &p[n], rhs, "flavor {flavor}, n = {n}");
        }
    }

    println!("acceptance criterion 7 (weighted recurrence identities): PASS");
}

fn factorial(k: u64) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=k {
        out *= i;
    }
    out
}

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

#[test]
fn criterion_8_ordered_composition_multiplicities() {
    for n in 1..=12u64 {
        let mut counts: HashMap<Vec<u64>, u64> = HashMap::new();
        let mut acc = Vec::new();
        compositions(n, &mut acc, &mut |composition| {
            let mut key = composition.to_vec();
            key.sort_unstable_by(|a, b| b.cmp(a));
            *counts.entry(key).or_insert(0) += 1;
        });

        let partitions = enumerate_partitions(n, None, DivisorFlavor::All);
        assert_eq!(counts.len(), partitions.len(), "n = {n}");
        for partition in partitions {
            let mut expected = factorial(partition.summands());
            for &(_, multiplicity) in partition.parts() {
                let f = factorial(multiplicity);
                assert!((&expected % &f).is_zero());
                expected /= f;
            }
            let seen = BigInt::from(counts[&partition.expanded()]);
            assert_eq!(seen, expected, "n = {n}, partition {partition}");
        }
    }

    println!("acceptance criterion 8 (ordered-composition multiplicities): PASS");
}
