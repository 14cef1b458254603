//! Input builders shared by the benchmark targets.

use partex::sequences::seed_from_flavor;
use partex::{BandMatrix, BigInt, DivisorFlavor, Rational, SeedSequence, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Divisor-sum seed `[0, sigma(1), ..., sigma(n_max)]`.
pub fn sigma_seed(n_max: usize) -> SeedSequence {
    seed_from_flavor(n_max, DivisorFlavor::All)
}

/// Deterministic random strictly upper-triangular band of the given order.
pub fn random_strict_band(order: usize, stream: u64) -> BandMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    let mut band = vec![Rational::zero()];
    for _ in 1..order {
        band.push(Rational::new(
            BigInt::from(rng.random_range(-9i64..=9)),
            BigInt::from(rng.random_range(1i64..=6)),
        ));
    }
    BandMatrix::new(band).expect("non-empty band")
}
