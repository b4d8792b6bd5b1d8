#![allow(dead_code)]

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twocover::{Rational, RationalArrangement};

fn small(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    Rational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)))
}

/// Arrangements of 3 to 6 lines with small integer coefficients. Draws that
/// repeat a line or degenerate to a constant are discarded.
pub fn random_arrangements(count: usize, seed: u64) -> Vec<RationalArrangement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=6);
        let lines = (0..n).map(|_| (small(&mut rng, 2), small(&mut rng, 2), small(&mut rng, 3))).collect();
        if let Ok(a) = RationalArrangement::new(lines) {
            out.push(a);
        }
    }
    out
}
