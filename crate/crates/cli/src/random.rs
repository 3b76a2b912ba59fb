use ideal_interp_core::{Exponent, Polynomial, Rational};
use num_bigint::BigInt;
use rand::Rng;

/// Small nonzero-denominator rational in `[-9, 9]` with denominator ≤ 4.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(-9i64..=9)),
        BigInt::from(rng.gen_range(1i64..=4)),
    )
}

/// Random exponent of total degree at most `max_degree`.
pub fn random_exponent<R: Rng>(rng: &mut R, dim: usize, max_degree: u32) -> Exponent {
    let mut left = rng.gen_range(0..=max_degree);
    let mut v = vec![0u32; dim];
    let start = rng.gen_range(0..dim);
    for k in 0..dim {
        let take = rng.gen_range(0..=left);
        v[(start + k) % dim] = take;
        left -= take;
    }
    Exponent::new(v)
}

/// Random polynomial with at most `max_terms` terms of degree ≤ `max_degree`.
pub fn random_polynomial<R: Rng>(rng: &mut R, dim: usize, max_degree: u32, max_terms: usize) -> Polynomial {
    let n = rng.gen_range(0..=max_terms);
    let terms: Vec<_> = (0..n)
        .map(|_| (random_exponent(rng, dim, max_degree), random_rational(rng)))
        .collect();
    Polynomial::from_terms(dim, terms).expect("uniform dimension")
}
