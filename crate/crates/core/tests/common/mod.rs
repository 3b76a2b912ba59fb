#![allow(dead_code)]

use ideal_interp_core::poly::{int, ratio};
use ideal_interp_core::{ConditionSet, Exponent, Polynomial, Rational};
use rand::Rng;

pub fn pt(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn x(d: usize, i: usize) -> Polynomial {
    Polynomial::var(d, i)
}

pub fn c(d: usize, v: i64) -> Polynomial {
    Polynomial::constant(d, int(v))
}

pub fn e<const N: usize>(v: [u32; N]) -> Exponent {
    Exponent::from(v)
}

pub fn example1() -> ConditionSet {
    ConditionSet::lagrange(2, vec![pt(&[1, 0]), pt(&[1, 1]), pt(&[1, 2]), pt(&[2, 0])]).unwrap()
}

pub fn example3() -> ConditionSet {
    ConditionSet::lagrange(3, vec![pt(&[0, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1]), pt(&[1, 0, 1])]).unwrap()
}

pub fn example4() -> ConditionSet {
    ConditionSet::from_groups(
        2,
        vec![
            (pt(&[0, 0]), vec![e([0, 0]), e([0, 1]), e([1, 0])]),
            (pt(&[0, 1]), vec![e([0, 0]), e([1, 0])]),
            (pt(&[1, 0]), vec![e([0, 0]), e([1, 0])]),
        ],
    )
    .unwrap()
}

pub fn example2_images() -> Vec<(Exponent, Polynomial)> {
    let (x1, x2) = (x(2, 0), x(2, 1));
    vec![
        (e([2, 1]), Polynomial::zero(2)),
        (e([0, 3]), x2.clone()),
        (e([1, 2]), &x1 * &x2),
        (e([4, 0]), &x1.pow(3).scale(&int(2)) - &x1.pow(2)),
    ]
}

/// Condition sets whose kernels are in the universal class.
pub fn positive_conditions() -> Vec<(&'static str, ConditionSet)> {
    vec![
        ("example1", example1()),
        ("example3", example3()),
        ("example4", example4()),
        (
            "single point d=2",
            ConditionSet::lagrange(2, vec![pt(&[3, -1])]).unwrap(),
        ),
        (
            "single point d=3",
            ConditionSet::lagrange(3, vec![pt(&[0, 0, 0])]).unwrap(),
        ),
        (
            "grid 2x3",
            ConditionSet::lagrange(
                2,
                vec![
                    pt(&[0, 0]),
                    pt(&[0, 1]),
                    pt(&[0, 2]),
                    pt(&[1, 0]),
                    pt(&[1, 1]),
                    pt(&[1, 2]),
                ],
            )
            .unwrap(),
        ),
        (
            "taylor at (2,3)",
            ConditionSet::from_groups(2, vec![(pt(&[2, 3]), vec![e([0, 0]), e([1, 0]), e([0, 1])])]).unwrap(),
        ),
    ]
}

/// Condition sets whose lex escaliers differ.
pub fn negative_conditions() -> Vec<(&'static str, ConditionSet)> {
    vec![
        (
            "diagonal pair",
            ConditionSet::lagrange(2, vec![pt(&[0, 0]), pt(&[1, 1])]).unwrap(),
        ),
        (
            "diagonal triple",
            ConditionSet::lagrange(2, vec![pt(&[0, 0]), pt(&[1, 1]), pt(&[2, 2])]).unwrap(),
        ),
        (
            "skew triple",
            ConditionSet::lagrange(2, vec![pt(&[0, 0]), pt(&[1, 2]), pt(&[2, 1])]).unwrap(),
        ),
        (
            "d=3 diagonal",
            ConditionSet::lagrange(3, vec![pt(&[0, 0, 0]), pt(&[1, 1, 1])]).unwrap(),
        ),
    ]
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let n = rng.gen_range(-5i64..=5);
    let d = rng.gen_range(1i64..=3);
    ratio(n, d)
}

/// Random polynomial with up to `terms` terms of total degree at most `max_deg`.
pub fn random_poly<R: Rng>(rng: &mut R, dim: usize, max_deg: u32, terms: usize) -> Polynomial {
    let mut out = Vec::new();
    for _ in 0..terms {
        let mut left = rng.gen_range(0..=max_deg);
        let mut v = vec![0u32; dim];
        for slot in v.iter_mut() {
            let k = rng.gen_range(0..=left);
            *slot = k;
            left -= k;
        }
        // shuffle which variable gets the large share
        let r = rng.gen_range(0..dim);
        v.rotate_left(r);
        out.push((Exponent::new(v), small_rational(rng)));
    }
    Polynomial::from_terms(dim, out).unwrap()
}
