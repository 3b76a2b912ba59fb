mod common;

use common::*;
use ideal_interp_core::conditions::{apply_functional, is_poised, moller_vanishing_gb};
use ideal_interp_core::groebner::{buchberger_reduced, escalier};
use ideal_interp_core::poly::ratio;
use ideal_interp_core::{ConditionSet, MonomialOrder, Polynomial, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Generators of `m_1 ⋯ m_k` for the maximal ideals of the points. Distinct
/// points give pairwise comaximal ideals, so the product is the vanishing
/// ideal. Each partial product is re-reduced to keep the generating set small.
fn product_of_point_ideals(dim: usize, points: &[Vec<Rational>], order: MonomialOrder) -> Vec<Polynomial> {
    let mut gens = vec![Polynomial::one(dim)];
    for (k, p) in points.iter().enumerate() {
        let linear: Vec<Polynomial> = (0..dim)
            .map(|i| &x(dim, i) - &Polynomial::constant(dim, p[i].clone()))
            .collect();
        let mut next = Vec::new();
        for g in &gens {
            for l in &linear {
                let prod = g * l;
                // exact membership: the product must vanish at every point so far
                assert!(points[..=k]
                    .iter()
                    .all(|q| prod.evaluate(q).unwrap() == Rational::from_integer(0.into())));
                next.push(prod);
            }
        }
        gens = buchberger_reduced(&next, order).unwrap().generators().to_vec();
    }
    gens
}

fn random_points(rng: &mut ChaCha8Rng, dim: usize, count: usize) -> Vec<Vec<Rational>> {
    let mut pts: Vec<Vec<Rational>> = Vec::new();
    while pts.len() < count {
        let p: Vec<Rational> = (0..dim)
            .map(|_| ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2)))
            .collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

#[test]
fn moller_matches_buchberger_on_random_point_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..25 {
        let dim = rng.gen_range(1..=3);
        let count = rng.gen_range(1..=5);
        let pts = random_points(&mut rng, dim, count);
        let conds = ConditionSet::lagrange(dim, pts.clone()).unwrap();
        for order in [MonomialOrder::Lex(1), MonomialOrder::GradedLex] {
            let moller = moller_vanishing_gb(&conds, order).unwrap();
            let oracle = buchberger_reduced(&product_of_point_ideals(dim, &pts, order), order).unwrap();
            assert_eq!(moller, oracle, "points {pts:?} order {order}");
            assert_eq!(escalier(&moller).unwrap().len(), count);
        }
    }
}

#[test]
fn vanishing_basis_is_annihilated_and_poised() {
    for (name, conds) in positive_conditions().into_iter().chain(negative_conditions()) {
        for order in MonomialOrder::all(conds.dim()) {
            let gb = moller_vanishing_gb(&conds, order).unwrap();
            for g in gb.generators() {
                for l in conds.functionals() {
                    assert_eq!(
                        apply_functional(l, g).unwrap(),
                        Rational::from_integer(0.into()),
                        "{name}"
                    );
                }
            }
            let o = escalier(&gb).unwrap();
            assert_eq!(o.len(), conds.len(), "{name}");
            // ker Λ ∩ span O = {0}
            assert!(is_poised(&conds, &o).unwrap(), "{name}");
        }
    }
}

#[test]
fn hermite_kernel_agrees_across_routes() {
    // Taylor data of order 1 at (2,3): the kernel is the square of the maximal ideal.
    let conds = positive_conditions()
        .into_iter()
        .find(|(n, _)| n.starts_with("taylor"))
        .unwrap()
        .1;
    let m = [&x(2, 0) - &c(2, 2), &x(2, 1) - &c(2, 3)];
    let sq = vec![&m[0] * &m[0], &m[0] * &m[1], &m[1] * &m[1]];
    for order in MonomialOrder::all(2) {
        assert_eq!(
            moller_vanishing_gb(&conds, order).unwrap(),
            buchberger_reduced(&sq, order).unwrap()
        );
    }
}
