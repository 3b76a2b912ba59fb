mod common;

use std::cmp::Ordering;

use common::*;
use ideal_interp_core::groebner::{buchberger_reduced, is_groebner, reduce, s_polynomial};
use ideal_interp_core::monomial::compare_monomials;
use ideal_interp_core::order_ideal::{corner_set, escalier_from_corners, is_lower_set};
use ideal_interp_core::poly::{apply_diff_operator, ratio};
use ideal_interp_core::{Exponent, MonomialOrder, OrderIdeal, Polynomial, Rational};
use proptest::prelude::*;

fn exponent(dim: usize) -> impl Strategy<Value = Exponent> {
    prop::collection::vec(0u32..5, dim).prop_map(Exponent::new)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn poly(dim: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((exponent(dim), rational()), 0..6)
        .prop_map(move |ts| Polynomial::from_terms(dim, ts).unwrap())
}

fn small_poly(dim: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0u32..3, dim).prop_map(Exponent::new), rational()),
        1..4,
    )
    .prop_map(move |ts| Polynomial::from_terms(dim, ts).unwrap())
}

fn order(dim: usize) -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![(1..=dim).prop_map(MonomialOrder::Lex), Just(MonomialOrder::GradedLex)]
}

proptest! {
    #[test]
    fn ring_laws(f in poly(3), g in poly(3), h in poly(3)) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn orders_are_monomial_well_orders(o in order(3), a in exponent(3), b in exponent(3), c in exponent(3)) {
        let ab = compare_monomials(o, &a, &b).unwrap();
        prop_assert_eq!(ab, compare_monomials(o, &b, &a).unwrap().reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(compare_monomials(o, &a.add(&c), &b.add(&c)).unwrap(), ab);
        prop_assert_ne!(compare_monomials(o, &Exponent::zero(3), &a).unwrap(), Ordering::Greater);
        let bc = compare_monomials(o, &b, &c).unwrap();
        if ab != Ordering::Greater && bc != Ordering::Greater {
            prop_assert_ne!(compare_monomials(o, &a, &c).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn diff_operator_bilinear(h in poly(2), k in poly(2), f in poly(2), g in poly(2), s in rational()) {
        let lhs = apply_diff_operator(&(&h + &k.scale(&s)), &f).unwrap();
        let rhs = &apply_diff_operator(&h, &f).unwrap() + &apply_diff_operator(&k, &f).unwrap().scale(&s);
        prop_assert_eq!(lhs, rhs);
        let lhs = apply_diff_operator(&h, &(&f + &g.scale(&s))).unwrap();
        let rhs = &apply_diff_operator(&h, &f).unwrap() + &apply_diff_operator(&h, &g).unwrap().scale(&s);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normalized_monomial_dual(a in exponent(3)) {
        let h = Polynomial::monomial(a.clone(), Rational::new(1.into(), a.factorial().into()));
        let m = Polynomial::monomial(a, Rational::from_integer(1.into()));
        prop_assert_eq!(apply_diff_operator(&h, &m).unwrap(), Polynomial::one(3));
    }

    #[test]
    fn diff_operator_vanishes_below(h in poly(2), f in poly(2)) {
        let disjoint = f.support().all(|g| h.support().all(|a| !a.leq(g)));
        if disjoint {
            prop_assert!(apply_diff_operator(&h, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn corner_round_trip(members in prop::collection::btree_set(exponent(2), 1..8)) {
        // close downward to get an order ideal
        let mut set = std::collections::BTreeSet::new();
        for m in &members {
            for a in 0..=m.entries()[0] {
                for b in 0..=m.entries()[1] {
                    set.insert(Exponent::new(vec![a, b]));
                }
            }
        }
        prop_assert!(is_lower_set(&set));
        let o = OrderIdeal::new(2, set.clone()).unwrap();
        let corners = corner_set(&o);
        prop_assert!(corners.is_antichain());
        let back = escalier_from_corners(&corners).unwrap();
        prop_assert_eq!(back.members(), &set);
        // standard monomial count by exhaustive enumeration inside the box
        // spanned by the pure-power corners
        let bound: u32 = corners.iter().filter(|c| c.pure_power_var().is_some()).map(|c| c.degree()).sum();
        let count = ideal_interp_core::monomial::monomials_up_to(2, bound)
            .iter()
            .filter(|g| !corners.divides(g))
            .count();
        prop_assert_eq!(count, o.len());
    }

    #[test]
    fn division_identity(f in poly(2), o in order(2)) {
        let gens = vec![
            &(&x(2, 0).pow(2) - &x(2, 1)) + &c(2, 1),
            &(&x(2, 0) * &x(2, 1)) - &c(2, 2),
        ];
        let gb = buchberger_reduced(&gens, o).unwrap();
        let r = reduce(&f, &gb).unwrap();
        let mut back = r.remainder.clone();
        for (q, g) in r.quotients.iter().zip(gb.generators()) {
            back = &back + &(q * g);
        }
        prop_assert_eq!(back, f);
        for m in r.remainder.support() {
            prop_assert!(gb.leading_exponents().iter().all(|l| !l.leq(m)));
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn buchberger_output_is_reduced_gb(f in small_poly(2), g in small_poly(2), o in order(2)) {
        prop_assume!(!f.is_zero() || !g.is_zero());
        let gb = buchberger_reduced(&[f.clone(), g.clone()], o).unwrap();
        prop_assert!(gb.is_reduced());
        prop_assert!(is_groebner(gb.generators(), o));
        for gj in gb.generators() {
            prop_assert_eq!(gj.leading_term(o).unwrap().1, Rational::from_integer(1.into()));
        }
        for i in 0..gb.len() {
            for j in 0..gb.len() {
                let s = s_polynomial(&gb.generators()[i], &gb.generators()[j], o).unwrap();
                prop_assert!(reduce(&s, &gb).unwrap().remainder.is_zero());
            }
        }
        // the inputs are members of the ideal
        prop_assert!(reduce(&f, &gb).unwrap().remainder.is_zero());
        prop_assert!(reduce(&g, &gb).unwrap().remainder.is_zero());
        prop_assert_eq!(buchberger_reduced(gb.generators(), o).unwrap(), gb);
    }
}
