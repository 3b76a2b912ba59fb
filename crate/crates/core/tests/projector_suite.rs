mod common;

use common::*;
use ideal_interp_core::conditions::moller_vanishing_gb;
use ideal_interp_core::conditions::{apply_functional, lex_escaliers};
use ideal_interp_core::groebner::{classify_universal, lex_escalier_family};
use ideal_interp_core::min_degree::{is_degree_reducing, minimal_degree_check, minimal_degree_check_projector};
use ideal_interp_core::monomial::monomials_up_to;
use ideal_interp_core::projector::{
    certify_good_formula, check_ideal_projector_laws, default_degree_bound, error_decompose, project,
    projector_from_conditions, projector_from_corner_images,
};
use ideal_interp_core::{Error, IdealProjector, MonomialOrder, Polynomial, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus() -> Vec<(&'static str, IdealProjector)> {
    let mut out: Vec<_> = positive_conditions()
        .into_iter()
        .map(|(n, c)| (n, projector_from_conditions(&c).unwrap()))
        .collect();
    out.push(("example2", projector_from_corner_images(2, example2_images()).unwrap()));
    out
}

#[test]
fn randomized_projector_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, p) in corpus() {
        let d = p.dim();
        for _ in 0..20 {
            let f = random_poly(&mut rng, d, 5, 6);
            let g = random_poly(&mut rng, d, 5, 6);
            let pf = project(&p, &f).unwrap();
            assert_eq!(project(&p, &pf).unwrap(), pf, "{name}: idempotence");
            assert!(pf.support().all(|e| p.escalier().contains(e)), "{name}: range");
            for o in MonomialOrder::all(d) {
                assert_eq!(p.project_under(&f, o).unwrap(), pf, "{name}: order {o}");
            }
            let dec = error_decompose(&p, &f).unwrap();
            assert!(dec.residual_check, "{name}");
            assert!(
                check_ideal_projector_laws(&p, &f, &g).unwrap().is_zero(),
                "{name}: laws"
            );
        }
    }
}

#[test]
fn interpolation_property() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (name, conds) in positive_conditions() {
        let p = projector_from_conditions(&conds).unwrap();
        for _ in 0..20 {
            let f = random_poly(&mut rng, conds.dim(), 6, 5);
            let pf = project(&p, &f).unwrap();
            for l in conds.functionals() {
                assert_eq!(
                    apply_functional(l, &pf).unwrap(),
                    apply_functional(l, &f).unwrap(),
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn support_property_of_decomposition() {
    for (name, p) in corpus() {
        for gamma in monomials_up_to(p.dim(), default_degree_bound(&p)) {
            let f = Polynomial::monomial(gamma.clone(), Rational::from_integer(1.into()));
            let dec = error_decompose(&p, &f).unwrap();
            for (alpha, a) in p.corners().iter().zip(&dec.coefficients) {
                if !alpha.leq(&gamma) {
                    assert!(a.is_zero(), "{name}: A_j(x^{gamma}) for corner {alpha}");
                }
            }
        }
    }
}

#[test]
fn certificates_and_minimal_degree_hold_across_corpus() {
    for (name, p) in corpus() {
        let cert = certify_good_formula(&p, default_degree_bound(&p));
        assert!(cert.kronecker_ok && cert.kernel_containment_ok, "{name}");
        assert!(is_degree_reducing(&p), "{name}");
        assert!(minimal_degree_check_projector(&p).minimal, "{name}");
    }
    for (name, conds) in positive_conditions() {
        let p = projector_from_conditions(&conds).unwrap();
        let rep = minimal_degree_check(&conds, p.escalier()).unwrap();
        assert!(rep.degree_reducing && rep.minimal, "{name}");
        // permuting the functionals keeps the lower rank
        let mut fs = conds.functionals().to_vec();
        fs.reverse();
        let perm = ideal_interp_core::ConditionSet::from_functionals(conds.dim(), fs).unwrap();
        assert_eq!(
            minimal_degree_check(&perm, p.escalier()).unwrap().rank_lower,
            rep.rank_lower,
            "{name}"
        );
    }
}

#[test]
fn classification_routes_agree() {
    for (name, conds) in positive_conditions().into_iter().chain(negative_conditions()) {
        let gb = moller_vanishing_gb(&conds, MonomialOrder::Lex(1)).unwrap();
        let structural = classify_universal(&gb);
        let family = lex_escaliers(&conds).unwrap();
        let via_buchberger = lex_escalier_family(gb.generators()).unwrap();
        assert_eq!(structural, family.all_equal, "{name}");
        assert_eq!(family, via_buchberger, "{name}");
        let expected_positive = positive_conditions().iter().any(|(n, _)| *n == name);
        assert_eq!(structural, expected_positive, "{name}");
        if !structural {
            assert_eq!(projector_from_conditions(&conds), Err(Error::NotInUniversalClass));
        }
    }
}
