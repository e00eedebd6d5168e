mod common;

use num_bigint::BigInt;
use strong_alliance::analysis::sequence_verdict;
use strong_alliance::enumerate::compute_polynomial_oracle;
use strong_alliance::families::{double_star_printed_form, FamilyError, FamilySpec};
use strong_alliance::polynomial::SignedPolynomial;
use strong_alliance::{family_graph, family_polynomial};

#[test]
fn closed_forms_match_enumeration_up_to_14_vertices() {
    let mut checked = 0;
    for spec in common::family_instances(14) {
        let g = family_graph(spec).unwrap();
        assert_eq!(family_polynomial(spec).unwrap(), compute_polynomial_oracle(&g).unwrap(), "{spec}");
        checked += 1;
    }
    assert!(checked > 100);
}

#[test]
fn removing_a_small_matching_keeps_the_complete_polynomial() {
    for n in (4..=12).step_by(2) {
        let kn = family_polynomial(FamilySpec::Complete { n }).unwrap();
        for r in 0..n / 2 {
            let spec = FamilySpec::CompleteMinusMatching { n, r };
            let g = family_graph(spec).unwrap();
            assert_eq!(compute_polynomial_oracle(&g).unwrap(), kn, "{spec}");
            assert_eq!(family_polynomial(spec).unwrap(), kn);
        }
    }
}

#[test]
fn odd_complete_minus_edge_differs() {
    for n in (3..=11).step_by(2) {
        let spec = FamilySpec::CompleteMinusMatching { n, r: 1 };
        let p = compute_polynomial_oracle(&family_graph(spec).unwrap()).unwrap();
        assert_ne!(p, family_polynomial(FamilySpec::Complete { n }).unwrap(), "{spec}");
        assert!(matches!(family_polynomial(spec), Err(FamilyError::NoClosedForm(_))));
    }
}

#[test]
fn perfect_matching_removal_lowers_the_alliance_number() {
    for n in (4..=12).step_by(2) {
        let spec = FamilySpec::CompleteMinusMatching { n, r: n / 2 };
        let p = compute_polynomial_oracle(&family_graph(spec).unwrap()).unwrap();
        assert_ne!(p, family_polynomial(FamilySpec::Complete { n }).unwrap());
        assert_eq!(p.min_support().unwrap(), n / 2, "{spec}");
    }
    let k4_minus = family_graph(FamilySpec::CompleteMinusMatching { n: 4, r: 2 }).unwrap();
    assert_eq!(
        compute_polynomial_oracle(&k4_minus).unwrap(),
        family_polynomial(FamilySpec::Cycle { n: 4 }).unwrap()
    );
}

#[test]
fn printed_double_star_exponent_disagrees_with_enumeration() {
    for r in 3..=6 {
        for t in 3..=6 {
            let g = family_graph(FamilySpec::DoubleStar { r, t }).unwrap();
            let exact = SignedPolynomial::from(&compute_polynomial_oracle(&g).unwrap());
            let printed = double_star_printed_form(r, t).unwrap();
            // the exponent only matters when one of the stars has odd order
            assert_eq!(printed != exact, r % 2 == 1 || t % 2 == 1, "S_{{{r},{t}}}");
        }
    }
    let printed = double_star_printed_form(3, 3).unwrap();
    assert_eq!(printed.coeff(1), BigInt::from(-4));
}

// Enumeration confirms that double stars are generally not unimodal: S_{3,7}
// has no connected alliance of size 4, and S_{5,5} dips at size 4.
#[test]
fn double_stars_are_not_unimodal_in_general() {
    let s37 = compute_polynomial_oracle(&family_graph(FamilySpec::DoubleStar { r: 3, t: 7 }).unwrap()).unwrap();
    assert_eq!(s37.coeffs()[3..].to_vec(), [1u32, 0, 15, 46, 51, 27, 8, 1].map(Into::into));
    assert!(!sequence_verdict(&s37).unwrap().unimodal);

    let s55 = compute_polynomial_oracle(&family_graph(FamilySpec::DoubleStar { r: 5, t: 5 }).unwrap()).unwrap();
    assert_eq!(s55.coeffs()[4..].to_vec(), [8u32, 2, 36, 48, 28, 8, 1].map(Into::into));
    assert!(!sequence_verdict(&s55).unwrap().unimodal);

    let s33 = compute_polynomial_oracle(&family_graph(FamilySpec::DoubleStar { r: 3, t: 3 }).unwrap()).unwrap();
    assert!(sequence_verdict(&s33).unwrap().unimodal);
}

#[test]
fn paths_cycles_complete_and_stars_are_unimodal() {
    for n in 3..=40 {
        for spec in [
            FamilySpec::Path { n },
            FamilySpec::Cycle { n },
            FamilySpec::Complete { n },
            FamilySpec::Star { n },
        ] {
            let v = sequence_verdict(&family_polynomial(spec).unwrap()).unwrap();
            assert!(v.unimodal, "{spec}");
        }
    }
}

#[test]
fn complete_bipartite_is_log_concave() {
    for n in 1..=20 {
        for m in 1..=20 {
            let spec = FamilySpec::CompleteBipartite { n, m };
            let v = sequence_verdict(&family_polynomial(spec).unwrap()).unwrap();
            assert!(v.log_concave && v.unimodal, "{spec}");
        }
    }
}
