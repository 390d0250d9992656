mod common;

use common::forests;
use forest_poset::engine::{chi_recursive, chi_fast, exponents, m_fast, mobius_fast, z_fast};
use forest_poset::interval::interval;
use forest_poset::invariants::{
    characteristic_polynomial, check_ranked, m_polynomial, mobius_number, z_polynomial,
};
use forest_poset::order::lower_set;
use forest_poset::{MarkedTreePair, UnivariatePolynomial};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Divides out each exponent as a root and checks nothing is left over.
fn roots_are(chi: &UnivariatePolynomial, roots: &[u64]) -> bool {
    let mut rest = chi.clone();
    for &r in roots {
        let (q, rem) = rest.div_linear(&BigInt::from(r));
        if !rem.is_zero() {
            return false;
        }
        rest = q;
    }
    rest == UnivariatePolynomial::one()
}

#[test]
fn fast_and_brute_force_agree_up_to_four_labels() {
    for n in 1..=4 {
        for upper in forests(n) {
            for lower in lower_set(&upper) {
                let iv = interval(&lower, &upper).unwrap();
                let pair = MarkedTreePair::from_interval(&lower, &upper).unwrap();
                let ctx = format!("[{lower}, {upper}]");
                let m = m_polynomial(iv.poset());
                assert_eq!(m_fast(&pair), m, "M on {ctx}");
                assert_eq!(z_fast(&pair), z_polynomial(iv.poset()), "Z on {ctx}");
                let chi = characteristic_polynomial(iv.poset());
                assert_eq!(chi_fast(&pair), chi, "χ on {ctx}");
                assert_eq!(chi_recursive(&pair), chi, "recursive χ on {ctx}");
                assert_eq!(mobius_fast(&pair), mobius_number(iv.poset()), "μ on {ctx}");
                assert_eq!(
                    m.substitute_y(&BigInt::one()),
                    UnivariatePolynomial::one(),
                    "{ctx}"
                );
                let ex = exponents(&pair);
                assert!(ex.as_slice().iter().all(|&e| e >= 1), "{ctx}");
                assert!(roots_are(&chi, ex.as_slice()), "roots of χ on {ctx}");
                assert!(check_ranked(&iv), "{ctx}");
            }
        }
    }
}

#[test]
fn exponents_depend_only_on_upper_and_marks() {
    for upper in forests(5) {
        let mut seen = std::collections::BTreeMap::new();
        for lower in lower_set(&upper) {
            let pair = MarkedTreePair::from_interval(&lower, &upper).unwrap();
            let ex = exponents(&pair);
            let prev = seen
                .entry(pair.marked().clone())
                .or_insert_with(|| ex.clone());
            assert_eq!(*prev, ex);
        }
    }
}
