use bcr_core::alexander::{
    conway_series, exp_of_negated, exp_substitute, zbcr_series, LaurentPolynomial,
};
use bcr_core::rational::q;
use num_traits::Zero;
use proptest::prelude::*;

/// Symmetric Laurent polynomial `c_0 + sum_i c_i (t^i + t^-i)` rescaled to
/// take the value 1 at `t = 1`.
fn symmetric(cs: &[i64]) -> Option<LaurentPolynomial> {
    let mut p = LaurentPolynomial::zero();
    p.add_term(0, q(cs[0]));
    for (i, &c) in cs.iter().enumerate().skip(1) {
        p.add_term(i as i64, q(c));
        p.add_term(-(i as i64), q(c));
    }
    let v = p.eval_one();
    (!v.is_zero()).then(|| p.scale(&(q(1) / v)))
}

proptest! {
    #[test]
    fn series_is_exp_of_negated_log(cs in prop::collection::vec(-6i64..=6, 1..5)) {
        if let Some(p) = symmetric(&cs) {
            prop_assert!(p.is_symmetric());
            let zs = zbcr_series(&p, 6).unwrap();
            prop_assert_eq!(exp_of_negated(&zs, 6).coeffs().to_vec(), conway_series(&p, 6));
            // Symmetry kills every odd coefficient.
            for n in (1..=6).step_by(2) {
                prop_assert!(exp_substitute(&p, 6).coeff(n).is_zero());
            }
        }
    }

    #[test]
    fn substitution_is_multiplicative(a in prop::collection::vec(-4i64..=4, 1..4), b in prop::collection::vec(-4i64..=4, 1..4)) {
        let pa = LaurentPolynomial::from_coeffs(-1, &a);
        let pb = LaurentPolynomial::from_coeffs(-2, &b);
        let sa = exp_substitute(&pa, 5);
        let sb = exp_substitute(&pb, 5);
        let prod = exp_substitute(&pa.mul(&pb), 5);
        for n in 0..=5 {
            let c: bcr_core::Q = (0..=n).map(|i| sa.coeff(i) * sb.coeff(n - i)).sum();
            prop_assert_eq!(prod.coeff(n), c);
        }
    }
}
