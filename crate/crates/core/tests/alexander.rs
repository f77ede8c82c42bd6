use bcr_core::alexander::{
    alexander_poly, alexander_via_skein, conway_poly, conway_series, corpus_knot, exp_of_negated,
    exp_substitute, parse_pd, zbcr_series, AlexanderError, LaurentPolynomial, PdCode, CORPUS,
};
use bcr_core::rational::{q, q_frac};

/// Alexander polynomials from the standard knot tables, lowest exponent first.
fn table(name: &str) -> LaurentPolynomial {
    match name {
        "unknot" => LaurentPolynomial::one(),
        "3_1" => LaurentPolynomial::from_coeffs(-1, &[1, -1, 1]),
        "4_1" => LaurentPolynomial::from_coeffs(-1, &[-1, 3, -1]),
        "5_1" => LaurentPolynomial::from_coeffs(-2, &[1, -1, 1, -1, 1]),
        "5_2" => LaurentPolynomial::from_coeffs(-1, &[2, -3, 2]),
        "6_1" => LaurentPolynomial::from_coeffs(-1, &[-2, 5, -2]),
        "6_2" => LaurentPolynomial::from_coeffs(-2, &[-1, 3, -3, 3, -1]),
        "6_3" => LaurentPolynomial::from_coeffs(-2, &[1, -3, 5, -3, 1]),
        "7_1" => LaurentPolynomial::from_coeffs(-3, &[1, -1, 1, -1, 1, -1, 1]),
        _ => unreachable!(),
    }
}

fn knots() -> impl Iterator<Item = (&'static str, PdCode)> {
    CORPUS.iter().map(|(n, _)| (*n, corpus_knot(n).unwrap()))
}

#[test]
fn matrix_agrees_with_skein_and_table() {
    for (name, k) in knots() {
        let d = alexander_poly(&k).unwrap();
        assert_eq!(d, alexander_via_skein(&k).unwrap(), "{name}");
        assert_eq!(d, table(name), "{name}");
    }
}

#[test]
fn conway_coefficients() {
    let expected: [(&str, &[i64]); 9] = [
        ("unknot", &[1]),
        ("3_1", &[1, 0, 1]),
        ("4_1", &[1, 0, -1]),
        ("5_1", &[1, 0, 3, 0, 1]),
        ("5_2", &[1, 0, 2]),
        ("6_1", &[1, 0, -2]),
        ("6_2", &[1, 0, -1, 0, -1]),
        ("6_3", &[1, 0, 1, 0, 1]),
        ("7_1", &[1, 0, 6, 0, 5, 0, 1]),
    ];
    for (name, c) in expected {
        assert_eq!(conway_poly(&corpus_knot(name).unwrap()), c, "{name}");
    }
}

#[test]
fn symmetric_with_unit_value() {
    for (name, k) in knots() {
        let d = alexander_poly(&k).unwrap();
        assert!(d.is_symmetric(), "{name}");
        assert_eq!(d.eval_one(), q(1), "{name}");
        assert_eq!(d.invert(), d, "{name}");
    }
}

#[test]
fn mirror_invariance() {
    for (name, k) in knots() {
        let m = k.mirror();
        assert_eq!(m.writhe(), -k.writhe(), "{name}");
        assert_eq!(
            alexander_poly(&m).unwrap(),
            alexander_poly(&k).unwrap(),
            "{name}"
        );
        assert_eq!(
            alexander_via_skein(&m).unwrap(),
            alexander_via_skein(&k).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn odd_log_coefficients_vanish() {
    for (name, k) in knots() {
        let d = alexander_poly(&k).unwrap();
        let log = exp_substitute(&d, 9).log().unwrap();
        for n in (1..=9).step_by(2) {
            assert_eq!(log.coeff(n), q(0), "{name} h^{n}");
        }
    }
}

#[test]
fn trefoil_series() {
    let d = alexander_poly(&corpus_knot("3_1").unwrap()).unwrap();
    assert_eq!(
        conway_series(&d, 4),
        vec![q(1), q(0), q(1), q(0), q_frac(1, 12)]
    );
    let z = zbcr_series(&d, 4).unwrap();
    assert_eq!(z, vec![q(-1), q(0), q_frac(5, 12)]);
}

#[test]
fn six_three_quartic_coefficient() {
    // 2 cosh 2h - 6 cosh h + 5 expanded by hand.
    let d = alexander_poly(&corpus_knot("6_3").unwrap()).unwrap();
    let s = conway_series(&d, 4);
    assert_eq!(s[2], q(1));
    assert_eq!(s[4], q_frac(13, 12));
}

#[test]
fn series_is_exp_of_negated_logarithm() {
    for (name, k) in knots() {
        let d = alexander_poly(&k).unwrap();
        let zs = zbcr_series(&d, 6).unwrap();
        assert_eq!(
            exp_of_negated(&zs, 6).coeffs(),
            conway_series(&d, 6).as_slice(),
            "{name}"
        );
    }
}

#[test]
fn render_and_reparse() {
    for (name, k) in knots() {
        let again = parse_pd(&k.to_string()).unwrap();
        assert_eq!(again.crossings(), k.crossings(), "{name}");
        assert_eq!(again.signs(), k.signs(), "{name}");
    }
}

#[test]
fn parse_errors() {
    assert!(matches!(
        parse_pd("X(1,2,3)"),
        Err(AlexanderError::Parse { line: 1, .. })
    ));
    assert!(matches!(
        parse_pd("# c\nY(1,2,3,4)"),
        Err(AlexanderError::Parse { line: 2, .. })
    ));
    assert!(matches!(
        parse_pd("X(1,a,2,3)"),
        Err(AlexanderError::Parse { .. })
    ));
    assert!(matches!(
        parse_pd("X(1,5,2,4)\nX(3,1,4,6)"),
        Err(AlexanderError::ArcCount { .. })
    ));
    assert_eq!(
        parse_pd("X[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]")
            .unwrap()
            .len(),
        3
    );
    assert!(parse_pd("\n# nothing\n").unwrap().is_empty());
}
