use std::collections::HashMap;

use bcr_core::rational::{q, Q};
use bcr_core::space::{generate_relations, Algebra, ClassKind, DiagramVector};
use bcr_core::weight::{wc_diagram, wc_eval};
use bcr_core::{JacobiDiagram, Limits};
use num_traits::Zero;

/// Rank over Q by dense Gaussian elimination.
fn dense_rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone() / &pivot;
                for j in c..cols {
                    let x = &f * &rows[rank][j];
                    rows[r][j] -= x;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn dimension_matches_dense_rank() {
    let limits = Limits::default();
    let alg = Algebra::new(limits);
    for k in 0..=3 {
        let space = alg.space(k).unwrap();
        let index: HashMap<_, _> = space
            .classes()
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let rows: Vec<Vec<Q>> = generate_relations(k, &limits)
            .unwrap()
            .iter()
            .map(|r| {
                let mut row = vec![Q::zero(); index.len()];
                for (key, c) in r.vector().iter() {
                    row[index[key]] += c;
                }
                row
            })
            .collect();
        assert_eq!(space.dim(), index.len() - dense_rank(rows), "degree {k}");
    }
}

#[test]
fn known_dimensions() {
    // Framed chord-diagram algebra: total and primitive dimensions from the
    // standard tables; the remaining directions have closed components.
    let alg = Algebra::new(Limits::default());
    let framed = [1, 1, 2, 3, 6];
    let primitive = [0, 1, 1, 1, 2];
    for k in 0..=4 {
        let s = alg.space(k).unwrap();
        let p = s.dim_of(ClassKind::Primitive) + s.dim_of(ClassKind::Mixed);
        assert_eq!(p, primitive[k], "degree {k}");
        assert_eq!(p + s.dim_of(ClassKind::Product), framed[k], "degree {k}");
        assert_eq!(
            s.dim(),
            p + s.dim_of(ClassKind::Product) + s.dim_of(ClassKind::Trivalent)
        );
    }
    let dims: Vec<usize> = (0..=4).map(|k| alg.space(k).unwrap().dim()).collect();
    assert_eq!(dims, vec![1, 2, 5, 10, 22]);
}

#[test]
fn relators_reduce_to_zero() {
    let limits = Limits::default();
    let alg = Algebra::new(limits);
    for k in 0..=4 {
        let space = alg.space(k).unwrap();
        for r in generate_relations(k, &limits).unwrap() {
            assert!(space.is_zero(&r.vector()), "{:?} {}", r.kind, r.source);
        }
    }
}

#[test]
fn normal_form_is_idempotent() {
    let alg = Algebra::new(Limits::default());
    for k in 0..=4 {
        let space = alg.space(k).unwrap();
        for key in space.classes() {
            let mut v = DiagramVector::zero();
            v.add_key(key.clone(), q(1));
            let n = space.normal_form(&v);
            assert_eq!(space.normal_form(&n), n);
            assert!(space.equal(&v, &n));
        }
    }
}

#[test]
fn wc_vanishes_on_every_relator() {
    let limits = Limits::default();
    for k in 0..=4 {
        for r in generate_relations(k, &limits).unwrap() {
            let raw: Q = r
                .terms
                .iter()
                .map(|(c, d)| q(*c as i64) * wc_diagram(d))
                .sum();
            assert_eq!(raw, Q::zero(), "{:?} {} @{}", r.kind, r.source, r.site);
            assert_eq!(wc_eval(&r.vector()), Q::zero());
        }
    }
}

#[test]
fn wc_is_multiplicative_on_basis_pairs() {
    let alg = Algebra::new(Limits::default());
    let mut count = 0;
    for i in 0..=4 {
        for j in 0..=4 - i {
            let (a, b) = (alg.space(i).unwrap(), alg.space(j).unwrap());
            for x in a.basis() {
                for y in b.basis() {
                    let dx = x.jacobi_representative().unwrap();
                    let dy = y.jacobi_representative().unwrap();
                    assert_eq!(
                        wc_diagram(&dx.product(&dy)),
                        wc_diagram(&dx) * wc_diagram(&dy),
                        "{x} * {y}"
                    );
                    count += 1;
                }
            }
        }
    }
    assert!(count > 50);
}

#[test]
fn wheel_values() {
    for k in 2..=8 {
        let expected = q(-1 - if k % 2 == 0 { 1 } else { -1 });
        assert_eq!(wc_diagram(&JacobiDiagram::wheel(k)), expected, "wheel {k}");
    }
}
