use bcr_core::bridge::{
    epsilon, epsilon2, epsilon3, jacobi_of, orderings, verify_main, verify_products, verify_stu,
    verify_wheels, BcrWeights,
};
use bcr_core::diagram::{enumerate_bcr, jacobi_classes, EdgeClass};
use bcr_core::rational::q;
use bcr_core::space::Algebra;
use bcr_core::{JacobiDiagram, Limits, Q};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn representatives(k: usize) -> Vec<JacobiDiagram> {
    jacobi_classes(k, &Limits::default())
        .unwrap()
        .iter()
        .map(|c| c.jacobi_representative().unwrap())
        .collect()
}

#[test]
fn table_and_numbered_routes_agree() {
    let w = BcrWeights::default();
    for k in 1..=3 {
        for d in representatives(k) {
            assert_eq!(w.wbcr(&d).unwrap(), w.wbcr_numbered(&d).unwrap(), "{d}");
        }
    }
}

#[test]
fn independent_of_the_numbering() {
    let w = BcrWeights::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 1..=3 {
        for d in representatives(k) {
            let reference = w.wbcr(&d).unwrap();
            let mut pool: Vec<u32> = (1..=3 * k as u32).collect();
            for _ in 0..10 {
                pool.shuffle(&mut rng);
                let j = pool[..d.edge_count()].to_vec();
                let dj = d.clone().with_numbering(j).unwrap();
                assert_eq!(w.wbcr_numbered(&dj).unwrap(), reference, "{d}");
            }
        }
    }
}

#[test]
fn degree_one_contributions_cancel() {
    let limits = Limits::default();
    let ds = enumerate_bcr(1, &limits).unwrap();
    assert_eq!(ds.len(), 1);
    let d = &ds[0];
    let theta = JacobiDiagram::theta();
    let sigma = [Some(1)];
    let mut signs = Vec::new();
    for rho in orderings(d) {
        let gj = jacobi_of(d, &rho, None).unwrap();
        assert_eq!(gj.canonical_key(), theta.canonical_key());
        let numbered = theta.clone().with_numbering(vec![1]).unwrap();
        let mut s = vec![None; d.graph().edges.len()];
        let e = d.edges_of(EdgeClass::External)[0];
        s[e] = sigma[0];
        signs.push(epsilon(d) * epsilon2(d, &rho) * epsilon3(&numbered, d, &rho, &s).unwrap());
    }
    assert_eq!(signs.len(), 2);
    assert_eq!(signs.iter().sum::<i32>(), 0);
    assert_eq!(BcrWeights::default().wbcr(&theta).unwrap(), Q::zero());
}

#[test]
fn two_triples_over_each_wheel() {
    let w = BcrWeights::default();
    for k in 2..=4 {
        let g = JacobiDiagram::wheel(k);
        let (_, sign) = g.normalize();
        let g = g
            .clone()
            .with_numbering((1..=g.edge_count() as u32).collect())
            .unwrap();
        let triples = w.triples(&g).unwrap();
        assert_eq!(triples.len(), 2, "wheel {k}");
        // One ordering reproduces the orientation, the other reverses every vertex.
        let mut got: Vec<i32> = triples
            .iter()
            .map(|(d, rho, _)| jacobi_of(d, rho, None).unwrap().normalize().1)
            .collect();
        got.sort_unstable();
        let mut want = vec![sign, sign * if k % 2 == 0 { 1 } else { -1 }];
        want.sort_unstable();
        assert_eq!(got, want, "wheel {k}");
    }
}

#[test]
fn reversed_orientation_negates() {
    let w = BcrWeights::default();
    for k in 2..=3 {
        for d in representatives(k) {
            for v in d.univalent_count()..d.vertex_count() {
                assert_eq!(w.wbcr(&d.reversed_at(v)).unwrap(), -w.wbcr(&d).unwrap());
            }
        }
    }
}

#[test]
fn identities_through_degree_three() {
    let limits = Limits::default();
    let alg = Algebra::new(limits);
    let w = BcrWeights::new(limits);
    for k in 1..=3 {
        let reports = [
            verify_main(k, &alg, &w).unwrap(),
            verify_stu(k, &w).unwrap(),
            verify_wheels(k, &alg, &w).unwrap(),
            verify_products(k, &alg, &w).unwrap(),
        ];
        for r in reports {
            let bad: Vec<_> = r.failures().map(|i| i.label.clone()).collect();
            assert!(bad.is_empty(), "{} degree {k}: {bad:?}", r.name);
        }
    }
    assert_eq!(w.wbcr(&JacobiDiagram::wheel(2)).unwrap(), q(2));
    assert_eq!(w.wbcr(&JacobiDiagram::wheel(3)).unwrap(), q(0));
}
