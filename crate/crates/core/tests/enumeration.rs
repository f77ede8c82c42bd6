mod common;

use std::collections::BTreeSet;

use bcr_core::bridge::orderings;
use bcr_core::diagram::{
    enumerate_bcr, enumerate_jacobi, jacobi_classes, validate_bcr, BcrGraph, VertexClass,
};
use bcr_core::{BcrDiagram, CanonicalKey, JacobiDiagram, Limits};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_bcr, brute_jacobi, random_relabeling, slow_form};

#[test]
fn bcr_enumeration_matches_brute_force() {
    let limits = Limits::default();
    for k in 1..=2 {
        let got: BTreeSet<CanonicalKey> = enumerate_bcr(k, &limits)
            .unwrap()
            .iter()
            .map(|d| d.canonical_key())
            .collect();
        assert_eq!(got, brute_bcr(2 * k), "degree {k}");
    }
}

#[test]
fn bcr_enumeration_is_duplicate_free() {
    let limits = Limits::default();
    for k in 1..=4 {
        let ds = enumerate_bcr(k, &limits).unwrap();
        let keys: BTreeSet<CanonicalKey> = ds.iter().map(|d| d.canonical_key()).collect();
        assert_eq!(keys.len(), ds.len(), "degree {k}");
        assert!(ds.iter().all(|d| d.degree() == k));
    }
    assert_eq!(enumerate_bcr(1, &limits).unwrap().len(), 1);
    assert!(enumerate_bcr(2, &limits)
        .unwrap()
        .iter()
        .any(|d| d.canonical_key() == BcrDiagram::wheel(2).canonical_key()));
}

#[test]
fn jacobi_enumeration_matches_brute_force() {
    let limits = Limits::default();
    for k in 0..=3 {
        let mut expected = BTreeSet::new();
        for t in 0..=2 * k {
            let u = 2 * k - t;
            if (u + 3 * t) % 2 == 0 {
                expected.extend(brute_jacobi(u, t).into_iter().map(|es| (u, t, es)));
            }
        }
        let got: BTreeSet<_> = enumerate_jacobi(k, false, false, &limits)
            .unwrap()
            .iter()
            .map(|d| {
                let (u, t) = (d.univalent_count(), d.trivalent_count());
                (u, t, slow_form(u, t, d.edges()))
            })
            .collect();
        assert_eq!(
            got.len(),
            jacobi_classes(k, &limits).unwrap().len(),
            "degree {k}"
        );
        assert_eq!(got, expected, "degree {k}");
    }
}

#[test]
fn jacobi_filters() {
    let limits = Limits::default();
    for k in 1..=3 {
        let all = enumerate_jacobi(k, false, false, &limits).unwrap();
        let conn = enumerate_jacobi(k, true, false, &limits).unwrap();
        let uni = enumerate_jacobi(k, false, true, &limits).unwrap();
        assert_eq!(conn.len(), all.iter().filter(|d| d.is_connected()).count());
        assert!(uni.iter().all(|d| d
            .components()
            .iter()
            .all(|c| c.iter().any(|&v| d.is_univalent(v)))));
        assert!(uni.len() < all.len());
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn ordering_count_is_factorial() {
    let limits = Limits::default();
    for k in 1..=4 {
        for d in enumerate_bcr(k, &limits).unwrap() {
            let os = orderings(&d);
            assert_eq!(os.len(), factorial(d.internal_vertices().len()), "{d}");
            let distinct: BTreeSet<Vec<usize>> = os.iter().map(|o| o.order().to_vec()).collect();
            assert_eq!(distinct.len(), os.len());
        }
    }
}

#[test]
fn canonical_keys_survive_random_relabelings() {
    let mut rng = ChaCha8Rng::seed_from_u64(20261014);
    let limits = Limits::default();
    let reps: Vec<JacobiDiagram> = (1..=4)
        .flat_map(|k| enumerate_jacobi(k, false, false, &limits).unwrap())
        .filter(|d| d.trivalent_count() > 0)
        .collect();
    for _ in 0..1000 {
        let d = reps.choose(&mut rng).unwrap();
        // Start from a non-canonical orientation too.
        let d = if rng.gen_bool(0.5) {
            d.reversed_at(d.univalent_count())
        } else {
            d.clone()
        };
        let r = random_relabeling(&d, &mut rng);
        assert_eq!(r.canonical_key(), d.canonical_key(), "{d}");
        assert_eq!(r.normalize(), d.normalize(), "{d}");
    }
}

#[test]
fn bcr_keys_survive_vertex_relabelings() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let limits = Limits::default();
    let ds: Vec<BcrDiagram> = (1..=3)
        .flat_map(|k| enumerate_bcr(k, &limits).unwrap())
        .collect();
    for _ in 0..200 {
        let d = ds.choose(&mut rng).unwrap();
        let g = d.graph();
        let mut perm: Vec<usize> = (0..g.vertices.len()).collect();
        perm.shuffle(&mut rng);
        let mut h = BcrGraph {
            vertices: vec![VertexClass::Internal; g.vertices.len()],
            edges: Vec::new(),
        };
        for (v, &c) in g.vertices.iter().enumerate() {
            h.vertices[perm[v]] = c;
        }
        let mut es = g.edges.clone();
        es.shuffle(&mut rng);
        for e in es {
            h.add_edge(perm[e.from], perm[e.to], e.class);
        }
        assert_eq!(validate_bcr(h).unwrap().canonical_key(), d.canonical_key());
    }
}
