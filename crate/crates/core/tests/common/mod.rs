//! Generate-and-filter oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use bcr_core::diagram::{validate_bcr, BcrGraph, EdgeClass, VertexClass};
use bcr_core::{CanonicalKey, JacobiDiagram};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Every directed graph on `n` vertices with classed vertices and edges and
/// all total degrees in 1..=3, kept when it validates.
pub fn brute_bcr(n: usize) -> BTreeSet<CanonicalKey> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut keys = BTreeSet::new();
    for mask in 0..(1u32 << n) {
        let vertices: Vec<VertexClass> = (0..n)
            .map(|v| {
                if mask >> v & 1 == 1 {
                    VertexClass::External
                } else {
                    VertexClass::Internal
                }
            })
            .collect();
        let mut deg = vec![0u8; n];
        let mut edges = Vec::new();
        walk(&pairs, 0, &mut deg, &mut edges, &vertices, &mut keys);
    }
    keys
}

fn walk(
    pairs: &[(usize, usize)],
    i: usize,
    deg: &mut [u8],
    edges: &mut Vec<(usize, usize, EdgeClass)>,
    vertices: &[VertexClass],
    keys: &mut BTreeSet<CanonicalKey>,
) {
    if i == pairs.len() {
        if deg.iter().all(|&d| d >= 1) {
            let mut g = BcrGraph {
                vertices: vertices.to_vec(),
                edges: Vec::new(),
            };
            for &(a, b, c) in edges.iter() {
                g.add_edge(a, b, c);
            }
            if let Ok(d) = validate_bcr(g) {
                keys.insert(d.canonical_key());
            }
        }
        return;
    }
    walk(pairs, i + 1, deg, edges, vertices, keys);
    let (a, b) = pairs[i];
    if deg[a] < 3 && deg[b] < 3 {
        deg[a] += 1;
        deg[b] += 1;
        for c in [EdgeClass::Internal, EdgeClass::External] {
            edges.push((a, b, c));
            walk(pairs, i + 1, deg, edges, vertices, keys);
            edges.pop();
        }
        deg[a] -= 1;
        deg[b] -= 1;
    }
}

/// Sorted edge list minimized over all relabelings of the trivalent vertices.
pub fn slow_form(u: usize, t: usize, edges: &[[usize; 2]]) -> Vec<[usize; 2]> {
    let mut perm: Vec<usize> = (0..t).collect();
    let mut best: Option<Vec<[usize; 2]>> = None;
    loop {
        let map = |v: usize| if v < u { v } else { u + perm[v - u] };
        let mut es: Vec<[usize; 2]> = edges
            .iter()
            .map(|&[a, b]| {
                let (a, b) = (map(a), map(b));
                [a.min(b), a.max(b)]
            })
            .collect();
        es.sort_unstable();
        if best.as_ref().is_none_or(|b| es < *b) {
            best = Some(es);
        }
        // Next permutation.
        let Some(i) = (1..t).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..t).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap_or_default()
}

/// All loopless multigraphs with the given degrees, by choosing an edge
/// multiplicity for each vertex pair in turn.
pub fn brute_jacobi(u: usize, t: usize) -> BTreeSet<Vec<[usize; 2]>> {
    let n = u + t;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut rem: Vec<usize> = (0..n).map(|v| if v < u { 1 } else { 3 }).collect();
    let mut out = BTreeSet::new();
    fn go(
        pairs: &[(usize, usize)],
        i: usize,
        rem: &mut [usize],
        edges: &mut Vec<[usize; 2]>,
        u: usize,
        t: usize,
        out: &mut BTreeSet<Vec<[usize; 2]>>,
    ) {
        if i == pairs.len() {
            if rem.iter().all(|&r| r == 0) {
                out.insert(slow_form(u, t, edges));
            }
            return;
        }
        let (a, b) = pairs[i];
        // Once a's last pair is passed it must be saturated.
        let last_for_a = b == rem.len() - 1;
        for m in 0..=rem[a].min(rem[b]) {
            if last_for_a && rem[a] != m {
                continue;
            }
            rem[a] -= m;
            rem[b] -= m;
            for _ in 0..m {
                edges.push([a, b]);
            }
            go(pairs, i + 1, rem, edges, u, t, out);
            for _ in 0..m {
                edges.pop();
            }
            rem[a] += m;
            rem[b] += m;
        }
    }
    go(&pairs, 0, &mut rem, &mut Vec::new(), u, t, &mut out);
    out
}

pub fn random_relabeling(d: &JacobiDiagram, rng: &mut ChaCha8Rng) -> JacobiDiagram {
    let (u, t) = (d.univalent_count(), d.trivalent_count());
    let mut tri: Vec<usize> = (u..u + t).collect();
    tri.shuffle(rng);
    let vperm: Vec<usize> = (0..u).chain(tri).collect();
    let mut eperm: Vec<usize> = (0..d.edge_count()).collect();
    eperm.shuffle(rng);
    let mut out = d.relabeled(&vperm, &eperm);
    for e in 0..out.edge_count() {
        if rng.gen_bool(0.5) {
            out = out.flip_edge(e);
        }
    }
    out
}
