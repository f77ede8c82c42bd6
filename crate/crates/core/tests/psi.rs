use std::collections::BTreeSet;

use bcr_core::diagram::jacobi_classes;
use bcr_core::psi::{psi_apply, psi_apply_vector, verify_wc_psi, TwoLegSeries};
use bcr_core::rational::q_frac;
use bcr_core::space::DiagramVector;
use bcr_core::weight::wc_eval;
use bcr_core::{JacobiDiagram, Limits};

fn bubble() -> JacobiDiagram {
    JacobiDiagram::new(2, 2, vec![[0, 2], [1, 3], [2, 3], [2, 3]], None).unwrap()
}

fn chord_plus_bubble() -> TwoLegSeries {
    let mut two = DiagramVector::zero();
    two.add_diagram(&q_frac(1, 3), &bubble());
    TwoLegSeries::new(vec![
        DiagramVector::from_diagram(&JacobiDiagram::theta()),
        two,
    ])
    .unwrap()
}

/// Every selection of `deg` edges per component.
fn selections(g: &JacobiDiagram) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for c in g.components() {
        let edges: Vec<usize> = (0..g.edge_count())
            .filter(|&e| c.contains(&g.edges()[e][0]))
            .collect();
        let want = c.len() / 2;
        let mut subsets = Vec::new();
        for mask in 0u32..(1 << edges.len()) {
            if mask.count_ones() as usize == want {
                subsets.push(
                    (0..edges.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| edges[i])
                        .collect::<Vec<_>>(),
                );
            }
        }
        out = out
            .into_iter()
            .flat_map(|p| {
                subsets
                    .iter()
                    .map(move |s| p.iter().chain(s).copied().collect())
            })
            .collect();
    }
    out
}

#[test]
fn wc_psi_up_to_degree_three() {
    for k in 0..=3 {
        let r = verify_wc_psi(k, &Limits::default()).unwrap();
        assert!(
            r.passed(),
            "degree {k}: {:?}",
            r.failures().collect::<Vec<_>>()
        );
        assert!(!r.items.is_empty());
    }
}

#[test]
fn wc_values_do_not_depend_on_the_selection() {
    let gamma = chord_plus_bubble();
    for k in 1..=2 {
        for key in jacobi_classes(k, &Limits::default()).unwrap() {
            let d = key.jacobi_representative().unwrap();
            let values: BTreeSet<String> = selections(&d)
                .iter()
                .map(|x| {
                    let r = psi_apply(&gamma, &d, Some(x), 2 * k).unwrap();
                    assert!(!r.overflow);
                    wc_eval(&r.value).to_string()
                })
                .collect();
            assert_eq!(values.len(), 1, "{key}: {values:?}");
        }
    }
}

#[test]
fn linear_in_the_diagram() {
    let gamma = chord_plus_bubble();
    let mut v = DiagramVector::zero();
    v.add_diagram(&q_frac(2, 1), &JacobiDiagram::wheel(2));
    v.add_diagram(&q_frac(-1, 5), &JacobiDiagram::tripod());
    let whole = psi_apply_vector(&gamma, &v, 4).unwrap().value;
    let a = psi_apply(&gamma, &JacobiDiagram::wheel(2), None, 4)
        .unwrap()
        .value;
    let b = psi_apply(&gamma, &JacobiDiagram::tripod(), None, 4)
        .unwrap()
        .value;
    let mut sum = a.scale(&q_frac(2, 1));
    sum.add_scaled(&q_frac(-1, 5), &b);
    assert_eq!(whole, sum);
}

#[test]
fn degree_bookkeeping() {
    let gamma = chord_plus_bubble();
    let w = JacobiDiagram::wheel(2);
    let r = psi_apply(&gamma, &w, None, 4).unwrap();
    // Two selected edges, each a chord or a bubble.
    let degrees: BTreeSet<usize> = r.value.iter().map(|(k, _)| k.degree()).collect();
    assert!(degrees.is_subset(&[2, 3, 4].into_iter().collect()));
    assert!(degrees.contains(&2));
    let truncated = psi_apply(&gamma, &w, None, 3).unwrap();
    assert!(truncated.overflow);
    assert!(truncated.value.iter().all(|(k, _)| k.degree() <= 3));
}
