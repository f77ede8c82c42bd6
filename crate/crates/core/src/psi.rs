//! The edge-substitution morphism `Psi(gamma)`: selected edges of a Jacobi
//! diagram are replaced with two-leg diagrams.

use rayon::prelude::*;
use thiserror::Error;

use crate::bridge::{CheckItem, Report};
use crate::diagram::{jacobi_classes, DiagramError, JacobiDiagram, Limits};
use crate::rational::Q;
use crate::space::DiagramVector;
use crate::weight::{wc_diagram, wc_eval};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PsiError {
    #[error("term {term} of degree {degree} does not have exactly two univalent vertices")]
    NotTwoLegged { degree: usize, term: String },
    #[error("term {term} sits in degree {degree}")]
    WrongDegree { degree: usize, term: String },
    #[error("the degree 1 part vanishes")]
    TrivialLeadingPart,
    #[error("component {component} needs {expected} selected edges, got {got}")]
    BadSelection {
        component: usize,
        expected: usize,
        got: usize,
    },
    #[error("edge {0} does not exist")]
    NoSuchEdge(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// `gamma = (gamma_k)_{k >= 1}`, each part a combination of degree `k`
/// diagrams with two univalent vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoLegSeries {
    parts: Vec<DiagramVector>,
}

impl TwoLegSeries {
    /// `parts[i]` is the degree `i + 1` part.
    pub fn new(parts: Vec<DiagramVector>) -> Result<TwoLegSeries, PsiError> {
        for (i, p) in parts.iter().enumerate() {
            for (key, _) in p.iter() {
                let d = key
                    .jacobi_representative()
                    .ok_or_else(|| DiagramError::Format(key.to_string()))?;
                if d.univalent_count() != 2 {
                    return Err(PsiError::NotTwoLegged {
                        degree: i + 1,
                        term: key.to_string(),
                    });
                }
                if d.degree() != i + 1 {
                    return Err(PsiError::WrongDegree {
                        degree: i + 1,
                        term: key.to_string(),
                    });
                }
            }
        }
        if parts.first().is_none_or(|p| p.is_zero()) {
            return Err(PsiError::TrivialLeadingPart);
        }
        Ok(TwoLegSeries { parts })
    }

    /// The degree 1 part of `2 alpha`: the single chord.
    pub fn two_alpha_one() -> TwoLegSeries {
        TwoLegSeries {
            parts: vec![DiagramVector::from_diagram(&JacobiDiagram::theta())],
        }
    }

    pub fn part(&self, k: usize) -> Option<&DiagramVector> {
        k.checked_sub(1).and_then(|i| self.parts.get(i))
    }

    pub fn max_degree(&self) -> usize {
        self.parts.len()
    }

    /// Every term as (coefficient, diagram).
    fn terms(&self) -> Vec<(Q, JacobiDiagram)> {
        self.parts
            .iter()
            .flat_map(|p| p.diagrams().map(|(d, c)| (c.clone(), d)))
            .collect()
    }
}

/// Replaces edge `e` of `g` with `piece`: the first univalent vertex of
/// `piece` is identified with the start of `e`, the second with its end.
pub fn splice(g: &JacobiDiagram, e: usize, piece: &JacobiDiagram) -> JacobiDiagram {
    assert_eq!(piece.univalent_count(), 2, "two-leg piece");
    let [a, b] = g.edges()[e];
    let m = g.edge_count();
    let n = g.vertex_count();
    let half_at = |u: usize| -> usize {
        let h = piece
            .edges()
            .iter()
            .position(|x| x.contains(&u))
            .expect("leg edge");
        if piece.edges()[h][0] == u {
            2 * h
        } else {
            2 * h + 1
        }
    };
    let (h0, h1) = (half_at(0), half_at(1));
    // Piece edge ids: the edge at the first leg takes id `e`, the rest follow `m`.
    let mut emap = vec![usize::MAX; piece.edge_count()];
    emap[h0 / 2] = e;
    let mut next = m;
    for (i, slot) in emap.iter_mut().enumerate() {
        if i != h0 / 2 {
            *slot = next;
            next += 1;
        }
    }
    let vmap = |v: usize| match v {
        0 => a,
        1 => b,
        t => n + t - 2,
    };
    let mut edges = g.edges().to_vec();
    edges.resize(m + piece.edge_count() - 1, [0, 0]);
    for (i, &[x, y]) in piece.edges().iter().enumerate() {
        edges[emap[i]] = [vmap(x), vmap(y)];
    }
    let remap_piece = |h: usize| 2 * emap[h / 2] + h % 2;
    let remap_host = |h: usize| match h {
        h if h == 2 * e => remap_piece(h0),
        h if h == 2 * e + 1 => remap_piece(h1),
        h => h,
    };
    let mut orientation: Vec<[usize; 3]> =
        g.orientations().iter().map(|o| o.map(remap_host)).collect();
    orientation.extend(piece.orientations().iter().map(|o| o.map(remap_piece)));
    JacobiDiagram::new(
        g.univalent_count(),
        g.trivalent_count() + piece.trivalent_count(),
        edges,
        Some(orientation),
    )
    .expect("splicing preserves validity")
}

/// The default selection: in each component, its lowest `deg` edge ids.
pub fn default_selection(g: &JacobiDiagram) -> Vec<usize> {
    let mut out = Vec::new();
    for c in g.components() {
        let want = c.len() / 2;
        out.extend(
            (0..g.edge_count())
                .filter(|&e| c.contains(&g.edges()[e][0]))
                .take(want),
        );
    }
    out.sort_unstable();
    out
}

fn check_selection(g: &JacobiDiagram, x: &[usize]) -> Result<(), PsiError> {
    if let Some(&e) = x.iter().find(|&&e| e >= g.edge_count()) {
        return Err(PsiError::NoSuchEdge(e));
    }
    for (i, c) in g.components().iter().enumerate() {
        let got = x.iter().filter(|&&e| c.contains(&g.edges()[e][0])).count();
        let mut uniq = x.to_vec();
        uniq.sort_unstable();
        uniq.dedup();
        let got_unique = uniq
            .iter()
            .filter(|&&e| c.contains(&g.edges()[e][0]))
            .count();
        if got != c.len() / 2 || got_unique != got {
            return Err(PsiError::BadSelection {
                component: i,
                expected: c.len() / 2,
                got,
            });
        }
    }
    Ok(())
}

/// Result of a substitution truncated at some degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiValue {
    pub value: DiagramVector,
    /// Some terms went above the working degree and were dropped.
    pub overflow: bool,
}

/// `Psi(gamma)(g)` with the edges `x` replaced (the default selection when
/// `None`), keeping terms of degree at most `max_degree`.
pub fn psi_apply(
    gamma: &TwoLegSeries,
    g: &JacobiDiagram,
    x: Option<&[usize]>,
    max_degree: usize,
) -> Result<PsiValue, PsiError> {
    let x = match x {
        Some(x) => x.to_vec(),
        None => default_selection(g),
    };
    check_selection(g, &x)?;
    let terms = gamma.terms();
    if g.degree() > max_degree {
        return Ok(PsiValue {
            value: DiagramVector::zero(),
            overflow: true,
        });
    }
    // Every xi: X -> terms, built one edge at a time and pruned by degree.
    let mut maps: Vec<Vec<usize>> = vec![Vec::new()];
    let mut overflow = false;
    for _ in &x {
        let mut grown = Vec::new();
        for m in &maps {
            let deg: usize = g.degree() + m.iter().map(|&i| terms[i].1.degree() - 1).sum::<usize>();
            for (i, (_, d)) in terms.iter().enumerate() {
                if deg + d.degree() - 1 > max_degree {
                    overflow = true;
                    continue;
                }
                let mut n = m.clone();
                n.push(i);
                grown.push(n);
            }
        }
        maps = grown;
    }
    let parts: Vec<DiagramVector> = maps
        .par_iter()
        .map(|m| {
            let mut coeff = Q::from_integer(1.into());
            let mut d = g.clone();
            for (&e, &i) in x.iter().zip(m) {
                coeff *= &terms[i].0;
                d = splice(&d, e, &terms[i].1);
            }
            let mut v = DiagramVector::zero();
            v.add_diagram(&coeff, &d);
            v
        })
        .collect();
    let mut value = DiagramVector::zero();
    for p in &parts {
        value = &value + p;
    }
    Ok(PsiValue { value, overflow })
}

/// `Psi(gamma)` extended linearly.
pub fn psi_apply_vector(
    gamma: &TwoLegSeries,
    v: &DiagramVector,
    max_degree: usize,
) -> Result<PsiValue, PsiError> {
    let mut value = DiagramVector::zero();
    let mut overflow = false;
    for (d, c) in v.diagrams() {
        let r = psi_apply(gamma, &d, None, max_degree)?;
        overflow |= r.overflow;
        value.add_scaled(c, &r.value);
    }
    Ok(PsiValue { value, overflow })
}

/// `w_C(Psi(2 alpha_1)(G)) = w_C(G)` on every class of degree `k`.
pub fn verify_wc_psi(k: usize, limits: &Limits) -> Result<Report, PsiError> {
    let gamma = TwoLegSeries::two_alpha_one();
    let classes = jacobi_classes(k, limits)?;
    let items = classes
        .par_iter()
        .map(|key| {
            let d = key.jacobi_representative().expect("jacobi key");
            let psi = psi_apply(&gamma, &d, None, k)?;
            Ok(CheckItem::new(
                key.to_string(),
                wc_eval(&psi.value),
                wc_diagram(&d),
            ))
        })
        .collect::<Result<Vec<_>, PsiError>>()?;
    Ok(Report {
        name: "wcpsi".into(),
        degree: k,
        items,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bubble() -> JacobiDiagram {
        JacobiDiagram::new(2, 2, vec![[0, 2], [1, 3], [2, 3], [2, 3]], None).unwrap()
    }

    #[test]
    fn chord_splice_is_identity() {
        let w = JacobiDiagram::wheel(3);
        for e in 0..w.edge_count() {
            assert_eq!(splice(&w, e, &JacobiDiagram::theta()), w);
        }
    }

    #[test]
    fn splice_degree() {
        let w = JacobiDiagram::wheel(2);
        let s = splice(&w, 0, &bubble());
        assert_eq!(s.degree(), 3);
        assert_eq!(s.univalent_count(), 2);
        assert_eq!(s.trivalent_count(), 4);
    }

    #[test]
    fn empty_and_chord() {
        let g = TwoLegSeries::two_alpha_one();
        let e = psi_apply(&g, &JacobiDiagram::empty(), None, 4).unwrap();
        assert_eq!(e.value, DiagramVector::unit());
        let t = psi_apply(&g, &JacobiDiagram::theta(), None, 4).unwrap();
        assert_eq!(
            t.value,
            DiagramVector::from_diagram(&JacobiDiagram::theta())
        );
        let w = psi_apply(&g, &JacobiDiagram::wheel(2), None, 2).unwrap();
        assert_eq!(
            w.value,
            DiagramVector::from_diagram(&JacobiDiagram::wheel(2))
        );
    }

    #[test]
    fn selection_errors() {
        let g = TwoLegSeries::two_alpha_one();
        let w = JacobiDiagram::wheel(2);
        assert!(matches!(
            psi_apply(&g, &w, Some(&[0]), 4),
            Err(PsiError::BadSelection { .. })
        ));
        assert!(matches!(
            psi_apply(&g, &w, Some(&[0, 0]), 4),
            Err(PsiError::BadSelection { .. })
        ));
        assert_eq!(
            psi_apply(&g, &w, Some(&[0, 9]), 4),
            Err(PsiError::NoSuchEdge(9))
        );
    }

    #[test]
    fn overflow_flag() {
        let mut two = DiagramVector::zero();
        two.add_diagram(&Q::from_integer(1.into()), &bubble());
        let g = TwoLegSeries::new(vec![
            DiagramVector::from_diagram(&JacobiDiagram::theta()),
            two,
        ])
        .unwrap();
        let r = psi_apply(&g, &JacobiDiagram::theta(), None, 1).unwrap();
        assert!(r.overflow);
        assert_eq!(
            r.value,
            DiagramVector::from_diagram(&JacobiDiagram::theta())
        );
    }

    #[test]
    fn rejects_bad_series() {
        assert_eq!(
            TwoLegSeries::new(vec![DiagramVector::zero()]),
            Err(PsiError::TrivialLeadingPart)
        );
        let tri = DiagramVector::from_diagram(&JacobiDiagram::tripod());
        assert!(matches!(
            TwoLegSeries::new(vec![tri]),
            Err(PsiError::NotTwoLegged { .. })
        ));
    }
}
