use rayon::prelude::*;

use crate::diagram::draft::{Draft, Slot};
use crate::diagram::{jacobi_classes, CanonicalKey, DiagramError, HalfEdge, JacobiDiagram, Limits};
use crate::rational::q;

use super::vector::DiagramVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    As,
    Stu,
    Ihx,
}

/// A relator together with the local site it came from.
#[derive(Clone, Debug)]
pub struct Relator {
    pub kind: RelationKind,
    /// Class whose representative was rewritten.
    pub source: CanonicalKey,
    /// Rewritten vertex (AS and STU) or edge (IHX) of the representative.
    pub site: usize,
    /// Signed diagrams summing to zero; diagrams with a loop are dropped.
    pub terms: Vec<(i32, JacobiDiagram)>,
}

impl Relator {
    pub fn vector(&self) -> DiagramVector {
        let mut v = DiagramVector::zero();
        for (c, d) in &self.terms {
            v.add_diagram(&q(*c as i64), d);
        }
        v
    }
}

/// Rotates a cyclic triple so that `first` comes first.
pub(crate) fn rotate_to(o: [HalfEdge; 3], first: HalfEdge) -> [HalfEdge; 3] {
    let i = o
        .iter()
        .position(|&h| h == first)
        .expect("half-edge at vertex");
    [o[i], o[(i + 1) % 3], o[(i + 2) % 3]]
}

/// The two diagrams of the STU relation at univalent vertex `u`, whose
/// neighbour must be trivalent. With the cyclic order `(u, a, b)` at the
/// neighbour, `d = first - second`, where `first` places the new leg of
/// `b` below that of `a` on the line and `second` the reverse.
pub fn stu_pair(d: &JacobiDiagram, u: usize) -> (JacobiDiagram, JacobiDiagram) {
    let hu = 2 * d
        .edges()
        .iter()
        .position(|e| e.contains(&u))
        .expect("edge at u");
    let hu = if d.edges()[hu / 2][0] == u {
        hu
    } else {
        hu + 1
    };
    let t = d.head(hu ^ 1);
    assert!(!d.is_univalent(t), "STU needs a trivalent neighbour");
    let [_, ha, hb] = rotate_to(d.orientation(t), hu ^ 1);
    let build = |lower: HalfEdge, upper: HalfEdge| {
        let mut dr = Draft::from_diagram(d);
        let (p, _, _) = dr.pos(u);
        dr.vertices[u] = Slot::Gone;
        dr.vertices[t] = Slot::Gone;
        dr.edges[hu / 2] = None;
        let lo = dr.add_vertex(Slot::Uni((p, 1, 0)));
        let hi = dr.add_vertex(Slot::Uni((p, 2, 0)));
        dr.attach((lower / 2, lower % 2), lo);
        dr.attach((upper / 2, upper % 2), hi);
        dr.build().expect("STU never creates loops")
    };
    (build(hb, ha), build(ha, hb))
}

/// The three terms `I, H, X` of the IHX relation at edge `e`, which must
/// join two trivalent vertices. Terms that would contain a loop are `None`.
pub fn ihx_terms(d: &JacobiDiagram, e: usize) -> [Option<JacobiDiagram>; 3] {
    let [s, t] = d.edges()[e];
    assert!(
        !d.is_univalent(s) && !d.is_univalent(t),
        "IHX needs an inner edge"
    );
    let [_, p, qq] = rotate_to(d.orientation(s), 2 * e);
    let [_, r, w] = rotate_to(d.orientation(t), 2 * e + 1);
    let tree = |x: HalfEdge, y: HalfEdge, z: HalfEdge| {
        let mut dr = Draft::from_diagram(d);
        for (h, v) in [(x, s), (y, s), (z, t), (w, t)] {
            dr.attach((h / 2, h % 2), v);
        }
        dr.vertices[s] = Slot::Tri([(x / 2, x % 2), (y / 2, y % 2), (e, 0)]);
        dr.vertices[t] = Slot::Tri([(e, 1), (z / 2, z % 2), (w / 2, w % 2)]);
        dr.build()
    };
    [tree(p, qq, r), tree(qq, r, p), tree(r, p, qq)]
}

fn relators_of(key: &CanonicalKey) -> Vec<Relator> {
    let d = key.jacobi_representative().expect("jacobi key");
    let mut out = Vec::new();
    for v in d.univalent_count()..d.vertex_count() {
        out.push(Relator {
            kind: RelationKind::As,
            source: key.clone(),
            site: v,
            terms: vec![(1, d.reversed_at(v)), (1, d.clone())],
        });
    }
    for (u, [a, b]) in (0..d.univalent_count()).map(|u| (u, d.edges()[edge_at(&d, u)])) {
        let other = if a == u { b } else { a };
        if d.is_univalent(other) {
            continue;
        }
        let (g1, g2) = stu_pair(&d, u);
        out.push(Relator {
            kind: RelationKind::Stu,
            source: key.clone(),
            site: u,
            terms: vec![(1, d.clone()), (-1, g1), (1, g2)],
        });
    }
    for (e, &[a, b]) in d.edges().iter().enumerate() {
        if d.is_univalent(a) || d.is_univalent(b) {
            continue;
        }
        let terms = ihx_terms(&d, e)
            .into_iter()
            .flatten()
            .map(|g| (1, g))
            .collect();
        out.push(Relator {
            kind: RelationKind::Ihx,
            source: key.clone(),
            site: e,
            terms,
        });
    }
    out
}

fn edge_at(d: &JacobiDiagram, u: usize) -> usize {
    d.edges()
        .iter()
        .position(|e| e.contains(&u))
        .expect("edge at vertex")
}

/// All AS, STU and IHX relators of degree `k`, one per local site of each
/// class representative.
pub fn generate_relations(k: usize, limits: &Limits) -> Result<Vec<Relator>, DiagramError> {
    let classes = jacobi_classes(k, limits)?;
    Ok(classes
        .par_iter()
        .flat_map_iter(relators_of)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tripod_stu() {
        let y = JacobiDiagram::tripod();
        let (a, b) = stu_pair(&y, 0);
        assert!(a.is_chord_diagram() && b.is_chord_diagram());
        // Leg order (0,1,2) at the vertex: the first term puts the leg to 2 below the leg to 1.
        assert_eq!(
            a.canonical_key(),
            JacobiDiagram::chords(&[(0, 3), (1, 2)])
                .unwrap()
                .canonical_key()
        );
        assert_eq!(
            b.canonical_key(),
            JacobiDiagram::chords(&[(0, 2), (1, 3)])
                .unwrap()
                .canonical_key()
        );
    }

    #[test]
    fn degree_zero_has_no_relators() {
        assert!(generate_relations(0, &Limits::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn as_relators_vanish_after_normalization() {
        for r in generate_relations(2, &Limits::default()).unwrap() {
            if r.kind == RelationKind::As {
                assert!(r.vector().is_zero());
            }
        }
    }
}
