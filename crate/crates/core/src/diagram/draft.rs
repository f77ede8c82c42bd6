//! Mutable scratch form of a Jacobi diagram used by local rewrites.
//!
//! Half-edges are addressed as `(edge, end)` with stable edge ids, so a
//! rewrite can reattach edge ends without renumbering anything. Univalent
//! vertices carry a sort key for their position on the line.

use super::jacobi::JacobiDiagram;

pub(crate) type Pos = (usize, usize, usize);
pub(crate) type End = (usize, usize);

#[derive(Clone, Debug)]
pub(crate) enum Slot {
    Uni(Pos),
    Tri([End; 3]),
    Gone,
}

#[derive(Clone, Debug)]
pub(crate) struct Draft {
    pub vertices: Vec<Slot>,
    pub edges: Vec<Option<[usize; 2]>>,
}

impl Draft {
    pub fn from_diagram(d: &JacobiDiagram) -> Draft {
        let u = d.univalent_count();
        let mut vertices: Vec<Slot> = (0..u).map(|v| Slot::Uni((v, 0, 0))).collect();
        for o in d.orientations() {
            vertices.push(Slot::Tri(o.map(|h| (h / 2, h % 2))));
        }
        Draft {
            vertices,
            edges: d.edges().iter().map(|&e| Some(e)).collect(),
        }
    }

    pub fn add_vertex(&mut self, s: Slot) -> usize {
        self.vertices.push(s);
        self.vertices.len() - 1
    }

    /// Reattaches edge end `x` to vertex `v`.
    pub fn attach(&mut self, x: End, v: usize) {
        self.edges[x.0].as_mut().expect("live edge")[x.1] = v;
    }

    pub fn pos(&self, v: usize) -> Pos {
        match self.vertices[v] {
            Slot::Uni(p) => p,
            _ => panic!("vertex {v} is not univalent"),
        }
    }

    /// Converts back into a validated diagram. Returns `None` when some
    /// edge became a loop, which makes the diagram vanish.
    pub fn build(&self) -> Option<JacobiDiagram> {
        let mut unis: Vec<(Pos, usize)> = Vec::new();
        let mut tris: Vec<usize> = Vec::new();
        for (v, s) in self.vertices.iter().enumerate() {
            match s {
                Slot::Uni(p) => unis.push((*p, v)),
                Slot::Tri(_) => tris.push(v),
                Slot::Gone => {}
            }
        }
        unis.sort();
        let mut newv = vec![usize::MAX; self.vertices.len()];
        for (i, &(_, v)) in unis.iter().enumerate() {
            newv[v] = i;
        }
        for (i, &v) in tris.iter().enumerate() {
            newv[v] = unis.len() + i;
        }
        let mut newe = vec![usize::MAX; self.edges.len()];
        let mut edges = Vec::new();
        for (e, x) in self.edges.iter().enumerate() {
            if let Some([a, b]) = *x {
                if a == b {
                    return None;
                }
                newe[e] = edges.len();
                edges.push([newv[a], newv[b]]);
            }
        }
        let orientation = tris
            .iter()
            .map(|&v| match self.vertices[v] {
                Slot::Tri(ends) => ends.map(|(e, end)| 2 * newe[e] + end),
                _ => unreachable!(),
            })
            .collect();
        Some(
            JacobiDiagram::new(unis.len(), tris.len(), edges, Some(orientation))
                .expect("rewrite preserves validity"),
        )
    }
}
