use std::fmt;

use super::DiagramError;

/// Half-edge id: `2 * edge + end`, where end 0 is the `from` endpoint.
pub type HalfEdge = usize;

/// A vertex-oriented Jacobi diagram on an oriented line.
///
/// Vertices `0..U` are univalent and appear on the line in this order,
/// vertices `U..U+T` are trivalent. Edges are stored as `[from, to]`, and
/// the pair doubles as an edge orientation when one is needed. Parallel
/// edges are allowed, loops are not.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JacobiDiagram {
    univalent: usize,
    trivalent: usize,
    edges: Vec<[usize; 2]>,
    orientation: Vec<[HalfEdge; 3]>,
    numbering: Option<Vec<u32>>,
}

impl JacobiDiagram {
    /// Builds and validates a diagram. When `orientation` is `None` each
    /// trivalent vertex gets its incident half-edges in increasing order.
    pub fn new(
        univalent: usize,
        trivalent: usize,
        edges: Vec<[usize; 2]>,
        orientation: Option<Vec<[HalfEdge; 3]>>,
    ) -> Result<Self, DiagramError> {
        let n = univalent + trivalent;
        let mut incident: Vec<Vec<HalfEdge>> = vec![Vec::new(); n];
        for (e, &[a, b]) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(DiagramError::VertexOutOfRange { edge: e, vertex: v });
                }
            }
            if a == b {
                return Err(DiagramError::LoopEdge(e));
            }
            incident[a].push(2 * e);
            incident[b].push(2 * e + 1);
        }
        for (v, hs) in incident.iter().enumerate() {
            let want = if v < univalent { 1 } else { 3 };
            if hs.len() != want {
                return Err(DiagramError::VertexTypeViolation(v));
            }
        }
        let orientation = match orientation {
            None => incident[univalent..]
                .iter()
                .map(|hs| [hs[0], hs[1], hs[2]])
                .collect(),
            Some(o) => {
                if o.len() != trivalent {
                    return Err(DiagramError::BadOrientation(
                        univalent + o.len().min(trivalent),
                    ));
                }
                for (i, tri) in o.iter().enumerate() {
                    let mut got = tri.to_vec();
                    got.sort_unstable();
                    if got != incident[univalent + i] {
                        return Err(DiagramError::BadOrientation(univalent + i));
                    }
                }
                o
            }
        };
        Ok(JacobiDiagram {
            univalent,
            trivalent,
            edges,
            orientation,
            numbering: None,
        })
    }

    pub fn empty() -> Self {
        JacobiDiagram {
            univalent: 0,
            trivalent: 0,
            edges: Vec::new(),
            orientation: Vec::new(),
            numbering: None,
        }
    }

    /// Chord diagram with the given chords between line positions `0..2n`.
    pub fn chords(pairs: &[(usize, usize)]) -> Result<Self, DiagramError> {
        let u = 2 * pairs.len();
        JacobiDiagram::new(u, 0, pairs.iter().map(|&(a, b)| [a, b]).collect(), None)
    }

    /// The single edge between two univalent vertices.
    pub fn theta() -> Self {
        JacobiDiagram::chords(&[(0, 1)]).expect("valid chord")
    }

    /// Wheel with `k >= 2` legs: leg `i` joins line position `i` to the
    /// trivalent vertex `t_i`, and the cycle runs `t_0 -> t_1 -> ... -> t_0`.
    /// At `t_i` the cyclic order is (incoming cycle edge, leg, outgoing cycle edge).
    pub fn wheel(k: usize) -> Self {
        assert!(k >= 2, "wheels need at least two legs");
        let mut edges = Vec::with_capacity(2 * k);
        for i in 0..k {
            edges.push([i, k + i]);
        }
        for i in 0..k {
            edges.push([k + i, k + (i + 1) % k]);
        }
        let orientation = (0..k)
            .map(|i| {
                let prev = k + (i + k - 1) % k;
                [2 * prev + 1, 2 * i + 1, 2 * (k + i)]
            })
            .collect();
        JacobiDiagram::new(k, k, edges, Some(orientation)).expect("valid wheel")
    }

    /// The tripod: one trivalent vertex joined to three points of the line.
    pub fn tripod() -> Self {
        JacobiDiagram::new(3, 1, vec![[0, 3], [1, 3], [2, 3]], Some(vec![[1, 3, 5]]))
            .expect("valid tripod")
    }

    pub fn univalent_count(&self) -> usize {
        self.univalent
    }

    pub fn trivalent_count(&self) -> usize {
        self.trivalent
    }

    pub fn vertex_count(&self) -> usize {
        self.univalent + self.trivalent
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Half the number of vertices.
    pub fn degree(&self) -> usize {
        self.vertex_count() / 2
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn is_univalent(&self, v: usize) -> bool {
        v < self.univalent
    }

    pub fn is_chord_diagram(&self) -> bool {
        self.trivalent == 0
    }

    /// Cyclic order at trivalent vertex `v` (a global vertex index).
    pub fn orientation(&self, v: usize) -> [HalfEdge; 3] {
        self.orientation[v - self.univalent]
    }

    pub fn orientations(&self) -> &[[HalfEdge; 3]] {
        &self.orientation
    }

    pub fn numbering(&self) -> Option<&[u32]> {
        self.numbering.as_deref()
    }

    /// Vertex at half-edge `h`.
    pub fn head(&self, h: HalfEdge) -> usize {
        self.edges[h / 2][h % 2]
    }

    /// Half-edges at every vertex, in increasing order.
    pub fn incidence(&self) -> Vec<Vec<HalfEdge>> {
        let mut inc = vec![Vec::new(); self.vertex_count()];
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            inc[a].push(2 * e);
            inc[b].push(2 * e + 1);
        }
        inc
    }

    /// Neighbour list with multiplicity.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &[a, b] in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Attaches an edge numbering, which must be injective into `1..=3k`.
    pub fn with_numbering(mut self, numbering: Vec<u32>) -> Result<Self, DiagramError> {
        if numbering.len() != self.edges.len() {
            return Err(DiagramError::BadNumbering(format!(
                "{} numbers for {} edges",
                numbering.len(),
                self.edges.len()
            )));
        }
        let top = 3 * self.degree() as u32;
        let mut seen = std::collections::HashSet::new();
        for &x in &numbering {
            if x == 0 || x > top {
                return Err(DiagramError::BadNumbering(format!("{x} outside 1..={top}")));
            }
            if !seen.insert(x) {
                return Err(DiagramError::BadNumbering(format!("{x} used twice")));
            }
        }
        self.numbering = Some(numbering);
        Ok(self)
    }

    pub fn without_numbering(mut self) -> Self {
        self.numbering = None;
        self
    }

    /// The same diagram with the cyclic order at trivalent vertex `v` reversed.
    pub fn reversed_at(&self, v: usize) -> Self {
        let mut d = self.clone();
        let o = &mut d.orientation[v - self.univalent];
        o.swap(1, 2);
        d
    }

    /// Juxtaposition: `other` is placed after `self` on the line.
    pub fn product(&self, other: &JacobiDiagram) -> JacobiDiagram {
        let (u1, t1) = (self.univalent, self.trivalent);
        let (u2, t2) = (other.univalent, other.trivalent);
        let m1 = self.edges.len();
        let map1 = |v: usize| if v < u1 { v } else { v + u2 };
        let map2 = |v: usize| if v < u2 { u1 + v } else { u1 + t1 + v };
        let mut edges: Vec<[usize; 2]> = self
            .edges
            .iter()
            .map(|&[a, b]| [map1(a), map1(b)])
            .collect();
        edges.extend(other.edges.iter().map(|&[a, b]| [map2(a), map2(b)]));
        let mut orientation = self.orientation.clone();
        orientation.extend(other.orientation.iter().map(|o| o.map(|h| h + 2 * m1)));
        JacobiDiagram {
            univalent: u1 + u2,
            trivalent: t1 + t2,
            edges,
            orientation,
            numbering: None,
        }
    }

    /// Relabels trivalent vertices and edges. `vperm[v]` is the new index of
    /// trivalent vertex `v` (univalent vertices stay fixed), `eperm[e]` the
    /// new index of edge `e`. The result is the same abstract diagram.
    pub fn relabeled(&self, vperm: &[usize], eperm: &[usize]) -> JacobiDiagram {
        let m = self.edges.len();
        let mut edges = vec![[0usize; 2]; m];
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            edges[eperm[e]] = [vperm[a], vperm[b]];
        }
        let mut orientation = vec![[0usize; 3]; self.trivalent];
        for (i, o) in self.orientation.iter().enumerate() {
            let v = self.univalent + i;
            orientation[vperm[v] - self.univalent] = o.map(|h| 2 * eperm[h / 2] + h % 2);
        }
        let numbering = self.numbering.as_ref().map(|nums| {
            let mut out = vec![0; m];
            for (e, &x) in nums.iter().enumerate() {
                out[eperm[e]] = x;
            }
            out
        });
        JacobiDiagram {
            univalent: self.univalent,
            trivalent: self.trivalent,
            edges,
            orientation,
            numbering,
        }
    }

    /// Reverses the orientation of edge `e`, keeping half-edge ids attached
    /// to their vertices consistent.
    pub fn flip_edge(&self, e: usize) -> JacobiDiagram {
        let mut d = self.clone();
        d.edges[e].swap(0, 1);
        for o in &mut d.orientation {
            for h in o.iter_mut() {
                if *h / 2 == e {
                    *h ^= 1;
                }
            }
        }
        d
    }
}

impl fmt::Display for JacobiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J[u={} t={};", self.univalent, self.trivalent)?;
        for (i, [a, b]) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {a}-{b}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_valence_and_loops() {
        assert_eq!(
            JacobiDiagram::new(2, 0, vec![[0, 0]], None).unwrap_err(),
            DiagramError::LoopEdge(0)
        );
        assert_eq!(
            JacobiDiagram::new(3, 0, vec![[0, 1]], None).unwrap_err(),
            DiagramError::VertexTypeViolation(2)
        );
        assert!(matches!(
            JacobiDiagram::new(2, 0, vec![[0, 5]], None).unwrap_err(),
            DiagramError::VertexOutOfRange { .. }
        ));
    }

    #[test]
    fn rejects_orientation_not_matching_incidence() {
        let err = JacobiDiagram::new(3, 1, vec![[0, 3], [1, 3], [2, 3]], Some(vec![[1, 3, 4]]));
        assert_eq!(err.unwrap_err(), DiagramError::BadOrientation(3));
    }

    #[test]
    fn wheel_shape() {
        let w = JacobiDiagram::wheel(3);
        assert_eq!(w.degree(), 3);
        assert_eq!(w.edge_count(), 6);
        assert!(w.is_connected());
        let w2 = JacobiDiagram::wheel(2);
        assert_eq!(w2.edges()[2], [2, 3]);
        assert_eq!(w2.edges()[3], [3, 2]);
    }

    #[test]
    fn numbering_checks() {
        let c = JacobiDiagram::theta();
        assert!(c.clone().with_numbering(vec![3]).is_ok());
        assert!(c.clone().with_numbering(vec![4]).is_err());
        let two = JacobiDiagram::chords(&[(0, 1), (2, 3)]).unwrap();
        assert!(two.with_numbering(vec![2, 2]).is_err());
    }

    #[test]
    fn product_concatenates_lines() {
        let a = JacobiDiagram::tripod();
        let b = JacobiDiagram::theta();
        let p = a.product(&b);
        assert_eq!(p.univalent_count(), 5);
        assert_eq!(p.trivalent_count(), 1);
        assert_eq!(p.edges()[3], [3, 4]);
        assert_eq!(p.orientation(5), [1, 3, 5]);
        assert_eq!(p.components().len(), 2);
    }

    #[test]
    fn flip_edge_is_involutive() {
        let w = JacobiDiagram::wheel(3);
        assert_eq!(w.flip_edge(4).flip_edge(4), w);
        assert_ne!(w.flip_edge(4), w);
    }
}
