//! Orderings of BCR diagrams, the induced Jacobi diagrams, their signs and
//! the weight `w_BCR`.

pub mod involution;
mod verify;
mod weights;

pub use verify::{verify_main, verify_products, verify_stu, verify_wheels, CheckItem, Report};
pub use weights::{triple_key, BcrWeights, WeightTable};

use thiserror::Error;

use crate::diagram::{
    orientation_sign_mapped, BcrDiagram, DiagramError, EdgeClass, JacobiDiagram, VertexType,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BridgeError {
    #[error("the induced diagram is not isomorphic to the target")]
    NotIsomorphic,
    #[error("the numbering does not determine a unique isomorphism")]
    AmbiguousIsomorphism,
    #[error("not an ordering of the internal vertices")]
    BadOrdering,
    #[error("a numbering is required")]
    MissingNumbering,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Total order on the internal vertices of a BCR diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ordering {
    order: Vec<usize>,
    rank: Vec<Option<usize>>,
}

impl Ordering {
    /// `order` lists the internal vertices from first to last.
    pub fn new(d: &BcrDiagram, order: Vec<usize>) -> Result<Ordering, BridgeError> {
        let mut rank = vec![None; d.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            if v >= d.vertex_count() || !d.is_internal_vertex(v) || rank[v].is_some() {
                return Err(BridgeError::BadOrdering);
            }
            rank[v] = Some(i);
        }
        if order.len() != d.internal_vertices().len() {
            return Err(BridgeError::BadOrdering);
        }
        Ok(Ordering { order, rank })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Zero-based rank of an internal vertex.
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v].expect("internal vertex")
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Exchanges the ranks of `a` and `b`.
    pub fn swapped(&self, a: usize, b: usize) -> Ordering {
        let mut o = self.clone();
        let (ra, rb) = (self.rank(a), self.rank(b));
        o.order.swap(ra, rb);
        o.rank[a] = Some(rb);
        o.rank[b] = Some(ra);
        o
    }
}

/// All `(#V_i)!` orderings, in lexicographic order of the vertex lists.
pub fn orderings(d: &BcrDiagram) -> Vec<Ordering> {
    let mut p = d.internal_vertices();
    let mut out = Vec::new();
    loop {
        out.push(Ordering::new(d, p.clone()).expect("permutation of internal vertices"));
        if !crate::diagram::next_permutation(&mut p) {
            break;
        }
    }
    out
}

/// Numbering of the edges of a BCR diagram; only external edges carry numbers.
pub type EdgeNumbering = Vec<Option<u32>>;

/// External edges of `d` in increasing id order. Edge `i` of the induced
/// Jacobi diagram is the `i`-th of these.
pub fn external_edges(d: &BcrDiagram) -> Vec<usize> {
    d.edges_of(EdgeClass::External)
}

/// The Jacobi diagram `Gamma_rho`: internal vertices become univalent
/// vertices ordered by `rho`, external vertices become trivalent vertices
/// (in id order) oriented by (incoming cycle edge, leg, outgoing cycle edge),
/// and the edges are the external edges.
pub fn jacobi_of(
    d: &BcrDiagram,
    rho: &Ordering,
    sigma: Option<&EdgeNumbering>,
) -> Result<JacobiDiagram, BridgeError> {
    let n = d.vertex_count();
    let ni = rho.len();
    let mut vmap = vec![usize::MAX; n];
    for (i, &v) in rho.order().iter().enumerate() {
        vmap[v] = i;
    }
    let exts = d.external_vertices();
    for (i, &v) in exts.iter().enumerate() {
        vmap[v] = ni + i;
    }
    let ee = external_edges(d);
    let mut emap = vec![usize::MAX; n];
    for (i, &e) in ee.iter().enumerate() {
        emap[e] = i;
    }
    let edges = ee
        .iter()
        .map(|&e| {
            let x = d.edge(e);
            [vmap[x.from], vmap[x.to]]
        })
        .collect();
    let orientation = exts
        .iter()
        .map(|&v| {
            let into = d.cycle_in_edge(v);
            let (_, leg) = d.leg(v).expect("external vertices carry a leg");
            let out = d.out_edge(v);
            [2 * emap[into] + 1, 2 * emap[leg] + 1, 2 * emap[out]]
        })
        .collect();
    let g = JacobiDiagram::new(ni, exts.len(), edges, Some(orientation))?;
    match sigma {
        None => Ok(g),
        Some(s) => {
            let nums: Option<Vec<u32>> = ee.iter().map(|&e| s.get(e).copied().flatten()).collect();
            Ok(g.with_numbering(nums.ok_or(BridgeError::MissingNumbering)?)?)
        }
    }
}

/// `(-1)^(#external edges + #trivalent vertices)`.
pub fn epsilon(d: &BcrDiagram) -> i32 {
    let ee = d.edges_of(EdgeClass::External).len();
    let nt = d
        .types()
        .iter()
        .filter(|t| {
            matches!(
                t,
                VertexType::ExternalTrivalent | VertexType::InternalTrivalent
            )
        })
        .count();
    if (ee + nt).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Product over internal edges `(v, w)` of `sign(rho(w) - rho(v))`.
pub fn epsilon2(d: &BcrDiagram, rho: &Ordering) -> i32 {
    let mut s = 1;
    for e in d.edges_of(EdgeClass::Internal) {
        let x = d.edge(e);
        if rho.rank(x.to) < rho.rank(x.from) {
            s = -s;
        }
    }
    s
}

/// Vertex and edge maps from `a` to `b` forced by the edge numbers.
pub fn numbered_isomorphism(
    a: &JacobiDiagram,
    b: &JacobiDiagram,
) -> Result<(Vec<usize>, Vec<usize>), BridgeError> {
    let na = a.numbering().ok_or(BridgeError::MissingNumbering)?;
    let nb = b.numbering().ok_or(BridgeError::MissingNumbering)?;
    if a.univalent_count() != b.univalent_count()
        || a.trivalent_count() != b.trivalent_count()
        || a.edge_count() != b.edge_count()
    {
        return Err(BridgeError::NotIsomorphic);
    }
    let mut emap = Vec::with_capacity(a.edge_count());
    for x in na {
        emap.push(
            nb.iter()
                .position(|y| y == x)
                .ok_or(BridgeError::NotIsomorphic)?,
        );
    }
    let u = a.univalent_count();
    let mut vmap: Vec<usize> = (0..a.vertex_count()).collect();
    let inc = a.incidence();
    for (t, hs) in inc.iter().enumerate().skip(u) {
        let mut cand: Vec<usize> = b.edges()[emap[hs[0] / 2]].to_vec();
        for h in &hs[1..] {
            let ends = b.edges()[emap[h / 2]];
            cand.retain(|c| ends.contains(c));
        }
        cand.retain(|&c| c >= u);
        cand.dedup();
        match cand.len() {
            0 => return Err(BridgeError::NotIsomorphic),
            1 => vmap[t] = cand[0],
            _ => return Err(BridgeError::AmbiguousIsomorphism),
        }
    }
    let mut hit = vec![false; b.vertex_count()];
    for &w in &vmap {
        if std::mem::replace(&mut hit[w], true) {
            return Err(BridgeError::NotIsomorphic);
        }
    }
    for (e, &[x, y]) in a.edges().iter().enumerate() {
        let [p, q] = b.edges()[emap[e]];
        let (mx, my) = (vmap[x], vmap[y]);
        if !((mx == p && my == q) || (mx == q && my == p)) {
            return Err(BridgeError::NotIsomorphic);
        }
    }
    Ok((vmap, emap))
}

/// The sign `eps3` with `[Gamma_rho] = eps3 [gj]`, computed through the
/// isomorphism forced by the numberings of `gj` and of `Gamma_rho`.
pub fn epsilon3(
    gj: &JacobiDiagram,
    d: &BcrDiagram,
    rho: &Ordering,
    sigma: &EdgeNumbering,
) -> Result<i32, BridgeError> {
    let gr = jacobi_of(d, rho, Some(sigma))?;
    let (vmap, emap) = numbered_isomorphism(&gr, gj)?;
    Ok(orientation_sign_mapped(&gr, &vmap, &emap, gj))
}
