//! Sign-reversing pairings on sets of ordered numbered triples, checked
//! exhaustively over a given Jacobi diagram.

use std::collections::HashSet;

use crate::diagram::{validate_bcr, BcrDiagram, EdgeClass, JacobiDiagram, VertexType};
use crate::space::stu_pair;

use super::{
    epsilon, epsilon2, epsilon3, triple_key, BcrWeights, BridgeError, EdgeNumbering, Ordering,
};

type Triple = (BcrDiagram, Ordering, EdgeNumbering);

/// Outcome of a pairing check: how many triples were examined and a
/// description of each one that misbehaved.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvolutionReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn numbered(gj: &JacobiDiagram) -> Result<JacobiDiagram, BridgeError> {
    match gj.numbering() {
        Some(_) => Ok(gj.clone()),
        None => Ok(gj
            .clone()
            .with_numbering((1..=gj.edge_count() as u32).collect())?),
    }
}

fn total_sign(gj: &JacobiDiagram, t: &Triple) -> Result<i32, BridgeError> {
    Ok(epsilon(&t.0) * epsilon2(&t.0, &t.1) * epsilon3(gj, &t.0, &t.1, &t.2)?)
}

fn key_of(t: &Triple) -> Vec<u32> {
    triple_key(&t.0, &t.1, &t.2)
}

fn internal_edges_between(d: &BcrDiagram, a: usize, b: usize) -> usize {
    d.edges_of(EdgeClass::Internal)
        .into_iter()
        .filter(|&e| {
            let x = d.edge(e);
            (x.from == a && x.to == b) || (x.from == b && x.to == a)
        })
        .count()
}

/// Checks the STU pairings at univalent vertex `u` of `gj`, whose neighbour
/// must be trivalent. Over the first STU term, with `v, w` the internal
/// vertices at the two new line positions:
///
/// * exchanging the ranks of `v` and `w` maps the triples of the first term
///   bijectively onto those of the second, keeps `eps3`, and flips `eps2`
///   exactly when a single internal edge joins `v` and `w`;
/// * when moreover `v` and `w` are both of type 2, exchanging them together
///   with their leg sources and the numbers of their legs is an involution
///   that flips the total sign.
pub fn check_stu_pairing(
    weights: &BcrWeights,
    gj: &JacobiDiagram,
    u: usize,
) -> Result<InvolutionReport, BridgeError> {
    let gj = numbered(gj)?;
    let j = gj.numbering().expect("numbered").to_vec();
    let h = gj
        .edges()
        .iter()
        .position(|e| e.contains(&u))
        .expect("edge at u");
    let mut j1 = j.clone();
    j1.remove(h);
    let plain = gj.clone().without_numbering();
    let (first, second) = stu_pair(&plain, u);
    let g1 = first.with_numbering(j1.clone())?;
    let g2 = second.with_numbering(j1)?;
    let t1 = weights.triples(&g1)?;
    let t2 = weights.triples(&g2)?;
    let keys1: HashSet<Vec<u32>> = t1.iter().map(key_of).collect();
    let keys2: HashSet<Vec<u32>> = t2.iter().map(key_of).collect();
    let mut report = InvolutionReport::default();
    if t1.len() != t2.len() {
        report.failures.push(format!(
            "{} triples over the first term, {} over the second",
            t1.len(),
            t2.len()
        ));
    }
    let p = u;
    for t in &t1 {
        report.checked += 1;
        let (d, rho, sigma) = t;
        let (v, w) = (rho.order()[p], rho.order()[p + 1]);
        let single = internal_edges_between(d, v, w) == 1;
        let image: Triple = (d.clone(), rho.swapped(v, w), sigma.clone());
        if !keys2.contains(&key_of(&image)) {
            report.failures.push(format!(
                "{d} {:?}: swapped ordering is not over the second term",
                rho.order()
            ));
            continue;
        }
        let e3 = epsilon3(&g1, d, rho, sigma)?;
        if epsilon3(&g2, &image.0, &image.1, &image.2)? != e3 {
            report
                .failures
                .push(format!("{d} {:?}: eps3 changed", rho.order()));
        }
        let flipped = epsilon2(d, rho) != epsilon2(&image.0, &image.1);
        if flipped != single {
            report.failures.push(format!(
                "{d} {:?}: eps2 flip does not match the edge count",
                rho.order()
            ));
        }
        let both_internal = d.vertex_type(v) == VertexType::InternalTrivalent
            && d.vertex_type(w) == VertexType::InternalTrivalent;
        if single && both_internal {
            let img = leg_swap(t, v, w);
            if !keys1.contains(&key_of(&img)) {
                report
                    .failures
                    .push(format!("{d} {:?}: leg swap leaves the set", rho.order()));
                continue;
            }
            let (v2, w2) = (img.1.order()[p], img.1.order()[p + 1]);
            if key_of(&leg_swap(&img, v2, w2)) != key_of(t) {
                report.failures.push(format!(
                    "{d} {:?}: leg swap is not an involution",
                    rho.order()
                ));
            }
            if total_sign(&g1, &img)? != -total_sign(&g1, t)? {
                report
                    .failures
                    .push(format!("{d} {:?}: leg swap keeps the sign", rho.order()));
            }
        }
    }
    Ok(report)
}

fn leg_swap(t: &Triple, v: usize, w: usize) -> Triple {
    let (d, rho, sigma) = t;
    let (x, e) = d.leg(v).expect("leg");
    let (y, f) = d.leg(w).expect("leg");
    let mut s = sigma.clone();
    s.swap(e, f);
    (d.clone(), rho.swapped(x, y).swapped(v, w), s)
}

/// Checks that the rewiring pairing on the triples over a product `gj` is an
/// involution of the triple set that flips the total sign. The first cut of
/// the line separating `gj` defines the two factors.
pub fn check_product_involution(
    weights: &BcrWeights,
    gj: &JacobiDiagram,
) -> Result<InvolutionReport, BridgeError> {
    let gj = numbered(gj)?;
    let first = first_factor(&gj).ok_or(BridgeError::NotIsomorphic)?;
    let triples = weights.triples(&gj)?;
    let keys: HashSet<Vec<u32>> = triples.iter().map(key_of).collect();
    let mut report = InvolutionReport::default();
    for t in &triples {
        report.checked += 1;
        let label = format!("{} {:?} {:?}", t.0, t.1.order(), t.2);
        let img = match product_image(&gj, &first, t) {
            Ok(img) => img,
            Err(e) => {
                report.failures.push(format!("{label}: {e}"));
                continue;
            }
        };
        if !keys.contains(&key_of(&img)) {
            report
                .failures
                .push(format!("{label}: image leaves the set"));
            continue;
        }
        match product_image(&gj, &first, &img) {
            Ok(back) if key_of(&back) == key_of(t) => {}
            _ => report.failures.push(format!("{label}: not an involution")),
        }
        if total_sign(&gj, &img)? != -total_sign(&gj, t)? {
            report.failures.push(format!("{label}: sign kept"));
        }
    }
    Ok(report)
}

/// Membership of each vertex of `gj` in the first factor of its first
/// separating cut.
fn first_factor(gj: &JacobiDiagram) -> Option<Vec<bool>> {
    let comps = gj.components();
    let spans: Vec<(usize, usize)> = comps
        .iter()
        .map(|c| {
            let us: Vec<usize> = c.iter().copied().filter(|&v| gj.is_univalent(v)).collect();
            (*us.first().unwrap_or(&usize::MAX), *us.last().unwrap_or(&0))
        })
        .collect();
    let p = (1..gj.univalent_count()).find(|&p| spans.iter().all(|&(lo, hi)| hi < p || lo >= p))?;
    let mut side = vec![false; gj.vertex_count()];
    for (c, &(_, hi)) in comps.iter().zip(&spans) {
        if hi < p {
            for &v in c {
                side[v] = true;
            }
        }
    }
    Some(side)
}

fn product_image(gj: &JacobiDiagram, first: &[bool], t: &Triple) -> Result<Triple, String> {
    let (d, rho, sigma) = t;
    let gr = super::jacobi_of(d, rho, Some(sigma)).map_err(|e| e.to_string())?;
    let (vmap, _) = super::numbered_isomorphism(&gr, gj).map_err(|e| e.to_string())?;
    let ni = rho.len();
    let exts = d.external_vertices();
    let mut in_first = vec![false; d.vertex_count()];
    for v in 0..d.vertex_count() {
        let g = if d.is_internal_vertex(v) {
            rho.rank(v)
        } else {
            ni + exts.iter().position(|&x| x == v).expect("external")
        };
        in_first[v] = first[vmap[g]];
    }
    // Components of the second factor's induced subgraph.
    let n = d.vertex_count();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while c[r] != r {
            r = c[r];
        }
        c[v] = r;
        r
    }
    for e in &d.graph().edges {
        if !in_first[e.from] && !in_first[e.to] {
            let (a, b) = (find(&mut comp, e.from), find(&mut comp, e.to));
            comp[a] = b;
        }
    }
    let start = d
        .edges_of(EdgeClass::External)
        .into_iter()
        .filter(|&e| !in_first[d.edge(e).from])
        .min_by_key(|&e| sigma[e])
        .ok_or("no external edge in the second factor")?;
    let root = find(&mut comp, d.edge(start).from);
    let entering: Vec<usize> = d
        .edges_of(EdgeClass::Internal)
        .into_iter()
        .filter(|&e| {
            let x = d.edge(e);
            in_first[x.from] && !in_first[x.to] && find(&mut comp, x.to) == root
        })
        .collect();
    let [e1] = entering[..] else {
        return Err(format!("{} edges enter the component", entering.len()));
    };
    let w = d.edge(e1).to;
    let rewire = |target: usize| -> Result<Triple, String> {
        let mut g = d.graph().clone();
        g.edges[e1].to = target;
        let dd = validate_bcr(g).map_err(|e| e.to_string())?;
        let r = Ordering::new(&dd, rho.order().to_vec()).map_err(|e| e.to_string())?;
        Ok((dd, r, sigma.clone()))
    };
    match d.vertex_type(w) {
        VertexType::InternalTrivalent => rewire(d.leg(w).expect("leg").0),
        VertexType::LeaveInternal => {
            let out = d.out_edge(w);
            let z = d.edge(out).to;
            match d.vertex_type(z) {
                VertexType::EnterInternal => rewire(z),
                VertexType::ExternalTrivalent => {
                    let (x, leg) = d.leg(z).expect("leg");
                    let mut s = sigma.clone();
                    s.swap(leg, out);
                    Ok((d.clone(), rho.swapped(x, w), s))
                }
                other => Err(format!("unexpected successor type {}", other.number())),
            }
        }
        other => Err(format!("unexpected entry type {}", other.number())),
    }
}
