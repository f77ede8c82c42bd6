use std::collections::HashMap;
use std::fmt;

use super::jacobi::JacobiDiagram;

const TAG_JACOBI: u16 = 0;
pub(crate) const TAG_BCR: u16 = 1;

/// Isomorphism-class identifier. Two diagrams of the same kind get equal
/// keys exactly when they are isomorphic. For Jacobi diagrams the key
/// ignores vertex orientations; the orientation sign relative to the class
/// representative is reported separately by [`JacobiDiagram::normalize`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(pub(crate) Vec<u16>);

impl CanonicalKey {
    pub fn is_jacobi(&self) -> bool {
        self.0.first() == Some(&TAG_JACOBI)
    }

    pub fn is_bcr(&self) -> bool {
        self.0.first() == Some(&TAG_BCR)
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    /// Rebuilds a Jacobi key from its codes; `None` unless the codes are
    /// the canonical key of some diagram.
    pub fn from_jacobi_codes(codes: Vec<u16>) -> Option<CanonicalKey> {
        let k = CanonicalKey(codes);
        let rep = k.jacobi_representative()?;
        (rep.canonical_key() == k).then_some(k)
    }

    /// Canonical representative of a Jacobi class, with every trivalent
    /// vertex carrying its incident half-edges in increasing order.
    pub fn jacobi_representative(&self) -> Option<JacobiDiagram> {
        if !self.is_jacobi() || self.0.len() < 3 {
            return None;
        }
        let u = self.0[1] as usize;
        let t = self.0[2] as usize;
        let rest = &self.0[3..];
        if !rest.len().is_multiple_of(2) {
            return None;
        }
        let edges = rest
            .chunks(2)
            .map(|c| [c[0] as usize, c[1] as usize])
            .collect();
        JacobiDiagram::new(u, t, edges, None).ok()
    }

    /// Degree of the encoded diagram.
    pub fn degree(&self) -> usize {
        if self.is_jacobi() {
            (self.0[1] as usize + self.0[2] as usize) / 2
        } else {
            self.0[1..]
                .iter()
                .map(|&p| super::bcr::piece_weight(p))
                .sum::<usize>()
                / 2
        }
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bcr() {
            let word: String = self.0[1..]
                .iter()
                .map(|&p| super::bcr::piece_char(p))
                .collect();
            return write!(f, "B:{word}");
        }
        write!(
            f,
            "J:{}/{}",
            self.0.get(1).unwrap_or(&0),
            self.0.get(2).unwrap_or(&0)
        )?;
        for c in self.0.get(3..).unwrap_or(&[]).chunks(2) {
            write!(f, ":{}-{}", c[0], c[1])?;
        }
        Ok(())
    }
}

/// Result of canonical labeling of a Jacobi diagram.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub key: CanonicalKey,
    /// `labeling[v]` is the vertex of the canonical representative matching `v`.
    pub labeling: Vec<usize>,
    /// Vertex automorphisms of the representative, identity included.
    pub automorphisms: Vec<Vec<usize>>,
}

/// Canonical labeling by equitable refinement and exhaustive
/// individualization. Univalent vertices are never moved.
pub fn canonicalize(d: &JacobiDiagram) -> Canonical {
    let n = d.vertex_count();
    let u = d.univalent_count();
    let adj = d.adjacency();
    let mut cells: Vec<Vec<usize>> = (0..u).map(|v| vec![v]).collect();
    if n > u {
        cells.push((u..n).collect());
    }
    let mut search = Search {
        adj: &adj,
        d,
        best: None,
        leaves: Vec::new(),
    };
    search.run(cells);
    let best = search.best.expect("at least one leaf");
    let lab0 = search.leaves[0].clone();
    let mut inv0 = vec![0; n];
    for (v, &l) in lab0.iter().enumerate() {
        inv0[l] = v;
    }
    let automorphisms = search
        .leaves
        .iter()
        .map(|lab| (0..n).map(|c| lab[inv0[c]]).collect())
        .collect();
    Canonical {
        key: best,
        labeling: lab0,
        automorphisms,
    }
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    d: &'a JacobiDiagram,
    best: Option<CanonicalKey>,
    leaves: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut cell_of = vec![0usize; n];
        loop {
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            for c in &cells {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut sig: Vec<(Vec<usize>, usize)> = c
                    .iter()
                    .map(|&v| {
                        let mut s: Vec<usize> = self.adj[v].iter().map(|&w| cell_of[w]).collect();
                        s.sort_unstable();
                        (s, v)
                    })
                    .collect();
                sig.sort();
                let mut start = 0;
                for i in 1..=sig.len() {
                    if i == sig.len() || sig[i].0 != sig[start].0 {
                        next.push(sig[start..i].iter().map(|x| x.1).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn run(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        match cells.iter().position(|c| c.len() > 1) {
            None => {
                let mut lab = vec![0; self.adj.len()];
                for (i, c) in cells.iter().enumerate() {
                    lab[c[0]] = i;
                }
                let key = encode(self.d, &lab);
                match &self.best {
                    Some(b) if key > *b => {}
                    Some(b) if key == *b => self.leaves.push(lab),
                    _ => {
                        self.best = Some(key);
                        self.leaves = vec![lab];
                    }
                }
            }
            Some(i) => {
                for &v in &cells[i] {
                    let mut next = cells[..i].to_vec();
                    next.push(vec![v]);
                    next.push(cells[i].iter().copied().filter(|&w| w != v).collect());
                    next.extend_from_slice(&cells[i + 1..]);
                    self.run(next);
                }
            }
        }
    }
}

fn encode(d: &JacobiDiagram, lab: &[usize]) -> CanonicalKey {
    let mut pairs: Vec<(u16, u16)> = d
        .edges()
        .iter()
        .map(|&[a, b]| {
            let (x, y) = (lab[a] as u16, lab[b] as u16);
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    pairs.sort_unstable();
    let mut out = Vec::with_capacity(3 + 2 * pairs.len());
    out.push(TAG_JACOBI);
    out.push(d.univalent_count() as u16);
    out.push(d.trivalent_count() as u16);
    for (x, y) in pairs {
        out.push(x);
        out.push(y);
    }
    CanonicalKey(out)
}

/// Sign of the vertex orientations of `d` relative to those of `target`
/// under the isomorphism `map` (a vertex map from `d` to `target`).
pub(crate) fn orientation_sign(d: &JacobiDiagram, map: &[usize], target: &JacobiDiagram) -> i32 {
    let mut slots: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (e, &[a, b]) in target.edges().iter().enumerate().rev() {
        slots.entry((a.min(b), a.max(b))).or_default().push(e);
    }
    let mut emap = vec![0usize; d.edge_count()];
    for (e, &[a, b]) in d.edges().iter().enumerate() {
        let (x, y) = (map[a], map[b]);
        emap[e] = slots
            .get_mut(&(x.min(y), x.max(y)))
            .and_then(|s| s.pop())
            .expect("map is an isomorphism");
    }
    orientation_sign_mapped(d, map, &emap, target)
}

/// Same as [`orientation_sign`] with an explicit edge map `emap`.
pub(crate) fn orientation_sign_mapped(
    d: &JacobiDiagram,
    map: &[usize],
    emap: &[usize],
    target: &JacobiDiagram,
) -> i32 {
    let mut half = vec![0usize; 2 * d.edge_count()];
    for (e, &[a, _]) in d.edges().iter().enumerate() {
        let t = emap[e];
        let from_end = if target.edges()[t][0] == map[a] { 0 } else { 1 };
        half[2 * e] = 2 * t + from_end;
        half[2 * e + 1] = 2 * t + (1 - from_end);
    }
    let mut sign = 1;
    for (i, o) in d.orientations().iter().enumerate() {
        let v = d.univalent_count() + i;
        let m = o.map(|h| half[h]);
        let r = target.orientation(map[v]);
        if !is_rotation(&m, &r) {
            sign = -sign;
        }
    }
    sign
}

/// A vertex map together with an edge map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Every isomorphism from `a` to `b` that fixes the univalent order,
/// ignoring vertex and edge orientations. Parallel edges may be permuted.
pub fn isomorphisms(a: &JacobiDiagram, b: &JacobiDiagram) -> Vec<Isomorphism> {
    let ca = canonicalize(a);
    let cb = canonicalize(b);
    if ca.key != cb.key {
        return Vec::new();
    }
    let n = a.vertex_count();
    let mut inv_b = vec![0; n];
    for (v, &l) in cb.labeling.iter().enumerate() {
        inv_b[l] = v;
    }
    let mut out = Vec::new();
    for g in &ca.automorphisms {
        let vmap: Vec<usize> = (0..n).map(|v| inv_b[g[ca.labeling[v]]]).collect();
        let mut groups: HashMap<(usize, usize), (Vec<usize>, Vec<usize>)> = HashMap::new();
        for (e, &[x, y]) in a.edges().iter().enumerate() {
            let (p, q) = (vmap[x], vmap[y]);
            groups.entry((p.min(q), p.max(q))).or_default().0.push(e);
        }
        for (e, &[x, y]) in b.edges().iter().enumerate() {
            groups.entry((x.min(y), x.max(y))).or_default().1.push(e);
        }
        let groups: Vec<(Vec<usize>, Vec<usize>)> = groups.into_values().collect();
        let mut emap = vec![usize::MAX; a.edge_count()];
        edge_maps(&groups, 0, &mut emap, &vmap, &mut out);
    }
    out
}

fn edge_maps(
    groups: &[(Vec<usize>, Vec<usize>)],
    i: usize,
    emap: &mut Vec<usize>,
    vmap: &[usize],
    out: &mut Vec<Isomorphism>,
) {
    if i == groups.len() {
        out.push(Isomorphism {
            vertices: vmap.to_vec(),
            edges: emap.clone(),
        });
        return;
    }
    let (src, dst) = &groups[i];
    let mut perm = dst.clone();
    perm.sort_unstable();
    loop {
        for (s, d) in src.iter().zip(&perm) {
            emap[*s] = *d;
        }
        edge_maps(groups, i + 1, emap, vmap, out);
        if !next_permutation(&mut perm) {
            break;
        }
    }
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn is_rotation(a: &[usize; 3], b: &[usize; 3]) -> bool {
    (0..3).any(|s| (0..3).all(|i| a[(i + s) % 3] == b[i]))
}

impl JacobiDiagram {
    pub fn canonical_key(&self) -> CanonicalKey {
        canonicalize(self).key
    }

    /// Class key together with the sign `s` such that `[self] = s [rep]`,
    /// where `rep` is the class representative. `s = 0` when the class has
    /// an orientation-reversing automorphism and hence vanishes by AS.
    pub fn normalize(&self) -> (CanonicalKey, i32) {
        let c = canonicalize(self);
        let rep = c.key.jacobi_representative().expect("valid key");
        if c.automorphisms.len() > 1
            && c.automorphisms
                .iter()
                .any(|g| orientation_sign(&rep, g, &rep) < 0)
        {
            return (c.key, 0);
        }
        let s = orientation_sign(self, &c.labeling, &rep);
        (c.key, s)
    }

    /// Number of automorphisms, counting permutations of parallel edges.
    pub fn automorphism_count(&self) -> usize {
        let c = canonicalize(self);
        let mut mult: HashMap<(usize, usize), usize> = HashMap::new();
        for &[a, b] in self.edges() {
            *mult.entry((a.min(b), a.max(b))).or_default() += 1;
        }
        let par: usize = mult.values().map(|&m| (1..=m).product::<usize>()).product();
        c.automorphisms.len() * par
    }
}
