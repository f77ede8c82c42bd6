use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::diagram::{
    enumerate_bcr, isomorphisms, BcrDiagram, CanonicalKey, DiagramError, EdgeClass, JacobiDiagram,
    Limits,
};
use crate::rational::{q, Q};

use super::{
    epsilon, epsilon2, epsilon3, external_edges, jacobi_of, orderings, BridgeError, EdgeNumbering,
    Ordering,
};

/// `w_BCR` of every Jacobi class representative in one degree.
#[derive(Debug, Default)]
pub struct WeightTable {
    values: HashMap<CanonicalKey, Q>,
}

impl WeightTable {
    /// Value on the class representative of `key` (zero when absent).
    pub fn get(&self, key: &CanonicalKey) -> Q {
        self.values.get(key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, &Q)> {
        self.values.iter()
    }

    /// Table from stored `(key, value)` pairs, e.g. a disk cache.
    pub fn from_entries(entries: impl IntoIterator<Item = (CanonicalKey, Q)>) -> WeightTable {
        WeightTable {
            values: entries.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Sums over every BCR class and every ordering. A class `Gamma` and an
    /// ordering whose induced diagram lands in the class of `G` stand for
    /// `|Aut G| / |Aut Gamma|` distinct ordered numbered triples.
    pub fn build(k: usize, limits: &Limits) -> Result<WeightTable, DiagramError> {
        let classes = enumerate_bcr(k, limits)?;
        let parts: Vec<Vec<(CanonicalKey, Q)>> = classes
            .par_iter()
            .map(|d| {
                let eps = epsilon(d);
                let mut acc: HashMap<CanonicalKey, i64> = HashMap::new();
                for rho in orderings(d) {
                    let (key, s) = jacobi_of(d, &rho, None)
                        .expect("valid induced diagram")
                        .normalize();
                    if s != 0 {
                        *acc.entry(key).or_default() += (eps * epsilon2(d, &rho) * s) as i64;
                    }
                }
                let internal = d.edges_of(EdgeClass::Internal).len();
                let denom = BigInt::from(d.automorphism_count()) * (BigInt::from(1) << internal);
                acc.into_iter()
                    .filter(|(_, c)| *c != 0)
                    .map(|(key, c)| {
                        let aut = key
                            .jacobi_representative()
                            .expect("jacobi key")
                            .automorphism_count();
                        let v = Q::new(BigInt::from(c) * BigInt::from(aut), denom.clone());
                        (key, v)
                    })
                    .collect()
            })
            .collect();
        let mut values: HashMap<CanonicalKey, Q> = HashMap::new();
        for (key, v) in parts.into_iter().flatten() {
            *values.entry(key).or_insert_with(Q::zero) += v;
        }
        values.retain(|_, v| !v.is_zero());
        Ok(WeightTable { values })
    }
}

/// Induced-class index: for each Jacobi class, the (BCR class, ordering)
/// pairs whose induced diagram lies in it.
#[derive(Debug)]
struct Preimages {
    classes: Vec<BcrDiagram>,
    index: HashMap<CanonicalKey, Vec<(usize, Ordering)>>,
}

impl Preimages {
    fn build(k: usize, limits: &Limits) -> Result<Preimages, DiagramError> {
        let classes = enumerate_bcr(k, limits)?;
        let parts: Vec<Vec<(CanonicalKey, usize, Ordering)>> = classes
            .par_iter()
            .enumerate()
            .map(|(i, d)| {
                orderings(d)
                    .into_iter()
                    .map(|rho| {
                        let key = jacobi_of(d, &rho, None).expect("valid").canonical_key();
                        (key, i, rho)
                    })
                    .collect()
            })
            .collect();
        let mut index: HashMap<CanonicalKey, Vec<(usize, Ordering)>> = HashMap::new();
        for (key, i, rho) in parts.into_iter().flatten() {
            index.entry(key).or_default().push((i, rho));
        }
        Ok(Preimages { classes, index })
    }
}

/// Identifies an ordered numbered BCR diagram up to isomorphism. Internal
/// vertices are labelled by rank, external vertices by the rank of their
/// leg's source, and the labelled edge list is sorted.
pub fn triple_key(d: &BcrDiagram, rho: &Ordering, sigma: &EdgeNumbering) -> Vec<u32> {
    let ni = rho.len() as u32;
    let label = |v: usize| -> u32 {
        if d.is_internal_vertex(v) {
            rho.rank(v) as u32
        } else {
            ni + rho.rank(d.leg(v).expect("leg").0) as u32
        }
    };
    let mut rows: Vec<[u32; 4]> = (0..d.graph().edges.len())
        .map(|e| {
            let x = d.edge(e);
            let c = if x.class == EdgeClass::Internal { 0 } else { 1 };
            [label(x.from), label(x.to), c, sigma[e].unwrap_or(0)]
        })
        .collect();
    rows.sort_unstable();
    rows.into_iter().flatten().collect()
}

/// Lazily built `w_BCR` tables, one per degree.
#[derive(Debug)]
pub struct BcrWeights {
    limits: Limits,
    tables: Vec<OnceLock<Result<Arc<WeightTable>, DiagramError>>>,
    preimages: Vec<OnceLock<Result<Arc<Preimages>, DiagramError>>>,
}

impl Default for BcrWeights {
    fn default() -> Self {
        BcrWeights::new(Limits::default())
    }
}

impl BcrWeights {
    pub fn new(limits: Limits) -> BcrWeights {
        BcrWeights {
            limits,
            tables: (0..=limits.max_degree).map(|_| OnceLock::new()).collect(),
            preimages: (0..=limits.max_degree).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Seeds the table of degree `k`, e.g. from a disk cache.
    pub fn preload(&self, k: usize, table: WeightTable) {
        if k <= self.limits.max_degree {
            let _ = self.tables[k].set(Ok(Arc::new(table)));
        }
    }

    pub fn table(&self, k: usize) -> Result<Arc<WeightTable>, DiagramError> {
        self.limits.check(k)?;
        self.tables[k]
            .get_or_init(|| WeightTable::build(k, &self.limits).map(Arc::new))
            .clone()
    }

    fn preimages(&self, k: usize) -> Result<Arc<Preimages>, DiagramError> {
        self.limits.check(k)?;
        self.preimages[k]
            .get_or_init(|| Preimages::build(k, &self.limits).map(Arc::new))
            .clone()
    }

    /// `w_BCR` of a single diagram, through the class table.
    pub fn wbcr(&self, gj: &JacobiDiagram) -> Result<Q, DiagramError> {
        let (key, s) = gj.normalize();
        if s == 0 {
            return Ok(Q::zero());
        }
        Ok(self.table(gj.degree())?.get(&key) * q(s as i64))
    }

    /// `w_BCR` by listing every ordered numbered triple over `gj` with its
    /// numbering `j` (edges `1..=E` in order when `gj` is unnumbered) and
    /// summing `eps * eps2 * eps3 / 2^(2k - #E)`.
    pub fn wbcr_numbered(&self, gj: &JacobiDiagram) -> Result<Q, BridgeError> {
        let gj = match gj.numbering() {
            Some(_) => gj.clone(),
            None => gj
                .clone()
                .with_numbering((1..=gj.edge_count() as u32).collect())?,
        };
        if gj.edge_count() > 2 * gj.degree() {
            // More trivalent than univalent vertices: no BCR diagram has that many external vertices.
            return Ok(Q::zero());
        }
        let shift = 2 * gj.degree() - gj.edge_count();
        let mut total: i64 = 0;
        for (d, rho, sigma) in self.triples(&gj)? {
            assert_eq!(
                d.edges_of(EdgeClass::Internal).len(),
                shift,
                "internal edge count"
            );
            let e3 = epsilon3(&gj, &d, &rho, &sigma)?;
            total += (epsilon(&d) * epsilon2(&d, &rho) * e3) as i64;
        }
        Ok(Q::new(BigInt::from(total), BigInt::from(1) << shift))
    }

    /// Number of distinct ordered numbered triples over `gj`.
    pub fn triple_count(&self, gj: &JacobiDiagram) -> Result<usize, BridgeError> {
        Ok(self.triples(gj)?.len())
    }

    /// Every ordered numbered triple `(Gamma, sigma, rho)` over `gj`.
    pub fn triples(
        &self,
        gj: &JacobiDiagram,
    ) -> Result<Vec<(BcrDiagram, Ordering, EdgeNumbering)>, BridgeError> {
        let j = gj
            .numbering()
            .ok_or(BridgeError::MissingNumbering)?
            .to_vec();
        let plain = gj.clone().without_numbering();
        let pre = self.preimages(gj.degree())?;
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        if let Some(cands) = pre.index.get(&plain.canonical_key()) {
            for (ci, rho) in cands {
                let d = &pre.classes[*ci];
                let gr = jacobi_of(d, rho, None)?;
                let ee = external_edges(d);
                for iso in isomorphisms(&gr, &plain) {
                    let mut sigma: EdgeNumbering = vec![None; d.graph().edges.len()];
                    for (i, &e) in ee.iter().enumerate() {
                        sigma[e] = Some(j[iso.edges[i]]);
                    }
                    if seen.insert(triple_key(d, rho, &sigma)) {
                        out.push((d.clone(), rho.clone(), sigma));
                    }
                }
            }
        }
        Ok(out)
    }
}
