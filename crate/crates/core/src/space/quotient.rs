use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::diagram::{jacobi_classes, CanonicalKey, DiagramError, JacobiDiagram, Limits};
use crate::rational::Q;

use super::relations::generate_relations;
use super::vector::DiagramVector;

/// Structural type of a class representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    /// Disconnected, every component touches the line, but not a product.
    Mixed,
    /// Connected with at least one univalent vertex.
    Primitive,
    /// Product of two nonempty diagrams, or the empty diagram.
    Product,
    /// Has a component without univalent vertices.
    Trivalent,
}

pub fn classify(d: &JacobiDiagram) -> ClassKind {
    let comps = d.components();
    if comps.iter().any(|c| c.iter().all(|&v| !d.is_univalent(v))) {
        return ClassKind::Trivalent;
    }
    if d.vertex_count() == 0 {
        return ClassKind::Product;
    }
    if comps.len() == 1 {
        return ClassKind::Primitive;
    }
    let u = d.univalent_count();
    // A cut after line position p separates the diagram when no component
    // has univalent vertices on both sides.
    let spans: Vec<(usize, usize)> = comps
        .iter()
        .map(|c| {
            let us: Vec<usize> = c.iter().copied().filter(|&v| d.is_univalent(v)).collect();
            (us[0], *us.last().unwrap())
        })
        .collect();
    if (1..u).any(|p| spans.iter().all(|&(lo, hi)| hi < p || lo >= p)) {
        ClassKind::Product
    } else {
        ClassKind::Mixed
    }
}

type Sparse = BTreeMap<usize, Q>;

/// The quotient space in one degree, with a basis of class
/// representatives and a reducer to basis coordinates.
#[derive(Debug)]
pub struct QuotientSpace {
    degree: usize,
    classes: Vec<CanonicalKey>,
    kinds: Vec<ClassKind>,
    index: HashMap<CanonicalKey, usize>,
    basis: Vec<usize>,
    express: Vec<Vec<(usize, Q)>>,
    relator_count: usize,
}

impl QuotientSpace {
    pub fn build(k: usize, limits: &Limits) -> Result<QuotientSpace, DiagramError> {
        let mut cols: Vec<(ClassKind, CanonicalKey)> = jacobi_classes(k, limits)?
            .into_iter()
            .filter_map(|key| {
                let d = key.jacobi_representative().expect("jacobi key");
                (d.normalize().1 != 0).then(|| (classify(&d), key))
            })
            .collect();
        cols.sort();
        let classes: Vec<CanonicalKey> = cols.iter().map(|c| c.1.clone()).collect();
        let kinds: Vec<ClassKind> = cols.iter().map(|c| c.0).collect();
        let index: HashMap<CanonicalKey, usize> = classes
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i))
            .collect();
        let relators = generate_relations(k, limits)?;
        let relator_count = relators.len();
        let rows: Vec<Sparse> = relators
            .iter()
            .map(|r| {
                r.vector()
                    .iter()
                    .map(|(key, c)| (index[key], c.clone()))
                    .collect()
            })
            .filter(|r: &Sparse| !r.is_empty())
            .collect();
        let mut pivots: BTreeMap<usize, Sparse> = BTreeMap::new();
        for mut row in rows {
            while let Some((&lead, _)) = row.iter().next() {
                match pivots.get(&lead) {
                    Some(p) => {
                        let c = row[&lead].clone();
                        axpy(&mut row, &-c, p);
                    }
                    None => {
                        let inv = Q::one() / row[&lead].clone();
                        for x in row.values_mut() {
                            *x *= &inv;
                        }
                        pivots.insert(lead, row);
                        break;
                    }
                }
            }
        }
        // Back-substitution, from the last pivot to the first.
        let leads: Vec<usize> = pivots.keys().rev().copied().collect();
        for &l in &leads {
            let mut row = pivots.remove(&l).unwrap();
            let others: Vec<usize> = row
                .keys()
                .copied()
                .filter(|&c| c != l && pivots.contains_key(&c))
                .collect();
            for c in others {
                let x = row[&c].clone();
                if !x.is_zero() {
                    axpy(&mut row, &-x, &pivots[&c]);
                }
            }
            pivots.insert(l, row);
        }
        let basis: Vec<usize> = (0..classes.len())
            .filter(|c| !pivots.contains_key(c))
            .collect();
        let pos: HashMap<usize, usize> = basis.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let express = (0..classes.len())
            .map(|c| match pivots.get(&c) {
                None => vec![(pos[&c], Q::one())],
                Some(row) => row
                    .iter()
                    .filter(|(&j, _)| j != c)
                    .map(|(j, x)| (pos[j], -x.clone()))
                    .collect(),
            })
            .collect();
        Ok(QuotientSpace {
            degree: k,
            classes,
            kinds,
            index,
            basis,
            express,
            relator_count,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn dim_of(&self, kind: ClassKind) -> usize {
        self.basis
            .iter()
            .filter(|&&c| self.kinds[c] == kind)
            .count()
    }

    pub fn relator_count(&self) -> usize {
        self.relator_count
    }

    /// Classes that do not vanish by AS, in column order.
    pub fn classes(&self) -> &[CanonicalKey] {
        &self.classes
    }

    pub fn kind_of(&self, key: &CanonicalKey) -> Option<ClassKind> {
        self.index.get(key).map(|&i| self.kinds[i])
    }

    pub fn basis(&self) -> Vec<CanonicalKey> {
        self.basis
            .iter()
            .map(|&c| self.classes[c].clone())
            .collect()
    }

    pub fn basis_kinds(&self) -> Vec<ClassKind> {
        self.basis.iter().map(|&c| self.kinds[c]).collect()
    }

    /// Coordinates of `v` in the basis.
    pub fn reduce(&self, v: &DiagramVector) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (key, c) in v.iter() {
            let i = *self
                .index
                .get(key)
                .unwrap_or_else(|| panic!("class {key} is not of degree {}", self.degree));
            for (j, x) in &self.express[i] {
                out[*j] += c * x;
            }
        }
        out
    }

    pub fn from_coords(&self, coords: &[Q]) -> DiagramVector {
        let mut v = DiagramVector::zero();
        for (i, c) in coords.iter().enumerate() {
            v.add_key(self.classes[self.basis[i]].clone(), c.clone());
        }
        v
    }

    /// Normal form: the same class written in the basis.
    pub fn normal_form(&self, v: &DiagramVector) -> DiagramVector {
        self.from_coords(&self.reduce(v))
    }

    pub fn is_zero(&self, v: &DiagramVector) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn equal(&self, a: &DiagramVector, b: &DiagramVector) -> bool {
        self.is_zero(&(a - b))
    }

    /// Primitive part of `v`, written in the basis.
    pub fn project_pc(&self, v: &DiagramVector) -> DiagramVector {
        let mut coords = self.reduce(v);
        for (i, &c) in self.basis.iter().enumerate() {
            if self.kinds[c] != ClassKind::Primitive {
                coords[i] = Q::zero();
            }
        }
        self.from_coords(&coords)
    }
}

fn axpy(row: &mut Sparse, a: &Q, other: &Sparse) {
    for (j, x) in other {
        let e = row.entry(*j).or_insert_with(Q::zero);
        *e += a * x;
        if e.is_zero() {
            row.remove(j);
        }
    }
}

/// Lazily built quotient spaces, one per degree.
#[derive(Debug)]
pub struct Algebra {
    limits: Limits,
    spaces: Vec<OnceLock<Result<Arc<QuotientSpace>, DiagramError>>>,
}

impl Algebra {
    pub fn new(limits: Limits) -> Algebra {
        Algebra {
            limits,
            spaces: (0..=limits.max_degree).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn space(&self, k: usize) -> Result<Arc<QuotientSpace>, DiagramError> {
        self.limits.check(k)?;
        self.spaces[k]
            .get_or_init(|| QuotientSpace::build(k, &self.limits).map(Arc::new))
            .clone()
    }
}

impl Default for Algebra {
    fn default() -> Self {
        Algebra::new(Limits::default())
    }
}
