use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::diagram::{CanonicalKey, JacobiDiagram};
use crate::rational::{sign_q, Q};

/// Finite rational combination of Jacobi diagram classes. Each key stands
/// for its class representative, so AS signs are folded into coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagramVector {
    terms: BTreeMap<CanonicalKey, Q>,
}

impl DiagramVector {
    pub fn zero() -> Self {
        DiagramVector::default()
    }

    /// The class of a single diagram.
    pub fn from_diagram(d: &JacobiDiagram) -> Self {
        let mut v = DiagramVector::zero();
        v.add_diagram(&Q::one(), d);
        v
    }

    /// The class of the empty diagram.
    pub fn unit() -> Self {
        DiagramVector::from_diagram(&JacobiDiagram::empty())
    }

    pub fn add_diagram(&mut self, c: &Q, d: &JacobiDiagram) {
        let (key, s) = d.normalize();
        if s != 0 {
            self.add_key(key, c * sign_q(s));
        }
    }

    pub fn add_key(&mut self, key: CanonicalKey, c: Q) {
        if c.is_zero() {
            return;
        }
        let vanished = {
            let e = self.terms.entry(key.clone()).or_insert_with(Q::zero);
            *e += c;
            e.is_zero()
        };
        if vanished {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, c: &Q, other: &DiagramVector) {
        for (k, x) in &other.terms {
            self.add_key(k.clone(), c * x);
        }
    }

    pub fn scale(&self, c: &Q) -> DiagramVector {
        if c.is_zero() {
            return DiagramVector::zero();
        }
        DiagramVector {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    pub fn coeff(&self, key: &CanonicalKey) -> Q {
        self.terms.get(key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, &Q)> {
        self.terms.iter()
    }

    /// Degree of the terms, `None` for the zero vector.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|k| k.degree())
    }

    /// Terms paired with their representatives.
    pub fn diagrams(&self) -> impl Iterator<Item = (JacobiDiagram, &Q)> {
        self.terms
            .iter()
            .map(|(k, c)| (k.jacobi_representative().expect("jacobi key"), c))
    }

    /// Bilinear extension of the diagram product.
    pub fn product(&self, other: &DiagramVector) -> DiagramVector {
        let mut out = DiagramVector::zero();
        let rhs: Vec<(JacobiDiagram, &Q)> = other.diagrams().collect();
        for (a, x) in self.diagrams() {
            for (b, y) in &rhs {
                out.add_diagram(&(x * *y), &a.product(b));
            }
        }
        out
    }
}

impl Add for &DiagramVector {
    type Output = DiagramVector;
    fn add(self, rhs: &DiagramVector) -> DiagramVector {
        let mut out = self.clone();
        out.add_scaled(&Q::one(), rhs);
        out
    }
}

impl Sub for &DiagramVector {
    type Output = DiagramVector;
    fn sub(self, rhs: &DiagramVector) -> DiagramVector {
        let mut out = self.clone();
        out.add_scaled(&-Q::one(), rhs);
        out
    }
}

impl Neg for &DiagramVector {
    type Output = DiagramVector;
    fn neg(self) -> DiagramVector {
        self.scale(&-Q::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn reversed_vertex_cancels() {
        let y = JacobiDiagram::tripod();
        let mut v = DiagramVector::from_diagram(&y);
        v.add_diagram(&q(1), &y.reversed_at(3));
        assert!(v.is_zero());
    }

    #[test]
    fn unit_is_neutral() {
        let c = DiagramVector::from_diagram(&JacobiDiagram::wheel(2));
        assert_eq!(c.product(&DiagramVector::unit()), c);
        assert_eq!(DiagramVector::unit().product(&c), c);
    }

    #[test]
    fn chord_square_is_sequential_pair() {
        let t = DiagramVector::from_diagram(&JacobiDiagram::theta());
        let seq = JacobiDiagram::chords(&[(0, 1), (2, 3)]).unwrap();
        assert_eq!(t.product(&t), DiagramVector::from_diagram(&seq));
    }
}
