use thiserror::Error;

use crate::rational::{inv_factorial, Q};

use super::vector::DiagramVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("entry at index {index} has degree {degree}")]
    DegreeMismatch { index: usize, degree: usize },
}

/// Truncated series `s_0 + s_1 + ... + s_K` with `s_d` of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    parts: Vec<DiagramVector>,
}

impl GradedSeries {
    pub fn zero(order: usize) -> Self {
        GradedSeries {
            parts: vec![DiagramVector::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = GradedSeries::zero(order);
        s.parts[0] = DiagramVector::unit();
        s
    }

    pub fn from_parts(parts: Vec<DiagramVector>) -> Result<Self, SeriesError> {
        for (i, p) in parts.iter().enumerate() {
            if let Some(d) = p.degree() {
                if d != i {
                    return Err(SeriesError::DegreeMismatch {
                        index: i,
                        degree: d,
                    });
                }
            }
        }
        Ok(GradedSeries { parts })
    }

    /// Truncation order `K`.
    pub fn order(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn part(&self, d: usize) -> &DiagramVector {
        &self.parts[d]
    }

    pub fn parts(&self) -> &[DiagramVector] {
        &self.parts
    }

    pub fn set_part(&mut self, d: usize, v: DiagramVector) {
        self.parts[d] = v;
    }

    pub fn add(&self, other: &GradedSeries) -> GradedSeries {
        let n = self.parts.len().min(other.parts.len());
        GradedSeries {
            parts: (0..n).map(|i| &self.parts[i] + &other.parts[i]).collect(),
        }
    }

    pub fn product(&self, other: &GradedSeries) -> GradedSeries {
        let n = self.parts.len().min(other.parts.len());
        let mut parts = vec![DiagramVector::zero(); n];
        for i in 0..n {
            if self.parts[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if !other.parts[j].is_zero() {
                    let p = self.parts[i].product(&other.parts[j]);
                    parts[i + j] = &parts[i + j] + &p;
                }
            }
        }
        GradedSeries { parts }
    }

    /// `sum_m s^m / m!`, truncated at the order of `self`.
    pub fn exp(&self) -> Result<GradedSeries, SeriesError> {
        if !self.parts[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let k = self.order();
        let mut out = GradedSeries::one(k);
        let mut power = GradedSeries::one(k);
        for m in 1..=k {
            power = power.product(self);
            let c: Q = inv_factorial(m);
            for d in 0..=k {
                let term = power.parts[d].scale(&c);
                out.parts[d] = &out.parts[d] + &term;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::JacobiDiagram;
    use crate::rational::q_frac;

    #[test]
    fn exp_of_zero_is_one() {
        let e = GradedSeries::zero(3).exp().unwrap();
        assert_eq!(e, GradedSeries::one(3));
    }

    #[test]
    fn exp_low_degrees() {
        let c = DiagramVector::from_diagram(&JacobiDiagram::theta());
        let w = DiagramVector::from_diagram(&JacobiDiagram::wheel(2));
        let s =
            GradedSeries::from_parts(vec![DiagramVector::zero(), c.clone(), w.clone()]).unwrap();
        let e = s.exp().unwrap();
        assert_eq!(e.part(1), &c);
        assert_eq!(e.part(2), &(&w + &c.product(&c).scale(&q_frac(1, 2))));
    }

    #[test]
    fn constant_term_rejected() {
        assert_eq!(
            GradedSeries::one(2).exp().unwrap_err(),
            SeriesError::NonzeroConstantTerm
        );
    }
}
