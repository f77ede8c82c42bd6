//! The Conway weight system and its logarithmic variant.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::diagram::{DiagramError, JacobiDiagram};
use crate::rational::{q, Q};
use crate::space::{stu_pair, Algebra, DiagramVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("diagram has trivalent vertices")]
    NotChordDiagram,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Number of circles left after surgery of the line along every chord.
///
/// The line is cut into segments `0..=2n`, segment `s` ending at point `s`.
/// Arriving at a chord end the walk jumps to the partner point and leaves
/// forward, so segment `s` continues as segment `partner(s) + 1`.
pub fn count_circles(c: &JacobiDiagram) -> Result<usize, WeightError> {
    if !c.is_chord_diagram() {
        return Err(WeightError::NotChordDiagram);
    }
    let n = c.univalent_count();
    let mut partner = vec![0; n];
    for &[a, b] in c.edges() {
        partner[a] = b;
        partner[b] = a;
    }
    let next = |s: usize| partner[s] + 1;
    let mut seen = vec![false; n + 1];
    let mut s = 0;
    while s < n {
        seen[s] = true;
        s = next(s);
    }
    seen[n] = true;
    let mut circles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        circles += 1;
        let mut s = start;
        while !seen[s] {
            seen[s] = true;
            s = next(s);
        }
    }
    Ok(circles)
}

/// `w_C` on a single diagram.
pub fn wc_diagram(d: &JacobiDiagram) -> Q {
    let comps = d.components();
    if comps.iter().any(|c| c.iter().all(|&v| !d.is_univalent(v))) {
        return Q::zero();
    }
    if d.is_chord_diagram() {
        return if count_circles(d).expect("chord diagram") == 0 {
            q(1)
        } else {
            Q::zero()
        };
    }
    let u = (0..d.univalent_count())
        .find(|&u| {
            d.edges()
                .iter()
                .any(|e| e.contains(&u) && !d.is_univalent(e[0] + e[1] - u))
        })
        .expect("a leg meets a trivalent vertex");
    let (first, second) = stu_pair(d, u);
    wc_diagram(&first) - wc_diagram(&second)
}

/// `w_C`, extended linearly.
pub fn wc_eval(v: &DiagramVector) -> Q {
    v.diagrams().map(|(d, c)| c * wc_diagram(&d)).sum()
}

/// `w'_C = w_C` composed with the projection onto primitive elements.
pub fn wc_prime_eval(alg: &Algebra, v: &DiagramVector) -> Result<Q, WeightError> {
    let mut by_degree: BTreeMap<usize, DiagramVector> = BTreeMap::new();
    for (k, c) in v.iter() {
        by_degree
            .entry(k.degree())
            .or_default()
            .add_key(k.clone(), c.clone());
    }
    let mut total = Q::zero();
    for (k, part) in by_degree {
        let space = alg.space(k)?;
        total += wc_eval(&space.project_pc(&part));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_counts() {
        assert_eq!(count_circles(&JacobiDiagram::empty()).unwrap(), 0);
        assert_eq!(count_circles(&JacobiDiagram::theta()).unwrap(), 1);
        let cross = JacobiDiagram::chords(&[(0, 2), (1, 3)]).unwrap();
        assert_eq!(count_circles(&cross).unwrap(), 0);
        let nested = JacobiDiagram::chords(&[(0, 3), (1, 2)]).unwrap();
        assert_eq!(count_circles(&nested).unwrap(), 2);
        assert_eq!(
            count_circles(&JacobiDiagram::tripod()),
            Err(WeightError::NotChordDiagram)
        );
    }

    #[test]
    fn wheels() {
        for k in 2..=6 {
            let expected = q(-1 - if k % 2 == 0 { 1 } else { -1 });
            assert_eq!(wc_diagram(&JacobiDiagram::wheel(k)), expected, "k={k}");
        }
    }

    #[test]
    fn empty_and_tripod() {
        assert_eq!(wc_eval(&DiagramVector::unit()), q(1));
        assert_eq!(wc_diagram(&JacobiDiagram::tripod()), q(-1));
    }
}
