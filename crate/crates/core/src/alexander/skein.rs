//! Conway polynomial by the skein relation `C(L+) - C(L-) = z C(L0)`,
//! resolving crossings until the diagram is descending.

use std::collections::HashMap;

use super::laurent::LaurentPolynomial;
use super::pd::PdCode;
use super::AlexanderError;
use crate::rational::q;

/// A link diagram: PD crossings with explicit over-strand direction, plus
/// crossingless circles.
#[derive(Clone, Debug)]
struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    /// `true` when the over-strand runs from slot 3 to slot 1 (a positive crossing).
    positive: Vec<bool>,
    free_circles: usize,
}

impl LinkDiagram {
    fn in_over(&self, x: usize) -> usize {
        if self.positive[x] {
            3
        } else {
            1
        }
    }

    /// Components as sequences of (crossing, entry slot), each started at
    /// the occurrence of its lowest label.
    fn components(&self) -> Vec<Vec<(usize, usize)>> {
        let mut incoming: HashMap<u32, (usize, usize)> = HashMap::new();
        for (x, c) in self.crossings.iter().enumerate() {
            incoming.insert(c[0], (x, 0));
            let s = self.in_over(x);
            incoming.insert(c[s], (x, s));
        }
        let mut labels: Vec<u32> = incoming.keys().copied().collect();
        labels.sort_unstable();
        let mut done: HashMap<(usize, usize), bool> = HashMap::new();
        let mut out = Vec::new();
        for l in labels {
            let start = incoming[&l];
            if done.contains_key(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut cur = start;
            loop {
                done.insert(cur, true);
                comp.push(cur);
                let label = self.crossings[cur.0][(cur.1 + 2) % 4];
                cur = incoming[&label];
                if cur == start {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    /// Index of the first crossing passed under before over, if any.
    fn first_ascending(&self) -> Option<usize> {
        let mut met = vec![false; self.crossings.len()];
        for comp in self.components() {
            for (x, s) in comp {
                if !met[x] {
                    if s == 0 {
                        return Some(x);
                    }
                    met[x] = true;
                }
            }
        }
        None
    }

    fn switched(&self, x: usize) -> LinkDiagram {
        let mut d = self.clone();
        let [a, b, c, e] = self.crossings[x];
        d.crossings[x] = if self.positive[x] {
            [e, a, b, c]
        } else {
            [b, c, e, a]
        };
        d.positive[x] = !self.positive[x];
        d
    }

    /// Oriented resolution at `x`: each incoming end joins the outgoing end
    /// next to it.
    fn smoothed(&self, x: usize) -> LinkDiagram {
        let [a, b, c, e] = self.crossings[x];
        let joins = if self.positive[x] {
            [(a, b), (e, c)]
        } else {
            [(a, e), (b, c)]
        };
        let mut d = LinkDiagram {
            crossings: self.crossings.clone(),
            positive: self.positive.clone(),
            free_circles: self.free_circles,
        };
        d.crossings.remove(x);
        d.positive.remove(x);
        let mut renamed: Option<(u32, u32)> = None;
        for (i, o) in joins {
            let rename = |l: u32| match renamed {
                Some((from, to)) if l == from => to,
                _ => l,
            };
            let (i, o) = (rename(i), rename(o));
            if i == o {
                d.free_circles += 1;
                continue;
            }
            // The two labels now name one strand.
            for c in d.crossings.iter_mut() {
                for l in c.iter_mut() {
                    if *l == o {
                        *l = i;
                    }
                }
            }
            renamed = Some((o, i));
        }
        d
    }
}

/// Conway polynomial coefficients, `c[i]` of `z^i`.
fn conway(d: &LinkDiagram) -> Vec<i64> {
    if d.crossings.is_empty() {
        return if d.free_circles == 1 { vec![1] } else { vec![] };
    }
    if d.free_circles > 0 {
        return vec![];
    }
    let Some(x) = d.first_ascending() else {
        return if d.components().len() == 1 {
            vec![1]
        } else {
            vec![]
        };
    };
    let switched = conway(&d.switched(x));
    let smoothed = conway(&d.smoothed(x));
    let s = if d.positive[x] { 1 } else { -1 };
    let n = switched.len().max(smoothed.len() + 1);
    let mut out = vec![0; n];
    for (i, c) in switched.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in smoothed.iter().enumerate() {
        out[i + 1] += s * c;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Conway polynomial of a knot, `c[i]` of `z^i`.
pub fn conway_poly(pd: &PdCode) -> Vec<i64> {
    let d = LinkDiagram {
        crossings: pd.crossings().to_vec(),
        positive: pd.signs().iter().map(|&s| s > 0).collect(),
        free_circles: if pd.is_empty() { 1 } else { 0 },
    };
    conway(&d)
}

/// `Delta(t) = C(t^(1/2) - t^(-1/2))`, with `z^2 = t - 2 + 1/t`.
pub fn alexander_via_skein(pd: &PdCode) -> Result<LaurentPolynomial, AlexanderError> {
    let c = conway_poly(pd);
    let z2 = LaurentPolynomial::from_coeffs(-1, &[1, -2, 1]);
    let mut power = LaurentPolynomial::one();
    let mut out = LaurentPolynomial::zero();
    for (i, &ci) in c.iter().enumerate() {
        if i % 2 == 1 {
            if ci != 0 {
                return Err(AlexanderError::Degenerate);
            }
            continue;
        }
        out = out.add(&power.scale(&q(ci)));
        power = power.mul(&z2);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::parse_pd;

    #[test]
    fn trefoil_and_figure_eight() {
        let t = parse_pd("X(1,5,2,4)\nX(3,1,4,6)\nX(5,3,6,2)").unwrap();
        assert_eq!(conway_poly(&t), vec![1, 0, 1]);
        let f = parse_pd("X(4,2,5,1)\nX(8,6,1,5)\nX(6,3,7,4)\nX(2,7,3,8)").unwrap();
        assert_eq!(conway_poly(&f), vec![1, 0, -1]);
        assert_eq!(conway_poly(&PdCode::unknot()), vec![1]);
    }

    #[test]
    fn hopf_link() {
        // Positive Hopf link: z.
        let d = LinkDiagram {
            crossings: vec![[1, 3, 2, 4], [3, 1, 4, 2]],
            positive: vec![true, true],
            free_circles: 0,
        };
        let comps = d.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(conway(&d), vec![0, 1]);
    }
}
