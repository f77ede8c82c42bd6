//! Alexander polynomial from the Wirtinger presentation: one row per
//! crossing, one column per over-arc, any first minor.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::LaurentPolynomial;
use super::pd::PdCode;
use super::AlexanderError;
use crate::rational::Q;

/// Polynomial in `t` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct Poly(Vec<BigInt>);

impl Poly {
    fn constant(c: i64) -> Poly {
        Poly(vec![BigInt::from(c)]).trimmed()
    }

    fn trimmed(mut self) -> Poly {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::zero();
        Poly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
        .trimmed()
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trimmed()
    }

    /// Exact quotient; panics if `d` does not divide `self` in `Z[t]`.
    fn div_exact(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero(), "division by zero");
        let mut r = self.0.clone();
        let dl = d.0.len();
        if r.len() < dl {
            assert!(self.is_zero(), "inexact division");
            return Poly::default();
        }
        let lead = d.0.last().unwrap();
        let mut q = vec![BigInt::zero(); r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let top = &r[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            assert!((top % lead).is_zero(), "inexact division");
            let c = top / lead;
            for (j, x) in d.0.iter().enumerate() {
                r[i + j] -= &c * x;
            }
            q[i] = c;
        }
        assert!(r.iter().all(|c| c.is_zero()), "inexact division");
        Poly(q).trimmed()
    }
}

/// Fraction-free (Bareiss) determinant.
fn determinant(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(1);
    }
    let mut sign = 1;
    let mut prev = Poly::constant(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Poly::default(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        d.neg()
    } else {
        d
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// The normalized Alexander polynomial: symmetric, with value 1 at `t = 1`.
pub fn alexander_poly(pd: &PdCode) -> Result<LaurentPolynomial, AlexanderError> {
    let n = pd.len();
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let mut labels: Vec<u32> = pd.crossings().iter().flatten().copied().collect();
    labels.sort_unstable();
    labels.dedup();
    let idx = |l: u32| labels.binary_search(&l).expect("label");
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    for &[_, b, _, d] in pd.crossings() {
        let (x, y) = (find(&mut parent, idx(b)), find(&mut parent, idx(d)));
        parent[x] = y;
    }
    let mut arcs: Vec<usize> = (0..labels.len()).map(|i| find(&mut parent, i)).collect();
    let mut roots = arcs.clone();
    roots.sort_unstable();
    roots.dedup();
    for a in arcs.iter_mut() {
        *a = roots.binary_search(a).unwrap();
    }
    if roots.len() != n {
        return Err(AlexanderError::Degenerate);
    }
    let t = Poly(vec![BigInt::zero(), BigInt::one()]);
    let one = Poly::constant(1);
    let mut m = vec![vec![Poly::default(); n]; n];
    for (row, (&[a, b, c, _], &s)) in pd.crossings().iter().zip(pd.signs()).enumerate() {
        let (over, inc, out) = (arcs[idx(b)], arcs[idx(a)], arcs[idx(c)]);
        let (ov, iv, oo) = if s > 0 {
            (one.sub(&t), t.clone(), one.neg())
        } else {
            (t.sub(&one), one.clone(), t.neg())
        };
        m[row][over] = m[row][over].add(&ov);
        m[row][inc] = m[row][inc].add(&iv);
        m[row][out] = m[row][out].add(&oo);
    }
    let minor: Vec<Vec<Poly>> = m[..n - 1].iter().map(|r| r[..n - 1].to_vec()).collect();
    let det = determinant(minor);
    let mut p = LaurentPolynomial::zero();
    for (e, c) in det.0.iter().enumerate() {
        p.add_term(e as i64, Q::from_integer(c.clone()));
    }
    p.normalized().ok_or(AlexanderError::Degenerate)
}
