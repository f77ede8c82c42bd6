use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{format_pq, q, Q};

/// Finitely supported Laurent polynomial in `t` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Q>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Q::one())
    }

    pub fn monomial(exp: i64, c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// `coeffs[i]` is the coefficient of `t^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(low + i as i64, q(c));
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: Q) {
        let e = self.terms.entry(exp).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> Q {
        self.terms.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                out.add_term(e + f, c * d);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for (e, d) in &self.terms {
            out.add_term(*e, c * d);
        }
        out
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `p(1/t)`.
    pub fn invert(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn eval_one(&self) -> Q {
        self.terms.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.invert()
    }

    /// The unit multiple `±t^k p` that is symmetric with value 1 at `t = 1`,
    /// if one exists.
    pub fn normalized(&self) -> Option<Self> {
        let (lo, hi) = (self.min_exp()?, self.max_exp()?);
        if (lo + hi) % 2 != 0 {
            return None;
        }
        let mut p = self.shift(-(lo + hi) / 2);
        let v = p.eval_one();
        if v.is_zero() {
            return None;
        }
        if v.is_negative() {
            p = p.scale(&q(-1));
        }
        Some(p)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let show_c = e == 0 || !mag.is_one();
            if show_c {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}", format_pq(&mag))?;
                }
            }
            match e {
                0 => {}
                1 => write!(f, "{}t", if show_c { "*" } else { "" })?,
                _ => write!(f, "{}t^{e}", if show_c { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        // -t^2 + t^3 - t^4, the trefoil up to a unit.
        let p = LaurentPolynomial::from_coeffs(2, &[-1, 1, -1]);
        let n = p.normalized().unwrap();
        assert_eq!(n, LaurentPolynomial::from_coeffs(-1, &[1, -1, 1]));
        assert!(n.is_symmetric());
        assert_eq!(n.eval_one(), q(1));
        assert_eq!(
            LaurentPolynomial::from_coeffs(0, &[1, 1]).normalized(),
            None
        );
    }

    #[test]
    fn display() {
        let p = LaurentPolynomial::from_coeffs(-1, &[1, -1, 1]);
        assert_eq!(p.to_string(), "t - 1 + t^-1");
        assert_eq!(
            LaurentPolynomial::from_coeffs(-1, &[-2, 5, -2]).to_string(),
            "-2*t + 5 - 2*t^-1"
        );
        assert_eq!(
            LaurentPolynomial::monomial(2, crate::rational::q_frac(1, 2)).to_string(),
            "1/2*t^2"
        );
    }
}
