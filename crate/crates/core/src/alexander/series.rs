use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::LaurentPolynomial;
use super::AlexanderError;
use crate::rational::{inv_factorial, q, Q};

/// Power series in `h` known up to and including `h^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Q>,
}

impl PowerSeries {
    pub fn from_coeffs(mut coeffs: Vec<Q>, order: usize) -> PowerSeries {
        coeffs.resize(order + 1, Q::zero());
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Q {
        self.coeffs.get(n).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// `log f` for `f` with constant term 1, from `f' = f (log f)'`.
    pub fn log(&self) -> Result<PowerSeries, AlexanderError> {
        if !self.coeffs[0].is_one() {
            return Err(AlexanderError::NonUnitConstantTerm);
        }
        let f = &self.coeffs;
        let mut g = vec![Q::zero(); f.len()];
        for n in 1..f.len() {
            let mut acc = q(n as i64) * &f[n];
            for i in 1..n {
                acc -= q(i as i64) * &g[i] * &f[n - i];
            }
            g[n] = acc / q(n as i64);
        }
        Ok(PowerSeries { coeffs: g })
    }

    /// `exp g` for `g` without constant term.
    pub fn exp(&self) -> Result<PowerSeries, AlexanderError> {
        if !self.coeffs[0].is_zero() {
            return Err(AlexanderError::NonUnitConstantTerm);
        }
        let g = &self.coeffs;
        let mut e = vec![Q::zero(); g.len()];
        e[0] = Q::one();
        for n in 1..g.len() {
            let mut acc = Q::zero();
            for i in 1..=n {
                acc += q(i as i64) * &g[i] * &e[n - i];
            }
            e[n] = acc / q(n as i64);
        }
        Ok(PowerSeries { coeffs: e })
    }
}

/// `p(e^h)` up to `h^order`: `[h^n] = sum_m c_m m^n / n!`.
pub fn exp_substitute(p: &LaurentPolynomial, order: usize) -> PowerSeries {
    let coeffs = (0..=order)
        .map(|n| {
            let s: Q = p
                .terms()
                .map(|(m, c)| c * Q::from_integer(BigInt::from(m).pow(n as u32)))
                .sum();
            s * inv_factorial(n)
        })
        .collect();
    PowerSeries { coeffs }
}

/// `Z_k = -[h^k] log p(e^h)` for `k = 2..=order`.
pub fn zbcr_series(p: &LaurentPolynomial, order: usize) -> Result<Vec<Q>, AlexanderError> {
    let log = exp_substitute(p, order).log()?;
    Ok((2..=order).map(|k| -log.coeff(k)).collect())
}

/// `[h^k] p(e^h)` for `k = 0..=order`.
pub fn conway_series(p: &LaurentPolynomial, order: usize) -> Vec<Q> {
    exp_substitute(p, order).coeffs
}

/// `exp(-sum_k Z_k h^k)` with `zs[i] = Z_(i+2)`, up to `h^order`.
pub fn exp_of_negated(zs: &[Q], order: usize) -> PowerSeries {
    let mut g = vec![Q::zero(); order + 1];
    for (i, z) in zs.iter().enumerate() {
        if i + 2 <= order {
            g[i + 2] = -z.clone();
        }
    }
    PowerSeries { coeffs: g }.exp().expect("no constant term")
}
