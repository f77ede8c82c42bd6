//! Exact rational numbers and their textual form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary precision rational.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Formats `x` as `p/q` with `q >= 1`, always printing the denominator.
pub fn format_pq(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_pq(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub(crate) fn sign_q(s: i32) -> Q {
    match s {
        1 => Q::one(),
        -1 => -Q::one(),
        0 => Q::zero(),
        _ => q(s as i64),
    }
}

/// `1/n!`
pub(crate) fn inv_factorial(n: usize) -> Q {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    Q::new(BigInt::one(), f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_always_has_denominator() {
        assert_eq!(format_pq(&q(-2)), "-2/1");
        assert_eq!(format_pq(&q_frac(10, -4)), "-5/2");
        assert_eq!(format_pq(&Q::zero()), "0/1");
    }

    #[test]
    fn parse_roundtrip() {
        for x in [q(0), q(7), q_frac(-5, 12), q_frac(3, 9)] {
            assert_eq!(parse_pq(&format_pq(&x)), Some(x.clone()));
        }
        assert_eq!(parse_pq("3"), Some(q(3)));
        assert_eq!(parse_pq("1/0"), None);
        assert_eq!(parse_pq("x"), None);
    }
}
