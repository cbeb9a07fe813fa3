//! Nonintersecting lattice paths for the plain hexagon: the count is the
//! determinant `det[C(b+c, b-i+j)]` over `1 <= i, j <= a`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::exactnum::{binomial, ExactInt};

/// Fraction-free Gaussian elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> ExactInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v.div_floor(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub fn lgv_hexagon_count(a: i64, b: i64, c: i64) -> Result<ExactInt> {
    if a < 0 || b < 0 || c < 0 {
        return Err(domain!("hexagon sides must be nonnegative (got {a}, {b}, {c})"));
    }
    let mut rows = Vec::with_capacity(a as usize);
    for i in 1..=a {
        let mut row = Vec::with_capacity(a as usize);
        for j in 1..=a {
            row.push(binomial(b + c, b - i + j)?);
        }
        rows.push(row);
    }
    Ok(bareiss_determinant(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn determinant_basics() {
        let m = alloc::vec![alloc::vec![int(0), int(1)], alloc::vec![int(1), int(0)]];
        assert_eq!(bareiss_determinant(m), int(-1));
        let m = alloc::vec![
            alloc::vec![int(2), int(0), int(1)],
            alloc::vec![int(1), int(3), int(2)],
            alloc::vec![int(1), int(1), int(2)],
        ];
        assert_eq!(bareiss_determinant(m), int(6));
    }

    #[test]
    fn small_hexagons() {
        assert_eq!(lgv_hexagon_count(1, 1, 1).unwrap(), int(2));
        assert_eq!(lgv_hexagon_count(2, 2, 2).unwrap(), int(20));
        assert_eq!(lgv_hexagon_count(0, 3, 4).unwrap(), int(1));
    }
}
