//! Weighted counts of the regions `R_{m,n,x}` and `Rbar_{m,n,x}`, whose
//! lozenges along one horizontal line carry weight 1/2.

use num_bigint::BigInt;
use num_traits::One;

use super::{CountSource, TilingCount};
use crate::error::{domain, Result};
use crate::exactnum::{bracket_product, factorial, pow2, rat_int, shifted_factorial, ExactRational, HalfInteger};
use crate::region::RegionSpec;

/// `(a)_n`, where `n = 0` gives 1 even for a base that is not positive.
fn rising(a: HalfInteger, n: i64) -> Result<ExactRational> {
    if n == 0 {
        Ok(ExactRational::one())
    } else {
        shifted_factorial(a, n)
    }
}

/// The part shared by both formulas:
/// `prod_{i<j<=m} (j-i) prod_{i<j<=n} (j-i) / prod_{i<=m, j<=n} (i+j)`.
fn vandermonde_part(m: i64, n: i64) -> ExactRational {
    let mut num = BigInt::one();
    for len in [m, n] {
        for j in 1..=len {
            for i in 1..j {
                num *= j - i;
            }
        }
    }
    let mut den = BigInt::one();
    for i in 1..=m {
        for j in 1..=n {
            den *= i + j;
        }
    }
    ExactRational::new(num, den)
}

pub fn ciucu_r(m: i64, n: i64, x: i64) -> Result<TilingCount> {
    let allowed = m >= 0 && n >= 0 && (x >= 0 || (m == 0 && x == -1));
    if !allowed {
        return Err(domain!("R_{{{m},{n},{x}}} needs m, n, x >= 0 (or m = 0, x = -1)"));
    }
    let w = HalfInteger::from_int;
    let h = HalfInteger::half_above;
    let mut v = pow2(n * (n - 1) / 2 - 2 * m * n) * vandermonde_part(m, n);
    for i in 1..=m {
        v /= rat_int(factorial(2 * i)?);
    }
    for i in 1..=n {
        v /= rat_int(factorial(2 * i - 1)?);
    }
    v *= rising(w(x + n + 1), m)? * rising(w(x + n + 2), m)?;
    v *= bracket_product(w(x + 2), n - 2)? * bracket_product(h(x + 1), n - 1)?;
    for i in 1..=n {
        v *= rising(w(x + i), m)? / rising(h(x + i), m)?;
    }
    for i in 1..=m {
        v *= rising(w(2 * x + n + i + 2), n + i - 1)?;
    }
    Ok(TilingCount {
        value: v,
        source: CountSource::formula("weighted R product"),
        spec: Some(RegionSpec::R { m, n, x }),
    })
}

pub fn ciucu_rbar(m: i64, n: i64, x: i64) -> Result<TilingCount> {
    if m < 0 || n < 0 || x < 0 {
        return Err(domain!("Rbar_{{{m},{n},{x}}} needs m, n, x >= 0"));
    }
    let w = HalfInteger::from_int;
    let h = HalfInteger::half_above;
    let mut v = pow2(m * (m - 1) / 2 - 2 * m * n - n) * vandermonde_part(m, n);
    for i in 1..=m {
        v /= rat_int(factorial(2 * i - 1)?);
    }
    for i in 1..=n {
        v /= rat_int(factorial(2 * i)?);
    }
    v *= rising(w(x + m + 1), n)?;
    v *= bracket_product(w(x + 1), m - 1)? * bracket_product(h(x + 1), m - 2)?;
    for i in 1..=m {
        v *= rising(w(x + i), n)? / rising(h(x + i), n)?;
    }
    for i in 1..=n {
        v *= rising(w(2 * x + m + i + 1), m + i)?;
    }
    Ok(TilingCount {
        value: v,
        source: CountSource::formula("weighted Rbar product"),
        spec: Some(RegionSpec::Rbar { m, n, x }),
    })
}
