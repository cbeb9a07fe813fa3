//! The Glaisher-Kinkelin constant through the large-`n` expansion of
//! `ln G(n+1)`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use num_traits::{One, Zero};

use super::real::{frac, pi, real, real_int, real_rat, Real};
use crate::error::{Error, Result};
use crate::exactnum::{barnes_g, binomial, rat_int, ExactRational};

pub const MAX_GLAISHER_DIGITS: usize = 50;

const BASE: i64 = 100;
const CORRECTION_TERMS: i64 = 16;

/// `B_0, ..., B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<ExactRational> {
    let mut b: Vec<ExactRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(ExactRational::one());
            continue;
        }
        let mut acc = ExactRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += rat_int(binomial(m as i64 + 1, k as i64).unwrap_or_default()) * bk;
        }
        b.push(-acc / rat_int(num_bigint::BigInt::from(m + 1)));
    }
    b
}

/// `ln` of the defining sequence
/// `(2 pi)^{n/2} n^{n^2/2 - 1/12} e^{-3n^2/4 + 1/12} / G(n+1)`.
pub fn ln_glaisher_sequence(n: i64) -> Real {
    let ln_n = real(n).ln();
    let two_pi = real(2) * pi();
    frac(n, 2) * two_pi.ln() + (frac(n * n, 2) - frac(1, 12)) * ln_n - frac(3 * n * n, 4) + frac(1, 12)
        - real_int(&barnes_g(n + 1)).ln()
}

pub fn ln_glaisher() -> Real {
    static LN_A: OnceBox<Real> = OnceBox::new();
    LN_A.get_or_init(|| Box::new(compute_ln_glaisher())).clone()
}

fn compute_ln_glaisher() -> Real {
    let b = bernoulli_numbers(2 * CORRECTION_TERMS as usize + 2);
    let mut acc = ln_glaisher_sequence(BASE);
    let inv_sq = frac(1, BASE * BASE);
    let mut power = inv_sq.clone();
    for k in 1..=CORRECTION_TERMS {
        acc += real_rat(&b[(2 * k + 2) as usize]) / real(4 * k * (k + 1)) * &power;
        power *= &inv_sq;
    }
    acc
}

/// `A = 1.2824271291...`, to `digits` significant decimal digits.
pub fn glaisher(digits: usize) -> Result<Real> {
    if digits > MAX_GLAISHER_DIGITS {
        return Err(Error::Capacity { what: "Glaisher constant digits", actual: digits, limit: MAX_GLAISHER_DIGITS });
    }
    let bits = (digits as f64 * 3.33) as usize + 8;
    Ok(ln_glaisher().exp().with_precision(bits.max(8)).value())
}

/// `G(n+1) A (2 pi)^{-n/2} n^{-(n^2/2 - 1/12)} e^{3n^2/4 - 1/12}`, which tends to 1.
pub fn barnes_asymptotic_ratio(n: i64) -> Real {
    (ln_glaisher() - ln_glaisher_sequence(n)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::real::{to_decimal_string, to_f64};
    use crate::exactnum::rat;

    #[test]
    fn bernoulli() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat(0, 1));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[8], rat(-1, 30));
    }

    #[test]
    fn glaisher_digits() {
        let a = glaisher(50).unwrap();
        assert_eq!(to_decimal_string(&a, 50), "1.282427129100622636875342568869791727767688927325");
        assert_eq!(to_decimal_string(&glaisher(10).unwrap(), 10), "1.282427129");
        assert!(glaisher(51).is_err());
    }

    #[test]
    fn sequence_converges() {
        let a = to_f64(&glaisher(20).unwrap());
        assert!((to_f64(&ln_glaisher_sequence(200).exp()) - a).abs() < 1e-4);
        assert!((to_f64(&barnes_asymptotic_ratio(200)) - 1.0).abs() < 1e-3);
    }
}
